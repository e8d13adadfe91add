//! One line per acceptance criterion. Runs without the test harness so the
//! lines are always printed.

use pgroupoid::fixtures::run_criteria;

/// Criteria that cannot hold as stated, with the reason printed next to them.
const KNOWN_RED: &[(u32, &str)] = &[(
    5,
    "the stated staircase family has 7 members but the module rank is 3!/1 = 6; x1*x2*x3 = e3*1",
)];

fn main() {
    let mut unexpected = 0;
    for c in run_criteria() {
        println!("{}", c.line_with_time());
        if !c.passed {
            match KNOWN_RED.iter().find(|(n, _)| *n == c.number) {
                Some((_, why)) => println!("       known: {why}"),
                None => unexpected += 1,
            }
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} acceptance criteria failed");
        std::process::exit(1);
    }
}
