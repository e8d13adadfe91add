//! Subsets of a small ground set encoded as bit masks.

/// A subset of `{0, .., 31}`; bit `i` set means point `i` belongs to it.
pub type Mask = u32;

pub fn full(size: usize) -> Mask {
    if size >= 32 {
        u32::MAX
    } else {
        (1u32 << size) - 1
    }
}

pub fn points(mask: Mask) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(p)
        }
    })
}

pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Mask {
    points.into_iter().fold(0, |m, p| m | (1 << p))
}

pub fn size(mask: Mask) -> usize {
    mask.count_ones() as usize
}

pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// All subsets of `mask`, smallest first in binary order.
pub fn subsets(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let all: Vec<_> = subsets(0b1010).collect();
        assert_eq!(all, vec![0, 0b10, 0b1000, 0b1010]);
        assert_eq!(subsets(0).count(), 1);
        assert_eq!(subsets(full(5)).count(), 32);
    }

    #[test]
    fn points_round_trip() {
        let m = from_points([0, 3, 4]);
        assert_eq!(points(m).collect::<Vec<_>>(), vec![0, 3, 4]);
        assert_eq!(size(m), 3);
        assert!(is_subset(from_points([3]), m));
    }
}
