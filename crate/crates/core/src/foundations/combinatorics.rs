use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Stirling number of the second kind via
/// `S(m, p) = p S(m-1, p) + S(m-1, p-1)`.
pub fn stirling2(m: usize, p: usize) -> BigUint {
    if p > m {
        return BigUint::zero();
    }
    // row[j] = S(i, j) for the current i.
    let mut row = vec![BigUint::zero(); p + 1];
    row[0] = BigUint::one();
    for i in 1..=m {
        for j in (0..=p.min(i)).rev() {
            row[j] = if j == 0 {
                BigUint::zero()
            } else {
                &row[j] * BigUint::from(j) + &row[j - 1]
            };
        }
    }
    row[p].clone()
}

/// Bell number `B(m) = sum_p S(m, p)`.
pub fn bell(m: usize) -> BigUint {
    (0..=m).map(|p| stirling2(m, p)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::partition::enumerate_set_partitions;

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(0, 0), BigUint::from(1u32));
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(stirling2(3, 5), BigUint::zero());
        assert_eq!(stirling2(5, 0), BigUint::zero());
    }

    #[test]
    fn bell_examples() {
        assert_eq!(bell(0), BigUint::from(1u32));
        assert_eq!(bell(4), BigUint::from(15u32));
        assert_eq!(bell(6), BigUint::from(203u32));
    }

    #[test]
    fn matches_enumeration() {
        for m in 0..=7 {
            let all = enumerate_set_partitions(m);
            assert_eq!(BigUint::from(all.len()), bell(m));
            for p in 0..=m + 1 {
                let count = all.iter().filter(|q| q.part_count() == p).count();
                assert_eq!(BigUint::from(count), stirling2(m, p), "S({m},{p})");
            }
        }
    }

    #[test]
    fn large_values_do_not_overflow() {
        // B(30) exceeds u64.
        assert!(bell(30) > BigUint::from(u64::MAX));
    }
}
