//! Combinatorics of leading-term ideals.
//!
//! Once a standard basis is known, the colength and dimension of an ideal
//! are read off from the staircase — the minimal monomial generators of
//! the leading-term ideal.

/// Codimension of an ideal as a vector space: the number of monomials
/// outside its leading-term ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn is_finite(&self) -> bool {
        matches!(self, Colength::Finite(_))
    }

    /// The finite value, if any.
    pub fn value(&self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(*v),
            Colength::Infinite => None,
        }
    }
}

impl std::fmt::Display for Colength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Colength::Finite(v) => write!(f, "{v}"),
            Colength::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Count monomials outside the monomial ideal generated by `stairs`
/// (exponent vectors, all of length `nvars`).
///
/// The count is finite exactly when every variable has a pure power among
/// the generators; that test runs first so the recursion below only ever
/// sees finite boxes.
pub(crate) fn colength_of_staircase(stairs: &[Vec<u32>], nvars: usize) -> Colength {
    if stairs.iter().any(|s| s.iter().all(|&e| e == 0)) {
        // the ideal is the whole ring
        return Colength::Finite(0);
    }
    for v in 0..nvars {
        let has_pure_power = stairs
            .iter()
            .any(|s| s[v] > 0 && s.iter().enumerate().all(|(i, &e)| i == v || e == 0));
        if !has_pure_power {
            return Colength::Infinite;
        }
    }
    Colength::Finite(count_outside(stairs, nvars))
}

fn count_outside(stairs: &[Vec<u32>], nvars: usize) -> u64 {
    if nvars == 0 {
        // the only monomial is 1; it is outside unless some generator is 1
        return if stairs.iter().any(|s| s.is_empty() || s.iter().all(|&e| e == 0)) {
            0
        } else {
            1
        };
    }
    let last = nvars - 1;
    // slice by the exponent of the last variable; the pure power bounds it
    let bound = stairs
        .iter()
        .filter(|s| s[..last].iter().all(|&e| e == 0))
        .map(|s| s[last])
        .min()
        .expect("caller guarantees a pure power in every variable");
    let mut total = 0u64;
    for e in 0..bound {
        let slice: Vec<Vec<u32>> = stairs
            .iter()
            .filter(|s| s[last] <= e)
            .map(|s| s[..last].to_vec())
            .collect();
        total += count_outside(&slice, last);
    }
    total
}

/// Dimension of the variety of the monomial ideal generated by `stairs`:
/// the largest size of a variable subset S such that no generator is
/// supported entirely inside S.  Returns `None` when a generator is the
/// monomial 1 (the ideal is the whole ring and has no proper dimension).
pub(crate) fn dimension_of_staircase(stairs: &[Vec<u32>], nvars: usize) -> Option<usize> {
    if stairs.iter().any(|s| s.iter().all(|&e| e == 0)) {
        return None;
    }
    assert!(nvars <= 24, "dimension enumeration is exponential in variables");
    let supports: Vec<u32> = stairs
        .iter()
        .map(|s| {
            s.iter()
                .enumerate()
                .fold(0u32, |acc, (i, &e)| if e > 0 { acc | (1 << i) } else { acc })
        })
        .collect();
    let mut best = 0usize;
    for subset in 0u32..(1 << nvars) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&sup| sup & !subset != 0) {
            best = size;
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_staircase() {
        // (x², y³): complement is a 2×3 box
        let c = colength_of_staircase(&[vec![2, 0], vec![0, 3]], 2);
        assert_eq!(c, Colength::Finite(6));
    }

    #[test]
    fn maximal_ideal() {
        let c = colength_of_staircase(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], 3);
        assert_eq!(c, Colength::Finite(1));
    }

    #[test]
    fn missing_pure_power_is_infinite() {
        assert_eq!(colength_of_staircase(&[vec![1, 1], vec![2, 0]], 2), Colength::Infinite);
        assert_eq!(colength_of_staircase(&[vec![3, 0]], 2), Colength::Infinite);
    }

    #[test]
    fn staircase_with_mixed_generator() {
        // (x³, x·y, y²): outside = {1, x, x², y} = 4
        let c = colength_of_staircase(&[vec![3, 0], vec![1, 1], vec![0, 2]], 2);
        assert_eq!(c, Colength::Finite(4));
    }

    #[test]
    fn unit_ideal_is_zero_colength() {
        assert_eq!(colength_of_staircase(&[vec![0, 0]], 2), Colength::Finite(0));
    }

    #[test]
    fn empty_staircase_is_infinite() {
        assert_eq!(colength_of_staircase(&[], 2), Colength::Infinite);
    }

    #[test]
    fn dimensions() {
        // (x) in 3 variables: V is the (y,z)-plane
        assert_eq!(dimension_of_staircase(&[vec![1, 0, 0]], 3), Some(2));
        // maximal ideal: the origin
        assert_eq!(
            dimension_of_staircase(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], 3),
            Some(0)
        );
        // (x·y): union of the two axes, dimension 1
        assert_eq!(dimension_of_staircase(&[vec![1, 1]], 2), Some(1));
        // zero ideal: everything
        assert_eq!(dimension_of_staircase(&[], 4), Some(4));
        // unit ideal: no proper dimension
        assert_eq!(dimension_of_staircase(&[vec![0, 0]], 2), None);
    }

    #[test]
    fn staircase_vs_enumeration_randomized() {
        use proptest::prelude::*;
        let mut runner = proptest::test_runner::TestRunner::default();
        let strategy = (
            1u32..6,
            1u32..6,
            1u32..6,
            proptest::collection::vec((0u32..6, 0u32..6, 0u32..6), 0..4),
        );
        runner
            .run(&strategy, |(a, b, c, extra)| {
                let mut stairs = vec![vec![a, 0, 0], vec![0, b, 0], vec![0, 0, c]];
                for (x, y, z) in extra {
                    stairs.push(vec![x, y, z]);
                }
                let mut count = 0u64;
                for i in 0..a {
                    for j in 0..b {
                        for k in 0..c {
                            let inside =
                                stairs.iter().any(|s| s[0] <= i && s[1] <= j && s[2] <= k);
                            if !inside {
                                count += 1;
                            }
                        }
                    }
                }
                prop_assert_eq!(colength_of_staircase(&stairs, 3), Colength::Finite(count));
                Ok(())
            })
            .unwrap();
    }

    #[test]
    fn brute_force_agreement() {
        // compare against direct enumeration of monomials up to the box bound
        let stairs = vec![vec![4, 0, 0], vec![0, 3, 0], vec![0, 0, 2], vec![1, 1, 1]];
        let mut count = 0u64;
        for a in 0..4 {
            for b in 0..3 {
                for c in 0..2 {
                    let inside = stairs.iter().any(|s| s[0] <= a && s[1] <= b && s[2] <= c);
                    if !inside {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(colength_of_staircase(&stairs, 3), Colength::Finite(count));
    }
}
