//! Closed forms for the minimum subtree count when at most five vertices
//! are internal.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::caterpillar::Caterpillar;
use crate::count::BigCount;
use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

fn pow2(exp: u32) -> BigUint {
    BigUint::one() << exp
}

/// Minimum `phi` over all trees with degree sequence `ds` (`k` in 2..=4),
/// together with the unique minimizing caterpillar:
///
/// * `k = 2`: `2^(n-2) + 2^(d1-1) + 2^(d2-1) + n - 2`, at `C(d1-2, d2-2)`;
/// * `k = 3`: `n - 3 + 2^(d1-1) + 2^(d2-1) + 2^(d3-2) + 2^(d1+d3-3)
///   + 2^(d3+d2-3) + 2^(n-3)`, at `C(d1-2, d3-2, d2-2)`;
/// * `k = 4`: `n - 4 + 2^(d1-1) + 2^(d2-1) + 2^(d3-2) + 2^(d4-2)
///   + 2^(d1+d4-3) + 2^(d3+d4-4) + 2^(d3+d2-3) + 2^(d1+d4+d3-5)
///   + 2^(d2+d3+d4-5) + 2^(n-4)`, at `C(d1-2, d4-2, d3-2, d2-2)`.
///
/// The vector is returned in the stated orientation, not canonicalized.
pub fn closed_form_phi(ds: &DegreeSequence) -> Result<(BigCount, Caterpillar)> {
    let k = ds.k();
    let n = ds.n() as u32;
    let d = |i: usize| ds.d(i);
    let (value, y) = match k {
        2 => (
            pow2(n - 2) + pow2(d(1) - 1) + pow2(d(2) - 1) + (n - 2),
            vec![d(1) - 2, d(2) - 2],
        ),
        3 => (
            (n - 3)
                + pow2(d(1) - 1)
                + pow2(d(2) - 1)
                + pow2(d(3) - 2)
                + pow2(d(1) + d(3) - 3)
                + pow2(d(3) + d(2) - 3)
                + pow2(n - 3),
            vec![d(1) - 2, d(3) - 2, d(2) - 2],
        ),
        4 => (
            (n - 4)
                + pow2(d(1) - 1)
                + pow2(d(2) - 1)
                + pow2(d(3) - 2)
                + pow2(d(4) - 2)
                + pow2(d(1) + d(4) - 3)
                + pow2(d(3) + d(4) - 4)
                + pow2(d(3) + d(2) - 3)
                + pow2(d(1) + d(4) + d(3) - 5)
                + pow2(d(2) + d(3) + d(4) - 5)
                + pow2(n - 4),
            vec![d(1) - 2, d(4) - 2, d(3) - 2, d(2) - 2],
        ),
        _ => return Err(Error::WrongK { expected: "{2, 3, 4}", actual: k }),
    };
    Ok((BigCount(value), Caterpillar::new(y)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Case {
    I,
    II,
    III,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
        })
    }
}

/// Case split for five internal vertices, on the sign of
/// `2^d1 - 2^(d3-1) (1 + 2^(d2-1))` and on whether `d4 = d5`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrichotomyCase {
    pub case: Case,
    pub lhs: BigCount,
    pub rhs: BigCount,
    pub d4_equals_d5: bool,
}

impl TrichotomyCase {
    pub fn classify(ds: &DegreeSequence) -> Result<Self> {
        let k = ds.k();
        if k != 5 {
            return Err(Error::WrongK { expected: "{5}", actual: k });
        }
        let lhs = pow2(ds.d(1));
        let rhs = pow2(ds.d(3) - 1) * (pow2(ds.d(2) - 1) + 1u32);
        let d4_equals_d5 = ds.d(4) == ds.d(5);
        let case = if d4_equals_d5 || lhs == rhs {
            Case::II
        } else if lhs > rhs {
            Case::I
        } else {
            Case::III
        };
        Ok(TrichotomyCase { case, lhs: BigCount(lhs), rhs: BigCount(rhs), d4_equals_d5 })
    }

    /// True when `2^d1 = 2^(d3-1) (1 + 2^(d2-1))` holds exactly.
    pub fn balanced(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `C(d1-2, d5-2, d4-2, d3-2, d2-2)`: the leaf-heavy end next to the
/// smallest spine vertex.
pub fn k5_first_form(ds: &DegreeSequence) -> Vec<u32> {
    vec![ds.d(1) - 2, ds.d(5) - 2, ds.d(4) - 2, ds.d(3) - 2, ds.d(2) - 2]
}

/// `C(d1-2, d4-2, d5-2, d3-2, d2-2)`.
pub fn k5_second_form(ds: &DegreeSequence) -> Vec<u32> {
    vec![ds.d(1) - 2, ds.d(4) - 2, ds.d(5) - 2, ds.d(3) - 2, ds.d(2) - 2]
}

/// Predicted minimizers for `k = 5`: the first form in case I, the second
/// in case III, both in case II. Vectors are canonicalized, deduplicated
/// and sorted.
pub fn predict_min_k5(ds: &DegreeSequence) -> Result<(TrichotomyCase, Vec<Caterpillar>)> {
    let case = TrichotomyCase::classify(ds)?;
    let forms = match case.case {
        Case::I => vec![k5_first_form(ds)],
        Case::III => vec![k5_second_form(ds)],
        Case::II => vec![k5_first_form(ds), k5_second_form(ds)],
    };
    let mut cats: Vec<Caterpillar> = forms
        .into_iter()
        .map(|y| Caterpillar::new(y).map(|c| c.canonical()))
        .collect::<Result<_>>()?;
    cats.sort();
    cats.dedup();
    Ok((case, cats))
}

/// `phi(first form) - phi(second form)` in factored form:
/// `(2^(d5-2) - 2^(d4-2)) (2^(d1-1) - 2^(d3-2) (1 + 2^(d2-1)))`.
///
/// The second factor is half of `2^d1 - 2^(d3-1)(1 + 2^(d2-1))`, so its
/// sign is the one used by the case split.
pub fn k5_difference(ds: &DegreeSequence) -> Result<BigInt> {
    let k = ds.k();
    if k != 5 {
        return Err(Error::WrongK { expected: "{5}", actual: k });
    }
    let p = |e: u32| BigInt::from(pow2(e));
    let first = p(ds.d(5) - 2) - p(ds.d(4) - 2);
    let second = p(ds.d(1) - 1) - p(ds.d(3) - 2) * (p(ds.d(2) - 1) + 1);
    Ok(first * second)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn small_closed_forms() {
        let (v, y) = closed_form_phi(&ds("3,2,1*3")).unwrap();
        assert_eq!((v, y.pendants().to_vec()), (17u64.into(), vec![1, 0]));
        let (v, y) = closed_form_phi(&ds("3,2,2,1*3")).unwrap();
        assert_eq!((v, y.pendants().to_vec()), (24u64.into(), vec![1, 0, 0]));
        let (v, y) = closed_form_phi(&ds("3,3,2,2,1*4")).unwrap();
        assert_eq!((v, y.pendants().to_vec()), (47u64.into(), vec![1, 0, 0, 1]));
    }

    #[test]
    fn closed_form_rejects_other_k() {
        for s in ["4,1*4", "1,1", "2*5,1*2", "3,3,3,3,2,1*6"] {
            assert!(matches!(closed_form_phi(&ds(s)), Err(Error::WrongK { .. })), "{s}");
        }
    }

    #[test]
    fn trichotomy_examples() {
        let (case, cats) = predict_min_k5(&ds("8,3,3,3,2,1*11")).unwrap();
        assert_eq!(case.case, Case::I);
        assert_eq!(case.lhs, 256);
        assert_eq!(case.rhs, 20);
        assert!(!case.d4_equals_d5);
        assert_eq!(cats.len(), 1);
        assert_eq!(cats[0].pendants(), &[6, 0, 1, 1, 1]);

        let (case, cats) = predict_min_k5(&ds("3,3,3,3,2,1*6")).unwrap();
        assert_eq!(case.case, Case::III);
        assert_eq!((case.lhs.clone(), case.rhs.clone()), (8u64.into(), 20u64.into()));
        assert_eq!(cats.len(), 1);
        assert_eq!(cats[0].pendants(), &[1, 1, 0, 1, 1]);

        let (case, cats) = predict_min_k5(&ds("4,3,3,2,2,1*6")).unwrap();
        assert_eq!(case.case, Case::II);
        assert!(case.d4_equals_d5);
        assert_eq!(cats.len(), 1);
        assert_eq!(cats[0].pendants(), &[2, 0, 0, 1, 1]);

        assert!(matches!(predict_min_k5(&ds("3,2,1*3")), Err(Error::WrongK { .. })));
    }
}
