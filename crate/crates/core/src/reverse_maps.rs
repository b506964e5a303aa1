//! The lifting maps `φ_{a,b} : S_n → S_{n+2}`, their common left inverse
//! `θ_n : S_{n+2} → S_n`, and membership tests for `R_n`, `H_n` and `M_n^λ`.
//!
//! `is_in_r` and `is_in_m` are computed from their definitions (RSK and
//! evacuation). The tableau characterization lives in
//! [`characterization_holds`] and is only ever compared against them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::evacuation::evacuation;
use crate::permutation::Permutation;
use crate::rsk::{recording_matches_reverse, recording_shape, rsk};
use crate::tableau::Tableau;

/// The endpoints `(a, b)` of `φ_{a,b}`, with `a ≠ b` in `1..=n+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PhiParameters {
    pub a: usize,
    pub b: usize,
}

impl PhiParameters {
    /// Parameters for a map out of `S_n`.
    pub fn new(a: usize, b: usize, n: usize) -> Result<Self> {
        let target = n + 2;
        if a == b || a == 0 || b == 0 || a > target || b > target {
            return Err(Error::InvalidPhiParameters { a, b, target });
        }
        Ok(PhiParameters { a, b })
    }

    fn low(self) -> usize {
        self.a.min(self.b)
    }

    fn high(self) -> usize {
        self.a.max(self.b)
    }

    /// All `(n+2)(n+1)` valid pairs for source size `n`, lexicographically.
    pub fn all(n: usize) -> impl Iterator<Item = PhiParameters> {
        let target = n + 2;
        (1..=target).flat_map(move |a| {
            (1..=target)
                .filter(move |&b| b != a)
                .map(move |b| PhiParameters { a, b })
        })
    }
}

/// `φ_{a,b}(w)`: prepend `a`, append `b`, and shift each `w_i` up by 0, 1
/// or 2 according to `w_i < c`, `c ≤ w_i < d-1`, `d-1 ≤ w_i`.
pub fn phi(params: PhiParameters, w: &Permutation) -> Result<Permutation> {
    let n = w.len();
    let params = PhiParameters::new(params.a, params.b, n)?;
    let (c, d) = (params.low(), params.high());
    let mut out = Vec::with_capacity(n + 2);
    out.push(params.a);
    out.extend(w.entries().iter().map(|&v| {
        if v < c {
            v
        } else if v < d - 1 {
            v + 1
        } else {
            v + 2
        }
    }));
    out.push(params.b);
    Permutation::new(out)
}

/// `θ_n(w)`: drop both endpoints and close the two gaps they leave.
pub fn theta(w: &Permutation) -> Result<Permutation> {
    let e = w.entries();
    if e.len() < 3 {
        return Err(Error::TooSmall {
            len: e.len(),
            min: 3,
        });
    }
    Ok(Permutation::from_entries_unchecked(theta_entries(e)))
}

pub(crate) fn theta_entries(e: &[usize]) -> Vec<usize> {
    let (first, last) = (e[0], e[e.len() - 1]);
    let (c, d) = (first.min(last), first.max(last));
    e[1..e.len() - 1]
        .iter()
        .map(|&v| {
            if v < c {
                v
            } else if v < d {
                v - 1
            } else {
                v - 2
            }
        })
        .collect()
}

/// The unique `(a, b)` with `φ_{a,b}(θ(w)) = w`, read off the endpoints.
pub fn phi_parameters_of(w: &Permutation) -> Result<PhiParameters> {
    let e = w.entries();
    if e.len() < 3 {
        return Err(Error::TooSmall {
            len: e.len(),
            min: 3,
        });
    }
    let params = PhiParameters {
        a: e[0],
        b: e[e.len() - 1],
    };
    debug_assert_eq!(phi(params, &theta(w)?).as_ref(), Ok(w));
    Ok(params)
}

/// `w ∈ R_n`, i.e. `Q(w) = Q(w^r)`.
pub fn is_in_r(w: &Permutation) -> bool {
    recording_matches_reverse(w.entries())
}

/// `w ∈ H_n`, i.e. `Q(w)` has symmetric hook shape.
pub fn is_in_h(w: &Permutation) -> bool {
    is_symmetric_hook_parts(&recording_shape(w.entries()))
}

/// Shape test on raw row lengths; agrees with
/// [`crate::tableau::Shape::is_symmetric_hook`].
pub(crate) fn is_symmetric_hook_parts(parts: &[usize]) -> bool {
    let n: usize = parts.iter().sum();
    if n.is_multiple_of(2) {
        return false;
    }
    let arm = n.div_ceil(2);
    parts.len() == arm && parts[0] == arm && parts[1..].iter().all(|&l| l == 1)
}

/// For every `i > 1` in the first row of `t`, `n - i + 2` lies in the first
/// column.
pub fn satisfies_first_row_property(t: &Tableau) -> bool {
    let n = t.size();
    let column = t.first_column();
    t.first_row()
        .iter()
        .filter(|&&i| i > 1)
        .all(|&i| column.contains(&(n + 2 - i)))
}

/// `t ∈ M_n^λ`, i.e. `ε(t)^T = t`.
pub fn is_in_m(t: &Tableau) -> bool {
    evacuation(t).transpose() == *t
}

/// Symmetric hook shape together with the first-row property.
pub fn characterization_holds(q: &Tableau) -> bool {
    q.shape().is_symmetric_hook() && satisfies_first_row_property(q)
}

/// Everything `check` reports about one permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub permutation: Permutation,
    #[serde(rename = "Q")]
    pub q: Tableau,
    #[serde(rename = "Q_reverse")]
    pub q_reverse: Tableau,
    pub in_r: bool,
    pub in_h: bool,
    pub symmetric_hook: bool,
    pub first_row_property: bool,
    pub characterization: bool,
    pub agrees: bool,
}

/// Compares the definition of `R_n` with the tableau characterization.
pub fn membership_report(w: &Permutation) -> MembershipReport {
    let q = rsk(w).q;
    let q_reverse = rsk(&w.reverse()).q;
    let in_r = q == q_reverse;
    let symmetric_hook = q.shape().is_symmetric_hook();
    let first_row_property = satisfies_first_row_property(&q);
    let characterization = symmetric_hook && first_row_property;
    MembershipReport {
        permutation: w.clone(),
        in_h: symmetric_hook,
        q,
        q_reverse,
        in_r,
        symmetric_hook,
        first_row_property,
        characterization,
        agrees: in_r == characterization,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::iterate_sn;
    use crate::tableau::{enumerate_syt, Shape};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn syt(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn params(a: usize, b: usize, n: usize) -> PhiParameters {
        PhiParameters::new(a, b, n).unwrap()
    }

    #[test]
    fn phi_examples() {
        let w = p("52314");
        assert_eq!(phi(params(1, 2, 5), &w).unwrap(), p("1745362"));
        assert_eq!(phi(params(1, 7, 5), &w).unwrap(), p("1634257"));
        assert_eq!(phi(params(5, 3, 5), &w).unwrap(), p("5724163"));
        assert_eq!(phi(params(3, 5, 5), &w).unwrap(), p("3724165"));
    }

    #[test]
    fn phi_rejects_bad_parameters() {
        assert!(PhiParameters::new(2, 2, 3).is_err());
        assert!(PhiParameters::new(0, 2, 3).is_err());
        assert!(PhiParameters::new(1, 6, 3).is_err());
        assert_eq!(
            phi(PhiParameters { a: 1, b: 9 }, &p("231")),
            Err(Error::InvalidPhiParameters {
                a: 1,
                b: 9,
                target: 5
            })
        );
        assert_eq!(PhiParameters::all(5).count(), 42);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&p("231")).unwrap(), p("1"));
        assert_eq!(theta(&p("52314")).unwrap(), p("231"));
        assert_eq!(theta(&p("1634257")).unwrap(), p("52314"));
        assert_eq!(theta(&p("12")), Err(Error::TooSmall { len: 2, min: 3 }));
    }

    #[test]
    fn endpoint_parameters() {
        assert_eq!(
            phi_parameters_of(&p("1634257")).unwrap(),
            PhiParameters { a: 1, b: 7 }
        );
        assert_eq!(
            phi_parameters_of(&p("5724163")).unwrap(),
            PhiParameters { a: 5, b: 3 }
        );
        assert_eq!(
            phi_parameters_of(&p("231")).unwrap(),
            PhiParameters { a: 2, b: 1 }
        );
        assert!(phi_parameters_of(&p("21")).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(is_in_r(&p("52314")));
        assert!(!is_in_r(&p("52341")));
        assert!(!is_in_r(&p("12")) && !is_in_r(&p("21")));
        assert!(is_in_h(&p("52314")));
        assert!(is_in_h(&p("52341")));
        assert!(!is_in_h(&p("12")));
        assert!(is_in_r(&p("1")) && is_in_h(&p("1")));
    }

    #[test]
    fn r_membership_matches_rsk_definition() {
        for n in 1..=7 {
            for w in iterate_sn(n) {
                assert_eq!(is_in_r(&w), rsk(&w).q == rsk(&w.reverse()).q);
            }
        }
    }

    #[test]
    fn first_row_property_examples() {
        assert!(satisfies_first_row_property(&syt(&[
            &[1, 3, 5],
            &[2],
            &[4]
        ])));
        assert!(!satisfies_first_row_property(&syt(&[
            &[1, 3, 4],
            &[2],
            &[5]
        ])));
        assert!(satisfies_first_row_property(&syt(&[&[1]])));
    }

    #[test]
    fn m_membership_examples() {
        assert!(is_in_m(&syt(&[&[1, 3, 5], &[2], &[4]])));
        assert!(!is_in_m(&syt(&[&[1, 3, 4], &[2], &[5]])));
        assert!(is_in_m(&syt(&[&[1]])));
    }

    #[test]
    fn shape_shortcut_matches_partition_predicate() {
        for n in 1..=12 {
            for s in Shape::partitions(n) {
                assert_eq!(
                    is_symmetric_hook_parts(s.parts()),
                    s.is_symmetric_hook(),
                    "{s}"
                );
            }
        }
    }

    #[test]
    fn m_characterization_on_all_small_tableaux() {
        for n in [1, 3, 5, 7] {
            for s in Shape::partitions(n) {
                for t in enumerate_syt(&s) {
                    assert_eq!(is_in_m(&t), characterization_holds(&t), "{t:?}");
                }
            }
        }
    }

    #[test]
    fn witness_34521_lies_in_r() {
        let report = membership_report(&p("34521"));
        assert_eq!(report.q, syt(&[&[1, 2, 3], &[4], &[5]]));
        assert!(report.in_r);
        assert!(report.characterization);
        assert!(report.agrees);
    }
}
