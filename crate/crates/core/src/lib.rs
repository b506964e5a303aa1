//! Robinson–Schensted–Knuth correspondence, Schützenberger evacuation, and
//! the permutations whose recording tableau is unchanged by reversal.
//!
//! The main objects are
//!
//! * `R_n`: permutations `w` with `Q(w) = Q(w^r)`,
//! * `H_n`: permutations whose recording tableau has symmetric hook shape,
//! * `M_n^λ`: standard tableaux `T` of shape `λ` with `ε(T)^T = T`,
//!
//! together with the lifting maps `φ_{a,b}` and their left inverse `θ` used
//! to build `R_{n+2}` out of `R_n`. The [`enumeration`] module sweeps whole
//! symmetric groups to check the counting formula and the tableau
//! characterization of `R_n`.
//!
//! ```
//! use rsk_reverse::{is_in_r, rsk, Permutation};
//!
//! let w: Permutation = "52314".parse().unwrap();
//! let pair = rsk(&w);
//! assert_eq!(pair.q.rows(), &[vec![1, 3, 5], vec![2], vec![4]]);
//! assert!(is_in_r(&w));
//! ```

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod evacuation;
pub mod permutation;
pub mod reverse_maps;
pub mod rsk;
pub mod tableau;

pub use enumeration::{
    count_h, count_m, count_r, m_count_formula, r_count_formula, SweepConfig, VerificationReport,
};
pub use error::{Error, Result};
pub use evacuation::{delta, evacuation, evacuation_trace, jdt_slide, SkewConfiguration};
pub use permutation::{iterate_sn, Permutation};
pub use reverse_maps::{
    characterization_holds, is_in_h, is_in_m, is_in_r, membership_report, phi, theta, PhiParameters,
};
pub use rsk::{inverse_rsk, row_insert, rsk, TableauPair};
pub use tableau::{enumerate_syt, Cell, Grid, Shape, Tableau};
