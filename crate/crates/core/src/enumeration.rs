//! Exhaustive sweeps over `S_n` and `SYT(λ)` that count `R_n`, `H_n`,
//! `M_n^λ` and check the structural results about them.
//!
//! `S_n` is cut into contiguous lexicographic rank intervals. Each interval
//! is unranked once and then walked with the successor function, so workers
//! never share state. Partial results are merged in interval order, which
//! makes every report independent of the worker count.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evacuation::evacuation;
use crate::permutation::{factorial, iterate_sn, next_lexicographic, unrank_into, Permutation};
use crate::reverse_maps::{
    characterization_holds, is_in_m, is_symmetric_hook_parts, phi, phi_parameters_of,
    satisfies_first_row_property, theta, theta_entries, PhiParameters,
};
use crate::rsk::{recording_matches_reverse, recording_shape, rsk, TableauPair};
use crate::tableau::{count_syt, enumerate_syt, Shape, Tableau};

/// Largest `n` counted by default.
pub const DEFAULT_MAX_N: usize = 11;
/// Largest `n` any sweep will accept, whatever the configuration says.
pub const HARD_MAX_N: usize = 13;
/// Largest `n` whose members may be listed.
pub const DEFAULT_LIST_CAP: usize = 8;
/// Largest `n` for the eight-relation sweep.
pub const SYMMETRY_MAX_N: usize = 7;
/// Largest source size `n` for the `φ`/`θ` sweep.
pub const PHI_THETA_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub workers: usize,
    pub max_n: usize,
    pub list_cap: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            workers: 1,
            max_n: DEFAULT_MAX_N,
            list_cap: DEFAULT_LIST_CAP,
        }
    }
}

impl SweepConfig {
    pub fn with_workers(workers: usize) -> Self {
        SweepConfig {
            workers: workers.max(1),
            ..Self::default()
        }
    }

    fn check_n(&self, n: usize) -> Result<()> {
        let max = self.max_n.min(HARD_MAX_N);
        if n == 0 || n > max {
            return Err(Error::SizeOutOfRange { n, min: 1, max });
        }
        Ok(())
    }
}

/// Folds `visit` over every permutation of `S_n` (with its lexicographic
/// rank), splitting the ranks across `workers` threads. `merge` is applied
/// in rank order.
pub fn par_fold<T, I, V, M>(n: usize, workers: usize, identity: I, visit: V, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, u64, &[usize]) + Sync,
    M: Fn(T, T) -> T,
{
    let total = factorial(n).expect("n bounded by caller");
    let workers = workers.max(1);
    let chunks = (workers as u64 * 16).min(total).max(1) as usize;
    let bound = |k: usize| ((total as u128 * k as u128) / chunks as u128) as u64;

    let run_chunk = |k: usize| {
        let (lo, hi) = (bound(k), bound(k + 1));
        let mut acc = identity();
        if lo == hi {
            return acc;
        }
        let mut buf = vec![0; n];
        unrank_into(n, lo, &mut buf);
        for rank in lo..hi {
            visit(&mut acc, rank, &buf);
            if rank + 1 < hi {
                next_lexicographic(&mut buf);
            }
        }
        acc
    };

    let mut parts: Vec<(usize, T)> = if workers == 1 {
        (0..chunks).map(|k| (k, run_chunk(k))).collect()
    } else {
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    scope.spawn(|| {
                        let mut mine = Vec::new();
                        loop {
                            let k = next.fetch_add(1, Ordering::Relaxed);
                            if k >= chunks {
                                break mine;
                            }
                            mine.push((k, run_chunk(k)));
                        }
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };
    parts.sort_by_key(|(k, _)| *k);
    parts.into_iter().map(|(_, t)| t).fold(identity(), merge)
}

fn par_count<P>(n: usize, workers: usize, pred: P) -> u64
where
    P: Fn(&[usize]) -> bool + Sync,
{
    par_fold(
        n,
        workers,
        || 0u64,
        |acc, _, w| *acc += pred(w) as u64,
        |a, b| a + b,
    )
}

/// Tally of a pass/fail sweep: how many checks held, and the lowest-ranked
/// failure if any.
#[derive(Debug, Clone, Default)]
struct Tally {
    passed: u64,
    total: u64,
    first_failure: Option<(u64, String)>,
}

impl Tally {
    fn record(&mut self, ok: bool, rank: u64, describe: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.as_ref().is_none_or(|(r, _)| rank < *r) {
            self.first_failure = Some((rank, describe()));
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.passed += other.passed;
        self.total += other.total;
        self.first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `2^{(n-1)/2} · C(n-1, (n-1)/2)` for odd `n`, `0` for even `n`.
pub fn r_count_formula(n: usize) -> u64 {
    if n.is_multiple_of(2) {
        return 0;
    }
    let half = (n as u64 - 1) / 2;
    (1u64 << half) * binomial(n as u64 - 1, half)
}

/// `2^{(n-1)/2}` for odd `n`, `0` for even `n`.
pub fn m_count_formula(n: usize) -> u64 {
    if n.is_multiple_of(2) {
        0
    } else {
        1u64 << ((n - 1) / 2)
    }
}

/// `|R_n|` by brute force.
pub fn count_r(n: usize, cfg: &SweepConfig) -> Result<u64> {
    cfg.check_n(n)?;
    Ok(par_count(n, cfg.workers, recording_matches_reverse))
}

/// `|H_n|` by brute force.
pub fn count_h(n: usize, cfg: &SweepConfig) -> Result<u64> {
    cfg.check_n(n)?;
    Ok(par_count(n, cfg.workers, |w| {
        is_symmetric_hook_parts(&recording_shape(w))
    }))
}

/// `|M_n^λ|` for the symmetric hook `λ` of size `n`; `0` for even `n`,
/// where no such shape exists.
pub fn count_m(n: usize, cfg: &SweepConfig) -> Result<u64> {
    cfg.check_n(n)?;
    Ok(match Shape::symmetric_hook(n) {
        Some(shape) => enumerate_syt(&shape).iter().filter(|t| is_in_m(t)).count() as u64,
        None => 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetSelector {
    R,
    H,
    M,
}

impl FromStr for SetSelector {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "R" | "r" => Ok(SetSelector::R),
            "H" | "h" => Ok(SetSelector::H),
            "M" | "m" => Ok(SetSelector::M),
            other => Err(format!("unknown set {other:?}, expected R, H or M")),
        }
    }
}

impl fmt::Display for SetSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetSelector::R => "R",
            SetSelector::H => "H",
            SetSelector::M => "M",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SetMembers {
    Permutations(Vec<Permutation>),
    Tableaux(Vec<Tableau>),
}

impl SetMembers {
    pub fn len(&self) -> usize {
        match self {
            SetMembers::Permutations(v) => v.len(),
            SetMembers::Tableaux(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn count_set(selector: SetSelector, n: usize, cfg: &SweepConfig) -> Result<u64> {
    match selector {
        SetSelector::R => count_r(n, cfg),
        SetSelector::H => count_h(n, cfg),
        SetSelector::M => count_m(n, cfg),
    }
}

/// Members of `R_n`, `H_n` or `M_n^λ` in lexicographic order.
pub fn list_set(selector: SetSelector, n: usize, cfg: &SweepConfig) -> Result<SetMembers> {
    cfg.check_n(n)?;
    if n > cfg.list_cap {
        return Err(Error::ListTooLarge {
            n,
            cap: cfg.list_cap,
        });
    }
    Ok(match selector {
        SetSelector::R => SetMembers::Permutations(
            iterate_sn(n)
                .filter(|w| recording_matches_reverse(w.entries()))
                .collect(),
        ),
        SetSelector::H => SetMembers::Permutations(
            iterate_sn(n)
                .filter(|w| is_symmetric_hook_parts(&recording_shape(w.entries())))
                .collect(),
        ),
        SetSelector::M => SetMembers::Tableaux(match Shape::symmetric_hook(n) {
            Some(shape) => enumerate_syt(&shape).into_iter().filter(is_in_m).collect(),
            None => Vec::new(),
        }),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Observation {
    Count(u64),
    Flag(bool),
}

impl fmt::Display for Observation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Observation::Count(c) => write!(f, "{c}"),
            Observation::Flag(b) => write!(f, "{b}"),
        }
    }
}

/// Outcome of one exhaustive check; one JSON object per line in the
/// results file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub n: usize,
    pub observed: Observation,
    pub expected: Observation,
    pub formula: Option<u64>,
    pub passed: bool,
    pub elapsed_ms: u64,
    pub workers: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl VerificationReport {
    pub fn new(
        check: &str,
        n: usize,
        observed: Observation,
        expected: Observation,
        formula: Option<u64>,
        started: Instant,
        workers: usize,
    ) -> Self {
        VerificationReport {
            check: check.to_string(),
            n,
            passed: observed == expected,
            observed,
            expected,
            formula,
            elapsed_ms: started.elapsed().as_millis() as u64,
            workers,
            counterexample: None,
        }
    }

    fn from_tally(check: &str, n: usize, tally: Tally, started: Instant, workers: usize) -> Self {
        let mut report = Self::new(
            check,
            n,
            Observation::Count(tally.passed),
            Observation::Count(tally.total),
            None,
            started,
            workers,
        );
        report.counterexample = tally.first_failure.map(|(_, s)| s);
        report
    }

    /// Same result, ignoring timing and worker count.
    pub fn same_outcome(&self, other: &Self) -> bool {
        let strip = |r: &Self| VerificationReport {
            elapsed_ms: 0,
            workers: 0,
            ..r.clone()
        };
        strip(self) == strip(other)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} n={} observed={} expected={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check,
            self.n,
            self.observed,
            self.expected
        )?;
        if let Some(formula) = self.formula {
            write!(f, " formula={formula}")?;
        }
        write!(f, " ({} ms, workers={})", self.elapsed_ms, self.workers)?;
        if let Some(cx) = &self.counterexample {
            write!(f, " first failure: {cx}")?;
        }
        Ok(())
    }
}

/// `|R_n|` against the closed form, for each `n ≤ n_max`.
pub fn verify_count_formula(n_max: usize, cfg: &SweepConfig) -> Result<Vec<VerificationReport>> {
    cfg.check_n(n_max)?;
    (1..=n_max)
        .map(|n| {
            let started = Instant::now();
            let observed = count_r(n, cfg)?;
            let formula = r_count_formula(n);
            Ok(VerificationReport::new(
                "count_R",
                n,
                Observation::Count(observed),
                Observation::Count(formula),
                Some(formula),
                started,
                cfg.workers,
            ))
        })
        .collect()
}

/// `w ∈ R_n` exactly when `Q(w)` is a symmetric hook with the first-row
/// property, for every `w ∈ S_n`, `n ≤ n_max`.
pub fn verify_characterization(n_max: usize, cfg: &SweepConfig) -> Result<Vec<VerificationReport>> {
    cfg.check_n(n_max)?;
    Ok((1..=n_max)
        .map(|n| {
            let started = Instant::now();
            let tally = par_fold(
                n,
                cfg.workers,
                Tally::default,
                |t, rank, w| {
                    let by_definition = recording_matches_reverse(w);
                    let q = rsk(&Permutation::from_entries_unchecked(w.to_vec())).q;
                    let by_shape = characterization_holds(&q);
                    t.record(by_definition == by_shape, rank, || {
                        format!(
                            "w = {} (definition {by_definition}, characterization {by_shape})",
                            Permutation::from_entries_unchecked(w.to_vec())
                        )
                    });
                },
                Tally::merge,
            );
            VerificationReport::from_tally("characterization", n, tally, started, cfg.workers)
        })
        .collect())
}

/// Pairs predicted for `w`, `w^c`, `w^r`, `w^{rc}`, `w^{-1}`, `w^{-1c}`,
/// `w^{-1r}`, `w^{-1rc}` from `P = P(w)` and `Q = Q(w)`.
fn predicted_pairs(p: &Tableau, q: &Tableau) -> [(Tableau, Tableau); 8] {
    let (ep, eq) = (evacuation(p), evacuation(q));
    [
        (p.clone(), q.clone()),
        (ep.transpose(), q.transpose()),
        (p.transpose(), eq.transpose()),
        (ep.clone(), eq.clone()),
        (q.clone(), p.clone()),
        (eq.transpose(), p.transpose()),
        (q.transpose(), ep.transpose()),
        (eq, ep),
    ]
}

const RELATION_NAMES: [&str; 8] = [
    "w", "w^c", "w^r", "w^rc", "w^-1", "w^-1c", "w^-1r", "w^-1rc",
];

fn relation_images(w: &Permutation) -> [Permutation; 8] {
    let inv = w.inverse();
    [
        w.clone(),
        w.complement(),
        w.reverse(),
        w.reverse().complement(),
        inv.clone(),
        inv.complement(),
        inv.reverse(),
        inv.reverse().complement(),
    ]
}

/// The eight RSK images of `w` under reverse, complement and inverse,
/// checked for every `w ∈ S_n`.
pub fn verify_symmetry_relations(n: usize, cfg: &SweepConfig) -> Result<VerificationReport> {
    cfg.check_n(n)?;
    if n > SYMMETRY_MAX_N {
        return Err(Error::SizeOutOfRange {
            n,
            min: 1,
            max: SYMMETRY_MAX_N,
        });
    }
    let started = Instant::now();
    let tally = par_fold(
        n,
        cfg.workers,
        Tally::default,
        |t, rank, entries| {
            let w = Permutation::from_entries_unchecked(entries.to_vec());
            let TableauPair { p, q } = rsk(&w);
            let predicted = predicted_pairs(&p, &q);
            for (k, image) in relation_images(&w).iter().enumerate() {
                let actual = rsk(image);
                let ok = actual.p == predicted[k].0 && actual.q == predicted[k].1;
                t.record(ok, rank, || {
                    format!("w = {w}, relation for {}", RELATION_NAMES[k])
                });
            }
        },
        Tally::merge,
    );
    Ok(VerificationReport::from_tally(
        "symmetry_relations",
        n,
        tally,
        started,
        cfg.workers,
    ))
}

/// Left-inverse law, partition of `S_{n+2}` by the images of the `φ_{a,b}`,
/// and the equivariance of `θ` under reverse and complement.
pub fn verify_phi_theta(n: usize, cfg: &SweepConfig) -> Result<Vec<VerificationReport>> {
    cfg.check_n(n + 2)?;
    if n > PHI_THETA_MAX_N {
        return Err(Error::SizeOutOfRange {
            n,
            min: 1,
            max: PHI_THETA_MAX_N,
        });
    }
    let target = n + 2;

    let started = Instant::now();
    let mut left = Tally::default();
    let mut hits = vec![0u32; factorial(target).expect("small") as usize];
    for (rank, w) in iterate_sn(n).enumerate() {
        for params in PhiParameters::all(n) {
            let image = phi(params, &w)?;
            hits[image.rank() as usize] += 1;
            let back = theta(&image)?;
            left.record(back == w, rank as u64, || {
                format!("theta(phi_{{{},{}}}({w})) = {back}", params.a, params.b)
            });
        }
    }
    let left_report =
        VerificationReport::from_tally("phi_theta_left_inverse", n, left, started, cfg.workers);

    let started = Instant::now();
    let hits = &hits;
    let partition = par_fold(
        target,
        cfg.workers,
        Tally::default,
        |t, rank, u| {
            let w = Permutation::from_entries_unchecked(u.to_vec());
            let rebuilt = phi_parameters_of(&w)
                .and_then(|params| phi(params, &theta(&w)?))
                .is_ok_and(|v| v == w);
            let count = hits[rank as usize];
            t.record(count == 1 && rebuilt, rank, || {
                format!("u = {w} is the image of {count} maps")
            });
        },
        Tally::merge,
    );
    let partition_report =
        VerificationReport::from_tally("phi_theta_partition", n, partition, started, cfg.workers);

    let started = Instant::now();
    let equivariance = par_fold(
        target,
        cfg.workers,
        Tally::default,
        |t, rank, u| {
            let w = Permutation::from_entries_unchecked(u.to_vec());
            let base = Permutation::from_entries_unchecked(theta_entries(u));
            let rev = theta_entries(w.reverse().entries()) == base.reverse().entries();
            let comp = theta_entries(w.complement().entries()) == base.complement().entries();
            t.record(rev && comp, rank, || {
                format!("u = {w} (reverse {rev}, complement {comp})")
            });
        },
        Tally::merge,
    );
    let equivariance_report =
        VerificationReport::from_tally("theta_equivariance", n, equivariance, started, cfg.workers);

    Ok(vec![left_report, partition_report, equivariance_report])
}

/// Every `w ∈ R_{n+2}` has `θ(w) ∈ R_n` and `w = φ_{w_1, w_{n+2}}(θ(w))`.
pub fn verify_r_transport(n: usize, cfg: &SweepConfig) -> Result<VerificationReport> {
    cfg.check_n(n + 2)?;
    if n == 0 {
        return Err(Error::SizeOutOfRange {
            n,
            min: 1,
            max: cfg.max_n.min(HARD_MAX_N) - 2,
        });
    }
    let started = Instant::now();
    let tally = par_fold(
        n + 2,
        cfg.workers,
        Tally::default,
        |t, rank, u| {
            if !recording_matches_reverse(u) {
                return;
            }
            let w = Permutation::from_entries_unchecked(u.to_vec());
            let down = Permutation::from_entries_unchecked(theta_entries(u));
            let lands_in_r = recording_matches_reverse(down.entries());
            let lifts_back = phi_parameters_of(&w)
                .and_then(|params| phi(params, &down))
                .is_ok_and(|v| v == w);
            t.record(lands_in_r && lifts_back, rank, || {
                format!("w = {w}, theta(w) = {down} (in R: {lands_in_r}, lifts back: {lifts_back})")
            });
        },
        Tally::merge,
    );
    Ok(VerificationReport::from_tally(
        "R_transport",
        n,
        tally,
        started,
        cfg.workers,
    ))
}

/// For each odd `n ≤ n_max`: `|M_n^λ| = 2^{(n-1)/2}`, `M_n^λ` is cut out by
/// the first-row property, and `|R_n| = |M_n^λ| · f^λ`.
pub fn verify_m_set(n_max: usize, cfg: &SweepConfig) -> Result<Vec<VerificationReport>> {
    cfg.check_n(n_max)?;
    let mut reports = Vec::new();
    for n in (1..=n_max).step_by(2) {
        let shape = Shape::symmetric_hook(n).expect("odd n");

        let started = Instant::now();
        let m = count_m(n, cfg)?;
        let formula = m_count_formula(n);
        reports.push(VerificationReport::new(
            "M_count",
            n,
            Observation::Count(m),
            Observation::Count(formula),
            Some(formula),
            started,
            cfg.workers,
        ));

        let started = Instant::now();
        let tableaux = enumerate_syt(&shape);
        let mut tally = Tally::default();
        for (rank, t) in tableaux.iter().enumerate() {
            let by_definition = is_in_m(t);
            let by_property = satisfies_first_row_property(t);
            tally.record(by_definition == by_property, rank as u64, || {
                format!(
                    "{} (definition {by_definition}, first-row {by_property})",
                    t.to_json()
                )
            });
        }
        reports.push(VerificationReport::from_tally(
            "M_first_row",
            n,
            tally,
            started,
            cfg.workers,
        ));

        let started = Instant::now();
        let r = count_r(n, cfg)?;
        let f = count_syt(&shape);
        reports.push(VerificationReport::new(
            "R_factorization",
            n,
            Observation::Count(r),
            Observation::Count(m * f),
            Some(r_count_formula(n)),
            started,
            cfg.workers,
        ));
    }
    Ok(reports)
}

/// Which groups of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckSelection {
    pub count: bool,
    pub characterization: bool,
    pub symmetry: bool,
    pub phi_theta: bool,
    pub transport: bool,
    pub m_set: bool,
}

impl CheckSelection {
    pub fn all() -> Self {
        CheckSelection {
            count: true,
            characterization: true,
            symmetry: true,
            phi_theta: true,
            transport: true,
            m_set: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == CheckSelection::default()
    }
}

/// Runs the selected groups with `n_max` bounding the largest symmetric
/// group swept. The eight-relation and `φ`/`θ` sweeps are clamped to their
/// own size limits.
pub fn run_checks(
    selection: CheckSelection,
    n_max: usize,
    cfg: &SweepConfig,
) -> Result<Vec<VerificationReport>> {
    cfg.check_n(n_max)?;
    let mut reports = Vec::new();
    if selection.count {
        reports.extend(verify_count_formula(n_max, cfg)?);
    }
    if selection.characterization {
        reports.extend(verify_characterization(n_max, cfg)?);
    }
    if selection.symmetry {
        for n in 1..=n_max.min(SYMMETRY_MAX_N) {
            reports.push(verify_symmetry_relations(n, cfg)?);
        }
    }
    if selection.phi_theta {
        for n in 1..=n_max.saturating_sub(2).min(PHI_THETA_MAX_N) {
            reports.extend(verify_phi_theta(n, cfg)?);
        }
    }
    if selection.transport {
        for n in 1..=n_max.saturating_sub(2) {
            reports.push(verify_r_transport(n, cfg)?);
        }
    }
    if selection.m_set {
        reports.extend(verify_m_set(n_max, cfg)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SweepConfig {
        SweepConfig::default()
    }

    fn perms(members: SetMembers) -> Vec<String> {
        match members {
            SetMembers::Permutations(v) => {
                v.iter().map(|w| w.to_compact_string().unwrap()).collect()
            }
            SetMembers::Tableaux(_) => panic!("expected permutations"),
        }
    }

    #[test]
    fn formulas() {
        let r: Vec<u64> = (1..=11).map(r_count_formula).collect();
        assert_eq!(r, [1, 0, 4, 0, 24, 0, 160, 0, 1120, 0, 8064]);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(m_count_formula(9), 16);
    }

    #[test]
    fn counts_small() {
        assert_eq!(count_r(1, &cfg()).unwrap(), 1);
        assert_eq!(count_r(4, &cfg()).unwrap(), 0);
        assert_eq!(count_r(5, &cfg()).unwrap(), 24);
        assert_eq!(count_h(1, &cfg()).unwrap(), 1);
        assert_eq!(count_h(2, &cfg()).unwrap(), 0);
        assert_eq!(count_h(5, &cfg()).unwrap(), 36);
        assert_eq!(count_m(1, &cfg()).unwrap(), 1);
        assert_eq!(count_m(4, &cfg()).unwrap(), 0);
        assert_eq!(count_m(5, &cfg()).unwrap(), 4);
        assert_eq!(count_m(7, &cfg()).unwrap(), 8);
    }

    #[test]
    fn range_checks() {
        assert!(matches!(
            count_r(0, &cfg()),
            Err(Error::SizeOutOfRange { .. })
        ));
        assert!(matches!(
            count_r(12, &cfg()),
            Err(Error::SizeOutOfRange { .. })
        ));
        let big = SweepConfig { max_n: 50, ..cfg() };
        assert_eq!(
            count_r(14, &big),
            Err(Error::SizeOutOfRange {
                n: 14,
                min: 1,
                max: 13
            })
        );
        assert_eq!(
            list_set(SetSelector::R, 9, &cfg()),
            Err(Error::ListTooLarge { n: 9, cap: 8 })
        );
        assert!(verify_symmetry_relations(8, &cfg()).is_err());
        assert!(verify_phi_theta(7, &cfg()).is_err());
    }

    #[test]
    fn listing() {
        assert_eq!(
            perms(list_set(SetSelector::R, 3, &cfg()).unwrap()),
            ["132", "213", "231", "312"]
        );
        assert!(list_set(SetSelector::R, 2, &cfg()).unwrap().is_empty());
        let SetMembers::Tableaux(m5) = list_set(SetSelector::M, 5, &cfg()).unwrap() else {
            panic!()
        };
        let first_rows: Vec<Vec<usize>> = m5.iter().map(|t| t.first_row().to_vec()).collect();
        assert_eq!(
            first_rows,
            [vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 5], vec![1, 4, 5]]
        );
        assert!(m5.iter().all(satisfies_first_row_property));
    }

    #[test]
    fn par_fold_covers_every_rank_once() {
        for workers in [1, 2, 3, 8] {
            for n in 0..=6 {
                let ranks = par_fold(
                    n,
                    workers,
                    Vec::new,
                    |acc, rank, w| {
                        assert_eq!(Permutation::unrank(n, rank).unwrap().entries(), w);
                        acc.push(rank);
                    },
                    |mut a, b| {
                        a.extend(b);
                        a
                    },
                );
                let expected: Vec<u64> = (0..factorial(n).unwrap()).collect();
                assert_eq!(ranks, expected);
            }
        }
    }

    #[test]
    fn verification_small() {
        let reports = verify_count_formula(5, &cfg()).unwrap();
        let observed: Vec<Observation> = reports.iter().map(|r| r.observed).collect();
        assert_eq!(observed, [1, 0, 4, 0, 24].map(Observation::Count));
        assert!(reports.iter().all(|r| r.passed));

        let reports = verify_characterization(5, &cfg()).unwrap();
        let total: u64 = reports
            .iter()
            .map(|r| match r.observed {
                Observation::Count(c) => c,
                Observation::Flag(_) => 0,
            })
            .sum();
        assert_eq!(total, 153);
        assert!(reports.iter().all(|r| r.passed));

        assert!(verify_symmetry_relations(1, &cfg()).unwrap().passed);
        let phi = verify_phi_theta(4, &cfg()).unwrap();
        assert!(phi.iter().all(|r| r.passed), "{phi:?}");
        assert_eq!(phi[1].observed, Observation::Count(720));

        let t = verify_r_transport(1, &cfg()).unwrap();
        assert_eq!((t.observed, t.passed), (Observation::Count(4), true));
        let t = verify_r_transport(3, &cfg()).unwrap();
        assert_eq!((t.observed, t.passed), (Observation::Count(24), true));
    }

    #[test]
    fn report_json_schema() {
        let started = Instant::now();
        let mut r = VerificationReport::new(
            "count_R",
            5,
            Observation::Count(24),
            Observation::Count(24),
            Some(24),
            started,
            2,
        );
        r.elapsed_ms = 7;
        assert_eq!(
            r.to_json_line(),
            r#"{"check":"count_R","n":5,"observed":24,"expected":24,"formula":24,"passed":true,"elapsed_ms":7,"workers":2}"#
        );
        let mut flag = r.clone();
        flag.observed = Observation::Flag(true);
        flag.formula = None;
        assert!(flag.to_json_line().contains(r#""observed":true"#));
        assert!(flag.to_json_line().contains(r#""formula":null"#));
        let back: VerificationReport = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn tally_keeps_lowest_ranked_failure() {
        let mut a = Tally::default();
        a.record(false, 9, || "nine".into());
        a.record(true, 1, || unreachable!());
        let mut b = Tally::default();
        b.record(false, 4, || "four".into());
        let merged = b.merge(a);
        assert_eq!((merged.passed, merged.total), (1, 3));
        assert_eq!(merged.first_failure.unwrap().1, "four");
    }
}
