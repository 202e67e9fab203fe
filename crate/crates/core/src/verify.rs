//! Exhaustive verification over the symmetric groups.
//!
//! Each check is a predicate on one permutation plus optional counters. A run
//! for size `n` evaluates the selected checks on every permutation of every
//! size `1..=n`; a failure reports the lexicographically first failing
//! permutation of the smallest failing size. Counters describe `S_n` alone.
//!
//! Work is split into contiguous lexicographic rank ranges, one per job, and
//! merged in rank order, so reports do not depend on the job count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::crossings::{
    crossing_free_all_iterates, crossing_free_from, detect_crossings, polygonal_pairs,
    rows_monotone, CrossingKind, Locus,
};
use crate::perm::{avoids_barred_3bar142, factorial, Permutation, Permutations};
use crate::piles::{rpw, xps, xps_inverse, PileConfig};
use crate::rsk::{rsk, Tableau};
use crate::shadow::{geometric_ps, geometric_rsk, ne_iterates, sw_iterates};

pub const MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `xps_inverse(xps(p)) = p` with equal pile shapes.
    Bijection,
    /// `xps(p⁻¹)` is `xps(p)` with the piles swapped.
    SymmetryXps,
    /// `rsk(p⁻¹)` is `rsk(p)` with the tableaux swapped.
    SymmetryRsk,
    /// Piles read off the SW iterates equal `xps(p)`.
    GeomPsEquality,
    /// Tableaux read off the NE iterates equal `rsk(p)`.
    GeomRskEquality,
    /// `p` is a reverse patience word iff it avoids 3-1̄-42.
    RpwAvoidance,
    /// No SW iterate has a crossing iff every pile row of `R` and `S`
    /// increases left to right (CLI name `theorem2`).
    CrossingCharacterization,
    /// For every `m`, iterates `m, m+1, ...` are crossing free iff rows
    /// `m+1, m+2, ...` increase (CLI name `suffix-corollary`).
    SuffixCharacterization,
    /// No two lines of an NE iterate share a point.
    NeNoncrossing,
    /// Pile tops, sorted, are the first tableau rows.
    ToprowBridge,
    /// Every detected crossing is well formed; counts kinds and classes.
    Crossings,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Bijection,
        Check::SymmetryXps,
        Check::SymmetryRsk,
        Check::GeomPsEquality,
        Check::GeomRskEquality,
        Check::RpwAvoidance,
        Check::CrossingCharacterization,
        Check::SuffixCharacterization,
        Check::NeNoncrossing,
        Check::ToprowBridge,
        Check::Crossings,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bijection => "bijection",
            Check::SymmetryXps => "symmetry-xps",
            Check::SymmetryRsk => "symmetry-rsk",
            Check::GeomPsEquality => "geom-ps-equality",
            Check::GeomRskEquality => "geom-rsk-equality",
            Check::RpwAvoidance => "rpw-avoidance",
            Check::CrossingCharacterization => "theorem2",
            Check::SuffixCharacterization => "suffix-corollary",
            Check::NeNoncrossing => "ne-noncrossing",
            Check::ToprowBridge => "toprow-bridge",
            Check::Crossings => "crossings",
        }
    }

    /// Evaluates the check on `p`, bumping `stats`.
    pub fn holds(self, p: &Permutation, stats: &mut Stats) -> bool {
        match self {
            Check::Bijection => {
                let (r, s) = xps(p);
                r.shape() == s.shape() && xps_inverse(&r, &s).as_ref() == Ok(p)
            }
            Check::SymmetryXps => {
                let (r, s) = xps(p);
                xps(&p.inverse()) == (s, r)
            }
            Check::SymmetryRsk => {
                let (ip, rq) = rsk(p);
                rsk(&p.inverse()) == (rq, ip)
            }
            Check::GeomPsEquality => geometric_ps(p) == xps(p),
            Check::GeomRskEquality => geometric_rsk(p) == rsk(p),
            Check::RpwAvoidance => {
                let avoids = avoids_barred_3bar142(p);
                let is_word = rpw(&xps(p).0) == *p;
                stats.bump("avoiders", avoids);
                stats.bump("reverse_patience_words", is_word);
                avoids == is_word
            }
            Check::CrossingCharacterization => {
                let (r, s) = xps(p);
                let free = crossing_free_all_iterates(p);
                let monotone = rows_monotone(&r, &s, 1);
                stats.bump("crossing_free", free);
                stats.bump("rows_monotone", monotone);
                free == monotone
            }
            Check::SuffixCharacterization => {
                let (r, s) = xps(p);
                let seq = sw_iterates(p);
                // pointwise: iterate m alone against row m+1 alone
                for d in seq.iterates() {
                    let free = detect_crossings(d).is_empty();
                    let row = d.iterate() + 1;
                    let ascending = |c: &PileConfig| c.row(row).windows(2).all(|w| w[0] < w[1]);
                    let rows_ok = ascending(&r) && ascending(&s);
                    stats.bump("pointwise_agree", free == rows_ok);
                    stats.bump("pointwise_disagree", free != rows_ok);
                }
                (0..=r.height()).all(|m| crossing_free_from(p, m) == rows_monotone(&r, &s, m + 1))
            }
            Check::NeNoncrossing => ne_iterates(p).iterates().iter().all(|d| {
                let lines = d.lines();
                lines
                    .iter()
                    .enumerate()
                    .all(|(i, a)| lines[i + 1..].iter().all(|b| a.meets(b).is_empty()))
            }),
            Check::ToprowBridge => {
                let (r, s) = xps(p);
                let (ip, rq) = rsk(p);
                let sorted = |mut v: Vec<usize>| {
                    v.sort_unstable();
                    v
                };
                let first = |t: &Tableau| t.rows().first().cloned().unwrap_or_default();
                sorted(r.tops()) == first(&ip) && sorted(s.tops()) == first(&rq)
            }
            Check::Crossings => {
                let seq = sw_iterates(p);
                let mut ok = true;
                let mut any = false;
                for d in seq.iterates() {
                    let found = detect_crossings(d);
                    if d.iterate() == 0 {
                        stats.bump("with_crossings_iterate0", !found.is_empty());
                    }
                    any |= !found.is_empty();
                    for c in &found {
                        stats.add(
                            match c.kind {
                                CrossingKind::Horizontal => "horizontal",
                                CrossingKind::Vertical => "vertical",
                            },
                            1,
                        );
                        let well_formed = match c.at {
                            Locus::Point(at) => {
                                let (lo, up) = (&d.lines()[c.lower - 1], &d.lines()[c.upper - 1]);
                                c.lower < c.upper
                                    && lo.contains(at)
                                    && up.segments().iter().any(|s| {
                                        s.contains(at)
                                            && s.is_horizontal()
                                                == (c.kind == CrossingKind::Horizontal)
                                    })
                            }
                            Locus::Segment(..) => false,
                        };
                        ok &= well_formed;
                    }
                    stats.add("polygonal_pairs", polygonal_pairs(&found).len() as u64);
                }
                stats.bump("with_crossings_any", any);
                ok
            }
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                format!(
                    "unknown check '{s}' (expected one of: {})",
                    names.join(", ")
                )
            })
    }
}

/// Named counters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Stats(pub BTreeMap<String, u64>);

impl Stats {
    pub fn add(&mut self, key: &str, by: u64) {
        *self.0.entry(key.to_owned()).or_default() += by;
    }

    fn bump(&mut self, key: &str, when: bool) {
        self.add(key, when as u64);
    }

    fn merge(&mut self, other: Stats) {
        for (k, v) in other.0 {
            *self.0.entry(k).or_default() += v;
        }
    }

    pub fn get(&self, key: &str) -> u64 {
        self.0.get(key).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Permutations evaluated over all sizes `1..=n`.
    pub examined: u64,
    pub failures: u64,
    pub counterexample: Option<Permutation>,
    pub stats: Stats,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub checks: Vec<CheckReport>,
    pub wall_time: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("n = {0} is out of range (expected 1..={MAX_N})")]
    OutOfRange(usize),
    #[error("{0}")]
    UnknownCheck(String),
}

pub fn parse_checks(list: &str) -> Result<Vec<Check>, VerifyError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(VerifyError::UnknownCheck))
        .collect()
}

struct Shard {
    examined: u64,
    failures: u64,
    first_failure: Option<Permutation>,
    stats: Stats,
}

fn run_shard(check: Check, n: usize, start: u64, count: u64) -> Shard {
    let mut shard = Shard {
        examined: 0,
        failures: 0,
        first_failure: None,
        stats: Stats::default(),
    };
    for p in Permutations::range(n, start, count) {
        shard.examined += 1;
        if !check.holds(&p, &mut shard.stats) {
            shard.failures += 1;
            shard.first_failure.get_or_insert(p);
        }
    }
    shard
}

/// Runs `check` over `S_n` split into `jobs` rank ranges.
fn run_size(check: Check, n: usize, jobs: usize) -> Shard {
    let total = factorial(n);
    let jobs = (jobs.max(1) as u64).min(total);
    let chunk = total.div_ceil(jobs);
    let shards: Vec<Shard> = if jobs == 1 {
        vec![run_shard(check, n, 0, total)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|k| scope.spawn(move || run_shard(check, n, k * chunk, chunk)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };
    let mut merged = Shard {
        examined: 0,
        failures: 0,
        first_failure: None,
        stats: Stats::default(),
    };
    for s in shards {
        merged.examined += s.examined;
        merged.failures += s.failures;
        if merged.first_failure.is_none() {
            merged.first_failure = s.first_failure;
        }
        merged.stats.merge(s.stats);
    }
    merged
}

pub fn verify(n: usize, checks: &[Check], jobs: usize) -> Result<VerificationReport, VerifyError> {
    if !(1..=MAX_N).contains(&n) {
        return Err(VerifyError::OutOfRange(n));
    }
    let started = Instant::now();
    let checks = if checks.is_empty() {
        &Check::ALL[..]
    } else {
        checks
    };
    let mut reports = Vec::with_capacity(checks.len());
    for &check in checks {
        let mut report = CheckReport {
            name: check.name().to_owned(),
            passed: true,
            examined: 0,
            failures: 0,
            counterexample: None,
            stats: Stats::default(),
        };
        for size in 1..=n {
            let shard = run_size(check, size, jobs);
            report.examined += shard.examined;
            report.failures += shard.failures;
            if report.counterexample.is_none() {
                report.counterexample = shard.first_failure;
            }
            if size == n {
                report.stats = shard.stats;
            }
        }
        report.passed = report.failures == 0;
        reports.push(report);
    }
    Ok(VerificationReport {
        n,
        checks: reports,
        wall_time: started.elapsed().as_secs_f64(),
    })
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verification over S_1..S_{}", self.n)?;
        for c in &self.checks {
            write!(
                f,
                "{} {:<18} examined {:>7}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.examined
            )?;
            if let Some(p) = &c.counterexample {
                write!(
                    f,
                    "  failures {}  first counterexample [{}] (n={})",
                    c.failures,
                    p,
                    p.len()
                )?;
            }
            if !c.stats.0.is_empty() {
                let parts: Vec<String> =
                    c.stats.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
                write!(f, "  S_{}: {}", self.n, parts.join(" "))?;
            }
            writeln!(f)?;
        }
        write!(f, "wall time {:.3} s", self.wall_time)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_sizes() {
        assert_eq!(verify(0, &[], 1).unwrap_err(), VerifyError::OutOfRange(0));
        assert_eq!(verify(10, &[], 1).unwrap_err(), VerifyError::OutOfRange(10));
    }

    #[test]
    fn parses_check_lists() {
        assert_eq!(
            parse_checks("theorem2, geom-ps-equality").unwrap(),
            vec![Check::CrossingCharacterization, Check::GeomPsEquality]
        );
        assert!(matches!(
            parse_checks("theorem3"),
            Err(VerifyError::UnknownCheck(_))
        ));
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>(), Ok(c));
        }
    }

    #[test]
    fn s3_has_two_crossing_permutations() {
        let report = verify(3, &[Check::Crossings], 1).unwrap();
        let c = &report.checks[0];
        assert!(c.passed);
        assert_eq!(c.examined, 1 + 2 + 6);
        assert_eq!(c.stats.get("with_crossings_any"), 2);
        assert_eq!(c.stats.get("with_crossings_iterate0"), 2);
        assert_eq!(c.stats.get("horizontal"), 1);
        assert_eq!(c.stats.get("vertical"), 1);
    }

    #[test]
    fn job_count_does_not_change_reports() {
        let one = verify(6, &Check::ALL, 1).unwrap();
        for jobs in [2, 3, 7, 1000] {
            let many = verify(6, &Check::ALL, jobs).unwrap();
            assert_eq!(one.checks, many.checks, "jobs = {jobs}");
        }
    }

    #[test]
    fn failures_report_smallest_lexicographic_counterexample() {
        let report = verify(
            6,
            &[
                Check::SuffixCharacterization,
                Check::CrossingCharacterization,
            ],
            4,
        )
        .unwrap();
        let suffix = &report.checks[0];
        assert!(!suffix.passed);
        assert_eq!(suffix.counterexample, Some("564312".parse().unwrap()));
        assert!(report.checks[1].passed);
    }
}
