//! Slope-sequence search for a target girth.
//!
//! Slopes on a spanning tree of the BSG are fixed to 0 (see `gauge`), so
//! only the `b + 1` cotree columns are searched. Three strategies:
//!
//! - `Backtracking`: one depth-first pass in ascending slope order. After
//!   each assignment the shortest cycle through the new column (among
//!   assigned columns only) is measured and the branch is cut if it is
//!   shorter than the target. Finishing the pass without a hit proves that
//!   no sequence reaches the target at this `m`.
//! - `RandomRestart`: every restart draws complete sequences from its own
//!   generator and tests each.
//! - `Hybrid`: every restart runs the depth-first pass with slope values
//!   shuffled by its own generator.
//!
//! Restart `i` is seeded with `seed + i` and gets `budget / restarts`
//! evaluations. Restarts run in parallel; the lowest-indexed successful
//! restart wins, which makes the outcome independent of the thread count.
//! Every found sequence is re-verified with the Tanner-graph BFS.

mod engine;
mod gauge;

use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Duration;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bsg::BlockStructureGraph;
use crate::construction::{build_mother, lift, CodeDescriptor, CodeParams, SlopeSequence};
use crate::error::{Error, Result};
use crate::girth::{g_max, girth_bfs};

use engine::{backtrack, never, random_draws, superseded, Job, Progress, RunResult};
use gauge::Gauge;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    #[default]
    Backtracking,
    RandomRestart,
    Hybrid,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub params: CodeParams,
    pub m: usize,
    /// Defaults to `g_max(params)`.
    pub target_girth: Option<usize>,
    pub seed: u64,
    /// Maximum number of candidate evaluations over all restarts.
    pub budget: u64,
    pub restarts: usize,
    pub strategy: Strategy,
    /// Emit a progress line on stderr every this many evaluations.
    pub progress_every: Option<u64>,
}

impl SearchConfig {
    pub fn new(params: CodeParams, m: usize) -> Self {
        SearchConfig {
            params,
            m,
            target_girth: None,
            seed: 0,
            budget: 10_000_000,
            restarts: 8,
            strategy: Strategy::default(),
            progress_every: None,
        }
    }

    pub fn target(&self) -> usize {
        self.target_girth.unwrap_or_else(|| g_max(&self.params))
    }

    pub fn validate(&self) -> Result<()> {
        let target = self.target();
        let gmax = g_max(&self.params);
        if target > gmax {
            return Err(Error::InfeasibleTarget {
                target,
                gmax,
                a: self.params.a(),
                b: self.params.b(),
                c: self.params.c(),
            });
        }
        if target < 4 || target % 2 == 1 {
            return Err(Error::InvalidConfig(format!(
                "target girth {target} must be even and at least 4"
            )));
        }
        if self.m == 0 {
            return Err(Error::InvalidConfig("m must be at least 1".into()));
        }
        if self.budget == 0 {
            return Err(Error::InvalidConfig("budget must be positive".into()));
        }
        if self.restarts == 0 && self.strategy != Strategy::Backtracking {
            return Err(Error::InvalidConfig(
                "at least one restart is required".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    /// The whole gauge-fixed space was searched without success.
    Exhausted,
    BudgetExpired,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub m: usize,
    pub target_girth: usize,
    pub strategy: Strategy,
    pub seed: u64,
    /// Present when `status` is `found`.
    pub slopes: Option<Vec<usize>>,
    /// Verified girth when found; otherwise the best girth over complete
    /// candidates, absent if pruning stopped every branch early.
    pub achieved_girth: Option<usize>,
    /// Best sequence seen when nothing was found.
    pub best_slopes: Option<Vec<usize>>,
    pub evaluations: u64,
    /// Wall-clock time; kept out of serialized output so it stays reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn descriptor(&self) -> Option<CodeDescriptor> {
        self.slopes.as_ref().map(|slopes| CodeDescriptor {
            a: self.a,
            b: self.b,
            c: self.c,
            m: self.m,
            slopes: slopes.clone(),
        })
    }
}

pub fn search(config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let progress = Progress::new(config.progress_every);
    let mother = build_mother(config.params)?;
    let graph = BlockStructureGraph::symbolic(&mother);
    let gauge = Gauge::new(&graph);
    let target = config.target();

    let job = |budget| Job {
        graph: &graph,
        gauge: &gauge,
        m: config.m,
        walk_limit: target / 2 - 1,
        budget,
        progress: &progress,
    };

    let (run, evaluations, complete) = match config.strategy {
        Strategy::Backtracking => {
            let r = backtrack(&job(config.budget), None, &never);
            let (evals, complete) = (r.evaluations, r.complete);
            (r, evals, complete)
        }
        Strategy::RandomRestart | Strategy::Hybrid => {
            let per_restart = config.budget.div_ceil(config.restarts as u64);
            let winner = AtomicUsize::new(usize::MAX);
            let runs: Vec<RunResult> = (0..config.restarts)
                .into_par_iter()
                .map(|i| {
                    let rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(i as u64));
                    let cancel = || superseded(&winner, i);
                    let r = match config.strategy {
                        Strategy::Hybrid => backtrack(&job(per_restart), Some(rng), &cancel),
                        _ => random_draws(&job(per_restart), rng, &cancel),
                    };
                    if r.found.is_some() {
                        winner.fetch_min(i, Ordering::Relaxed);
                    }
                    r
                })
                .collect();
            merge_restarts(runs)
        }
    };

    let mut outcome = SearchOutcome {
        status: SearchStatus::BudgetExpired,
        a: config.params.a(),
        b: config.params.b(),
        c: config.params.c(),
        m: config.m,
        target_girth: target,
        strategy: config.strategy,
        seed: config.seed,
        slopes: None,
        achieved_girth: run.best.as_ref().map(|b| b.0),
        best_slopes: run.best.map(|b| b.1),
        evaluations,
        elapsed: progress_elapsed(&progress),
    };

    if let Some(slopes) = run.found {
        let seq = SlopeSequence::new(config.m, slopes.iter().copied())?;
        let verified = girth_bfs(lift(&mother, &seq)?.matrix())?.girth;
        if !verified.at_least(target) {
            return Err(Error::VerificationFailed {
                achieved: verified.to_string(),
                target,
            });
        }
        outcome.status = SearchStatus::Found;
        outcome.achieved_girth = verified.value();
        outcome.slopes = Some(slopes);
        outcome.best_slopes = None;
    } else if complete {
        outcome.status = SearchStatus::Exhausted;
    }
    outcome.elapsed = progress_elapsed(&progress);
    Ok(outcome)
}

fn progress_elapsed(p: &Progress) -> Duration {
    p.elapsed()
}

/// Combines restart results: the lowest-indexed hit wins and evaluations
/// are counted up to and including it.
fn merge_restarts(runs: Vec<RunResult>) -> (RunResult, u64, bool) {
    if let Some(i) = runs.iter().position(|r| r.found.is_some()) {
        let evaluations = runs[..=i].iter().map(|r| r.evaluations).sum();
        return (runs[i].clone(), evaluations, false);
    }
    let evaluations = runs.iter().map(|r| r.evaluations).sum();
    let complete = runs.iter().any(|r| r.complete);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for r in &runs {
        if let Some((g, s)) = &r.best {
            if best.as_ref().is_none_or(|(bg, _)| g > bg) {
                best = Some((*g, s.clone()));
            }
        }
    }
    let merged = RunResult {
        found: None,
        evaluations,
        complete,
        best,
    };
    (merged, evaluations, complete)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinMAttempt {
    pub m: usize,
    pub status: SearchStatus,
    pub evaluations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinMOutcome {
    /// First successful search, if any.
    pub found: Option<SearchOutcome>,
    pub attempts: Vec<MinMAttempt>,
}

/// Searches `m` in ascending order and stops at the first success.
pub fn min_m_search(
    params: CodeParams,
    target_girth: usize,
    m_range: RangeInclusive<usize>,
    per_m_budget: u64,
    seed: u64,
    strategy: Strategy,
) -> Result<MinMOutcome> {
    if m_range.is_empty() {
        return Err(Error::InvalidConfig("empty m range".into()));
    }
    let mut attempts = Vec::new();
    for m in m_range {
        let config = SearchConfig {
            target_girth: Some(target_girth),
            seed,
            budget: per_m_budget,
            strategy,
            ..SearchConfig::new(params, m)
        };
        let outcome = search(&config)?;
        attempts.push(MinMAttempt {
            m,
            status: outcome.status,
            evaluations: outcome.evaluations,
        });
        if outcome.status == SearchStatus::Found {
            return Ok(MinMOutcome {
                found: Some(outcome),
                attempts,
            });
        }
    }
    Ok(MinMOutcome {
        found: None,
        attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: usize, b: usize, c: usize) -> CodeParams {
        CodeParams::new(a, b, c).unwrap()
    }

    #[test]
    fn rejects_targets_above_gmax() {
        let mut config = SearchConfig::new(params(3, 3, 2), 30);
        config.target_girth = Some(42);
        assert!(matches!(
            search(&config),
            Err(Error::InfeasibleTarget { gmax: 40, .. })
        ));
        config.target_girth = Some(7);
        assert!(matches!(search(&config), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn vacuous_target_found_at_once() {
        for strategy in [
            Strategy::Backtracking,
            Strategy::RandomRestart,
            Strategy::Hybrid,
        ] {
            let config = SearchConfig {
                target_girth: Some(4),
                strategy,
                ..SearchConfig::new(params(3, 3, 2), 7)
            };
            let out = search(&config).unwrap();
            assert_eq!(out.status, SearchStatus::Found, "{strategy:?}");
            assert!(out.achieved_girth.unwrap() >= 4);
        }
    }

    #[test]
    fn small_m_is_exhausted() {
        let config = SearchConfig::new(params(3, 3, 2), 2);
        let out = search(&config).unwrap();
        assert_eq!(out.status, SearchStatus::Exhausted);
        assert!(out.slopes.is_none());
        assert!(out.achieved_girth.is_none_or(|g| g < 40));
    }

    #[test]
    fn finds_girth_forty_at_thirty() {
        let out = search(&SearchConfig::new(params(3, 3, 2), 30)).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        assert_eq!(out.achieved_girth, Some(40));
        assert_eq!(out.slopes.as_ref().unwrap()[0], 0);
    }

    #[test]
    fn budget_expiry_reports_best() {
        let config = SearchConfig {
            budget: 3,
            ..SearchConfig::new(params(3, 3, 2), 30)
        };
        let out = search(&config).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExpired);
        assert_eq!(out.evaluations, 3);
    }

    #[test]
    fn min_m_with_identity_lift() {
        // H(3,2,2) itself has girth 6.
        let out = min_m_search(params(3, 2, 2), 6, 1..=1, 100, 0, Strategy::Backtracking).unwrap();
        let found = out.found.unwrap();
        assert_eq!(found.m, 1);
        assert_eq!(found.slopes.unwrap(), vec![0; 10]);
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 2..=1;
        assert!(min_m_search(params(3, 2, 2), 6, empty, 100, 0, Strategy::Backtracking).is_err());
    }

    /// Largest girth over every sequence, gauge ignored.
    fn brute_force_best(p: CodeParams, m: usize) -> usize {
        let graph = BlockStructureGraph::symbolic(&build_mother(p).unwrap());
        let n = graph.edge_count();
        let mut best = 0;
        for code in 0..m.pow(n as u32) {
            let slopes = (0..n).map(|k| code / m.pow(k as u32) % m);
            let seq = SlopeSequence::new(m, slopes).unwrap();
            let g = crate::girth::girth_bsg(&graph.with_slopes(&seq).unwrap()).unwrap();
            best = best.max(g.girth.value().unwrap_or(usize::MAX));
        }
        best
    }

    #[test]
    fn pruning_never_loses_solutions() {
        let shapes = [
            (2, 1, 1),
            (3, 1, 1),
            (2, 2, 1),
            (2, 1, 2),
            (3, 2, 1),
            (2, 2, 2),
        ];
        for (a, b, c) in shapes {
            let p = params(a, b, c);
            let cols = p.block_cols() as u32;
            for m in 1..=5usize {
                if m.pow(cols) > 40_000 {
                    continue;
                }
                let best = brute_force_best(p, m);
                for target in (4..=g_max(&p)).step_by(2) {
                    let config = SearchConfig {
                        target_girth: Some(target),
                        ..SearchConfig::new(p, m)
                    };
                    let out = search(&config).unwrap();
                    let expected = if best >= target {
                        SearchStatus::Found
                    } else {
                        SearchStatus::Exhausted
                    };
                    assert_eq!(out.status, expected, "H({a},{b},{c}) m={m} target={target}");
                }
            }
        }
    }

    #[test]
    fn restarts_are_deterministic() {
        for strategy in [Strategy::RandomRestart, Strategy::Hybrid] {
            let config = SearchConfig {
                strategy,
                seed: 11,
                target_girth: Some(24),
                ..SearchConfig::new(params(3, 2, 2), 13)
            };
            let runs: Vec<_> = (0..3).map(|_| search(&config).unwrap()).collect();
            assert_eq!(
                runs[0],
                SearchOutcome {
                    elapsed: runs[0].elapsed,
                    ..runs[1].clone()
                }
            );
            assert_eq!(
                serde_json::to_string(&runs[0]).unwrap(),
                serde_json::to_string(&runs[2]).unwrap()
            );
        }
    }
}
