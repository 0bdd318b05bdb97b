use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bsg::BlockStructureGraph;
use crate::construction::SlopeSequence;
use crate::girth::{girth_bsg_bounded, Girth};

use super::gauge::Gauge;

const UNSEEN: u32 = u32::MAX;
const UNASSIGNED: usize = usize::MAX;

/// Shared progress reporting; lines go to stderr.
pub(crate) struct Progress {
    every: Option<u64>,
    total: AtomicU64,
    best: AtomicUsize,
    start: Instant,
}

impl Progress {
    pub fn new(every: Option<u64>) -> Self {
        Progress {
            every,
            total: AtomicU64::new(0),
            best: AtomicUsize::new(0),
            start: Instant::now(),
        }
    }

    pub fn elapsed(&self) -> std::time::Duration {
        self.start.elapsed()
    }

    fn tick(&self, best: usize) {
        let n = self.total.fetch_add(1, Ordering::Relaxed) + 1;
        let best = self.best.fetch_max(best, Ordering::Relaxed).max(best);
        if let Some(every) = self.every {
            if every > 0 && n.is_multiple_of(every) {
                eprintln!(
                    "evaluations={n}, best_girth={best}, elapsed={:.3}s",
                    self.start.elapsed().as_secs_f64()
                );
            }
        }
    }
}

/// Result of one engine run (one restart, or the single backtracking pass).
#[derive(Clone, Debug)]
pub(crate) struct RunResult {
    pub found: Option<Vec<usize>>,
    pub evaluations: u64,
    /// Whole search space visited without hitting the budget.
    pub complete: bool,
    /// Best Tanner girth over fully assigned candidates, with its slopes.
    pub best: Option<(usize, Vec<usize>)>,
}

impl RunResult {
    fn record_leaf(&mut self, girth: usize, slopes: &[usize]) {
        if self.best.as_ref().is_none_or(|(g, _)| girth > *g) {
            self.best = Some((girth, slopes.to_vec()));
        }
    }
}

/// Slope assignment under construction together with BFS scratch space.
pub(crate) struct Partial<'a> {
    graph: &'a BlockStructureGraph,
    m: usize,
    slopes: Vec<usize>,
    depth: Vec<u32>,
    via: Vec<u32>,
    queue: Vec<u32>,
}

impl<'a> Partial<'a> {
    pub fn new(graph: &'a BlockStructureGraph, m: usize, gauge: &Gauge) -> Self {
        let mut slopes = vec![0; graph.edge_count()];
        for &k in &gauge.free {
            slopes[k] = UNASSIGNED;
        }
        let states = graph.vertex_count() * m;
        Partial {
            graph,
            m,
            slopes,
            depth: vec![UNSEEN; states],
            via: vec![UNSEEN; states],
            queue: Vec::with_capacity(states),
        }
    }

    fn clear(&mut self) {
        for &v in &self.queue {
            self.depth[v as usize] = UNSEEN;
            self.via[v as usize] = UNSEEN;
        }
        self.queue.clear();
    }

    /// Assigns `slope` to `edge` and returns the length of the shortest
    /// closed walk through it among assigned edges, if at most `limit`.
    pub fn assign(&mut self, edge: usize, slope: usize, limit: usize) -> Option<usize> {
        self.slopes[edge] = slope;
        let m = self.m;
        let e = self.graph.edge(edge);
        let start = (e.tail * m) as u32;
        let goal = (e.head * m + slope) as u32;
        let banned = (edge * m) as u32;

        self.clear();
        self.depth[start as usize] = 0;
        self.queue.push(start);
        let mut head = 0;
        let mut hit = None;
        'bfs: while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let d = self.depth[u as usize] as usize;
            // a path of length d + 1 closes a walk of length d + 2
            if d + 2 > limit {
                break;
            }
            let (v, x) = (u as usize / m, u as usize % m);
            for &step in self.graph.incident(v) {
                let s = self.slopes[step.edge];
                if s == UNASSIGNED {
                    continue;
                }
                let (y, fiber) = if step.forward {
                    ((x + s) % m, x)
                } else {
                    let y = (x + m - s) % m;
                    (y, y)
                };
                let id = (step.edge * m + fiber) as u32;
                if id == banned || id == self.via[u as usize] {
                    continue;
                }
                let w = (self.graph.step_head(step) * m + y) as u32;
                if self.depth[w as usize] == UNSEEN {
                    self.depth[w as usize] = d as u32 + 1;
                    self.via[w as usize] = id;
                    self.queue.push(w);
                    if w == goal {
                        hit = Some(d + 2);
                        break 'bfs;
                    }
                }
            }
        }
        hit
    }

    pub fn unassign(&mut self, edge: usize) {
        self.slopes[edge] = UNASSIGNED;
    }

    pub fn slopes(&self) -> &[usize] {
        &self.slopes
    }
}

pub(crate) struct Job<'a> {
    pub graph: &'a BlockStructureGraph,
    pub gauge: &'a Gauge,
    pub m: usize,
    /// Longest closed walk that must not exist (`target/2 - 1`).
    pub walk_limit: usize,
    pub budget: u64,
    pub progress: &'a Progress,
}

struct Dfs<'a, 'b> {
    job: &'b Job<'a>,
    partial: Partial<'a>,
    rng: Option<ChaCha8Rng>,
    result: RunResult,
    cancel: &'b dyn Fn() -> bool,
}

impl Dfs<'_, '_> {
    /// Returns false when the run must stop (found, budget, cancelled).
    fn descend(&mut self, level: usize) -> bool {
        let free = &self.job.gauge.free;
        if level == free.len() {
            self.result.found = Some(self.partial.slopes().to_vec());
            return false;
        }
        let edge = free[level];
        let mut values: Vec<usize> = (0..self.job.m).collect();
        if let Some(rng) = self.rng.as_mut() {
            values.shuffle(rng);
        }
        for s in values {
            if self.result.evaluations >= self.job.budget || (self.cancel)() {
                self.partial.unassign(edge);
                return false;
            }
            self.result.evaluations += 1;
            let short = self.partial.assign(edge, s, self.job.walk_limit);
            let leaf_girth = match short {
                Some(len) if level + 1 == free.len() => Some(2 * len),
                None if level + 1 == free.len() => Some(2 * (self.job.walk_limit + 1)),
                _ => None,
            };
            if let Some(g) = leaf_girth {
                self.result.record_leaf(g, self.partial.slopes());
            }
            self.job
                .progress
                .tick(self.result.best.as_ref().map_or(0, |b| b.0));
            if short.is_none() && !self.descend(level + 1) {
                self.partial.unassign(edge);
                return false;
            }
        }
        self.partial.unassign(edge);
        true
    }
}

/// Depth-first search over cotree slopes with incremental pruning.
/// Values are tried in ascending order, or shuffled when `rng` is given.
pub(crate) fn backtrack(
    job: &Job,
    rng: Option<ChaCha8Rng>,
    cancel: &dyn Fn() -> bool,
) -> RunResult {
    let mut dfs = Dfs {
        job,
        partial: Partial::new(job.graph, job.m, job.gauge),
        rng,
        result: RunResult {
            found: None,
            evaluations: 0,
            complete: false,
            best: None,
        },
        cancel,
    };
    let finished = dfs.descend(0);
    let mut result = dfs.result;
    result.complete = finished && result.found.is_none();
    result
}

/// Draws complete gauge-fixed assignments and tests each one.
pub(crate) fn random_draws(job: &Job, mut rng: ChaCha8Rng, cancel: &dyn Fn() -> bool) -> RunResult {
    let mut result = RunResult {
        found: None,
        evaluations: 0,
        complete: false,
        best: None,
    };
    let symbolic = job.graph;
    let cutoff = 2 * job.walk_limit;
    while result.evaluations < job.budget && !cancel() {
        let mut slopes = vec![0; symbolic.edge_count()];
        for &k in &job.gauge.free {
            slopes[k] = rng.gen_range(0..job.m);
        }
        result.evaluations += 1;
        let seq = SlopeSequence::new(job.m, slopes.iter().copied()).expect("m >= 1");
        let graph = symbolic.with_slopes(&seq).expect("length matches");
        let girth = girth_bsg_bounded(&graph, Some(cutoff))
            .expect("concrete slopes")
            .girth;
        let g = match girth {
            Girth::Finite(g) => g,
            _ => cutoff + 2,
        };
        result.record_leaf(g, &slopes);
        job.progress.tick(result.best.as_ref().map_or(0, |b| b.0));
        if girth.at_least(cutoff + 2) {
            result.found = Some(slopes);
            break;
        }
    }
    result
}

pub(crate) fn never() -> bool {
    false
}

/// Cancellation predicate for restart `index` given the lowest winning index.
pub(crate) fn superseded(winner: &AtomicUsize, index: usize) -> bool {
    winner.load(Ordering::Relaxed) < index
}
