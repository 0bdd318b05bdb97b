//! Girth from the block-structure graph.
//!
//! The lifted code's Tanner graph is the subdivision of the "check graph"
//! whose vertices are pairs `(block row, offset mod m)` and whose edges are
//! the `m` copies of every BSG edge. A Tanner cycle of length `2L`
//! projects to a closed walk of length `L` with zero slope sum in which
//! consecutive columns differ, and vice versa. The search is a BFS over
//! `(vertex, accumulated slope)` states with immediate edge reuse forbidden.
//!
//! Cyclic shifts of all offsets are automorphisms of the check graph, so
//! starting at offset 0 of every block row covers every lifted vertex.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::bsg::{BlockStructureGraph, ClosedWalk, SlopeLabels, Step};
use crate::error::{Error, Result};

use super::{Girth, GirthResult, Method, Witness};

const UNSEEN: u32 = u32::MAX;

struct Scratch {
    depth: Vec<u32>,
    /// Lifted edge id `k * m + fiber` used to reach the state.
    via: Vec<u32>,
    /// Step used to reach the state.
    step: Vec<Step>,
    parent: Vec<u32>,
    touched: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            depth: vec![UNSEEN; n],
            via: vec![UNSEEN; n],
            step: vec![Step::forward(0); n],
            parent: vec![UNSEEN; n],
            touched: Vec::new(),
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            let v = v as usize;
            self.depth[v] = UNSEEN;
            self.via[v] = UNSEEN;
            self.parent[v] = UNSEEN;
        }
        self.touched.clear();
    }

    /// Steps from the root to `state`.
    fn steps_to(&self, mut state: u32) -> Vec<Step> {
        let mut steps = Vec::new();
        while self.parent[state as usize] != UNSEEN {
            steps.push(self.step[state as usize]);
            state = self.parent[state as usize];
        }
        steps.reverse();
        steps
    }
}

struct Lift<'a> {
    graph: &'a BlockStructureGraph,
    m: usize,
    slopes: &'a [usize],
}

impl Lift<'_> {
    /// Target state and lifted edge id of `step` taken from offset `x`.
    #[inline]
    fn traverse(&self, step: Step, x: usize) -> (u32, u32) {
        let s = self.slopes[step.edge];
        let m = self.m;
        let (y, fiber) = if step.forward {
            ((x + s) % m, x)
        } else {
            ((x + m - s) % m, (x + m - s) % m)
        };
        let head = self.graph.step_head(step);
        ((head * m + y) as u32, (step.edge * m + fiber) as u32)
    }
}

/// Shortest closed walk from `(root, 0)` of length at most `cap`, as
/// `(length, u, closing step, w)`.
fn shortest_from(
    lift: &Lift,
    root: usize,
    cap: usize,
    s: &mut Scratch,
) -> Option<(usize, u32, Step, u32)> {
    s.reset();
    let start = (root * lift.m) as u32;
    s.depth[start as usize] = 0;
    s.touched.push(start);
    let mut head = 0;
    let mut best: Option<(usize, u32, Step, u32)> = None;
    while head < s.touched.len() {
        let u = s.touched[head];
        let d = s.depth[u as usize] as usize;
        if best.is_some_and(|b| b.0 <= 2 * d + 1) || 2 * d + 1 > cap {
            break;
        }
        head += 1;
        let (v, x) = (u as usize / lift.m, u as usize % lift.m);
        for &step in lift.graph.incident(v) {
            let (w, id) = lift.traverse(step, x);
            if id == s.via[u as usize] {
                continue;
            }
            if s.depth[w as usize] == UNSEEN {
                s.depth[w as usize] = d as u32 + 1;
                s.via[w as usize] = id;
                s.step[w as usize] = step;
                s.parent[w as usize] = u;
                s.touched.push(w);
            } else {
                let len = d + s.depth[w as usize] as usize + 1;
                if len <= cap && best.is_none_or(|b| len < b.0) {
                    best = Some((len, u, step, w));
                }
            }
        }
    }
    best
}

/// Exact girth of the lifted code described by a BSG with concrete slopes.
pub fn girth_bsg(graph: &BlockStructureGraph) -> Result<GirthResult> {
    girth_bsg_bounded(graph, None)
}

/// As [`girth_bsg`], searching only Tanner cycles of length `≤ cutoff`.
pub fn girth_bsg_bounded(
    graph: &BlockStructureGraph,
    cutoff: Option<usize>,
) -> Result<GirthResult> {
    let SlopeLabels::Concrete { m, slopes } = graph.labels() else {
        return Err(Error::Unsupported(
            "girth of a block-structure graph needs concrete slopes".into(),
        ));
    };
    let lift = Lift {
        graph,
        m: *m,
        slopes,
    };
    let walk_limit = cutoff.map_or(usize::MAX, |c| c / 2);
    let best = AtomicUsize::new(walk_limit);
    let states = graph.vertex_count() * m;

    let found = (0..graph.vertex_count())
        .into_par_iter()
        .map_init(
            || Scratch::new(states),
            |scratch, root| {
                let cap = best.load(Ordering::Relaxed);
                let (len, u, step, w) = shortest_from(&lift, root, cap, scratch)?;
                best.fetch_min(len, Ordering::Relaxed);
                let mut steps = scratch.steps_to(u);
                steps.push(step);
                steps.extend(scratch.steps_to(w).into_iter().rev().map(Step::reversed));
                Some((len, root, steps))
            },
        )
        .flatten()
        .min_by_key(|(len, root, _)| (*len, *root));

    let (girth, witness) = match found {
        Some((len, root, steps)) => {
            let walk = ClosedWalk::new(graph, root, steps)
                .expect("BFS closure forms a closed walk in the BSG");
            (Girth::Finite(2 * len), Some(Witness::Walk(walk)))
        }
        None => match cutoff {
            Some(c) => (Girth::ExceedsCutoff(c), None),
            None => (Girth::Acyclic, None),
        },
    };
    Ok(GirthResult {
        girth,
        witness,
        method: Method::BsgWalk,
    })
}
