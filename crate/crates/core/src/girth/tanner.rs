use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::construction::SparseMatrix;
use crate::error::{Error, Result};

use super::{Girth, GirthResult, Method, TannerNode, Witness};

const UNSEEN: u32 = u32::MAX;

/// Tanner graph in CSR form: checks are `0..rows`, bits `rows..rows+cols`.
struct Csr {
    rows: usize,
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Csr {
    fn new(matrix: &SparseMatrix) -> Self {
        let rows = matrix.rows();
        let mut offsets = Vec::with_capacity(rows + matrix.cols() + 1);
        let mut targets = Vec::with_capacity(2 * matrix.nnz());
        offsets.push(0);
        for row in matrix.row_lists() {
            targets.extend(row.iter().map(|&j| (rows + j) as u32));
            offsets.push(targets.len() as u32);
        }
        for col in matrix.columns() {
            targets.extend(col.iter().map(|&i| i as u32));
            offsets.push(targets.len() as u32);
        }
        Csr {
            rows,
            offsets,
            targets,
        }
    }

    fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.targets[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    fn label(&self, v: u32) -> TannerNode {
        let v = v as usize;
        if v < self.rows {
            TannerNode::Check(v)
        } else {
            TannerNode::Bit(v - self.rows)
        }
    }
}

struct Scratch {
    depth: Vec<u32>,
    parent: Vec<u32>,
    touched: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            depth: vec![UNSEEN; n],
            parent: vec![UNSEEN; n],
            touched: Vec::new(),
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.depth[v as usize] = UNSEEN;
            self.parent[v as usize] = UNSEEN;
        }
        self.touched.clear();
    }

    fn path_to_root(&self, mut v: u32) -> Vec<u32> {
        let mut path = vec![v];
        while self.parent[v as usize] != UNSEEN {
            v = self.parent[v as usize];
            path.push(v);
        }
        path
    }
}

/// Shortest cycle through `root` of length at most `cap`, as
/// `(length, u, w)` where `u`–`w` is the closing edge.
fn shortest_through(
    csr: &Csr,
    root: u32,
    cap: usize,
    s: &mut Scratch,
) -> Option<(usize, u32, u32)> {
    s.reset();
    s.depth[root as usize] = 0;
    s.touched.push(root);
    let mut head = 0;
    while head < s.touched.len() {
        let u = s.touched[head];
        head += 1;
        let d = s.depth[u as usize] as usize;
        // In a bipartite graph the first closure seen from depth d has
        // length 2d + 2, and later closures are never shorter.
        if 2 * d + 2 > cap {
            return None;
        }
        let pu = s.parent[u as usize];
        for &w in csr.neighbors(u) {
            if w == pu {
                continue;
            }
            if s.depth[w as usize] == UNSEEN {
                s.depth[w as usize] = d as u32 + 1;
                s.parent[w as usize] = u;
                s.touched.push(w);
            } else {
                let len = d + s.depth[w as usize] as usize + 1;
                return Some((len, u, w));
            }
        }
    }
    None
}

/// Exact girth of the Tanner graph of `matrix`.
pub fn girth_bfs(matrix: &SparseMatrix) -> Result<GirthResult> {
    girth_bfs_bounded(matrix, None)
}

/// Girth with an optional cutoff: cycles longer than `cutoff` are not
/// searched for, and [`Girth::ExceedsCutoff`] is returned if none shorter
/// exists.
///
/// Every cycle contains a check node, so BFS is rooted at checks only. The
/// witness comes from the lowest-indexed check on a shortest cycle; the
/// result does not depend on the number of worker threads.
pub fn girth_bfs_bounded(matrix: &SparseMatrix, cutoff: Option<usize>) -> Result<GirthResult> {
    if matrix.rows() == 0 || matrix.cols() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let csr = Csr::new(matrix);
    let limit = cutoff.unwrap_or(usize::MAX);
    let best = AtomicUsize::new(limit);

    let found = (0..csr.rows as u32)
        .into_par_iter()
        .map_init(
            || Scratch::new(csr.node_count()),
            |scratch, root| {
                let cap = best.load(Ordering::Relaxed);
                let hit = shortest_through(&csr, root, cap, scratch)?;
                best.fetch_min(hit.0, Ordering::Relaxed);
                let mut cycle = scratch.path_to_root(hit.1);
                cycle.reverse();
                let mut back = scratch.path_to_root(hit.2);
                back.pop();
                cycle.extend(back);
                Some((hit.0, root, cycle))
            },
        )
        .flatten()
        .min_by_key(|(len, root, _)| (*len, *root));

    let (girth, witness) = match found {
        Some((len, _, cycle)) => (
            Girth::Finite(len),
            Some(Witness::Tanner(
                cycle.into_iter().map(|v| csr.label(v)).collect(),
            )),
        ),
        None if cutoff.is_some() => (Girth::ExceedsCutoff(limit), None),
        None => (Girth::Acyclic, None),
    };
    Ok(GirthResult {
        girth,
        witness,
        method: Method::TannerBfs,
    })
}

/// Checks that `nodes` is a simple cycle of the Tanner graph of `matrix`.
pub fn is_tanner_cycle(matrix: &SparseMatrix, nodes: &[TannerNode]) -> bool {
    let n = nodes.len();
    if n < 4 || n % 2 == 1 {
        return false;
    }
    let mut seen = nodes.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != n {
        return false;
    }
    (0..n).all(|t| match (nodes[t], nodes[(t + 1) % n]) {
        (TannerNode::Check(i), TannerNode::Bit(j)) | (TannerNode::Bit(j), TannerNode::Check(i)) => {
            i < matrix.rows() && j < matrix.cols() && matrix.get(i, j)
        }
        _ => false,
    })
}
