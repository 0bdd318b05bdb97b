//! Spanning-tree normalisation of slope assignments.
//!
//! Adding `t_v` to every shift in block row `v` changes the slope of an
//! edge `u -> w` by `t_w - t_u` and leaves every closed-walk slope sum
//! unchanged. Any assignment can therefore be moved to one with zero slope
//! on a spanning tree, and the lifts are isomorphic. Only the `E - V + 1`
//! cotree edges (`b + 1` for `H(a,b,c)`) need to be searched.

use std::collections::VecDeque;

use crate::bsg::BlockStructureGraph;

pub(crate) struct Gauge {
    /// Cotree edges, most constrained first.
    pub free: Vec<usize>,
}

impl Gauge {
    pub fn new(graph: &BlockStructureGraph) -> Self {
        let n = graph.vertex_count();
        let mut depth = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut in_tree = vec![false; graph.edge_count()];
        for root in 0..n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &step in graph.incident(v) {
                    let w = graph.step_head(step);
                    if depth[w] == usize::MAX {
                        depth[w] = depth[v] + 1;
                        parent[w] = v;
                        in_tree[step.edge] = true;
                        queue.push_back(w);
                    }
                }
            }
        }

        // Length of the fundamental cycle each cotree edge closes.
        let cycle_len = |k: usize| {
            let e = graph.edge(k);
            let (mut x, mut y) = (e.tail, e.head);
            let mut len = 1;
            while x != y {
                if depth[x] >= depth[y] {
                    x = parent[x];
                } else {
                    y = parent[y];
                }
                len += 1;
            }
            len
        };
        let mut free: Vec<usize> = (0..graph.edge_count()).filter(|&k| !in_tree[k]).collect();
        free.sort_by_key(|&k| (cycle_len(k), k));
        Gauge { free }
    }
}
