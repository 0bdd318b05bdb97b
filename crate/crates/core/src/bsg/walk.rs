use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::{BlockStructureGraph, SlopeLabels, Step};

/// A closed walk in a block-structure graph, starting and ending at `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedWalk {
    start: usize,
    steps: Vec<Step>,
}

/// Outcome of checking a closed walk against the three walk conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkVerdict {
    Valid,
    /// Condition 1: a directed edge occurs more than `m` times.
    EdgeRepeated {
        step: Step,
        count: usize,
    },
    /// Condition 2: steps `position` and `position + 1` (cyclically) use
    /// the same column.
    RepeatedColumn {
        position: usize,
    },
    /// Condition 3 with concrete slopes: the slope sum is not 0 mod m.
    NonzeroSlopeSum {
        sum: usize,
    },
    /// Condition 3 with symbolic slopes: `edge` is not traversed equally
    /// often in both directions, so some assignment breaks the zero sum.
    UnbalancedEdge {
        edge: usize,
    },
}

impl WalkVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, WalkVerdict::Valid)
    }

    /// Number of the violated walk condition, if any.
    pub fn condition(&self) -> Option<u8> {
        match self {
            WalkVerdict::Valid => None,
            WalkVerdict::EdgeRepeated { .. } => Some(1),
            WalkVerdict::RepeatedColumn { .. } => Some(2),
            WalkVerdict::NonzeroSlopeSum { .. } | WalkVerdict::UnbalancedEdge { .. } => Some(3),
        }
    }
}

impl ClosedWalk {
    /// Checks that consecutive steps are contiguous and that the walk
    /// returns to `start`.
    pub fn new(graph: &BlockStructureGraph, start: usize, steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::BrokenWalk { step: 0 });
        }
        let mut at = start;
        for (j, &step) in steps.iter().enumerate() {
            if step.edge >= graph.edge_count() || graph.step_tail(step) != at {
                return Err(Error::BrokenWalk { step: j });
            }
            at = graph.step_head(step);
        }
        if at != start {
            return Err(Error::BrokenWalk { step: steps.len() });
        }
        Ok(ClosedWalk { start, steps })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertex sequence `v_1 .. v_{l+1}` with `v_{l+1} = v_1`.
    pub fn vertices(&self, graph: &BlockStructureGraph) -> Vec<usize> {
        std::iter::once(self.start)
            .chain(self.steps.iter().map(|&s| graph.step_head(s)))
            .collect()
    }

    /// Sum of traversal slopes modulo `m`; `None` for symbolic labels.
    pub fn slope_sum(&self, graph: &BlockStructureGraph) -> Option<usize> {
        let m = graph.modulus()?;
        Some(
            self.steps
                .iter()
                .map(|&s| graph.step_slope(s).expect("concrete labels"))
                .fold(0, |acc, s| (acc + s) % m),
        )
    }

    /// How often each directed edge occurs.
    pub fn repetitions(&self) -> BTreeMap<Step, usize> {
        let mut counts = BTreeMap::new();
        for &s in &self.steps {
            *counts.entry(s).or_insert(0) += 1;
        }
        counts
    }

    /// Forward minus backward traversals, per edge that occurs.
    pub fn net_traversals(&self) -> BTreeMap<usize, isize> {
        let mut net = BTreeMap::new();
        for s in &self.steps {
            *net.entry(s.edge).or_insert(0) += if s.forward { 1 } else { -1 };
        }
        net
    }

    /// True when the slope sum vanishes for every shift assignment.
    pub fn is_inevitable(&self) -> bool {
        self.net_traversals().values().all(|&n| n == 0)
    }
}

/// Checks a closed walk against the walk conditions.
///
/// Repetitions are counted per directed edge: every column contributes two
/// directed edges, one for each orientation. With symbolic labels condition 1
/// is skipped and condition 3 requires a formally zero slope sum.
pub fn validate_closed_walk(graph: &BlockStructureGraph, walk: &ClosedWalk) -> WalkVerdict {
    if let Some(m) = graph.modulus() {
        if let Some((&step, &count)) = walk.repetitions().iter().find(|(_, &n)| n > m) {
            return WalkVerdict::EdgeRepeated { step, count };
        }
    }

    let steps = walk.steps();
    let l = steps.len();
    for j in 0..l {
        let here = graph.edge(steps[j].edge).column;
        let next = graph.edge(steps[(j + 1) % l].edge).column;
        if here == next {
            return WalkVerdict::RepeatedColumn { position: j };
        }
    }

    match graph.labels() {
        SlopeLabels::Concrete { .. } => {
            let sum = walk.slope_sum(graph).expect("concrete labels");
            if sum != 0 {
                return WalkVerdict::NonzeroSlopeSum { sum };
            }
        }
        SlopeLabels::Symbolic => {
            if let Some((&edge, _)) = walk.net_traversals().iter().find(|(_, &n)| n != 0) {
                return WalkVerdict::UnbalancedEdge { edge };
            }
        }
    }
    WalkVerdict::Valid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{build_mother, CodeParams, SlopeSequence};

    fn h322(slopes: &[usize], m: usize) -> BlockStructureGraph {
        let h = build_mother(CodeParams::new(3, 2, 2).unwrap()).unwrap();
        BlockStructureGraph::symbolic(&h)
            .with_slopes(&SlopeSequence::new(m, slopes.iter().copied()).unwrap())
            .unwrap()
    }

    #[test]
    fn out_and_back_violates_condition_two() {
        let g = h322(&[0, 3, 0, 0, 0, 0, 0, 0, 0, 0], 7);
        // Column 2 joins rows 1 and 2 (0-based); slopes 3 + 4 cancel.
        let walk = ClosedWalk::new(&g, 1, vec![Step::forward(1), Step::backward(1)]).unwrap();
        assert_eq!(walk.slope_sum(&g), Some(0));
        let verdict = validate_closed_walk(&g, &walk);
        assert_eq!(verdict, WalkVerdict::RepeatedColumn { position: 0 });
        assert_eq!(verdict.condition(), Some(2));
    }

    #[test]
    fn wrap_pair_is_checked() {
        let g = h322(&[0; 10], 7);
        // triangle 0 -> 1 -> 2 -> 0 then the same triangle reversed: the
        // wrap pair (last, first) must also differ.
        let tri = vec![Step::forward(0), Step::forward(1), Step::backward(2)];
        let walk = ClosedWalk::new(&g, 0, tri.clone()).unwrap();
        assert!(validate_closed_walk(&g, &walk).is_valid());

        let mut doubled = tri.clone();
        doubled.extend(tri.iter().rev().map(|s| s.reversed()));
        let walk = ClosedWalk::new(&g, 0, doubled).unwrap();
        assert_eq!(
            validate_closed_walk(&g, &walk),
            WalkVerdict::RepeatedColumn { position: 2 }
        );
    }

    #[test]
    fn triangle_slope_sum_decides_condition_three() {
        let g = h322(&[1, 2, 3, 0, 0, 0, 0, 0, 0, 0], 7);
        let walk = ClosedWalk::new(
            &g,
            0,
            vec![Step::forward(0), Step::forward(1), Step::backward(2)],
        )
        .unwrap();
        assert_eq!(walk.slope_sum(&g), Some(0));
        assert!(validate_closed_walk(&g, &walk).is_valid());

        let g = h322(&[1, 2, 4, 0, 0, 0, 0, 0, 0, 0], 7);
        let walk = ClosedWalk::new(&g, 0, walk.steps().to_vec()).unwrap();
        assert_eq!(
            validate_closed_walk(&g, &walk),
            WalkVerdict::NonzeroSlopeSum { sum: 6 }
        );
    }

    #[test]
    fn directed_repetitions_bounded_by_m() {
        let g = h322(&[0; 10], 2);
        let tri = [Step::forward(0), Step::forward(1), Step::backward(2)];
        let thrice: Vec<Step> = tri.iter().cycle().take(9).copied().collect();
        let walk = ClosedWalk::new(&g, 0, thrice).unwrap();
        assert_eq!(validate_closed_walk(&g, &walk).condition(), Some(1));
    }

    #[test]
    fn construction_rejects_broken_walks() {
        let g = h322(&[0; 10], 3);
        assert!(matches!(
            ClosedWalk::new(&g, 0, vec![Step::forward(0), Step::forward(0)]),
            Err(Error::BrokenWalk { step: 1 })
        ));
        assert!(matches!(
            ClosedWalk::new(&g, 0, vec![Step::forward(0)]),
            Err(Error::BrokenWalk { step: 1 })
        ));
        assert!(ClosedWalk::new(&g, 0, vec![]).is_err());
    }
}
