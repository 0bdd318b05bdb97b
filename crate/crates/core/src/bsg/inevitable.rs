//! The two closed walks whose slope sums vanish for every shift assignment.
//!
//! Both are built from paths in the symbolic BSG of `H(a,b,c)` (0-based):
//! `x` is block row 0 and `y = a-1` is the last row of the first cylinder.
//!
//! - `P` lives on the first cylinder cycle `C1` (based at `y`), the chain
//!   `Q` of the first period (from `y` to the first row `z` of the next
//!   cylinder) and the next cylinder cycle `C2` (based at `z`):
//!   `P = C1 Q C2 Q⁻¹ C1⁻¹ Q C2⁻¹ Q⁻¹`, length `4(a+c)`.
//! - `P'` uses three internally disjoint `y`–`x` routes: the cylinder's
//!   wrap column `B`, the cylinder staircase `A` (reversed) and the ring `R`
//!   through all `b` chains. `P' = B A R B⁻¹ A⁻¹ R⁻¹`, length
//!   `2(bc + b + a - 1)`.

use crate::construction::{build_mother, CodeParams};
use crate::error::{Error, Result};

use super::{validate_closed_walk, BlockStructureGraph, ClosedWalk, Step};

#[derive(Clone, Debug)]
pub struct InevitableWalks {
    /// Symbolic BSG the walks refer to; edge index = block column.
    pub graph: BlockStructureGraph,
    pub p: ClosedWalk,
    pub p_prime: ClosedWalk,
}

/// Follows `columns` from `start`, returning the steps and the end vertex.
fn follow(
    graph: &BlockStructureGraph,
    start: usize,
    columns: &[usize],
) -> Result<(Vec<Step>, usize)> {
    let mut at = start;
    let mut steps = Vec::with_capacity(columns.len());
    for &k in columns {
        let e = graph.edge(k);
        let step = if e.tail == at {
            Step::forward(k)
        } else if e.head == at {
            Step::backward(k)
        } else {
            return Err(Error::Unsupported(format!(
                "column {k} does not touch block row {at}"
            )));
        };
        steps.push(step);
        at = graph.step_head(step);
    }
    Ok((steps, at))
}

fn inverse(steps: &[Step]) -> Vec<Step> {
    steps.iter().rev().map(|s| s.reversed()).collect()
}

pub fn inevitable_walks(params: CodeParams) -> Result<InevitableWalks> {
    let (a, b, c) = (params.a(), params.b(), params.c());
    if c == 0 {
        return Err(Error::Unsupported(format!(
            "{params}: no column-weight-2 mother matrix exists for c = 0"
        )));
    }
    let mother = build_mother(params)?;
    let graph = BlockStructureGraph::symbolic(&mother);
    let pr = params.rows_per_period();
    let pc = params.cols_per_period();
    let y = a - 1;

    // Cylinder cycle of period t, starting at its first row.
    let cylinder = |t: usize| -> Vec<usize> { (0..a).map(|j| t * pc + j).collect() };

    // C1: y -(col a-1)-> 0 -> 1 -> ... -> a-1.
    let c1_cols: Vec<usize> = std::iter::once(a - 1).chain(0..a - 1).collect();
    let (c1, end) = follow(&graph, y, &c1_cols)?;
    debug_assert_eq!(end, y);
    let chain_cols: Vec<usize> = (a..a + c).collect();
    let (q, z) = follow(&graph, y, &chain_cols)?;
    debug_assert_eq!(z, pr % params.block_rows());
    let (c2, end) = follow(&graph, z, &cylinder(1 % b))?;
    debug_assert_eq!(end, z);

    let p_steps: Vec<Step> = [
        c1.clone(),
        q.clone(),
        c2.clone(),
        inverse(&q),
        inverse(&c1),
        q.clone(),
        inverse(&c2),
        inverse(&q),
    ]
    .concat();

    let (route_b, x) = follow(&graph, y, &[a - 1])?;
    let (route_a_rev, _) = follow(&graph, x, &(0..a - 1).collect::<Vec<_>>())?;
    let mut ring_cols = Vec::with_capacity(b * (c + 1));
    for t in 0..b {
        ring_cols.extend(t * pc + a..t * pc + a + c);
        if t + 1 < b {
            ring_cols.push((t + 1) * pc + a - 1);
        }
    }
    let (ring, end) = follow(&graph, y, &ring_cols)?;
    if end != x {
        return Err(Error::Unsupported(format!(
            "{params}: ring route ends at block row {end}, expected {x}"
        )));
    }
    let p_prime_steps: Vec<Step> = [
        route_b.clone(),
        route_a_rev.clone(),
        ring.clone(),
        inverse(&route_b),
        inverse(&route_a_rev),
        inverse(&ring),
    ]
    .concat();

    let p = ClosedWalk::new(&graph, y, p_steps)?;
    let p_prime = ClosedWalk::new(&graph, y, p_prime_steps)?;

    for (name, walk, expected) in [
        ("P", &p, 4 * (a + c)),
        ("P'", &p_prime, 2 * (b * c + b + a - 1)),
    ] {
        if walk.len() != expected {
            return Err(Error::Unsupported(format!(
                "{params}: walk {name} has length {}, expected {expected}",
                walk.len()
            )));
        }
        let verdict = validate_closed_walk(&graph, walk);
        if !verdict.is_valid() {
            return Err(Error::Unsupported(format!(
                "{params}: walk {name} is not inevitable ({verdict:?})"
            )));
        }
    }

    Ok(InevitableWalks { graph, p, p_prime })
}
