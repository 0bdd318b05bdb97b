use std::fmt::Write as _;

use crate::construction::{LiftedCode, MotherMatrix, SlopeSequence, SparseMatrix};
use crate::error::{Error, Result};

/// An undirected BSG edge stored in canonical orientation `tail < head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BsgEdge {
    pub column: usize,
    pub tail: usize,
    pub head: usize,
}

/// One traversal of an edge; `forward` means tail to head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub edge: usize,
    pub forward: bool,
}

impl Step {
    pub fn forward(edge: usize) -> Self {
        Step {
            edge,
            forward: true,
        }
    }

    pub fn backward(edge: usize) -> Self {
        Step {
            edge,
            forward: false,
        }
    }

    pub fn reversed(self) -> Self {
        Step {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlopeLabels {
    /// Shifts not assigned yet; every edge carries its own formal slope.
    Symbolic,
    /// Forward slope of every edge, reduced modulo `m`.
    Concrete { m: usize, slopes: Vec<usize> },
}

/// Circulant exponents for the nonzero blocks of a block matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockShifts {
    Symbolic,
    /// `exponents[k][t]` belongs to the `t`-th nonzero block (ascending row)
    /// of block column `k`.
    Concrete {
        m: usize,
        exponents: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructureGraph {
    vertex_count: usize,
    edges: Vec<BsgEdge>,
    labels: SlopeLabels,
    incidence: Vec<Vec<Step>>,
}

/// Builds the BSG of a block matrix given by its nonzero-block pattern.
///
/// Every block column must hold exactly two nonzero blocks.
pub fn build_bsg(pattern: &SparseMatrix, shifts: &BlockShifts) -> Result<BlockStructureGraph> {
    let mut edges = Vec::with_capacity(pattern.cols());
    for (k, rows) in pattern.columns().iter().enumerate() {
        match rows[..] {
            [tail, head] => edges.push(BsgEdge {
                column: k,
                tail,
                head,
            }),
            _ => {
                return Err(Error::UnsupportedStructure {
                    column: k,
                    weight: rows.len(),
                })
            }
        }
    }
    let labels = match shifts {
        BlockShifts::Symbolic => SlopeLabels::Symbolic,
        BlockShifts::Concrete { m, exponents } => {
            if *m == 0 {
                return Err(Error::InvalidParameter {
                    name: "m",
                    value: 0,
                    reason: "lifting size must be at least 1",
                });
            }
            if exponents.len() != edges.len() {
                return Err(Error::LengthMismatch {
                    expected: edges.len(),
                    got: exponents.len(),
                });
            }
            let slopes = exponents
                .iter()
                .enumerate()
                .map(|(k, e)| match e[..] {
                    [top, bottom] => Ok((bottom % m + m - top % m) % m),
                    _ => Err(Error::UnsupportedStructure {
                        column: k,
                        weight: e.len(),
                    }),
                })
                .collect::<Result<Vec<_>>>()?;
            SlopeLabels::Concrete { m: *m, slopes }
        }
    };
    Ok(BlockStructureGraph::assemble(pattern.rows(), edges, labels))
}

impl BlockStructureGraph {
    fn assemble(vertex_count: usize, edges: Vec<BsgEdge>, labels: SlopeLabels) -> Self {
        let mut incidence = vec![Vec::new(); vertex_count];
        for (k, e) in edges.iter().enumerate() {
            incidence[e.tail].push(Step::forward(k));
            incidence[e.head].push(Step::backward(k));
        }
        BlockStructureGraph {
            vertex_count,
            edges,
            labels,
            incidence,
        }
    }

    /// The BSG of a mother matrix with unassigned shifts.
    pub fn symbolic(mother: &MotherMatrix) -> Self {
        let edges = mother
            .support()
            .iter()
            .enumerate()
            .map(|(k, &[tail, head])| BsgEdge {
                column: k,
                tail,
                head,
            })
            .collect();
        Self::assemble(mother.rows(), edges, SlopeLabels::Symbolic)
    }

    pub fn from_lifted(code: &LiftedCode) -> Self {
        Self::symbolic(code.mother()).with_labels(SlopeLabels::Concrete {
            m: code.m(),
            slopes: code.slopes().slopes().to_vec(),
        })
    }

    /// Assigns top-anchored slopes, one per column.
    pub fn with_slopes(&self, seq: &SlopeSequence) -> Result<Self> {
        if seq.len() != self.edges.len() {
            return Err(Error::LengthMismatch {
                expected: self.edges.len(),
                got: seq.len(),
            });
        }
        Ok(self.clone().with_labels(SlopeLabels::Concrete {
            m: seq.m(),
            slopes: seq.slopes().to_vec(),
        }))
    }

    fn with_labels(mut self, labels: SlopeLabels) -> Self {
        self.labels = labels;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[BsgEdge] {
        &self.edges
    }

    pub fn edge(&self, k: usize) -> BsgEdge {
        self.edges[k]
    }

    pub fn labels(&self) -> &SlopeLabels {
        &self.labels
    }

    pub fn modulus(&self) -> Option<usize> {
        match self.labels {
            SlopeLabels::Symbolic => None,
            SlopeLabels::Concrete { m, .. } => Some(m),
        }
    }

    /// Steps leaving `v`, ordered by edge index.
    pub fn incident(&self, v: usize) -> &[Step] {
        &self.incidence[v]
    }

    pub fn step_tail(&self, step: Step) -> usize {
        let e = self.edges[step.edge];
        if step.forward {
            e.tail
        } else {
            e.head
        }
    }

    pub fn step_head(&self, step: Step) -> usize {
        let e = self.edges[step.edge];
        if step.forward {
            e.head
        } else {
            e.tail
        }
    }

    /// Slope of a directed traversal, `None` when the labels are symbolic.
    pub fn step_slope(&self, step: Step) -> Option<usize> {
        match &self.labels {
            SlopeLabels::Symbolic => None,
            SlopeLabels::Concrete { m, slopes } => {
                let s = slopes[step.edge];
                Some(if step.forward { s } else { (m - s) % m })
            }
        }
    }

    /// Graphviz rendering with 1-based vertex names and `k:s` edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph bsg {\n");
        for v in 0..self.vertex_count {
            let _ = writeln!(out, "  v{};", v + 1);
        }
        for e in &self.edges {
            let slope = match &self.labels {
                SlopeLabels::Symbolic => format!("s{}", e.column + 1),
                SlopeLabels::Concrete { slopes, .. } => slopes[e.column].to_string(),
            };
            let _ = writeln!(
                out,
                "  v{} -- v{} [label=\"{}:{}\"];",
                e.tail + 1,
                e.head + 1,
                e.column + 1,
                slope
            );
        }
        out.push_str("}\n");
        out
    }
}
