//! Tanner-graph girth.
//!
//! Two independent engines: [`girth_bfs`] runs a shortest-cycle BFS on the
//! Tanner graph of any binary matrix, and [`girth_bsg`] searches the
//! block-structure graph for the shortest closed walk with zero slope sum.
//! On a lifted column-weight-2 code both must agree.

mod gmax;
mod lifted;
mod tanner;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bsg::ClosedWalk;

pub use gmax::{g_max, gmax_sweep, sweep_csv, GmaxPoint};
pub use lifted::{girth_bsg, girth_bsg_bounded};
pub use tanner::{girth_bfs, girth_bfs_bounded, is_tanner_cycle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
    /// Every cycle is longer than the given cutoff (or none exists).
    ExceedsCutoff(usize),
}

impl Girth {
    pub fn value(&self) -> Option<usize> {
        match *self {
            Girth::Finite(g) => Some(g),
            _ => None,
        }
    }

    /// True when the girth is known to be at least `target`.
    pub fn at_least(&self, target: usize) -> bool {
        match *self {
            Girth::Finite(g) => g >= target,
            Girth::Acyclic => true,
            // cycles are even and longer than c
            Girth::ExceedsCutoff(c) => (c / 2 + 1) * 2 >= target,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
            Girth::ExceedsCutoff(c) => write!(f, ">{c}"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// A Tanner-graph node: check nodes are rows, bit nodes are columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TannerNode {
    Check(usize),
    Bit(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Alternating check/bit nodes of a simple cycle, first node not repeated.
    Tanner(Vec<TannerNode>),
    /// A closed walk in the block-structure graph with zero slope sum.
    Walk(ClosedWalk),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    TannerBfs,
    BsgWalk,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GirthResult {
    pub girth: Girth,
    pub witness: Option<Witness>,
    pub method: Method,
}
