//! Published code table: fixtures and verification.

mod fixtures;
mod verify;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::construction::CodeParams;
use crate::girth::g_max;

pub use verify::{
    verify_record, verify_table, Interpretation, InterpretationOutcome, RecordReport, Verdict,
    VerificationReport,
};

/// One row of the published table, values as printed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeRecord {
    pub b: usize,
    pub c: usize,
    pub a: usize,
    #[serde(serialize_with = "ratio_string")]
    pub rate: Ratio<usize>,
    /// Claimed Tanner girth.
    pub g: usize,
    pub m: usize,
    /// Claimed code length.
    pub n: usize,
    /// Claimed slope sequence.
    pub s: Vec<usize>,
    /// Flags this row is known to raise.
    pub known_flags: Vec<Flag>,
}

fn ratio_string<S: Serializer>(r: &Ratio<usize>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Inconsistencies detected in a table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    /// `n != m(a+c)b`.
    CodeLength,
    /// `len(S) != (a+c)b`.
    SequenceLength,
    /// Rate differs from `1/(a+c)`.
    Rate,
    /// Claimed girth exceeds `g_max(a,b,c)`.
    GirthAboveGmax,
    /// Some slope is `≥ m`; it is reduced modulo `m` before lifting.
    SlopeOutOfRange,
}

impl Flag {
    /// Structural flags make the row internally inconsistent; the
    /// out-of-range note does not.
    pub fn is_structural(self) -> bool {
        !matches!(self, Flag::SlopeOutOfRange)
    }
}

pub fn load_fixtures() -> Vec<CodeRecord> {
    fixtures::ROWS
        .iter()
        .map(|r| CodeRecord {
            b: r.b,
            c: r.c,
            a: r.a,
            rate: Ratio::new_raw(r.rate.0, r.rate.1),
            g: r.g,
            m: r.m,
            n: r.n,
            s: r.s.to_vec(),
            known_flags: r.known.to_vec(),
        })
        .collect()
}

impl CodeRecord {
    pub fn params(&self) -> CodeParams {
        CodeParams::new(self.a, self.b, self.c).expect("table shapes are valid")
    }

    /// Flags computed from the row's own columns.
    pub fn flags(&self) -> Vec<Flag> {
        let params = self.params();
        let mut flags = Vec::new();
        if self.n != self.m * params.block_cols() {
            flags.push(Flag::CodeLength);
        }
        if self.s.len() != params.block_cols() {
            flags.push(Flag::SequenceLength);
        }
        if self.rate != params.design_rate() {
            flags.push(Flag::Rate);
        }
        if self.g > g_max(&params) {
            flags.push(Flag::GirthAboveGmax);
        }
        if self.s.iter().any(|&s| s >= self.m) {
            flags.push(Flag::SlopeOutOfRange);
        }
        flags
    }

    pub fn is_structurally_consistent(&self) -> bool {
        !self.flags().iter().any(|f| f.is_structural())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_record() {
        let rows = load_fixtures();
        let r = &rows[0];
        assert_eq!((r.b, r.c, r.a), (3, 2, 3));
        assert_eq!(r.rate, Ratio::new(1, 5));
        assert_eq!((r.g, r.m, r.n), (40, 30, 450));
        assert_eq!(r.s.len(), 15);
        assert!(r.flags().is_empty());
    }

    #[test]
    fn all_rows_present() {
        let rows = load_fixtures();
        assert_eq!(rows.len(), 52);
        let per_b = |b| rows.iter().filter(|r| r.b == b).count();
        assert_eq!((per_b(3), per_b(4), per_b(5)), (18, 19, 15));
    }

    #[test]
    fn computed_flags_match_annotations() {
        for r in load_fixtures() {
            assert_eq!(r.flags(), r.known_flags, "b={} c={} a={}", r.b, r.c, r.a);
        }
    }

    #[test]
    fn duplicated_short_sequence_is_flagged() {
        let rows = load_fixtures();
        let r = rows.iter().find(|r| (r.b, r.c, r.a) == (3, 5, 5)).unwrap();
        assert_eq!(r.s.len(), 27);
        assert!(r.flags().contains(&Flag::SequenceLength));
        let r = rows.iter().find(|r| (r.b, r.c, r.a) == (3, 6, 3)).unwrap();
        assert_eq!(r.m * r.params().block_cols(), 1620);
        assert!(r.flags().contains(&Flag::CodeLength));
    }
}
