use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{MotherMatrix, SparseMatrix};

/// One slope per block column, reduced modulo the lifting size `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlopeSequence {
    m: usize,
    slopes: Vec<usize>,
}

impl SlopeSequence {
    /// Reduces every slope modulo `m`.
    pub fn new(m: usize, slopes: impl IntoIterator<Item = usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter {
                name: "m",
                value: 0,
                reason: "lifting size must be at least 1",
            });
        }
        Ok(SlopeSequence {
            m,
            slopes: slopes.into_iter().map(|s| s % m).collect(),
        })
    }

    pub fn zeros(m: usize, len: usize) -> Result<Self> {
        Self::new(m, std::iter::repeat_n(0, len))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn slopes(&self) -> &[usize] {
        &self.slopes
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    /// The sequence with every slope replaced by `-s mod m`.
    pub fn negated(&self) -> Self {
        SlopeSequence {
            m: self.m,
            slopes: self.slopes.iter().map(|&s| (self.m - s) % self.m).collect(),
        }
    }
}

/// Which of a column's two circulants receives the identity `I^0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Anchoring {
    /// Top block `I^0`, bottom block `I^{S[k]}`.
    #[default]
    Top,
    /// Bottom block `I^0`, top block `I^{S[k]}`.
    Bottom,
}

/// A mother matrix expanded by `m×m` circulant permutation matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedCode {
    mother: MotherMatrix,
    m: usize,
    shifts: Vec<[usize; 2]>,
    matrix: SparseMatrix,
}

pub fn lift(mother: &MotherMatrix, seq: &SlopeSequence) -> Result<LiftedCode> {
    lift_with(mother, seq, Anchoring::Top)
}

pub fn lift_with(
    mother: &MotherMatrix,
    seq: &SlopeSequence,
    anchoring: Anchoring,
) -> Result<LiftedCode> {
    if seq.len() != mother.cols() {
        return Err(Error::LengthMismatch {
            expected: mother.cols(),
            got: seq.len(),
        });
    }
    let m = seq.m();
    let shifts: Vec<[usize; 2]> = seq
        .slopes()
        .iter()
        .map(|&s| match anchoring {
            Anchoring::Top => [0, s],
            Anchoring::Bottom => [s, 0],
        })
        .collect();

    // I^s has a one at (i, j) iff i - j = s (mod m): bit j of the block
    // column meets check (j + s) mod m of the block row.
    let mut columns = Vec::with_capacity(mother.cols() * m);
    for (k, (rows, shift)) in mother.support().iter().zip(&shifts).enumerate() {
        debug_assert_eq!(columns.len(), k * m);
        for j in 0..m {
            columns.push(
                rows.iter()
                    .zip(shift)
                    .map(|(&r, &s)| r * m + (j + s) % m)
                    .collect(),
            );
        }
    }
    let matrix = SparseMatrix::from_columns(mother.rows() * m, columns)?;
    Ok(LiftedCode {
        mother: mother.clone(),
        m,
        shifts,
        matrix,
    })
}

impl LiftedCode {
    pub fn mother(&self) -> &MotherMatrix {
        &self.mother
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Circulant exponents `[top, bottom]` of block column `k`.
    pub fn shifts(&self, k: usize) -> [usize; 2] {
        self.shifts[k]
    }

    pub fn all_shifts(&self) -> &[[usize; 2]] {
        &self.shifts
    }

    /// Slope `s_bottom - s_top mod m` of block column `k`.
    pub fn slope(&self, k: usize) -> usize {
        let [top, bottom] = self.shifts[k];
        (bottom + self.m - top) % self.m
    }

    pub fn slopes(&self) -> SlopeSequence {
        SlopeSequence {
            m: self.m,
            slopes: (0..self.shifts.len()).map(|k| self.slope(k)).collect(),
        }
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    /// Code length `n`.
    pub fn len(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.cols() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{build_mother, CodeParams};

    fn h322() -> MotherMatrix {
        build_mother(CodeParams::new(3, 2, 2).unwrap()).unwrap()
    }

    #[test]
    fn identity_lift_is_the_mother() {
        let h = h322();
        let code = lift(&h, &SlopeSequence::zeros(1, 10).unwrap()).unwrap();
        assert_eq!(code.matrix(), &h.to_sparse());
    }

    #[test]
    fn zero_slopes_give_disjoint_copies() {
        let h = h322();
        let code = lift(&h, &SlopeSequence::zeros(2, 10).unwrap()).unwrap();
        assert_eq!((code.matrix().rows(), code.matrix().cols()), (16, 20));
        let mother = h.to_dense();
        let dense = code.matrix().to_dense();
        for (i, row) in dense.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let same_copy = i % 2 == j % 2;
                assert_eq!(v == 1, same_copy && mother[i / 2][j / 2] == 1);
            }
        }
    }

    #[test]
    fn every_nonzero_block_is_a_circulant_permutation() {
        let h = h322();
        let seq = SlopeSequence::new(7, [0, 3, 6, 1, 2, 5, 4, 0, 3, 9]).unwrap();
        for anchoring in [Anchoring::Top, Anchoring::Bottom] {
            let code = lift_with(&h, &seq, anchoring).unwrap();
            let dense = code.matrix().to_dense();
            for k in 0..h.cols() {
                for (r, s) in h.column(k).into_iter().zip(code.shifts(k)) {
                    for i in 0..7 {
                        for j in 0..7 {
                            let expect = (i + 7 - j) % 7 == s;
                            assert_eq!(dense[r * 7 + i][k * 7 + j] == 1, expect);
                        }
                    }
                }
            }
            for j in 0..code.len() {
                assert_eq!(code.matrix().column(j).len(), 2);
            }
        }
    }

    #[test]
    fn first_table_row_has_length_450() {
        let h = build_mother(CodeParams::new(3, 3, 2).unwrap()).unwrap();
        let seq = SlopeSequence::new(30, [0, 28, 19, 5, 16, 14, 25, 10, 15, 16, 13, 4, 6, 3, 25])
            .unwrap();
        let code = lift(&h, &seq).unwrap();
        assert_eq!(code.len(), 450);
        assert_eq!(code.slopes(), seq);
    }

    #[test]
    fn slopes_reduced_and_length_checked() {
        let seq = SlopeSequence::new(5, [7, 5, 4]).unwrap();
        assert_eq!(seq.slopes(), &[2, 0, 4]);
        assert_eq!(seq.negated().slopes(), &[3, 0, 1]);
        assert!(SlopeSequence::new(0, [1]).is_err());
        assert!(matches!(
            lift(&h322(), &seq),
            Err(Error::LengthMismatch {
                expected: 10,
                got: 3
            })
        ));
    }

    #[test]
    fn bottom_anchoring_negates_slopes() {
        let h = h322();
        let seq = SlopeSequence::new(6, 0..10).unwrap();
        let code = lift_with(&h, &seq, Anchoring::Bottom).unwrap();
        assert_eq!(code.slopes(), seq.negated());
    }
}
