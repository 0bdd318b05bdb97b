use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::{CodeParams, SparseMatrix};

/// The binary block-level matrix `H(a,b,c)`.
///
/// Stored column-major: every column carries exactly two rows, kept in
/// ascending order, so the cycle-code property is part of the type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotherMatrix {
    params: CodeParams,
    support: Vec<[usize; 2]>,
}

/// Builds `H(a,b,c)` period by period.
///
/// Within period `t` (rows offset by `t(a+c-1)`, columns by `t(a+c)`):
/// the `a×a` cylinder `I + I^1` occupies local columns `0..a`, the chain
/// columns `a..a+c` form a staircase starting on the cylinder's last row,
/// and the last column of the period also reaches the first row of the next
/// period (wrapping around after `b` periods).
pub fn build_mother(params: CodeParams) -> Result<MotherMatrix> {
    let (a, b, c) = (params.a(), params.b(), params.c());
    let period_rows = params.rows_per_period();
    let period_cols = params.cols_per_period();
    let total_rows = params.block_rows();

    let mut support = Vec::with_capacity(params.block_cols());
    for t in 0..b {
        let row0 = t * period_rows;
        for local in 0..period_cols {
            let mut rows = BTreeSet::new();
            let mut push_local = |r: usize| {
                if r < period_rows {
                    rows.insert(row0 + r);
                }
            };
            if local < a {
                push_local(local);
                push_local((local + 1) % a);
            } else {
                push_local(local - 1);
                push_local(local);
            }
            if local == period_cols - 1 {
                rows.insert(((t + 1) * period_rows) % total_rows);
            }

            let column = support.len();
            match rows.iter().copied().collect::<Vec<_>>()[..] {
                [top, bottom] => support.push([top, bottom]),
                _ => {
                    return Err(Error::DegenerateShape {
                        a,
                        b,
                        c,
                        column,
                        weight: rows.len(),
                    })
                }
            }
        }
    }
    Ok(MotherMatrix { params, support })
}

impl MotherMatrix {
    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn rows(&self) -> usize {
        self.params.block_rows()
    }

    pub fn cols(&self) -> usize {
        self.support.len()
    }

    /// The two rows of column `k`, top first.
    pub fn column(&self, k: usize) -> [usize; 2] {
        self.support[k]
    }

    pub fn support(&self) -> &[[usize; 2]] {
        &self.support
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.support[j].contains(&i)
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_columns(
            self.rows(),
            self.support.iter().map(|rows| rows.to_vec()).collect(),
        )
        .expect("mother support is in range by construction")
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.to_sparse().to_dense()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Literal evaluation of the membership conditions on 1-based indices.
    fn oracle_entry(a: usize, b: usize, c: usize, i: usize, j: usize) -> bool {
        let pr = a + c - 1;
        let pc = a + c;
        let same_period = (i - 1) / pr == (j - 1) / pc;
        let i1 = (i - 1) % pr;
        let j1 = (j - 1) % pc;
        let cond1 = same_period
            && ((i1 < a && j1 < a && {
                let d = (i1 + a - j1) % a;
                d == 0 || d == 1
            }) || (i1 + 1 >= a && j1 >= a && (j1 == i1 || j1 == i1 + 1)));
        let n = pr * b;
        let cond2 = (1..=b).any(|k| j == pc * k && (i % n) == ((pr * k + 1) % n));
        cond1 || cond2
    }

    fn oracle_dense(a: usize, b: usize, c: usize) -> Vec<Vec<u8>> {
        let rows = (a + c - 1) * b;
        let cols = (a + c) * b;
        (1..=rows)
            .map(|i| {
                (1..=cols)
                    .map(|j| oracle_entry(a, b, c, i, j) as u8)
                    .collect()
            })
            .collect()
    }

    fn example_one() -> Vec<Vec<u8>> {
        let ones: [&[usize]; 8] = [
            &[1, 3, 10],
            &[1, 2],
            &[2, 3, 4],
            &[4, 5],
            &[5, 6, 8],
            &[6, 7],
            &[7, 8, 9],
            &[9, 10],
        ];
        ones.iter()
            .map(|row| (1..=10).map(|j| row.contains(&j) as u8).collect())
            .collect()
    }

    #[test]
    fn example_one_bit_exact() {
        let h = build_mother(CodeParams::new(3, 2, 2).unwrap()).unwrap();
        assert_eq!(h.to_dense(), example_one());
        assert_eq!(oracle_dense(3, 2, 2), example_one());
    }

    #[test]
    fn smallest_shape_is_all_ones() {
        // a=2,b=1,c=1: cylinder gives rows {1,2} on columns 1,2; the chain
        // column 3 takes row 2 and the wrap puts row 1 there as well.
        let h = build_mother(CodeParams::new(2, 1, 1).unwrap()).unwrap();
        assert_eq!(h.to_dense(), vec![vec![1, 1, 1], vec![1, 1, 1]]);
        assert_eq!(oracle_dense(2, 1, 1), h.to_dense());
    }

    #[test]
    fn dimensions_follow_params() {
        let h = build_mother(CodeParams::new(5, 3, 2).unwrap()).unwrap();
        assert_eq!((h.rows(), h.cols()), (18, 21));
    }

    #[test]
    fn structural_build_matches_literal_conditions_on_grid() {
        for a in 2..=8 {
            for b in 1..=6 {
                for c in 0..=7 {
                    let Ok(params) = CodeParams::new(a, b, c) else {
                        continue;
                    };
                    let oracle = oracle_dense(a, b, c);
                    let weights_ok = (0..params.block_cols())
                        .all(|j| oracle.iter().filter(|row| row[j] == 1).count() == 2);
                    match build_mother(params) {
                        Ok(h) => {
                            assert!(weights_ok, "{params} built but oracle weights differ");
                            assert_eq!(h.to_dense(), oracle, "{params}");
                        }
                        Err(Error::DegenerateShape { .. }) => {
                            assert!(!weights_ok, "{params} rejected but oracle is weight 2")
                        }
                        Err(e) => panic!("{params}: {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn every_column_has_weight_two_when_c_positive() {
        for a in 2..=8 {
            for b in 1..=6 {
                for c in 1..=7 {
                    let h = build_mother(CodeParams::new(a, b, c).unwrap()).unwrap();
                    let dense = h.to_dense();
                    for j in 0..h.cols() {
                        assert_eq!(dense.iter().filter(|r| r[j] == 1).count(), 2);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_chain_length_is_degenerate() {
        for a in 2..=8 {
            for b in 2..=6 {
                let params = CodeParams::new(a, b, 0).unwrap();
                assert!(matches!(
                    build_mother(params),
                    Err(Error::DegenerateShape { c: 0, .. })
                ));
            }
        }
    }
}
