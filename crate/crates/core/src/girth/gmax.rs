use std::ops::RangeInclusive;

use serde::Serialize;

use crate::construction::CodeParams;
use crate::error::{Error, Result};

/// Largest girth any circulant lift of `H(a,b,c)` can reach.
///
/// `8(a+c)` once `b ≥ ⌈(a-1)/(c+1)⌉ + 2`, otherwise `4(bc+b+a-1)`.
pub fn g_max(params: &CodeParams) -> usize {
    let (a, b, c) = (params.a(), params.b(), params.c());
    let threshold = (a - 1).div_ceil(c + 1) + 2;
    if b >= threshold {
        8 * (a + c)
    } else {
        4 * (b * c + b + a - 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GmaxPoint {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub gmax: usize,
}

/// `g_max` over a grid, ordered by `a` then `b`.
pub fn gmax_sweep(
    c: usize,
    a_range: RangeInclusive<usize>,
    b_range: RangeInclusive<usize>,
) -> Result<Vec<GmaxPoint>> {
    if a_range.is_empty() || b_range.is_empty() {
        return Err(Error::InvalidConfig("sweep ranges must be nonempty".into()));
    }
    let mut points = Vec::new();
    for a in a_range {
        for b in b_range.clone() {
            let params = CodeParams::new(a, b, c)?;
            points.push(GmaxPoint {
                a,
                b,
                c,
                gmax: g_max(&params),
            });
        }
    }
    Ok(points)
}

pub fn sweep_csv(points: &[GmaxPoint]) -> String {
    let mut out = String::from("a,b,c,gmax\n");
    for p in points {
        out.push_str(&format!("{},{},{},{}\n", p.a, p.b, p.c, p.gmax));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gm(a: usize, b: usize, c: usize) -> usize {
        g_max(&CodeParams::new(a, b, c).unwrap())
    }

    #[test]
    fn table_values() {
        assert_eq!(gm(3, 3, 2), 40);
        assert_eq!(gm(5, 3, 2), 52);
        assert_eq!(gm(8, 4, 2), 76);
    }

    #[test]
    fn sweep_examples() {
        let pts = gmax_sweep(2, 3..=3, 3..=10).unwrap();
        assert!(pts.iter().all(|p| p.gmax == 40));
        let pts = gmax_sweep(1, 2..=2, 3..=9).unwrap();
        assert!(pts.iter().all(|p| p.gmax == 24));
        assert_eq!(gmax_sweep(3, 5..=5, 2..=2).unwrap()[0].gmax, 48);
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 3..=2;
        assert!(gmax_sweep(1, empty, 1..=2).is_err());
    }

    #[test]
    fn monotone_in_b_and_capped() {
        for c in 0..=5 {
            let pts = gmax_sweep(c, 2..=10, 2..=12).unwrap();
            for w in pts.windows(2) {
                if w[0].a == w[1].a {
                    assert!(w[0].gmax <= w[1].gmax);
                }
            }
            assert!(pts.iter().all(|p| p.gmax <= 8 * (p.a + p.c)));
        }
    }

    #[test]
    fn csv_layout() {
        let pts = gmax_sweep(1, 2..=2, 1..=2).unwrap();
        assert_eq!(sweep_csv(&pts), "a,b,c,gmax\n2,1,1,12\n2,2,1,20\n");
    }
}
