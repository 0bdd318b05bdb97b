//! The published DC-LDPC code table, row by row as printed.
//!
//! Values are kept exactly as published, including rows whose columns
//! disagree with each other. `known` lists the inconsistency flags each
//! row is expected to raise.

use super::Flag;

pub(crate) struct Row {
    pub b: usize,
    pub c: usize,
    pub a: usize,
    pub rate: (usize, usize),
    pub g: usize,
    pub m: usize,
    pub n: usize,
    pub s: &'static [usize],
    pub known: &'static [Flag],
}

#[rustfmt::skip]
pub(crate) static ROWS: &[Row] = &[
    Row { b: 3, c: 2, a: 3, rate: (1, 5), g: 40, m: 30, n: 450,
          s: &[0, 28, 19, 5, 16, 14, 25, 10, 15, 16, 13, 4, 6, 3, 25],
          known: &[] },
    Row { b: 3, c: 2, a: 4, rate: (1, 6), g: 48, m: 42, n: 756,
          s: &[0, 1, 8, 27, 7, 18, 29, 1, 3, 37, 22, 26, 0, 35, 2, 5, 13, 28],
          known: &[] },
    Row { b: 3, c: 2, a: 5, rate: (1, 7), g: 52, m: 40, n: 840,
          s: &[0, 1, 9, 22, 19, 6, 6, 6, 4, 2, 0, 16, 5, 1, 33, 0, 3, 27, 28, 26, 38],
          known: &[] },
    Row { b: 3, c: 2, a: 6, rate: (1, 8), g: 56, m: 33, n: 792,
          s: &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 5, 0, 21],
          known: &[] },
    Row { b: 3, c: 2, a: 7, rate: (1, 9), g: 60, m: 28, n: 756,
          s: &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 25],
          known: &[] },
    Row { b: 3, c: 2, a: 8, rate: (1, 10), g: 64, m: 20, n: 600,
          s: &[0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 0, 13],
          known: &[] },
    Row { b: 3, c: 3, a: 3, rate: (1, 6), g: 48, m: 45, n: 810,
          s: &[0, 14, 0, 8, 3, 4, 37, 14, 39, 36, 17, 9, 38, 24, 22, 34, 2, 40],
          known: &[] },
    Row { b: 3, c: 3, a: 4, rate: (1, 7), g: 56, m: 30, n: 630,
          s: &[0, 17, 27, 17, 5, 27, 24, 26, 26, 13, 12, 19, 17, 2, 27, 14, 10, 4, 13, 4, 19],
          known: &[] },
    Row { b: 3, c: 3, a: 5, rate: (1, 8), g: 64, m: 50, n: 1200,
          s: &[0, 44, 44, 44, 44, 44, 44, 44, 44, 44, 44, 44, 41, 30, 30, 30, 30, 30, 30, 30, 11, 28, 28, 40],
          known: &[] },
    Row { b: 3, c: 4, a: 3, rate: (1, 7), g: 56, m: 50, n: 1050,
          s: &[0, 5, 18, 16, 37, 39, 26, 48, 16, 9, 3, 45, 18, 22, 16, 45, 45, 32, 41, 31, 23],
          known: &[] },
    Row { b: 3, c: 4, a: 4, rate: (1, 8), g: 64, m: 50, n: 1200,
          s: &[0, 43, 35, 33, 37, 11, 27, 18, 12, 1, 10, 19, 3, 5, 47, 45, 11, 24, 2, 40, 5, 33, 41, 38],
          known: &[] },
    Row { b: 3, c: 4, a: 5, rate: (1, 9), g: 72, m: 50, n: 1350,
          s: &[0, 10, 36, 47, 12, 39, 2, 11, 4, 7, 25, 28, 27, 48, 21, 45, 10, 0, 7, 22, 5, 9, 14, 33, 18, 20, 12],
          known: &[] },
    Row { b: 3, c: 4, a: 6, rate: (1, 10), g: 80, m: 50, n: 1500,
          s: &[0, 43, 48, 45, 44, 3, 3, 5, 32, 3, 28, 4, 47, 35, 25, 26, 41, 46, 31, 16, 46, 36, 48, 34, 38, 35, 18, 30, 6, 0],
          known: &[] },
    Row { b: 3, c: 5, a: 3, rate: (1, 8), g: 64, m: 60, n: 1440,
          s: &[0, 9, 46, 35, 15, 25, 56, 22, 15, 42, 46, 41, 18, 3, 42, 57, 6, 11, 18, 38, 53, 14, 54, 0],
          known: &[] },
    Row { b: 3, c: 5, a: 4, rate: (1, 9), g: 72, m: 50, n: 1350,
          s: &[0, 46, 1, 15, 25, 35, 0, 10, 32, 36, 10, 5, 0, 11, 15, 17, 13, 19, 33, 7, 1, 26, 10, 34, 44, 10, 40],
          known: &[] },
    Row { b: 3, c: 5, a: 5, rate: (1, 10), g: 80, m: 50, n: 1500,
          s: &[0, 46, 1, 15, 25, 35, 0, 10, 32, 36, 10, 5, 0, 11, 15, 17, 13, 19, 33, 7, 1, 26, 10, 34, 44, 10, 40],
          known: &[Flag::SequenceLength] },
    Row { b: 3, c: 6, a: 3, rate: (1, 9), g: 72, m: 60, n: 1650,
          s: &[0, 10, 42, 10, 10, 10, 10, 10, 10, 10, 10, 23, 45, 45, 45, 45, 45, 45, 45, 45, 55, 42, 42, 42, 42, 42, 8],
          known: &[Flag::CodeLength] },
    Row { b: 3, c: 6, a: 4, rate: (1, 10), g: 80, m: 65, n: 2100,
          s: &[0, 16, 61, 31, 64, 35, 19, 44, 33, 37, 60, 5, 6, 30, 38, 39, 45, 25, 27, 68, 27, 11, 21, 12, 60, 13, 13, 66, 7, 20],
          known: &[Flag::CodeLength, Flag::SlopeOutOfRange] },
    Row { b: 4, c: 2, a: 3, rate: (1, 5), g: 40, m: 40, n: 800,
          s: &[0, 5, 2, 24, 18, 37, 27, 3, 6, 21, 38, 29, 32, 32, 28, 26, 16, 29, 24, 31],
          known: &[] },
    Row { b: 4, c: 2, a: 4, rate: (1, 6), g: 48, m: 48, n: 1152,
          s: &[0, 27, 31, 21, 4, 22, 23, 19, 25, 6, 2, 10, 20, 30, 25, 22, 9, 30, 16, 8, 28, 17, 38, 1],
          known: &[] },
    Row { b: 4, c: 2, a: 5, rate: (1, 7), g: 56, m: 45, n: 1260,
          s: &[0, 21, 20, 17, 15, 43, 43, 27, 26, 42, 19, 35, 8, 28, 27, 13, 30, 34, 34, 30, 3, 15, 33, 36, 26, 36, 40, 19],
          known: &[] },
    Row { b: 4, c: 2, a: 6, rate: (1, 8), g: 64, m: 40, n: 1280,
          s: &[0, 14, 13, 22, 36, 28, 5, 26, 30, 14, 23, 7, 1, 2, 36, 1, 38, 11, 8, 30, 27, 19, 17, 31, 31, 20, 21, 32, 0, 25, 18, 20],
          known: &[] },
    Row { b: 4, c: 2, a: 7, rate: (1, 9), g: 72, m: 55, n: 2420,
          s: &[0, 18, 19, 17, 4, 11, 29, 30, 43, 4, 21, 14, 12, 37, 8, 42, 37, 32, 32, 49, 26, 40, 19, 18, 9, 17, 6, 30, 32, 39, 43, 32, 38, 20, 31, 43],
          known: &[Flag::CodeLength] },
    Row { b: 4, c: 2, a: 8, rate: (1, 10), g: 76, m: 75, n: 3000,
          s: &[0, 3, 7, 45, 33, 27, 7, 26, 66, 37, 50, 53, 64, 14, 62, 29, 24, 51, 39, 34, 38, 14, 57, 18, 26, 11, 43, 70, 26, 56, 1, 23, 6, 38, 56, 70, 37, 65, 55, 73],
          known: &[] },
    Row { b: 4, c: 3, a: 3, rate: (1, 6), g: 48, m: 70, n: 1680,
          s: &[0, 26, 8, 26, 26, 26, 26, 26, 63, 39, 39, 39, 39, 39, 39, 8, 8, 8, 8, 8, 13, 35, 35, 19],
          known: &[] },
    Row { b: 4, c: 3, a: 4, rate: (1, 7), g: 56, m: 50, n: 1400,
          s: &[0, 32, 27, 37, 16, 33, 33, 3, 24, 20, 42, 19, 44, 26, 19, 22, 32, 35, 25, 4, 45, 36, 45, 0, 32, 21, 15, 46],
          known: &[] },
    Row { b: 4, c: 3, a: 5, rate: (1, 8), g: 64, m: 40, n: 1280,
          s: &[0, 0, 2, 20, 11, 13, 24, 2, 19, 0, 31, 22, 29, 36, 26, 33, 23, 30, 21, 33, 14, 19, 35, 1, 15, 31, 27, 25, 23, 38, 1, 13],
          known: &[] },
    Row { b: 4, c: 4, a: 3, rate: (1, 7), g: 56, m: 40, n: 1120,
          s: &[0, 16, 19, 38, 24, 4, 5, 19, 24, 36, 22, 4, 27, 24, 16, 30, 23, 28, 26, 15, 15, 24, 25, 22, 16, 19, 19, 38],
          known: &[] },
    Row { b: 4, c: 4, a: 4, rate: (1, 8), g: 64, m: 55, n: 1760,
          s: &[0, 25, 37, 3, 42, 17, 31, 0, 39, 0, 32, 43, 20, 26, 31, 29, 4, 11, 14, 34, 37, 21, 7, 35, 0, 35, 47, 14, 6, 3, 25, 18],
          known: &[] },
    Row { b: 4, c: 4, a: 5, rate: (1, 9), g: 72, m: 55, n: 1980,
          s: &[0, 52, 8, 26, 0, 7, 34, 2, 4, 1, 30, 19, 25, 43, 46, 24, 15, 29, 30, 49, 3, 47, 44, 25, 19, 16, 32, 4, 52, 33, 17, 14, 31, 4, 31, 32],
          known: &[] },
    Row { b: 4, c: 4, a: 6, rate: (1, 10), g: 80, m: 60, n: 2160,
          s: &[0, 46, 9, 12, 13, 34, 35, 53, 55, 55, 5, 41, 13, 22, 44, 39, 2, 20, 43, 8, 29, 31, 50, 57, 52, 58, 54, 1, 45, 36, 17, 47, 32, 47, 41, 35, 22, 7, 6, 43],
          known: &[Flag::CodeLength] },
    Row { b: 4, c: 5, a: 3, rate: (1, 8), g: 64, m: 40, n: 1440,
          s: &[0, 31, 4, 31, 37, 29, 12, 7, 31, 18, 20, 0, 5, 10, 15, 26, 37, 22, 0, 38, 33, 14, 25, 15, 29, 27, 19, 28, 15, 25, 21, 33],
          known: &[Flag::CodeLength] },
    Row { b: 4, c: 5, a: 4, rate: (1, 9), g: 72, m: 50, n: 1600,
          s: &[0, 30, 26, 35, 21, 37, 15, 32, 42, 47, 39, 19, 29, 20, 27, 37, 14, 6, 42, 4, 22, 1, 5, 33, 20, 19, 13, 13, 17, 21, 32, 15, 25, 32, 39, 38],
          known: &[Flag::CodeLength] },
    Row { b: 4, c: 5, a: 5, rate: (1, 10), g: 80, m: 65, n: 2600,
          s: &[0, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 24, 55, 55, 55, 55, 55, 55, 55, 55, 55, 55, 39, 39, 39, 39, 39, 39, 39, 39, 39, 48, 30, 30, 30, 20, 24],
          known: &[] },
    Row { b: 4, c: 6, a: 3, rate: (1, 9), g: 72, m: 40, n: 1440,
          s: &[0, 28, 25, 25, 0, 32, 21, 15, 8, 23, 10, 4, 5, 17, 24, 29, 0, 24, 0, 26, 7, 22, 33, 25, 37, 29, 37, 10, 38, 35, 2, 17, 22, 11, 32, 30],
          known: &[] },
    Row { b: 4, c: 6, a: 4, rate: (1, 10), g: 80, m: 40, n: 1600,
          s: &[0, 18, 33, 10, 24, 13, 35, 35, 11, 18, 27, 21, 24, 15, 26, 32, 38, 3, 18, 17, 28, 35, 0, 16, 29, 36, 6, 24, 10, 38, 15, 16, 4, 4, 14, 3, 32, 38, 7, 4],
          known: &[] },
    Row { b: 4, c: 7, a: 3, rate: (1, 10), g: 80, m: 45, n: 1800,
          s: &[0, 38, 30, 35, 38, 6, 38, 43, 29, 3, 8, 36, 43, 5, 26, 30, 33, 35, 27, 15, 17, 10, 8, 15, 27, 9, 20, 25, 26, 1, 32, 43, 2, 28, 38, 34, 24, 40, 36, 9],
          known: &[] },
    Row { b: 5, c: 2, a: 3, rate: (1, 5), g: 40, m: 30, n: 750,
          s: &[0, 25, 26, 0, 12, 13, 11, 13, 24, 25, 6, 3, 16, 15, 17, 10, 11, 24, 23, 5, 9, 11, 7, 8, 0],
          known: &[] },
    Row { b: 5, c: 2, a: 4, rate: (1, 6), g: 48, m: 35, n: 1050,
          s: &[0, 26, 15, 1, 2, 5, 12, 22, 11, 22, 21, 0, 4, 25, 13, 5, 23, 1, 24, 25, 28, 26, 31, 13, 25, 15, 5, 1, 27, 25],
          known: &[] },
    Row { b: 5, c: 2, a: 5, rate: (1, 7), g: 56, m: 45, n: 1575,
          s: &[0, 41, 13, 20, 6, 23, 28, 8, 39, 26, 30, 42, 39, 37, 4, 14, 19, 9, 6, 42, 31, 23, 41, 14, 15, 20, 14, 38, 3, 6, 20, 1, 26, 3, 25],
          known: &[] },
    Row { b: 5, c: 2, a: 6, rate: (1, 8), g: 64, m: 50, n: 2000,
          s: &[0, 35, 30, 25, 17, 38, 33, 31, 9, 45, 24, 31, 41, 39, 1, 22, 21, 23, 15, 27, 8, 47, 24, 31, 36, 45, 38, 30, 12, 28, 39, 15, 1, 41, 8, 8, 14, 27, 25, 18],
          known: &[] },
    Row { b: 5, c: 2, a: 7, rate: (1, 9), g: 72, m: 55, n: 2475,
          s: &[0, 28, 32, 31, 22, 9, 38, 8, 29, 50, 16, 28, 4, 49, 45, 33, 53, 41, 25, 12, 45, 0, 21, 32, 6, 14, 8, 12, 8, 26, 20, 35, 30, 42, 22, 16, 14, 23, 20, 21, 2, 34, 50, 22, 30],
          known: &[] },
    Row { b: 5, c: 2, a: 8, rate: (1, 10), g: 80, m: 60, n: 3500,
          s: &[0, 1, 39, 23, 37, 37, 44, 13, 22, 56, 1, 27, 32, 6, 56, 31, 33, 29, 44, 38, 8, 1, 2, 34, 24, 1, 11, 24, 9, 0, 20, 39, 58, 6, 1, 22, 39, 57, 36, 41, 50, 3, 54, 41, 23, 58, 48, 5, 50, 54],
          known: &[Flag::CodeLength] },
    Row { b: 5, c: 3, a: 3, rate: (1, 6), g: 48, m: 30, n: 900,
          s: &[0, 18, 11, 1, 19, 4, 7, 4, 24, 10, 3, 7, 2, 12, 13, 21, 28, 19, 20, 14, 13, 26, 2, 24, 24, 21, 26, 11, 26, 22],
          known: &[] },
    Row { b: 5, c: 3, a: 4, rate: (1, 7), g: 56, m: 40, n: 1400,
          s: &[0, 23, 28, 21, 22, 36, 12, 12, 11, 13, 6, 26, 27, 28, 4, 12, 22, 10, 20, 4, 25, 19, 26, 33, 25, 35, 27, 6, 10, 19],
          known: &[Flag::SequenceLength] },
    Row { b: 5, c: 3, a: 5, rate: (1, 8), g: 64, m: 45, n: 1800,
          s: &[0, 34, 2, 15, 4, 13, 33, 30, 23, 23, 30, 0, 7, 24, 23, 25, 11, 6, 21, 32, 42, 26, 0, 36, 6, 0, 41, 35, 24, 7, 3, 14, 39, 36, 8, 31, 19, 35, 14, 18],
          known: &[] },
    Row { b: 5, c: 4, a: 4, rate: (1, 8), g: 64, m: 25, n: 1000,
          s: &[0, 2, 20, 15, 9, 2, 6, 22, 7, 2, 6, 7, 4, 14, 12, 9, 8, 1, 15, 22, 20, 6, 23, 8, 21, 3, 11, 23, 17, 3, 10, 10, 7, 2, 22, 9, 10, 3, 13, 11],
          known: &[] },
    Row { b: 5, c: 4, a: 5, rate: (1, 9), g: 72, m: 45, n: 2025,
          s: &[0, 42, 19, 0, 18, 9, 21, 24, 25, 0, 41, 25, 28, 21, 18, 39, 22, 22, 8, 37, 21, 43, 40, 5, 9, 20, 39, 21, 25, 40, 39, 40, 43, 38, 19, 19, 2, 30, 0, 31, 5, 23, 23, 7, 34],
          known: &[] },
    Row { b: 5, c: 4, a: 6, rate: (1, 10), g: 80, m: 50, n: 2500,
          s: &[0, 21, 52, 36, 31, 53, 37, 18, 15, 14, 21, 16, 29, 38, 6, 31, 41, 40, 1, 13, 46, 6, 23, 23, 14, 35, 2, 24, 52, 1, 9, 24, 32, 46, 13, 43, 52, 54, 13, 2, 58, 58, 56, 5, 56, 18, 55, 26, 50, 2],
          known: &[Flag::SlopeOutOfRange] },
    Row { b: 5, c: 5, a: 3, rate: (1, 8), g: 64, m: 30, n: 1600,
          s: &[0, 1, 28, 22, 7, 28, 22, 22, 26, 1, 6, 11, 22, 35, 12, 12, 10, 20, 21, 15, 17, 19, 4, 9, 10, 4, 15, 20, 20, 33, 34, 22, 29, 13, 25, 38, 33, 35, 12, 26],
          known: &[Flag::CodeLength, Flag::SlopeOutOfRange] },
    Row { b: 5, c: 5, a: 4, rate: (1, 9), g: 72, m: 40, n: 2250,
          s: &[0, 32, 32, 19, 9, 20, 18, 24, 37, 18, 14, 18, 27, 38, 26, 25, 15, 16, 43, 9, 48, 36, 45, 6, 47, 11, 37, 47, 22, 47, 33, 9, 40, 27, 3, 34, 8, 31, 36, 38, 25, 44, 7, 44, 3],
          known: &[Flag::CodeLength, Flag::SlopeOutOfRange] },
    Row { b: 5, c: 5, a: 5, rate: (1, 10), g: 80, m: 50, n: 2750,
          s: &[0, 5, 38, 4, 34, 29, 20, 32, 6, 20, 24, 11, 14, 34, 24, 37, 34, 43, 34, 27, 40, 46, 35, 14, 15, 10, 8, 45, 10, 25, 23, 28, 35, 22, 15, 26, 39, 37, 23, 30, 37, 1, 34, 13, 44, 24, 3, 34, 40, 0, 6, 19, 42, 19, 12],
          known: &[Flag::CodeLength, Flag::SequenceLength] },
];
