//! Values quoted in the source text, transcribed for comparison. Polynomials
//! use the crate's input grammar.
#![allow(dead_code)]

pub mod strategies;

use std::sync::Arc;

use selfdual::linalg::{parse_matrix_text, PolyMatrix};
use selfdual::poly::{parse_polynomial, VariableSet};
use selfdual::{Poly, Rational};

/// The cases with a proper obstruction ideal.
pub const SELF_DUAL: [usize; 14] = [1, 2, 3, 4, 6, 7, 8, 10, 11, 16, 17, 18, 20, 21];

/// Unit-ideal cases among the 35 patterns containing column 1.
pub fn unit_cases() -> Vec<usize> {
    let mut v = vec![5, 9, 12, 13, 14, 15, 19];
    v.extend(22..=35);
    v
}

/// Quoted reduced Gröbner basis sizes, by case.
pub const GB_SIZES: [(usize, usize); 14] = [
    (1, 141),
    (2, 112),
    (3, 63),
    (4, 31),
    (6, 72),
    (7, 50),
    (8, 50),
    (10, 16),
    (11, 13),
    (16, 31),
    (17, 23),
    (18, 33),
    (20, 13),
    (21, 10),
];

/// Quoted greatest basis element, by case.
pub const GREATEST: [(usize, &str); 14] = [
    (1, "W4*X4*Y3*Z1*Z2 - W3*X4*Y4*Z1*Z2 - W4*X4*Y1*Z2*Z3 + W1*X4*Y4*Z2*Z3 - W4*X2*Y3*Z1*Z4 + W3*X2*Y4*Z1*Z4 + W3*X4*Y1*Z2*Z4 - W1*X4*Y3*Z2*Z4 + W4*X2*Y1*Z3*Z4 - W1*X2*Y4*Z3*Z4 - W3*X2*Y1*Z4^2 + W1*X2*Y3*Z4^2 + W3*X2*Y1 - W1*X2*Y3"),
    (2, "W1*X3*Y3*Y4^2*Z2*Z3 - W1*X4*Y4^3*Z2*Z3 + W3*X1*Y2*Y4^2*Z3^2 - W2*X1*Y3*Y4^2*Z3^2 - W1*X2*Y3*Y4^2*Z3^2 - W1*X3*Y3^2*Y4*Z2*Z4 + W1*X3*Y4^3*Z2*Z4 - 2*W3*X1*Y2*Y3*Y4*Z3*Z4 + 2*W2*X1*Y3^2*Y4*Z3*Z4 + W1*X2*Y3^2*Y4*Z3*Z4 + W1*X2*Y4^3*Z3*Z4 + W1*X3*Y4*Z2*Z3^2*Z4 - W1*X2*Y4*Z3^3*Z4 + W3*X1*Y2*Y3^2*Z4^2 - W2*X1*Y3^3*Z4^2 - W1*X2*Y3*Y4^2*Z4^2 - W1*X3*Y3*Z2*Z3*Z4^2 - 2*W1*X4*Y4*Z2*Z3*Z4^2 + W1*X2*Y3*Z3^2*Z4^2 + 2*W1*X3*Y4*Z2*Z4^3 + W1*X4*Y2*Z3*Z4^3 - W1*X3*Y2*Z4^4 + W3*X1*Y2*Y3^2 - W2*X1*Y3^3 + W2*X1*Y3*Y4^2 + W1*X3*Y3*Z2*Z3 - W1*X4*Y4*Z2*Z3 + W3*X1*Y2*Z3^2 - W1*X3*Y2*Z3^2 - W2*X1*Y3*Z3^2 + W1*X3*Y4*Z2*Z4 + W1*X4*Y2*Z3*Z4 + W1*X2*Y4*Z3*Z4 - W1*X3*Y2*Z4^2 + W2*X1*Y3*Z4^2 + W2*X1*Y3"),
    (3, "W3*X3*Y1*Y2 - W2*X3*Y1*Y3 - W3*X1*Y2*Y3 + W2*X1*Y3^2 + W2*X1*Z4^2"),
    (4, "W3*X3*Y1*Y2 - W2*X3*Y1*Y3 - W3*X1*Y2*Y3 + W2*X1*Y3^2 - W2*X1"),
    (6, "X4*Y1*Y2*Z3^2 - X1*Y2*Y4*Z3^2 + X4*Z1*Z2*Z3^2 - X1*Z2*Z3^2*Z4 - X4*Y1*Y2*Z4^2 + X1*Y2*Y4*Z4^2 - X4*Z1*Z2*Z4^2 + X1*Z2*Z4^3 - X4*Y1*Y2 + X1*Y2*Y4 + X1*Z2*Z4"),
    (7, "X1*X2*Y3^2 + Y1*Y2*Y3^2 + Y1*Y2*Z3^2 + X1*X2*Z4^2"),
    (8, "X1*X2*Y3^2 + Y1*Y2*Y3^2 - X1*X2"),
    (10, "W2*X1*X2 - W1*X2^2 - W1"),
    (11, "W2*X1*X2 - W1*X2^2 - W1"),
    (16, "X4*Y4*Z2*Z3 - X3*Y4*Z2*Z4 - X4*Y2*Z3*Z4 + X3*Y2*Z4^2 + X3*Y2"),
    (17, "Y2*Y3*Z4^2 + Z2*Z3*Z4^2 + Y2*Y3"),
    (18, "X3*Y2*Y3 - X2*Y3^2 + X2"),
    (20, "Y4*Z3*Z4 - Y3*Z4^2 - Y3"),
    (21, "W1^2 + 1"),
];

pub const CASE21_BASIS: [&str; 10] = ["Z3", "Z2", "Z1", "Y2", "Y1", "X1", "Z4^2 + 1", "Y3^2 + 1", "X2^2 + 1", "W1^2 + 1"];

pub const CASE18_BASIS: [&str; 13] = [
    "Z3",
    "Z2",
    "Z1",
    "Y1",
    "X1",
    "Z4^2 + 1",
    "Y2^2 + Y3^2 - 1",
    "X2*Y2 + X3*Y3",
    "X3^2 + Y3^2 - 1",
    "X2*X3 + Y2*Y3",
    "X2^2 - Y3^2",
    "W1^2 + 1",
    "X3*Y2*Y3 - X2*Y3^2 + X2",
];

pub const ASSOC1_BASIS: [&str; 10] = [
    "Z3",
    "Z2",
    "W3",
    "W2",
    "Y2^2 + Y3^2 - 1",
    "X2*Y2 + X3*Y3",
    "X3^2 + Y3^2 - 1",
    "X2*X3 + Y2*Y3",
    "X2^2 - Y3^2",
    "X3*Y2*Y3 - X2*Y3^2 + X2",
];

pub const ASSOC3_BASIS: [&str; 6] = ["Z4", "Z2", "Y2", "X2", "Y4^2 + 1", "W2^2 + 1"];

/// Parameter-matrix zeros (beyond none) for the self-dual cases, read off
/// the displayed relation matrices.
pub const PARAMETER_ZEROS: [(usize, &[&str]); 14] = [
    (1, &[]),
    (2, &["W4"]),
    (3, &["W4", "X4"]),
    (4, &["W4", "X4", "Y4"]),
    (6, &["W3", "W4"]),
    (7, &["W3", "W4", "X4"]),
    (8, &["W3", "W4", "X4", "Y4"]),
    (10, &["W3", "W4", "X3", "X4"]),
    (11, &["W3", "W4", "X3", "X4", "Y4"]),
    (16, &["W2", "W3", "W4"]),
    (17, &["W2", "W3", "W4", "X4"]),
    (18, &["W2", "W3", "W4", "X4", "Y4"]),
    (20, &["W2", "W3", "W4", "X3", "X4"]),
    (21, &["W2", "W3", "W4", "X3", "X4", "Y4"]),
];

/// Relation matrices after the associativity conditions, cases 1..15.
pub const ASSOC_TABLE: [[&str; 4]; 15] = [
    ["1,0,0,0,-1,0,0,0", "0,1,0,0,W2,X2,Y2,Z2", "0,0,1,0,W3,X3,Y3,Z3", "0,0,0,1,0,0,0,-1"],
    ["1,0,0,0,0,X1,Y1,Z1", "0,1,W2,0,0,X2,Y2,Z2", "0,0,0,1,0,0,0,-1", "0,0,0,0,1,X1,Y1,Z1"],
    ["1,0,0,0,-1,0,0,0", "0,1,W2,0,X2,0,Y2,Z2", "0,0,0,1,0,0,0,-1", "0,0,0,0,0,1,Y4,Z4"],
    ["1,0,0,0,-1,0,0,0", "0,1,W2,0,X2,Y2,0,Z2", "0,0,0,1,0,0,0,-1", "0,0,0,0,0,0,1,Z4"],
    ["1,0,0,0,-1,0,0,0", "0,1,W2,0,X2,Y2,Z2,0", "0,0,0,1,0,0,0,0", "0,0,0,0,0,0,0,1"],
    ["1,0,0,0,0,X1,Y1,Z1", "0,0,1,0,0,X2,Y2,Z2", "0,0,0,1,0,0,0,-1", "0,0,0,0,1,X1,Y1,Z1"],
    ["1,0,0,0,-1,0,0,0", "0,0,1,0,X2,0,Y2,Z2", "0,0,0,1,0,0,0,-1", "0,0,0,0,0,1,Y4,Z4"],
    ["1,0,0,0,-1,0,0,0", "0,0,1,0,X2,Y2,0,Z2", "0,0,0,1,0,0,0,-1", "0,0,0,0,0,0,1,Z4"],
    ["1,0,0,0,-1,0,0,0", "0,0,1,0,X2,Y2,Z2,0", "0,0,0,1,0,0,0,0", "0,0,0,0,0,0,0,1"],
    ["1,0,0,0,0,0,Y1,Z1", "0,0,0,1,0,0,0,-1", "0,0,0,0,1,0,Y1,Z1", "0,0,0,0,0,1,Y4,Z4"],
    ["1,0,0,0,0,Y1,0,Z1", "0,0,0,1,0,0,0,-1", "0,0,0,0,1,Y1,0,Z1", "0,0,0,0,0,0,1,Z4"],
    ["1,0,0,0,0,Y1,Z1,0", "0,0,0,1,0,0,0,0", "0,0,0,0,1,Y1,Z1,0", "0,0,0,0,0,0,0,1"],
    ["1,0,0,0,-1,0,0,0", "0,0,0,1,0,0,0,-1", "0,0,0,0,0,1,0,Z3", "0,0,0,0,0,0,1,Z4"],
    ["1,0,0,0,-1,0,0,0", "0,0,0,1,0,0,0,0", "0,0,0,0,0,1,Z3,0", "0,0,0,0,0,0,0,1"],
    ["1,0,0,0,-1,0,0,0", "0,0,0,1,0,0,0,0", "0,0,0,0,0,0,1,0", "0,0,0,0,0,0,0,1"],
];

/// Nonzero columns of the case-5 obstruction, letters A..L row-major.
pub const CASE5_T: [[&str; 4]; 4] = [
    ["I^2 + E^2 + A^2 + 1", "I*J + E*F + A*B", "I*K + E*G + A*C", "I*L + E*H + A*D"],
    ["-I*J - E*F - A*B", "-J^2 - F^2 - B^2 + 1", "-J*K - F*G - B*C", "-J*L - F*H - B*D"],
    ["-I*K - E*G - A*C", "-J*K - F*G - B*C", "-K^2 - G^2 - C^2 + 1", "-K*L - G*H - C*D"],
    ["-I*L - E*H - A*D", "-J*L - F*H - B*D", "-K*L - G*H - C*D", "-L^2 - H^2 - D^2 + 1"],
];

/// Quoted staged trace for case 5: (before, eliminated, surviving,
/// nonzero S-polynomials). The last two rounds quote no S-polynomial count.
pub const CASE5_TRACE: [(usize, usize, usize, Option<usize>); 6] = [
    (10, 0, 10, Some(24)),
    (34, 4, 30, Some(232)),
    (262, 114, 148, Some(6916)),
    (7064, 6620, 444, Some(92)),
    (536, 523, 13, None),
    (13, 12, 1, None),
];

pub fn polys(vars: &Arc<VariableSet>, texts: &[&str]) -> Vec<Poly> {
    texts.iter().map(|t| parse_polynomial(t, vars).unwrap()).collect()
}

/// Parses comma-separated rows and moves them into `vars`.
pub fn matrix_in(vars: &Arc<VariableSet>, rows: &[&str]) -> PolyMatrix<Rational> {
    let m: PolyMatrix<Rational> = parse_matrix_text(&rows.join("\n")).unwrap();
    m.embed(vars).unwrap()
}
