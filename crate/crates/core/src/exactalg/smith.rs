use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::Matrix;
use crate::{Error, Result};

/// `U * M * V = diag(D)` with `U`, `V` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub diagonal: Vec<BigInt>,
    pub u: Matrix,
    pub v: Matrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cokernel {
    pub free_rank: usize,
    #[serde(serialize_with = "crate::json::ser_bigints")]
    pub torsion: Vec<BigInt>,
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let s = m[src].clone();
            for (d, x) in m[dst].iter_mut().zip(&s) {
                *d += q * x;
            }
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                let x = row[src].clone();
                row[dst] += q * x;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -&*x;
            }
        }
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Smith normal form with explicit unimodular transforms. The diagonal is
/// non-negative and each nonzero entry divides the next.
pub fn smith_normal_form(m: &Matrix) -> Result<SmithDecomposition> {
    let a = m
        .to_integer_rows()
        .ok_or_else(|| Error::Domain("Smith normal form needs an integral matrix".into()))?;
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work { a, u: identity(rows), v: identity(cols) };

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !w.a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| w.a[i][j].abs().cmp(&w.a[k][l].abs()));
            let Some((pi, pj)) = pivot else {
                break;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                if !q.is_zero() {
                    w.add_row(i, t, &-q);
                }
                clean &= w.a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                if !q.is_zero() {
                    w.add_col(j, t, &-q);
                }
                clean &= w.a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let offending = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&w.a[t][t]))
            });
            match offending {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }

    let diagonal = (0..rows.min(cols)).map(|i| w.a[i][i].clone()).collect();
    Ok(SmithDecomposition {
        diagonal,
        u: Matrix::from_integer_rows(&w.u)?,
        v: Matrix::from_integer_rows(&w.v)?,
    })
}

/// Free rank and torsion coefficients of `Z^rows / image(M)`.
pub fn cokernel_decomposition(m: &Matrix) -> Result<Cokernel> {
    let snf = smith_normal_form(m)?;
    Ok(Cokernel {
        free_rank: m.rows() - snf.rank(),
        torsion: snf.diagonal.into_iter().filter(|d| *d > BigInt::one()).collect(),
    })
}
