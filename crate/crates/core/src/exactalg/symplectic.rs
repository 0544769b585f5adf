use super::{int, Matrix};
use crate::{Error, Result};

/// Which coordinate ordering the symplectic form `J` is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JConvention {
    /// `(q1, p1, ..., qn, pn)`: `J` is a block sum of `[[0, -1], [1, 0]]`.
    #[default]
    Interleaved,
    /// `(q1, ..., qn, p1, ..., pn)`: `J = [[0, -I], [I, 0]]`.
    Block,
}

fn half_dim(dim: usize) -> Result<usize> {
    if !dim.is_multiple_of(2) {
        return Err(Error::Domain(format!("symplectic matrices have even dimension, got {dim}")));
    }
    Ok(dim / 2)
}

pub fn standard_j(dim: usize, convention: JConvention) -> Result<Matrix> {
    let n = half_dim(dim)?;
    let mut rows = Matrix::zeros(dim, dim).to_rows();
    for i in 0..n {
        let (q, p) = match convention {
            JConvention::Interleaved => (2 * i, 2 * i + 1),
            JConvention::Block => (i, n + i),
        };
        rows[q][p] = int(-1);
        rows[p][q] = int(1);
    }
    Matrix::from_rows(rows)
}

/// `MᵗJM = J` under the interleaved convention.
pub fn symplectic_check(m: &Matrix) -> Result<bool> {
    symplectic_check_with(m, JConvention::Interleaved)
}

pub fn symplectic_check_with(m: &Matrix, convention: JConvention) -> Result<bool> {
    let dim = m.require_square()?;
    let j = standard_j(dim, convention)?;
    Ok(&(&m.transpose() * &j) * m == j)
}

impl Matrix {
    /// Rewrites a matrix given in block coordinates into interleaved ones.
    pub fn block_to_interleaved(&self) -> Result<Matrix> {
        let dim = self.require_square()?;
        let n = half_dim(dim)?;
        // interleaved index k reads block index perm[k]
        let perm: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).collect();
        Matrix::from_rows(
            perm.iter()
                .map(|&r| perm.iter().map(|&c| self[(r, c)].clone()).collect())
                .collect(),
        )
    }
}
