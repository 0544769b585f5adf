#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use symp_invariants::exactalg::{det_exact, int, symplectic_check, Matrix, Polynomial, Rational};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_int_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| int(rng.gen_range(-bound..=bound))).collect())
            .collect(),
    )
    .unwrap()
}

fn embed(block: &Matrix, slot: usize, n: usize) -> Matrix {
    let blocks: Vec<Matrix> = (0..n)
        .map(|i| if i == slot { block.clone() } else { Matrix::identity(2) })
        .collect();
    Matrix::block_diag(&blocks).unwrap()
}

/// Symplectic transvection `x ↦ x + ω(v, x) v` for `v = e_a + e_b`.
fn transvection(dim: usize, a: usize, b: usize) -> Matrix {
    let j = symp_invariants::exactalg::standard_j(dim, Default::default()).unwrap();
    let mut v = vec![Rational::zero(); dim];
    v[a] += Rational::one();
    v[b] += Rational::one();
    let col = Matrix::from_rows(v.iter().map(|x| vec![x.clone()]).collect()).unwrap();
    let outer = &col * &(&col.transpose() * &j);
    &Matrix::identity(dim) + &outer
}

/// Generators of `Sp(2n, Z)` in interleaved coordinates: `S` and `T` (and
/// inverses) in each 2x2 block, plus transvections coupling blocks.
pub fn symplectic_generators(n: usize) -> Vec<Matrix> {
    let s = Matrix::ints(&[[0, -1], [1, 0]]);
    let s_inv = Matrix::ints(&[[0, 1], [-1, 0]]);
    let t = Matrix::ints(&[[1, 1], [0, 1]]);
    let t_inv = Matrix::ints(&[[1, -1], [0, 1]]);
    let mut gens = Vec::new();
    for slot in 0..n {
        for g in [&s, &s_inv, &t, &t_inv] {
            gens.push(embed(g, slot, n));
        }
    }
    for i in 0..n {
        for k in i + 1..n {
            gens.push(transvection(2 * n, 2 * i, 2 * k));
            gens.push(transvection(2 * n, 2 * i + 1, 2 * k));
        }
    }
    gens
}

/// A word of `len` random generators in `Sp(2n, Z)`.
pub fn random_symplectic(rng: &mut StdRng, n: usize, len: usize) -> Matrix {
    let gens = symplectic_generators(n);
    let mut m = Matrix::identity(2 * n);
    for _ in 0..len {
        m = &m * &gens[rng.gen_range(0..gens.len())];
    }
    assert!(symplectic_check(&m).unwrap());
    m
}

/// Random symplectic matrix with `det(I - A) = ±1`, by rejection.
pub fn random_unit_symplectic(rng: &mut StdRng, n: usize, len: usize) -> Matrix {
    loop {
        let m = random_symplectic(rng, n, len);
        let d = det_exact(&m.identity_minus().unwrap()).unwrap();
        if d == int(1) || d == int(-1) {
            return m;
        }
    }
}

/// Lagrange interpolation through `(x_i, y_i)`.
pub fn interpolate(points: &[(Rational, Rational)]) -> Polynomial {
    let mut total = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Polynomial::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let factor = Polynomial::new(vec![-xj.clone(), Rational::one()]);
                basis = &basis * &factor.scale(&(xi - xj).recip());
            }
        }
        total = &total + &basis;
    }
    total
}

/// `det(I - tM)` by evaluating determinants at `t = 0..=n` and interpolating.
pub fn charpoly_rev_by_interpolation(m: &Matrix) -> Polynomial {
    let n = m.rows();
    let points: Vec<_> = (0..=n as i64)
        .map(|t| {
            let shifted = &Matrix::identity(n) - &m.scale(&int(t));
            (int(t), det_exact(&shifted).unwrap())
        })
        .collect();
    interpolate(&points)
}

pub fn factorial_reciprocal(n: usize) -> BigRational {
    let f: BigInt = (1..=n as u64).map(BigInt::from).product();
    BigRational::new(BigInt::one(), f)
}
