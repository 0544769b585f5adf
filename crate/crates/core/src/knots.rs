//! Fibered knots given by their monodromy on first homology, and their
//! Alexander polynomials `A(t) = det(I - t f_{*1})`.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::exactalg::{charpoly_rev, det_exact, int, symplectic_check, Matrix, Polynomial, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberedKnot {
    name: String,
    genus: u32,
    monodromy: Matrix,
}

impl FiberedKnot {
    pub fn new(name: impl Into<String>, genus: u32, monodromy: Matrix) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Validation("fibered knot genus must be >= 1".into()));
        }
        let dim = 2 * genus as usize;
        if monodromy.rows() != dim || monodromy.cols() != dim {
            return Err(Error::Validation(format!(
                "genus {genus} needs a {dim}x{dim} monodromy, got {}x{}",
                monodromy.rows(),
                monodromy.cols()
            )));
        }
        if !monodromy.is_integral() {
            return Err(Error::Validation("monodromy must be integral".into()));
        }
        if !det_exact(&monodromy)?.is_one() {
            return Err(Error::Validation("monodromy must have determinant 1".into()));
        }
        if !symplectic_check(&monodromy)? {
            return Err(Error::Validation("monodromy is not symplectic".into()));
        }
        Ok(Self { name: name.into(), genus, monodromy })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn monodromy(&self) -> &Matrix {
        &self.monodromy
    }
}

/// Built-in catalog: `trefoil` and `figure8`.
pub fn builtin_knot(name: &str) -> Result<FiberedKnot> {
    match name {
        "trefoil" => FiberedKnot::new("trefoil", 1, Matrix::ints(&[[1, 1], [-1, 0]])),
        "figure8" => FiberedKnot::new("figure8", 1, Matrix::ints(&[[2, 1], [1, 1]])),
        other => Err(Error::Lookup(other.to_string())),
    }
}

pub const BUILTIN_KNOTS: [&str; 2] = ["trefoil", "figure8"];

/// `det(I - t·monodromy)`; must have degree exactly `2g`.
pub fn alexander(knot: &FiberedKnot) -> Result<Polynomial> {
    let p = charpoly_rev(&knot.monodromy)?;
    let expected = 2 * knot.genus as usize;
    if p.degree() != Some(expected) {
        return Err(Error::Invariant(format!(
            "Alexander polynomial of {} has degree {:?}, expected {expected}",
            knot.name,
            p.degree()
        )));
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlexanderAudit {
    pub genus: u32,
    pub integer_coefficients: bool,
    /// Degree `2g` with leading and constant coefficients both 1.
    pub degree_and_normalization: bool,
    pub palindromic: bool,
    #[serde(serialize_with = "crate::json::ser_rational")]
    pub value_at_one: Rational,
    /// `A(1) = ±1`: the mapping torus is a homology `S²×T²`.
    pub unit_at_one: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl AlexanderAudit {
    pub fn passes(&self) -> bool {
        self.integer_coefficients && self.degree_and_normalization && self.palindromic && self.unit_at_one
    }
}

/// Checks the conditions an Alexander polynomial of a genus-`g` fibered
/// knot must satisfy. Never fails; each finding is reported.
pub fn alexander_audit(p: &Polynomial, genus: u32) -> AlexanderAudit {
    let two_g = 2 * genus as usize;
    let one = Rational::one();
    let degree_and_normalization =
        p.degree() == Some(two_g) && p.coeff(0) == one && p.coeff(two_g) == one;
    let palindromic = p.degree().is_some_and(|d| d <= two_g)
        && (0..=two_g).all(|i| p.coeff(i) == p.coeff(two_g - i));
    let value_at_one = p.eval(&one);
    AlexanderAudit {
        genus,
        integer_coefficients: p.is_integral(),
        degree_and_normalization,
        palindromic,
        unit_at_one: value_at_one.abs().is_one(),
        value_at_one,
        notes: Vec::new(),
    }
}

/// Audit of a knot's own Alexander polynomial, with catalog notes.
pub fn audit_knot(knot: &FiberedKnot) -> Result<(Polynomial, AlexanderAudit)> {
    let p = alexander(knot)?;
    let mut audit = alexander_audit(&p, knot.genus);
    if knot.name == "trefoil" && knot.monodromy == Matrix::ints(&[[1, 1], [-1, 0]]) {
        audit.notes.push(
            "the value t^2 - t - 1 sometimes printed for this monodromy disagrees with \
             det(I - tA) = 1 - t + t^2; the determinant is used"
                .into(),
        );
    }
    Ok((p, audit))
}

#[derive(Debug, Serialize, Deserialize)]
struct KnotJson {
    name: String,
    genus: u32,
    monodromy: serde_json::Value,
}

impl FiberedKnot {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "genus": self.genus,
            "monodromy": crate::json::matrix_rows_to_value(&self.monodromy),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let k: KnotJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let m = crate::json::matrix_from_rows_value(&k.monodromy)?;
        Self::new(k.name, k.genus, m)
    }
}

/// `A(1)` equals `det(I - monodromy)` by construction.
pub fn alexander_at_one(knot: &FiberedKnot) -> Result<Rational> {
    Ok(alexander(knot)?.eval(&int(1)))
}
