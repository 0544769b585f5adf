//! Manifold records carrying a single-variable Gromov series, and the
//! gluing calculus that builds them: mapping tori, elliptic surfaces, fiber
//! sums, knot surgery and products with a surface.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::exactalg::{
    charpoly_rev, cokernel_decomposition, det_exact, symplectic_check, Cokernel, Matrix, Rational,
};
use crate::json::{ratfun_from_json, ratfun_to_json};
use crate::knots::FiberedKnot;
use crate::series::RationalFunction;
use crate::{Error, Result};

/// How much of the Gromov series a record's `series` certifies.
///
/// Ordered so that combining two records keeps the weaker claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Completeness {
    /// Only the partial series in the distinguished class.
    Partial,
    /// Partial, and other classes are known to contribute beyond the
    /// Seiberg–Witten series.
    PartialWithSwNote,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstHomology {
    /// `cok(I - f_{*1})`; the full group adds two free summands.
    pub cokernel: Cokernel,
    pub b1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldInvariant {
    pub name: String,
    pub complex_dim: u32,
    /// Genus of the distinguished square-zero class.
    pub fiber_genus: u32,
    /// `κ = kappa_multiple · F`.
    pub kappa_multiple: i64,
    pub series: RationalFunction,
    pub completeness: Completeness,
    pub sw_equal: bool,
    pub first_homology: Option<FirstHomology>,
    pub notes: Vec<String>,
}

impl ManifoldInvariant {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "complex_dim": self.complex_dim,
            "fiber_genus": self.fiber_genus,
            "kappa_multiple": self.kappa_multiple,
            "series": ratfun_to_json(&self.series),
            "completeness": self.completeness,
            "sw_equal": self.sw_equal,
        });
        if let Some(h) = &self.first_homology {
            v["first_homology"] = serde_json::to_value(h).expect("plain struct");
        }
        if !self.notes.is_empty() {
            v["notes"] = json!(self.notes);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            name: String,
            complex_dim: u32,
            fiber_genus: u32,
            kappa_multiple: i64,
            series: Value,
            completeness: Completeness,
            #[serde(default)]
            sw_equal: bool,
            #[serde(default)]
            notes: Vec<String>,
        }
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Self {
            name: raw.name,
            complex_dim: raw.complex_dim,
            fiber_genus: raw.fiber_genus,
            kappa_multiple: raw.kappa_multiple,
            series: ratfun_from_json(&raw.series)?,
            completeness: raw.completeness,
            sw_equal: raw.sw_equal,
            first_homology: None,
            notes: raw.notes,
        })
    }
}

fn require_symplectic_surface_map(f: &Matrix, genus: u32) -> Result<()> {
    let dim = 2 * genus as usize;
    if genus == 0 || f.rows() != dim || f.cols() != dim {
        return Err(Error::Validation(format!(
            "genus {genus} needs a {dim}x{dim} matrix, got {}x{}",
            f.rows(),
            f.cols()
        )));
    }
    if !f.is_integral() {
        return Err(Error::Validation("monodromy must be integral".into()));
    }
    if !symplectic_check(f)? {
        return Err(Error::Validation("monodromy is not symplectic".into()));
    }
    Ok(())
}

fn is_unit(r: &Rational) -> bool {
    r.abs().is_one()
}

/// The symplectic mapping torus `X_f` with series `det(I - t f)/(1 - t)²`
/// in the section class `T`.
///
/// The series is the full Gromov series when `det(I - f) = ±1`; otherwise
/// only the partial series in `T` is certified.
pub fn mapping_torus(f: &Matrix, genus: u32) -> Result<ManifoldInvariant> {
    require_symplectic_surface_map(f, genus)?;
    let full = is_unit(&det_exact(&f.identity_minus()?)?);
    let series = &RationalFunction::from_polynomial(charpoly_rev(f)?)
        * &RationalFunction::one_minus_t_pow(-2);
    Ok(ManifoldInvariant {
        name: "X_f".into(),
        complex_dim: 2,
        fiber_genus: 1,
        kappa_multiple: 2 * genus as i64 - 2,
        series,
        completeness: if full { Completeness::Full } else { Completeness::Partial },
        sw_equal: false,
        first_homology: Some(mapping_torus_homology(f)?),
        notes: Vec::new(),
    })
}

/// First homology of `X_f`: `cok(I - f) ⊕ Z²`.
pub fn mapping_torus_homology(f: &Matrix) -> Result<FirstHomology> {
    let cokernel = cokernel_decomposition(&f.identity_minus()?)?;
    let b1 = cokernel.free_rank + 2;
    Ok(FirstHomology { cokernel, b1 })
}

/// `E(n)` with series `(1 - t)^(n-2)` in the fiber class; `E(0)` is the
/// formal `S²×T²` record.
pub fn elliptic_surface(n: i64) -> Result<ManifoldInvariant> {
    if n < 0 {
        return Err(Error::Domain(format!("E(n) needs n >= 0, got {n}")));
    }
    let mut notes = Vec::new();
    if n == 0 {
        notes.push("E(0) = S^2 x T^2 carries the formal series (1 - t)^-2".into());
    }
    Ok(ManifoldInvariant {
        name: format!("E({n})"),
        complex_dim: 2,
        fiber_genus: 1,
        kappa_multiple: n - 2,
        series: RationalFunction::one_minus_t_pow(n - 2),
        completeness: if n >= 2 { Completeness::Full } else { Completeness::Partial },
        sw_equal: false,
        first_homology: None,
        notes,
    })
}

fn require_four_dimensional(m: &ManifoldInvariant) -> Result<()> {
    if m.complex_dim != 2 {
        return Err(Error::Domain(format!(
            "{} has complex dimension {}; gluing is only defined for 4-manifolds",
            m.name, m.complex_dim
        )));
    }
    Ok(())
}

/// Symplectic fiber sum along the distinguished square-zero classes:
/// `Gr = (1 - t)² Gr_a Gr_b`.
pub fn fiber_sum(a: &ManifoldInvariant, b: &ManifoldInvariant) -> Result<ManifoldInvariant> {
    require_four_dimensional(a)?;
    require_four_dimensional(b)?;
    if a.fiber_genus != b.fiber_genus {
        return Err(Error::IncompatibleFibers { left: a.fiber_genus, right: b.fiber_genus });
    }
    let series = &(&RationalFunction::one_minus_t_pow(2) * &a.series) * &b.series;
    Ok(ManifoldInvariant {
        name: format!("{} # {}", a.name, b.name),
        complex_dim: 2,
        fiber_genus: a.fiber_genus,
        // κ = κ_a + κ_b + 2F for a sum along square-zero tori
        kappa_multiple: a.kappa_multiple + b.kappa_multiple + 2,
        series,
        completeness: a.completeness.min(b.completeness),
        sw_equal: false,
        first_homology: None,
        notes: Vec::new(),
    })
}

/// What to glue in: a bare monodromy or a named fibered knot.
#[derive(Debug, Clone)]
pub enum SurgeryInput {
    Monodromy(Matrix),
    Knot(FiberedKnot),
}

impl SurgeryInput {
    fn matrix(&self) -> &Matrix {
        match self {
            SurgeryInput::Monodromy(m) => m,
            SurgeryInput::Knot(k) => k.monodromy(),
        }
    }

    fn label(&self) -> &str {
        match self {
            SurgeryInput::Monodromy(_) => "f",
            SurgeryInput::Knot(k) => k.name(),
        }
    }
}

/// `Z(f)`: the series of `z` multiplied by `det(I - t f_{*1})`.
///
/// Requires `det(I - f) = ±1`. The result equals
/// `fiber_sum(z, mapping_torus(f))`.
pub fn knot_surgery(z: &ManifoldInvariant, input: &SurgeryInput) -> Result<ManifoldInvariant> {
    require_four_dimensional(z)?;
    let f = input.matrix();
    let dim = f.require_square()?;
    if dim % 2 != 0 {
        return Err(Error::Validation(format!("monodromy has odd dimension {dim}")));
    }
    let genus = (dim / 2) as u32;
    require_symplectic_surface_map(f, genus)?;
    let d = det_exact(&f.identity_minus()?)?;
    if !is_unit(&d) {
        return Err(Error::Hypothesis(format!("det(I - f) = {d}, must be ±1")));
    }
    let series = &z.series * &RationalFunction::from_polynomial(charpoly_rev(f)?);
    let name = match z.name.strip_prefix("E(").and_then(|s| s.strip_suffix(')')) {
        Some(n) if n.parse::<u32>().is_ok() => format!("E({n},{})", input.label()),
        _ => format!("{}({})", z.name, input.label()),
    };
    let mut notes = Vec::new();
    if let SurgeryInput::Knot(_) = input {
        notes.push(format!("homotopy equivalent to {}", z.name));
    }
    let full = z.completeness == Completeness::Full;
    if !full {
        notes.push("partial series; other classes contribute to the full Gromov series".into());
    }
    Ok(ManifoldInvariant {
        name,
        complex_dim: 2,
        fiber_genus: z.fiber_genus,
        kappa_multiple: z.kappa_multiple + 2 * genus as i64,
        series,
        completeness: if full { Completeness::Full } else { Completeness::PartialWithSwNote },
        sw_equal: full,
        first_homology: None,
        notes,
    })
}

/// `m × Y` for a closed surface `Y` of Euler characteristic `euler`: the
/// genus-1 partial series becomes `series^euler`.
pub fn sphere_product(m: &ManifoldInvariant, euler: i64) -> Result<ManifoldInvariant> {
    let series = m.series.pow(euler)?;
    let factor = if euler == 2 { "S^2".to_string() } else { format!("Y[chi={euler}]") };
    Ok(ManifoldInvariant {
        name: format!("{} x {factor}", m.name),
        complex_dim: m.complex_dim + 1,
        fiber_genus: m.fiber_genus,
        kappa_multiple: m.kappa_multiple,
        series,
        completeness: Completeness::Partial,
        sw_equal: false,
        first_homology: None,
        notes: vec!["genus-1 partial series".into()],
    })
}

/// `κ·A = 2(g - 1) - A·A`.
pub fn adjunction_check(kappa_dot_a: i64, genus: i64, self_intersection: i64) -> bool {
    kappa_dot_a == 2 * (genus - 1) - self_intersection
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Difference {
    pub power: usize,
    #[serde(serialize_with = "crate::json::ser_rational")]
    pub left: Rational,
    #[serde(serialize_with = "crate::json::ser_rational")]
    pub right: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishReport {
    pub left: String,
    pub right: String,
    pub order: usize,
    pub equal: bool,
    pub first_difference: Option<Difference>,
}

/// Compares two series through `t^order`.
pub fn distinguish(a: &ManifoldInvariant, b: &ManifoldInvariant, order: usize) -> DistinguishReport {
    let (sa, sb) = (a.series.expand(order), b.series.expand(order));
    let first_difference = sa.first_difference(&sb).map(|power| Difference {
        power,
        left: sa.coeff(power).clone(),
        right: sb.coeff(power).clone(),
    });
    DistinguishReport {
        left: a.name.clone(),
        right: b.name.clone(),
        order,
        equal: first_difference.is_none(),
        first_difference,
    }
}
