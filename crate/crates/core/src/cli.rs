//! Command-line front end. Every subcommand reads JSON inputs, calls into
//! the library and writes JSON (default) or a human-readable rendering.
//!
//! Exit status: 0 on success, 2 for usage and validation errors, 1 for
//! internal errors. Errors go to stderr as one line,
//! `error: <kind>: <message>`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::exactalg::Matrix;
use crate::json::{
    bigint_to_value, graded_map_from_json, matrix_from_json, orbit_data_to_json,
    polynomial_from_json, polynomial_to_json, ratfun_from_json, ratfun_to_json, rational_to_value,
    series_from_json, series_to_json,
};
use crate::knots::{audit_knot, builtin_knot, FiberedKnot};
use crate::manifolds::{
    elliptic_surface, fiber_sum, knot_surgery, mapping_torus, mapping_torus_homology,
    sphere_product, ManifoldInvariant, SurgeryInput,
};
use crate::series::{TruncatedSeries, DEFAULT_ORDER};
use crate::symclass::{
    bifurcation_relations, sign_power_exact, sign_power_predicted, toral_orbit_data, type_profile,
    zeta_from_orbits, DEFAULT_WALL_BOUND,
};
use crate::zeta::{lefschetz, zeta_det, zeta_trace};
use crate::{Error, Result};

/// Environment variable holding the default series order.
pub const ORDER_ENV: &str = "SYMP_INVARIANTS_ORDER";

#[derive(Debug, Parser)]
#[command(name = "symp-invariants", version, about = "Exact zeta functions, Alexander polynomials and Gromov series")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Series order N (coefficients through t^N).
    #[arg(long, global = true, env = ORDER_ENV, default_value_t = DEFAULT_ORDER)]
    order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ZetaMethod {
    Det,
    Trace,
    Orbits,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct KnotSource {
    /// Built-in knot name (trefoil, figure8) or a knot JSON file.
    #[arg(long)]
    knot: Option<String>,
    /// Monodromy matrix JSON file.
    #[arg(long)]
    monodromy: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lefschetz zeta function of a graded map.
    Zeta {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum, default_value_t = ZetaMethod::Det)]
        method: ZetaMethod,
    },
    /// Alexander polynomial det(I - t f) of a fibered knot.
    Alexander {
        #[command(flatten)]
        source: KnotSource,
        #[arg(long)]
        audit: bool,
    },
    /// Lefschetz number L(f^n).
    Lefschetz {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        power: u64,
    },
    /// First homology of the mapping torus X_f.
    HomologyXf {
        #[arg(long)]
        monodromy: PathBuf,
    },
    /// Type classification of a symplectic matrix.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
        /// Check walls W_m for m up to this bound.
        #[arg(long, default_value_t = DEFAULT_WALL_BOUND)]
        walls: u64,
        /// Tabulate predicted and exact power signs for m up to this bound.
        #[arg(long, default_value_t = 0)]
        powers: u64,
        /// The matrix is written in block coordinates (q1..qn, p1..pn).
        #[arg(long)]
        block_j: bool,
    },
    /// Periodic orbits of a hyperbolic toral map.
    Orbits {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        max_period: u64,
    },
    /// Gromov series of manifolds.
    Gromov {
        #[command(subcommand)]
        command: GromovCommand,
    },
    /// Compare two series-bearing JSON documents through the order.
    Compare { a: PathBuf, b: PathBuf },
    /// Verify the bifurcation relations between orbit generating functions.
    Relations,
}

#[derive(Debug, Subcommand)]
enum GromovCommand {
    /// Mapping torus X_f.
    Xf {
        #[arg(long)]
        monodromy: PathBuf,
        /// Genus of the fiber surface; defaults to half the matrix size.
        #[arg(long)]
        genus: Option<u32>,
    },
    /// Elliptic surface E(n).
    En {
        #[arg(long)]
        n: i64,
    },
    /// Knot-surgered elliptic surface E(n, K).
    Enk {
        #[arg(long)]
        n: i64,
        #[command(flatten)]
        source: KnotSource,
    },
    /// Fiber sum of two manifold records.
    FiberSum { a: PathBuf, b: PathBuf },
    /// Product with a closed surface of the given Euler characteristic.
    Product {
        #[arg(long, allow_hyphen_values = true)]
        euler: i64,
        m: PathBuf,
    },
}

/// Output of one command: the JSON document and its pretty rendering.
struct Output {
    json: Value,
    pretty: String,
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(err, "error: usage: {line}");
            return 2;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string(&o.json).expect("serializable"),
                Format::Pretty => o.pretty,
            };
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}: {}", e.kind(), e.to_string().replace('\n', " "));
            if matches!(e, Error::Internal(_)) { 1 } else { 2 }
        }
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<Matrix> {
    matrix_from_json(&read_json(path)?)
}

fn read_knot(source: &KnotSource) -> Result<SurgeryInput> {
    if let Some(name) = &source.knot {
        return match builtin_knot(name) {
            Ok(k) => Ok(SurgeryInput::Knot(k)),
            Err(lookup) => {
                let path = Path::new(name);
                if path.is_file() {
                    Ok(SurgeryInput::Knot(FiberedKnot::from_json(&read_json(path)?)?))
                } else {
                    Err(lookup)
                }
            }
        };
    }
    let path = source.monodromy.as_ref().expect("clap enforces one source");
    Ok(SurgeryInput::Monodromy(read_matrix(path)?))
}

fn knot_from_input(input: SurgeryInput) -> Result<FiberedKnot> {
    match input {
        SurgeryInput::Knot(k) => Ok(k),
        SurgeryInput::Monodromy(m) => {
            let genus = (m.rows() / 2) as u32;
            FiberedKnot::new("monodromy", genus, m)
        }
    }
}

fn manifold_output(m: &ManifoldInvariant) -> Output {
    Output {
        json: m.to_json(),
        pretty: format!(
            "{}: Gr = {}  [{}{}]",
            m.name,
            m.series,
            serde_json::to_value(m.completeness).unwrap().as_str().unwrap(),
            if m.sw_equal { ", equals SW" } else { "" }
        ),
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let order = cli.order;
    match &cli.command {
        Command::Zeta { map, method } => {
            let g = graded_map_from_json(&read_json(map)?)?;
            match method {
                ZetaMethod::Det => {
                    let r = zeta_det(&g)?;
                    let s = r.expand(order);
                    Ok(Output {
                        json: json!({ "method": "det", "rational_function": ratfun_to_json(&r), "series": series_to_json(&s) }),
                        pretty: format!("zeta(t) = {r}\n        = {s}"),
                    })
                }
                ZetaMethod::Trace => {
                    let s = zeta_trace(&g, order)?;
                    Ok(Output {
                        json: json!({ "method": "trace", "series": series_to_json(&s) }),
                        pretty: format!("zeta(t) = {s}"),
                    })
                }
                ZetaMethod::Orbits => {
                    let a = g.surface_monodromy().ok_or_else(|| {
                        Error::Validation("orbit method needs a surface map".into())
                    })?;
                    let orbits = toral_orbit_data(a, order as u64)?;
                    let s = zeta_from_orbits(&orbits, order);
                    Ok(Output {
                        json: json!({ "method": "orbits", "series": series_to_json(&s) }),
                        pretty: format!("zeta(t) = {s}"),
                    })
                }
            }
        }
        Command::Alexander { source, audit } => {
            let knot = knot_from_input(read_knot(source)?)?;
            let (p, report) = audit_knot(&knot)?;
            let mut v = polynomial_to_json(&p);
            let mut pretty = format!("A(t) = {p}");
            if *audit {
                v["audit"] = serde_json::to_value(&report).expect("plain struct");
                pretty.push_str(&format!(
                    "\ninteger coefficients: {}\ndegree 2g, monic: {}\npalindromic: {}\nA(1) = {} ({})",
                    report.integer_coefficients,
                    report.degree_and_normalization,
                    report.palindromic,
                    report.value_at_one,
                    if report.unit_at_one { "unit" } else { "not a unit" }
                ));
                for n in &report.notes {
                    pretty.push_str(&format!("\nnote: {n}"));
                }
            }
            Ok(Output { json: v, pretty })
        }
        Command::Lefschetz { map, power } => {
            let g = graded_map_from_json(&read_json(map)?)?;
            let l = lefschetz(&g, *power)?;
            Ok(Output {
                json: json!({ "power": power, "lefschetz": bigint_to_value(&l) }),
                pretty: format!("L(f^{power}) = {l}"),
            })
        }
        Command::HomologyXf { monodromy } => {
            let h = mapping_torus_homology(&read_matrix(monodromy)?)?;
            let mut parts = vec![format!("Z^{}", h.b1)];
            parts.extend(h.cokernel.torsion.iter().map(|d| format!("Z/{d}")));
            Ok(Output {
                json: json!({
                    "free_rank": h.cokernel.free_rank,
                    "torsion": h.cokernel.torsion.iter().map(bigint_to_value).collect::<Vec<_>>(),
                    "b1": h.b1,
                }),
                pretty: format!("H_1(X_f) = {}\nb1 = {}", parts.join(" + "), h.b1),
            })
        }
        Command::Classify { matrix, walls, powers, block_j } => {
            let mut a = read_matrix(matrix)?;
            if *block_j {
                a = a.block_to_interleaved()?;
            }
            let report = type_profile(&a, *walls)?;
            let mut v = serde_json::to_value(&report).expect("plain struct");
            let mut pretty = format!(
                "type {:?}: P = {}, N = {} (real eigenvalues: {} positive, {} negative)\nwalls W_m for m <= {}: {:?}",
                report.profile.tag,
                report.profile.positive_pairs,
                report.profile.negative_pairs,
                report.profile.positive_real_eigenvalues,
                report.profile.negative_real_eigenvalues,
                report.wall_bound,
                report.walls
            );
            if *powers > 0 {
                let mut rows = Vec::new();
                for m in 1..=*powers {
                    let predicted = sign_power_predicted(&report.profile, m);
                    let exact = match sign_power_exact(&a, m) {
                        Ok(s) => Some(s),
                        Err(Error::Wall { .. }) => None,
                        Err(e) => return Err(e),
                    };
                    pretty.push_str(&format!(
                        "\nm = {m}: predicted {predicted:+}, exact {}",
                        exact.map_or("wall".to_string(), |s| format!("{s:+}"))
                    ));
                    rows.push(json!({ "m": m, "predicted": predicted, "exact": exact }));
                }
                v["signs"] = Value::Array(rows);
            }
            Ok(Output { json: v, pretty })
        }
        Command::Orbits { matrix, max_period } => {
            let o = toral_orbit_data(&read_matrix(matrix)?, *max_period)?;
            let pretty = o
                .iter()
                .map(|(k, c)| format!("period {k}: e = {}, h = {}, h' = {}", c.e, c.h, c.h_prime))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output { json: orbit_data_to_json(&o), pretty })
        }
        Command::Gromov { command } => gromov(command),
        Command::Compare { a, b } => {
            let sa = comparable_series(&read_json(a)?, order)?;
            let sb = comparable_series(&read_json(b)?, order)?;
            let common = sa.order().min(sb.order());
            match sa.first_difference(&sb) {
                None => Ok(Output {
                    json: json!({ "order": common, "equal": true, "first_difference": null }),
                    pretty: format!("equal through t^{common}"),
                }),
                Some(k) => Ok(Output {
                    json: json!({
                        "order": common,
                        "equal": false,
                        "first_difference": {
                            "power": k,
                            "left": rational_to_value(sa.coeff(k)),
                            "right": rational_to_value(sb.coeff(k)),
                        },
                    }),
                    pretty: format!("differ at t^{k}: {} vs {}", sa.coeff(k), sb.coeff(k)),
                }),
            }
        }
        Command::Relations => {
            let checks = bifurcation_relations(5, order);
            let all = checks.iter().all(|c| c.holds);
            let pretty = checks
                .iter()
                .map(|c| format!("{} (k = {}, order {}): {}", c.relation, c.k, c.order, if c.holds { "holds" } else { "FAILS" }))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output { json: json!({ "checks": checks, "all_hold": all }), pretty })
        }
    }
}

fn gromov(command: &GromovCommand) -> Result<Output> {
    let record = match command {
        GromovCommand::Xf { monodromy, genus } => {
            let f = read_matrix(monodromy)?;
            let g = genus.unwrap_or((f.rows() / 2) as u32);
            mapping_torus(&f, g)?
        }
        GromovCommand::En { n } => elliptic_surface(*n)?,
        GromovCommand::Enk { n, source } => knot_surgery(&elliptic_surface(*n)?, &read_knot(source)?)?,
        GromovCommand::FiberSum { a, b } => fiber_sum(
            &ManifoldInvariant::from_json(&read_json(a)?)?,
            &ManifoldInvariant::from_json(&read_json(b)?)?,
        )?,
        GromovCommand::Product { euler, m } => {
            sphere_product(&ManifoldInvariant::from_json(&read_json(m)?)?, *euler)?
        }
    };
    Ok(manifold_output(&record))
}

/// Accepts a manifold record, a `zeta` output, a rational function, a
/// series or a polynomial, and expands it to `order`.
fn comparable_series(v: &Value, order: usize) -> Result<TruncatedSeries> {
    if let Some(s) = v.get("series") {
        if s.get("numerator").is_some() {
            return Ok(ratfun_from_json(s)?.expand(order));
        }
        return comparable_series(s, order);
    }
    if v.get("numerator").is_some() {
        return Ok(ratfun_from_json(v)?.expand(order));
    }
    if v.get("order").is_some() {
        let s = series_from_json(v)?;
        return Ok(if s.order() > order { s.truncate(order) } else { s });
    }
    if v.get("coefficients").is_some() {
        return Ok(TruncatedSeries::from_polynomial(&polynomial_from_json(v)?, order));
    }
    Err(Error::Parse("no series, rational function or polynomial found".into()))
}
