//! Acceptance checks. Run with `cargo test --test acceptance`; prints one
//! line per criterion and exits non-zero if any fails. All comparisons are
//! exact equalities of rationals.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

use symp_invariants::cli::run;
use symp_invariants::exactalg::{
    charpoly_rev, det_exact, int, power_trace, ratio, smith_normal_form, Matrix, Polynomial, Rational,
};
use symp_invariants::knots::{audit_knot, builtin_knot};
use symp_invariants::manifolds::{
    distinguish, elliptic_surface, fiber_sum, knot_surgery, mapping_torus, sphere_product,
    SurgeryInput,
};
use symp_invariants::series::{weight_f, RationalFunction, TruncatedSeries};
use symp_invariants::symclass::{
    bifurcation_relations, sign_power_exact, sign_power_predicted, toral_orbit_data, type_profile,
    zeta_from_orbits,
};
use symp_invariants::zeta::{gromov_section, zeta_det, zeta_trace, GradedMap};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond { Ok(()) } else { Err(msg()) }
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("symp-invariants").chain(args.iter().copied()), &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    serde_json::from_slice(&out).map_err(|e| e.to_string())
}

fn lib<T>(r: symp_invariants::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn figure8() -> Matrix {
    Matrix::ints(&[[2, 1], [1, 1]])
}

fn c1_figure8_alexander() -> Check {
    let v = cli_json(&["alexander", "--knot", "figure8"])?;
    ensure(v == json!({"coefficients": [1, -3, 1]}), || format!("got {v}"))
}

fn c2_trefoil() -> Check {
    // The printed value t^2 - t - 1 disagrees with det(I - tA) for this
    // monodromy; the determinant is taken as authoritative.
    let a = Matrix::ints(&[[1, 1], [-1, 0]]);
    let p = lib(charpoly_rev(&a))?;
    ensure(p == poly(&[1, -1, 1]), || format!("charpoly_rev = {p}"))?;
    let (q, audit) = lib(audit_knot(&lib(builtin_knot("trefoil"))?))?;
    ensure(q == p, || format!("alexander = {q}"))?;
    ensure(audit.value_at_one == int(1) && audit.unit_at_one && audit.passes(), || format!("{audit:?}"))
}

fn c3_zeta_three_ways() -> Check {
    let a = figure8();
    let g = lib(GradedMap::surface(&a))?;
    let n = 12;
    let r = lib(zeta_det(&g))?;
    let expected_r = lib(RationalFunction::new(poly(&[1, -3, 1]), poly(&[1, -2, 1])))?;
    ensure(r == expected_r, || format!("zeta_det = {r}"))?;
    let mut c = vec![int(1)];
    c.extend((1..=n as i64).map(|j| int(-j)));
    let expected = TruncatedSeries::new(c, n);
    let trace = lib(zeta_trace(&g, n))?;
    let orbits = zeta_from_orbits(&lib(toral_orbit_data(&a, n as u64))?, n);
    ensure(r.expand(n) == expected, || format!("det route {}", r.expand(n)))?;
    ensure(trace == expected, || format!("trace route {trace}"))?;
    ensure(orbits == expected, || format!("orbit route {orbits}"))
}

fn c4_gromov_equals_zeta() -> Check {
    let mut rng = common::rng(2024);
    for i in 0..10 {
        let genus = 1 + i % 2;
        let a = common::random_symplectic(&mut rng, genus, 8);
        let g = lib(GradedMap::surface(&a))?;
        let gr = lib(gromov_section(&g, 10))?;
        let z = lib(zeta_trace(&g, 10))?;
        ensure(gr == z, || format!("matrix {a:?}: {gr} vs {z}"))?;
    }
    Ok(())
}

fn c5_euler_product() -> Check {
    let n = 20;
    let f = weight_f(n);
    let mut prod = TruncatedSeries::one(n);
    for k in 1..=n {
        prod = &prod * &f.substitute_power(k);
    }
    let exp_t = TruncatedSeries::new((0..=n).map(common::factorial_reciprocal).collect(), n);
    ensure(prod == exp_t, || format!("product = {prod}"))
}

fn c6_elliptic_induction() -> Check {
    let e1 = lib(elliptic_surface(1))?;
    let k3 = lib(fiber_sum(&e1, &e1))?;
    ensure(k3.series.is_one(), || format!("E(1)#E(1) = {}", k3.series))?;
    for n in 1..=6 {
        let s = lib(fiber_sum(&lib(elliptic_surface(n))?, &e1))?;
        let expected = RationalFunction::one_minus_t_pow(n - 1);
        ensure(s.series == expected, || format!("n = {n}: {}", s.series))?;
        ensure(s.series == lib(elliptic_surface(n + 1))?.series, || format!("n = {n}: E(n+1) mismatch"))?;
    }
    Ok(())
}

fn c7_thurston_b1() -> Check {
    let t = cli_json(&["homology-xf", "--monodromy", &fixture("thurston.json")])?;
    ensure(t["b1"] == json!(3), || format!("thurston {t}"))?;
    let f = cli_json(&["homology-xf", "--monodromy", &fixture("figure8.json")])?;
    ensure(f["b1"] == json!(2), || format!("figure-8 {f}"))
}

fn c8_power_signs() -> Check {
    let h = figure8();
    let hp = Matrix::ints(&[[-2, -1], [-1, -1]]);
    let e = Matrix::from_rows(vec![vec![ratio(3, 5), ratio(-4, 5)], vec![ratio(4, 5), ratio(3, 5)]])
        .map_err(|e| e.to_string())?;
    let mixed = lib(Matrix::block_diag(&[h.clone(), hp.clone()]))?;
    let cases: [(&str, Matrix, fn(u64) -> i8); 4] = [
        ("H", h, |_| -1),
        ("Hprime", hp, |m| if m % 2 == 1 { 1 } else { -1 }),
        ("E", e, |_| 1),
        ("Mixed", mixed, |m| if m % 2 == 0 { 1 } else { -1 }),
    ];
    for (tag, a, pattern) in cases {
        let report = lib(type_profile(&a, 20))?;
        let got_tag = serde_json::to_value(report.profile.tag).map_err(|e| e.to_string())?;
        ensure(got_tag == json!(tag), || format!("tag {got_tag} for {tag}"))?;
        for m in 1..=20 {
            let predicted = sign_power_predicted(&report.profile, m);
            let exact = lib(sign_power_exact(&a, m))?;
            ensure(predicted == exact && exact == pattern(m), || {
                format!("{tag} m = {m}: predicted {predicted}, exact {exact}, pattern {}", pattern(m))
            })?;
        }
    }
    Ok(())
}

fn c9_knot_surgery() -> Check {
    let k = SurgeryInput::Knot(lib(builtin_knot("figure8"))?);
    let alex = poly(&[1, -3, 1]);
    let e2k = lib(knot_surgery(&lib(elliptic_surface(2))?, &k))?;
    ensure(e2k.series == RationalFunction::from_polynomial(alex.clone()), || format!("E(2,K) = {}", e2k.series))?;
    let e3k = lib(knot_surgery(&lib(elliptic_surface(3))?, &k))?;
    let expected = RationalFunction::from_polynomial(&poly(&[1, -1]) * &alex);
    ensure(e3k.series == expected, || format!("E(3,K) = {}", e3k.series))?;
    let sp = lib(sphere_product(&e2k, 2))?;
    let sq = RationalFunction::from_polynomial(&alex * &alex);
    ensure(sp.series == sq, || format!("product = {}", sp.series))
}

fn c10_distinguish() -> Check {
    let e2 = lib(elliptic_surface(2))?;
    let t = lib(knot_surgery(&e2, &SurgeryInput::Knot(lib(builtin_knot("trefoil"))?)))?;
    let f = lib(knot_surgery(&e2, &SurgeryInput::Knot(lib(builtin_knot("figure8"))?)))?;
    let report = distinguish(&t, &f, 16);
    let d = report.first_difference.as_ref().ok_or("no difference found")?;
    ensure(!report.equal && d.power == 1 && d.left == int(-1) && d.right == int(-3), || {
        format!("{report:?}")
    })
}

fn c11_structural() -> Check {
    let mut rng = common::rng(99);
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let m = common::random_int_matrix(&mut rng, r, c, 9);
        let s = lib(smith_normal_form(&m))?;
        let mut d = vec![vec![Rational::zero(); c]; r];
        for (i, x) in s.diagonal.iter().enumerate() {
            d[i][i] = Rational::from_integer(x.clone());
        }
        let d = Matrix::from_rows(d).map_err(|e| e.to_string())?;
        ensure(&(&s.u * &m) * &s.v == d, || format!("U M V != D for {m:?}"))?;
        ensure(lib(det_exact(&s.u))?.abs().is_one() && lib(det_exact(&s.v))?.abs().is_one(), || {
            format!("non-unimodular transform for {m:?}")
        })?;
        let nz: Vec<&BigInt> = s.diagonal.iter().filter(|x| !x.is_zero()).collect();
        ensure(nz.len() == s.rank() && s.diagonal[..s.rank()].iter().all(|x| x.is_positive()), || {
            format!("diagonal {:?}", s.diagonal)
        })?;
        ensure(nz.windows(2).all(|w| (w[1] % w[0]).is_zero()), || format!("divisibility {:?}", s.diagonal))?;
    }

    for i in 0..20 {
        let n = 1 + i % 5;
        let a = common::random_int_matrix(&mut rng, n, n, 5);
        let order = 12;
        let mut c = vec![int(0)];
        for k in 1..=order {
            c.push(-lib(power_trace(&a, k as u64))? / int(k as i64));
        }
        let lhs = lib(TruncatedSeries::new(c, order).exp())?;
        let rhs = TruncatedSeries::from_polynomial(&lib(charpoly_rev(&a))?, order);
        ensure(lhs == rhs, || format!("Newton identity fails for {a:?}"))?;
    }

    let failing: Vec<_> = bifurcation_relations(5, 20).into_iter().filter(|c| !c.holds).collect();
    ensure(failing.is_empty(), || format!("relations fail: {failing:?}"))?;

    for _ in 0..50 {
        let order = rng.gen_range(1..=12);
        let mut c = vec![int(0)];
        c.extend((0..order).map(|_| ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4))));
        let a = TruncatedSeries::new(c, order);
        ensure(lib(lib(a.exp())?.log())? == a, || format!("log(exp(a)) != a for {a}"))?;
        let b = &TruncatedSeries::one(order) + &a;
        ensure(lib(lib(b.log())?.exp())? == b, || format!("exp(log(b)) != b for {b}"))?;
    }

    for i in 0..10 {
        let genus = 1 + i % 2;
        let f = common::random_unit_symplectic(&mut rng, genus, 6);
        let xf = lib(mapping_torus(&f, genus as u32))?;
        for n in 0..=4 {
            let z = lib(elliptic_surface(n))?;
            let direct = lib(knot_surgery(&z, &SurgeryInput::Monodromy(f.clone())))?;
            let glued = lib(fiber_sum(&z, &xf))?;
            ensure(direct.series == glued.series, || format!("route mismatch for {f:?}, n = {n}"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("1  figure-8 Alexander polynomial 1 - 3t + t^2", c1_figure8_alexander),
        ("2  trefoil det(I - tA) = 1 - t + t^2, A(1) = 1", c2_trefoil),
        ("3  zeta of [[2,1],[1,1]] by det, trace and orbits", c3_zeta_three_ways),
        ("4  Gromov section = zeta on random Sp(2,Z), Sp(4,Z)", c4_gromov_equals_zeta),
        ("5  product of F(t^k), k <= 20, equals e^t", c5_euler_product),
        ("6  E(n) # E(1) = (1 - t)^(n-1), n <= 6", c6_elliptic_induction),
        ("7  b1 of mapping tori (3 and 2)", c7_thurston_b1),
        ("8  power signs for H, H', E and Mixed, m <= 20", c8_power_signs),
        ("9  E(2,K), E(3,K) and S^2 product for figure-8", c9_knot_surgery),
        ("10 E(2,trefoil) vs E(2,figure8) differ at t^1", c10_distinguish),
        ("11 structural suites", c11_structural),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {name} ({:.2?})", start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL {name}: {e}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
