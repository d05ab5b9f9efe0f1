//! Acceptance gate. Runs every criterion, prints one line each, and exits
//! non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cherednik_core::calculus::fg::{f_of, g_of, recursion_step};
use cherednik_core::linalg::{echelonize, rank, same_span};
use cherednik_core::ncpoly::word_biweight;
use cherednik_core::rep::{alpha_m_in, Triple};
use cherednik_core::*;
use common::*;
use rand::Rng;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn basis_36() -> Vec<P> {
    let mut out = Vec::new();
    for n in 0..=5 {
        for m in 0..=5 {
            out.push(P::monomial(q(1), n, m));
        }
    }
    out
}

fn fg_oracle() -> Outcome {
    let h = Gl2Cherednik::<Rational>::undeformed().map_err(err)?;
    let cases = basis_36();
    for alpha in &cases {
        let rec = fg(alpha);
        let ext = fg_extract(alpha, &h).map_err(err)?;
        ensure!(
            rec == ext,
            "alpha = {alpha}: recursion {rec:?} vs extraction {ext:?}"
        );
    }
    Ok(format!("{} cases", cases.len()))
}

fn recursion() -> Outcome {
    let h = Gl2Cherednik::<Rational>::undeformed().map_err(err)?;
    let delta = P::delta();
    for beta in basis_36() {
        // recursion checked against the commutator oracle
        let (fb, gb) = fg_extract(&beta, &h).map_err(err)?;
        let step = recursion_step(&beta, &fb, &gb);
        let direct = fg_extract(&(&delta * &beta), &h).map_err(err)?;
        ensure!(step == direct, "recursion fails at beta = {beta}");
        let (f, g) = fg(&beta);
        let lhs = g_of(&f);
        let rhs = f_of(&g) + f_of(&f).scale(&q(2));
        ensure!(
            lhs == rhs,
            "G(F(a)) = F(G(a)) + 2F(F(a)) fails at a = {beta}"
        );
    }
    let d2 = P::monomial(q(1), 2, 0);
    let (f, g) = fg(&d2);
    let lhs = g_of(&f);
    let rhs = f_of(&g) + f_of(&f).scale(&q(2));
    ensure!(
        lhs == P::constant(q(-6)) && rhs == P::constant(q(-6)),
        "at Delta^2: {lhs} and {rhs}"
    );
    Ok("36 cases, Delta^2 gives -6 = -6".into())
}

fn jacobi_pbw() -> Outcome {
    let grid = parameter_grid();
    let mut admissible = 0;
    for &(a, qq, b, k) in &grid {
        let c = family_member(a, qq, b, k);
        let residual = jacobi_residual(&c);
        ensure!(
            residual.is_zero() == (qq == 3 * a),
            "c = {c}: residual {residual}"
        );
        let alg = Gl2Cherednik::build(c.clone()).map_err(err)?;
        let report = pbw_check(alg.table()).map_err(err)?;
        ensure!(
            report.passed() == residual.is_zero(),
            "c = {c}: pbw {} vs residual {residual}",
            report.passed()
        );
        admissible += usize::from(residual.is_zero());
    }
    let six = jacobi_residual(&P::delta());
    ensure!(six == P::constant(q(6)), "residual at Delta is {six}");
    Ok(format!(
        "{} parameters, {admissible} admissible; Delta gives 6",
        grid.len()
    ))
}

fn b_and_d() -> Outcome {
    let h = Gl2Cherednik::<Rational>::undeformed().map_err(err)?;
    let dist = h.distinguished_elements().map_err(err)?;
    for c in test_family() {
        let alg = Gl2Cherednik::build(c.clone()).map_err(err)?;
        let b = central_b(&alg).map_err(err)?;
        ensure!(b.is_central(), "B not central for c = {c}");
        ensure!(
            b.element.v_component(2) == dist.b,
            "leading part of B for c = {c}"
        );
        let lift = central_d_lift(&alg, 3).map_err(err)?;
        ensure!(lift.check.is_central(), "D not central for c = {c}");
        ensure!(
            lift.d().v_component(2) == dist.d.v_component(2),
            "leading part of D for c = {c}"
        );
    }
    let o = GenOrder::Default;
    let scan = center_scan(&h, ScanBox::total(3), 3).map_err(err)?;
    let expect = echelonize(o, &[NcPoly::one(o), dist.b, dist.d]);
    ensure!(scan.basis == expect, "scan <= 3 has basis {:?}", scan.basis);
    Ok("B, D central for 3 parameters; scan <= 3 is span{1, b, d}".into())
}

fn gr_compatibility() -> Outcome {
    let h = Gl2Cherednik::<Rational>::undeformed().map_err(err)?;
    let o = GenOrder::Default;
    let scan = center_scan(&h, ScanBox::total(4), 3).map_err(err)?;
    for c in test_family() {
        let alg = Gl2Cherednik::build(c.clone()).map_err(err)?;
        let b = central_b(&alg).map_err(err)?.element;
        let d = central_d_lift(&alg, 3).map_err(err)?.d().clone();
        let b2 = alg.mul(&b, &b).map_err(err)?;
        let leading: Vec<NcPoly<Rational>> = [NcPoly::one(o), b, d, b2]
            .iter()
            .map(NcPoly::leading_part)
            .collect();
        ensure!(
            rank(o, &leading) == 4,
            "leading terms dependent for c = {c}"
        );
        ensure!(
            same_span(o, &leading, &scan.basis),
            "leading terms miss the scanned center for c = {c}"
        );
    }
    Ok(format!(
        "center of H in degree <= 4 has dimension {}",
        scan.basis.len()
    ))
}

fn anti_involution() -> Outcome {
    let mut checked = 0;
    for (a, qq, b, k) in parameter_grid() {
        if qq != 3 * a {
            continue;
        }
        let alg = Gl2Cherednik::build(family_member(a, qq, b, k)).map_err(err)?;
        let defects = alg.eta_relation_defects().map_err(err)?;
        ensure!(
            defects.is_empty(),
            "eta breaks [{}, {}] for c = {}",
            defects[0].0,
            defects[0].1,
            alg.c()
        );
        checked += 1;
    }
    let mut r = rng(6);
    let fam = test_family();
    for i in 0..100 {
        let alg = Gl2Cherednik::build(fam[i % fam.len()].clone()).map_err(err)?;
        let p = alg
            .normalize(&random_poly(&mut r, GenOrder::Default, 5, 4))
            .map_err(err)?;
        let back = alg
            .apply_eta(&alg.apply_eta(&p).map_err(err)?)
            .map_err(err)?;
        ensure!(back == p, "eta^2 moves {p}");
    }
    for c in test_family() {
        let alg = Gl2Cherednik::build(c.clone()).map_err(err)?;
        let t1 = alg.distinguished_elements().map_err(err)?.t1;
        for g in [Gen::E, Gen::F, Gen::H, Gen::X, Gen::Y] {
            let br = alg.commutator(&t1, &alg.gen(g)).map_err(err)?;
            ensure!(br.is_zero(), "[t1, {g}] = {br} for c = {c}");
        }
    }
    Ok(format!(
        "eta preserves {checked} tables; eta^2 = id on 100 elements; t1 commutes"
    ))
}

/// `[y^m, x1^m]` by raw words, normalized in `order`, reduced modulo the
/// left ideal of `x`, `y` in the triangular basis.
fn alpha_oracle(
    alg: &Gl2Cherednik<Rational>,
    m: usize,
    order: GenOrder,
) -> std::result::Result<NcPoly<Rational>, String> {
    let mut w1 = vec![Gen::Y; m];
    w1.extend(vec![Gen::X1; m]);
    let mut w2 = vec![Gen::X1; m];
    w2.extend(vec![Gen::Y; m]);
    let raw = NcPoly::word(order, &w1) - NcPoly::word(order, &w2);
    let normal = alg.normalize(&raw).map_err(err)?;
    let tri = alg.convert(&normal, GenOrder::Triangular).map_err(err)?;
    let rest = tri.filter(|w| !matches!(w.last(), Some(Gen::X) | Some(Gen::Y)));
    alg.convert(&rest, GenOrder::Default).map_err(err)
}

fn representations() -> Outcome {
    let mut r = rng(7);
    let fam = test_family();
    for i in 0..200 {
        let alg = Gl2Cherednik::build(fam[i % fam.len()].clone()).map_err(err)?;
        let lambda = Rational::new(r.gen_range(-4..=4), r.gen_range(1..=2));
        let mu = q(r.gen_range(-2..=2));
        let mut module = VermaModule::new(&alg, lambda.clone(), mu.clone());
        let mut w = VermaElement::zero(lambda, mu);
        for _ in 0..r.gen_range(1..=3) {
            let t: Triple = (r.gen_range(0..3), r.gen_range(0..3), r.gen_range(0..3));
            w.add(t, q(r.gen_range(-3..=3)));
        }
        let g1 = alg.gen(random_gen(&mut r));
        let g2 = alg.gen(random_gen(&mut r));
        let a2 = module.act(&g2, &w).map_err(err)?;
        let a1 = module.act(&g1, &w).map_err(err)?;
        let lhs = module
            .act(&g1, &a2)
            .map_err(err)?
            .sub(&module.act(&g2, &a1).map_err(err)?);
        let rhs = module
            .act(&alg.commutator(&g1, &g2).map_err(err)?, &w)
            .map_err(err)?;
        ensure!(lhs == rhs, "[{g1}, {g2}] acts wrongly on {w}");
    }
    for c in test_family() {
        let alg = Gl2Cherednik::build(c.clone()).map_err(err)?;
        for m in 1..=3 {
            let got = alpha_m(&alg, m).map_err(err)?.alpha;
            for order in [GenOrder::Default, GenOrder::Triangular] {
                let oracle = alpha_oracle(&alg, m as usize, order)?;
                ensure!(
                    got == oracle,
                    "alpha_{m} for c = {c}, {order:?} oracle: {got} vs {oracle}"
                );
            }
            ensure!(
                got == alpha_m_in(&alg, m, GenOrder::Default).map_err(err)?,
                "alpha_{m} order dependence"
            );
        }
    }
    let tau = Gl2Cherednik::build(P::tau()).map_err(err)?;
    let a1 = alpha_m(&tau, 1).map_err(err)?;
    ensure!(
        a1.alpha == NcPoly::one(GenOrder::Default),
        "alpha_1 = {} for c = tau",
        a1.alpha
    );
    for (lam, mu) in [(0, 0), (1, 0), (2, 3), (4, -1)] {
        let report = finite_dim_test(&tau, &q(lam), &q(mu), 1).map_err(err)?;
        ensure!(
            report.witness.is_none(),
            "witness found for c = tau at ({lam}, {mu})"
        );
    }
    Ok("200 triples; alpha_1..3 match both oracles; c = tau has no witness".into())
}

fn modp_for<const PR: u32>() -> std::result::Result<usize, String> {
    let mut n = 0;
    let family = [
        CentralPoly::<Fp<PR>>::zero(),
        CentralPoly::tau(),
        CentralPoly::delta() + CentralPoly::monomial(Fp::new(3), 0, 2),
    ];
    for c in family {
        let alg = Gl2Cherednik::build(c.clone()).map_err(err)?;
        for v in [Gen::X, Gen::Y, Gen::X1, Gen::Y1] {
            let e = p_square_central(&alg, v).map_err(err)?;
            ensure!(
                e.status == Status::Pass,
                "p = {PR}, c = {c}: {} fails",
                e.claim
            );
            n += 1;
        }
        for v in [Gen::X, Gen::Y] {
            for w in [Gen::X1, Gen::Y1] {
                let e = p_power_landing(&alg, v, w).map_err(err)?;
                ensure!(
                    e.status == Status::Pass,
                    "p = {PR}, c = {c}: {} fails",
                    e.claim
                );
                n += 1;
            }
        }
        if PR >= 3 {
            for e in restricted_powers_central(&alg).map_err(err)? {
                ensure!(
                    e.status == Status::Pass,
                    "p = {PR}, c = {c}: {} fails",
                    e.claim
                );
                n += 1;
            }
        }
    }
    Ok(n)
}

fn modp() -> Outcome {
    let n = modp_for::<2>()? + modp_for::<3>()?;
    let start = Instant::now();
    for c in [
        CentralPoly::<Fp<3>>::tau(),
        CentralPoly::delta() + CentralPoly::monomial(Fp::new(3), 0, 2),
    ] {
        let alg = Gl2Cherednik::build(c.clone()).map_err(err)?;
        let x9 = NcPoly::word(GenOrder::Default, &[Gen::X; 9]);
        let br = alg.commutator(&x9, &alg.gen(Gen::Y1)).map_err(err)?;
        ensure!(br.is_zero(), "[x^9, y1] = {br} for c = {c}");
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(300), "[x^9, y1] took {t:?}");
    Ok(format!("{n} claims; [x^9, y1] = 0 in {t:.2?}"))
}

fn hygiene() -> Outcome {
    let mut r = rng(9);
    let fam = test_family();
    for i in 0..1000 {
        let alg = Gl2Cherednik::build(fam[i % fam.len()].clone()).map_err(err)?;
        let a = random_poly(&mut r, GenOrder::Default, 3, 2);
        let b = random_poly(&mut r, GenOrder::Default, 3, 2);
        let c = random_poly(&mut r, GenOrder::Default, 3, 2);
        let left = alg.mul(&alg.mul(&a, &b).map_err(err)?, &c).map_err(err)?;
        let right = alg.mul(&a, &alg.mul(&b, &c).map_err(err)?).map_err(err)?;
        let flat = alg.normalize(&a.concat(&b).concat(&c)).map_err(err)?;
        ensure!(
            left == right && right == flat,
            "association order matters for {a} * {b} * {c}"
        );
        ensure!(
            alg.normalize(&flat).map_err(err)? == flat,
            "normalize is not idempotent on {flat}"
        );
        for (w, _) in a.concat(&b).concat(&c).terms() {
            let n = alg
                .normalize(&NcPoly::word(GenOrder::Default, w))
                .map_err(err)?;
            ensure!(
                n.terms()
                    .all(|(nw, _)| word_biweight(nw) == word_biweight(w)),
                "biweight of {w:?} changes"
            );
        }
    }
    Ok("1000 products".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 9] = [
        ("F/G recursion agrees with extraction", fg_oracle, Some(10)),
        ("recursion and G(F) = F(G) + 2F(F)", recursion, None),
        ("Jacobi condition iff PBW", jacobi_pbw, Some(60)),
        ("B and D central, scan <= 3", b_and_d, Some(300)),
        (
            "leading terms span the scanned center",
            gr_compatibility,
            None,
        ),
        ("eta anti-involution, t1 central", anti_involution, None),
        (
            "Verma action, alpha_m, finite dimensionality",
            representations,
            Some(120),
        ),
        ("mod p centrality", modp, Some(300)),
        ("confluence, biweight, idempotence", hygiene, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(s)) if t > Duration::from_secs(s) => Err(format!("over the {s} s limit")),
            (o, _) => o,
        };
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(e) => {
                failed += 1;
                ("FAIL", e)
            }
        };
        println!("criterion {}: {status}  {name}  [{t:.2?}]  {detail}", i + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
