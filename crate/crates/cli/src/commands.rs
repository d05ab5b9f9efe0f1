//! One function per subcommand, generic over the coefficient field.

use std::time::Instant;

use cherednik_core::calculus::fg::FgTable;
use cherednik_core::rep::alpha_m_in;
use cherednik_core::{
    alpha_m, center_scan, central_b, central_d_lift, fg, fg_extract, finite_dim_test,
    maximal_vectors, modp_suite, pbw_check, CentralPoly, CentralityCheck, Coeff, EngineError,
    GenOrder, Gl2Cherednik, NcPoly, Normalizer, ScanBox,
};

use crate::eval::{self, EvalError};
use crate::expr::parse;
use crate::report::{Check, Report, Status};
use crate::{Cli, CliError, Command};

fn parse_central<K: Coeff>(what: &str, src: &str) -> Result<CentralPoly<K>, CliError> {
    let e = parse(src).map_err(|source| CliError::Parse {
        what: what.into(),
        source,
    })?;
    eval::central(&e).map_err(|source| CliError::Eval {
        what: what.into(),
        source,
    })
}

fn parse_constant<K: Coeff>(what: &str, src: &str) -> Result<K, CliError> {
    let e = parse(src).map_err(|source| CliError::Parse {
        what: what.into(),
        source,
    })?;
    eval::constant(&e).map_err(|source| CliError::Eval {
        what: what.into(),
        source,
    })
}

fn parse_element<K: Coeff>(
    n: &mut Normalizer<'_, K>,
    algebra: &Gl2Cherednik<K>,
    what: &str,
    src: &str,
) -> Result<Result<NcPoly<K>, EngineError>, CliError> {
    let e = parse(src).map_err(|source| CliError::Parse {
        what: what.into(),
        source,
    })?;
    match eval::element(n, algebra, &e) {
        Ok(p) => Ok(Ok(p)),
        Err(EvalError::Engine(err)) => Ok(Err(err)),
        Err(source) => Err(CliError::Eval {
            what: what.into(),
            source,
        }),
    }
}

/// Runs `f` and stamps its wall time on the checks it returns. Engine errors
/// become a failed check named `name`.
fn timed<F>(name: &str, f: F) -> Vec<Check>
where
    F: FnOnce() -> Result<Vec<Check>, EngineError>,
{
    let start = Instant::now();
    let mut checks =
        f().unwrap_or_else(|e| vec![Check::new(name, Status::Fail).witness("error", e)]);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    for c in &mut checks {
        c.timing_ms = ms;
    }
    checks
}

fn require_admissible<K: Coeff>(algebra: &Gl2Cherednik<K>) -> Result<(), CliError> {
    if algebra.is_admissible() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "c = {} is not admissible (Jacobi residual {}); this command needs an admissible c",
            algebra.c(),
            algebra.jacobi_residual()
        )))
    }
}

struct Ctx<'a, K: Coeff> {
    algebra: &'a Gl2Cherednik<K>,
    order: GenOrder,
}

impl<K: Coeff> Ctx<'_, K> {
    /// Element printed in the active order.
    fn show(&self, p: &NcPoly<K>) -> Result<String, EngineError> {
        if p.order() == self.order {
            Ok(p.to_string())
        } else {
            Ok(self.algebra.convert(p, self.order)?.to_string())
        }
    }

    fn centrality(
        &self,
        name: &str,
        label: &str,
        check: &CentralityCheck<K>,
    ) -> Result<Check, EngineError> {
        let mut out = Check::new(name, Status::from_bool(check.is_central()))
            .witness(label, self.show(&check.element)?);
        for (g, r) in &check.residuals {
            out = out.witness(format!("[{label}, {g}]"), self.show(r)?);
        }
        Ok(out)
    }
}

pub fn execute<K: Coeff>(cli: &Cli) -> Result<Report, CliError> {
    let opts = &cli.opts;
    let c = parse_central::<K>("--c", &opts.c)?;
    let algebra = Gl2Cherednik::build_with_budget(c.clone(), opts.step_budget)
        .map_err(|e| CliError::Usage(format!("cannot build the algebra: {e}")))?;
    let ctx = Ctx {
        algebra: &algebra,
        order: opts.order.into(),
    };
    let order: GenOrder = opts.order.into();
    let checks = match &cli.command {
        Command::Normalize { expr } => {
            let mut n = Normalizer::new(algebra.table_for(order));
            let p = parse_element(&mut n, &algebra, "expression", expr)?;
            timed("normalize", || {
                Ok(vec![
                    Check::new("normalize", Status::Pass).witness("normal form", p?)
                ])
            })
        }
        Command::Commutator { a, b } => {
            let mut n = Normalizer::new(algebra.table_for(order));
            let pa = parse_element(&mut n, &algebra, "first argument", a)?;
            let pb = parse_element(&mut n, &algebra, "second argument", b)?;
            timed("commutator", || {
                let r = n.commutator(&pa?, &pb?)?;
                Ok(vec![
                    Check::new("commutator", Status::Pass).witness("[a, b]", r)
                ])
            })
        }
        Command::Fg { alpha } => {
            let a = parse_central::<K>("alpha", alpha)?;
            let mut checks = timed("fg", || {
                let (f, g) = fg(&a);
                Ok(vec![Check::new("fg", Status::Pass)
                    .witness("F", f)
                    .witness("G", g)])
            });
            if K::characteristic() != 2 {
                checks.extend(timed("fg-oracle", || {
                    let h = Gl2Cherednik::<K>::build_with_budget(
                        CentralPoly::zero(),
                        opts.step_budget,
                    )?;
                    let (f, g) = fg_extract(&a, &h)?;
                    let ok = (f.clone(), g.clone()) == fg(&a);
                    Ok(vec![Check::new("fg-oracle", Status::from_bool(ok))
                        .witness("F", f)
                        .witness("G", g)])
                }));
            }
            checks
        }
        Command::FgTable => {
            let max = opts.max_degree.unwrap_or(5);
            timed("fg-table", || {
                let mut t = FgTable::<K>::up_to(max);
                let mut check = Check::new("fg-table", Status::Pass);
                for n in 0..=max {
                    let (f, g) = t.row(n).clone();
                    check = check
                        .witness(format!("F(Delta^{n})"), f)
                        .witness(format!("G(Delta^{n})"), g);
                }
                Ok(vec![check])
            })
        }
        Command::Jacobi => timed("jacobi-residual", || {
            let r = algebra.jacobi_residual();
            Ok(vec![Check::new(
                "jacobi-residual",
                Status::from_bool(r.is_zero()),
            )
            .witness("residual", r)
            .witness("F(c)", algebra.f_c())
            .witness("G(c)", algebra.g_c())])
        }),
        Command::PbwCheck => timed("pbw", || {
            let report = pbw_check(algebra.table_for(order))?;
            let mut check = Check::new("pbw", Status::from_bool(report.passed()))
                .witness("triples", report.triples_checked)
                .witness("assumption", report.assumption);
            for f in &report.failures {
                let (a, b, c) = f.triple;
                check = check.witness(format!("jacobi({a}, {b}, {c})"), ctx.show(&f.residual)?);
            }
            Ok(vec![check])
        }),
        Command::CenterB => {
            require_admissible(&algebra)?;
            timed("b-central", || {
                let check = central_b(&algebra)?;
                let undeformed = Gl2Cherednik::<K>::build(CentralPoly::zero())?
                    .distinguished_elements()?
                    .b;
                let lead = check.element.v_component(2) == undeformed;
                Ok(vec![
                    ctx.centrality("b-central", "B", &check)?,
                    Check::new("b-leading-term", Status::from_bool(lead))
                        .witness("b", ctx.show(&undeformed)?),
                ])
            })
        }
        Command::CenterD => {
            require_admissible(&algebra)?;
            let bound = opts.max_degree.unwrap_or(3);
            timed("d-central", || {
                let lift = central_d_lift(&algebra, bound)?;
                let d = Gl2Cherednik::<K>::build(CentralPoly::zero())?
                    .distinguished_elements()?
                    .d;
                let lead = lift.d().v_component(2) == d.v_component(2);
                let mut central = ctx
                    .centrality("d-central", "D", &lift.check)?
                    .witness("z", &lift.z);
                if let Some(a) = &lift.alpha {
                    central = central.witness("alpha", a);
                }
                let mut formula = Check::new(
                    "lift-formula",
                    Status::from_bool(lift.matching_candidate().is_some()),
                );
                for cand in &lift.candidates {
                    let verdict = if cand.matches_mod_constants {
                        "matches up to a constant"
                    } else if cand.matches_mod_tau {
                        "matches modulo k[tau]"
                    } else {
                        "does not match"
                    };
                    formula = formula.witness(cand.label, format!("{} ({verdict})", cand.value));
                }
                if lift.alpha.is_none() {
                    formula = formula.witness("alpha", "not available in this characteristic");
                }
                Ok(vec![
                    central,
                    Check::new("d-leading-term", Status::from_bool(lead))
                        .witness("d", ctx.show(&d.v_component(2))?),
                    formula,
                ])
            })
        }
        Command::CenterScan {
            v_degree,
            ug_degree,
        } => {
            require_admissible(&algebra)?;
            let scan_box = match (v_degree, ug_degree) {
                (Some(v), Some(g)) => ScanBox::split(*v, *g),
                _ => ScanBox::total(opts.max_degree.unwrap_or(3)),
            };
            let lift_bound = opts.max_degree.unwrap_or(3).max(3);
            timed("center-scan", || {
                let scan = center_scan(&algebra, scan_box, lift_bound)?;
                let mut basis =
                    Check::new("center-scan", Status::Pass).witness("dimension", scan.basis.len());
                for (i, z) in scan.basis.iter().enumerate() {
                    basis = basis.witness(format!("z{}", i + 1), ctx.show(z)?);
                }
                let mut products =
                    Check::new("products-span", Status::from_bool(scan.products_span_equal));
                for ((i, j), _) in &scan.products {
                    products = products.witness("product", format!("B^{i}*D^{j}"));
                }
                Ok(vec![basis, products])
            })
        }
        Command::AlphaM { m } => {
            require_admissible(&algebra)?;
            let ms: Vec<u32> = match m {
                Some(0) => return Err(CliError::Usage("--m must be positive".into())),
                Some(m) => vec![*m],
                None => (1..=opts.max_degree.unwrap_or(3)).collect(),
            };
            let mut checks = Vec::new();
            for m in ms {
                let name = format!("alpha-{m}");
                checks.extend(timed(&name, || {
                    let a = alpha_m(&algebra, m)?;
                    let other = alpha_m_in(&algebra, m, GenOrder::Default)?;
                    let mut check =
                        Check::new(name.clone(), Status::from_bool(a.in_ug && other == a.alpha))
                            .witness(format!("alpha_{m}"), ctx.show(&a.alpha)?)
                            .witness("central in U(gl2)", a.central_in_ug);
                    if let Some(p) = &a.as_central {
                        check = check.witness("as polynomial", p);
                    }
                    Ok(vec![check])
                }));
            }
            checks
        }
        Command::FiniteDim { lambda, mu } => {
            require_admissible(&algebra)?;
            let lam = parse_constant::<K>("--lambda", lambda)?;
            let mu = parse_constant::<K>("--mu", mu)?;
            let m_max = opts.max_degree.unwrap_or(3);
            timed("finite-dim", || {
                let r = finite_dim_test(&algebra, &lam, &mu, m_max)?;
                let verdict = match (r.lambda_integral, r.witness) {
                    (false, _) => {
                        "not finite dimensional: lambda is not a non-negative integer".to_string()
                    }
                    (true, Some(m)) => format!("finite dimensional: alpha_{m} kills V(lambda, mu)"),
                    (true, None) => format!("no witness with m <= {m_max}"),
                };
                let mut check = Check::new("finite-dim", Status::Pass).witness("verdict", verdict);
                if let Some(f) = r.f_nilpotent {
                    check = check.witness("f^(lambda+1) kills V(lambda, mu)", f);
                }
                for (m, kills, central) in &r.per_m {
                    check = check.witness(
                        format!("alpha_{m}"),
                        format!("kills: {kills}, central: {central}"),
                    );
                }
                Ok(vec![check])
            })
        }
        Command::MaximalVectors { lambda, mu } => {
            require_admissible(&algebra)?;
            let lam = parse_constant::<K>("--lambda", lambda)?;
            let mu = parse_constant::<K>("--mu", mu)?;
            let depth = opts.max_degree.unwrap_or(2);
            timed("maximal-vectors", || {
                let vs = maximal_vectors(&algebra, lam.clone(), mu.clone(), depth)?;
                let has_v = vs.iter().any(|v| v.to_string() == "v");
                let mut check = Check::new("maximal-vectors", Status::from_bool(has_v))
                    .witness("count", vs.len());
                for (i, v) in vs.iter().enumerate() {
                    check = check.witness(format!("w{}", i + 1), v);
                }
                Ok(vec![check])
            })
        }
        Command::Modp => {
            if K::characteristic() == 0 {
                return Err(CliError::Usage("modp needs --field fp --p <prime>".into()));
            }
            timed("modp", || {
                let report = modp_suite(&algebra)?;
                let mut checks = Vec::new();
                for e in &report.entries {
                    let mut check = Check::new(
                        e.claim.clone(),
                        match e.status {
                            cherednik_core::Status::Pass => Status::Pass,
                            cherednik_core::Status::Fail => Status::Fail,
                        },
                    );
                    if let Some(r) = &e.residual {
                        let label = match e.against {
                            Some(g) => format!("commutator with {g}"),
                            None => "residual".to_string(),
                        };
                        check = check.witness(label, ctx.show(r)?);
                    }
                    checks.push(check);
                }
                Ok(checks)
            })
        }
    };
    Ok(Report::new(
        cli.command.name(),
        K::field_name(),
        c.to_string(),
        checks,
    ))
}
