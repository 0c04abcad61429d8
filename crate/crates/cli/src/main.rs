mod cli;

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use qloc_core::expr::parse_dq;
use qloc_core::flag_proj::{is_torsion, twist, untwist, GradedAModule, RepRing};
use qloc_core::harness::{
    check_braided, check_filt1, check_filt2_separation, check_hopf, check_mu_nu, check_relations, parse_rational,
    run_suite, timed, CheckReport, Config, Filt2Part,
};
use qloc_core::oq_dq::{default_window, gamma_dlambda_graded_dim, section_row, Dq, Oq};
use qloc_core::weight_modules::{ChiContext, VermaModule};
use qloc_core::{BigRational, QField, QScalar, RootDatum, Uq, Weight, WeightCharacter};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cli::{Cli, Cmd, Global, Part};

struct Ctx {
    g: Global,
    datum: RootDatum,
    point: Option<BigRational>,
}

impl Ctx {
    fn new(g: Global) -> Result<Self> {
        let datum = RootDatum::from_label(g.ty.as_deref().unwrap_or("A1"))?;
        let point = match &g.q_eval {
            None => None,
            Some(s) => {
                let v = s.strip_prefix("v=").unwrap_or(s);
                Some(parse_rational(v).map_err(|e| anyhow!("--q-eval: {e}"))?)
            }
        };
        Ok(Ctx { g, datum, point })
    }

    fn require_a1(&self) -> Result<()> {
        if self.datum.rank != 1 {
            bail!("this command is only available for A1");
        }
        Ok(())
    }

    fn weight(&self, s: &str) -> Result<Weight> {
        let coords = s
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("cannot parse weight `{s}`"))?;
        Ok(self.datum.weight(&coords)?)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.g.seed.unwrap_or(0))
    }

    /// A scalar as JSON, with its value at the `--q-eval` point when given.
    fn scalar(&self, field: QField, s: &QScalar) -> Value {
        match &self.point {
            None => json!(s.to_string()),
            Some(p) => {
                let value = match field.evaluate(s, p, 12) {
                    Ok(e) => json!({ "value": e.value.to_string(), "root_of_unity_order": e.root_of_unity_order }),
                    Err(e) => json!({ "error": e.to_string() }),
                };
                json!({ "symbolic": s.to_string(), "at": p.to_string(), "eval": value })
            }
        }
    }

    /// A scalar for the text output, followed by its value at the point.
    fn scalar_text(&self, field: QField, s: &QScalar) -> String {
        match &self.point {
            None => s.to_string(),
            Some(p) => match field.evaluate(s, p, 12) {
                Ok(e) => format!("{s} [= {} at v={p}]", e.value),
                Err(e) => format!("{s} [{e}]"),
            },
        }
    }

    fn emit(&self, value: &Value, text: &str) -> Result<()> {
        match &self.g.json {
            Some(p) if p.as_os_str() == "-" => out(&(serde_json::to_string_pretty(value)? + "\n")),
            Some(p) => {
                std::fs::write(p, serde_json::to_string_pretty(value)? + "\n")
                    .with_context(|| format!("writing {}", p.display()))?;
                out(text);
            }
            None => out(text),
        }
        Ok(())
    }

    fn emit_reports(&self, reports: &[CheckReport]) -> Result<bool> {
        let text: String = reports.iter().map(|r| r.summary_line() + "\n").collect();
        self.emit(&serde_json::to_value(reports)?, &text)?;
        Ok(reports.iter().all(|r| r.ok()))
    }
}

fn run(cli: Cli) -> Result<bool> {
    let ctx = Ctx::new(cli.global)?;
    let d = ctx.datum.clone();
    match cli.cmd {
        Cmd::VerifyRelations { trials, samples } => {
            let uq = Uq::new(d);
            let mut rng = ctx.rng();
            let reports = vec![
                timed(|| check_relations(&uq, trials, &mut rng)),
                timed(|| check_hopf(&uq, samples, 3, &mut rng)),
            ];
            ctx.emit_reports(&reports)
        }
        Cmd::Verma { lambda } => {
            let uq = Uq::new(d.clone());
            let lam = ctx.weight(&lambda)?;
            let depth = ctx.g.depth.unwrap_or(if d.rank == 1 { 8 } else { 5 });
            let dims = VermaModule::new(&uq, WeightCharacter::Integral(lam), depth).weight_space_dims()?;
            let mut rows = Vec::new();
            let mut text = format!("M_{} truncated at depth {depth}\n", d.fmt_weight(&lam));
            for (beta, dim) in &dims {
                let w = lam - *beta;
                let k = d.kostant_partition(beta);
                text.push_str(&format!("  weight {:10} dim {dim:3}  (kostant {k})\n", d.fmt_weight(&w)));
                rows.push(json!({ "weight": d.coords(&w), "beta": d.coords(beta), "dim": dim, "kostant": k }));
            }
            ctx.emit(&json!({ "lambda": d.coords(&lam), "depth": depth, "weights": rows }), &text)?;
            Ok(true)
        }
        Cmd::Chi { lambda, mu } => {
            let uq = Uq::new(d.clone());
            let cx = ChiContext::new(&uq);
            let f = uq.field();
            let lam = ctx.weight(&lambda)?;
            let chi = cx.chi(&WeightCharacter::Integral(lam));
            let join = |xs: &[QScalar]| xs.iter().map(|x| ctx.scalar_text(f, x)).collect::<Vec<_>>().join(", ");
            let mut text = format!("chi_{} = [{}]\n", d.fmt_weight(&lam), join(&chi));
            let mut out = json!({ "lambda": d.coords(&lam), "chi": chi.iter().map(|s| ctx.scalar(f, s)).collect::<Vec<_>>() });
            if let Some(mu) = mu {
                let m = ctx.weight(&mu)?;
                let chi_mu = cx.chi(&WeightCharacter::Integral(m));
                let equal = chi == chi_mu;
                text.push_str(&format!("chi_{} = [{}]\nequal: {equal}\n", d.fmt_weight(&m), join(&chi_mu)));
                out["mu"] = json!(d.coords(&m));
                out["chi_mu"] = json!(chi_mu.iter().map(|s| ctx.scalar(f, s)).collect::<Vec<_>>());
                out["equal"] = json!(equal);
                out["same_linear_orbit"] = json!(cx.same_orbit(&lam, &m));
            }
            ctx.emit(&out, &text)?;
            Ok(true)
        }
        Cmd::Dominance { lambda, bound } => {
            let uq = Uq::new(d.clone());
            let cx = ChiContext::new(&uq);
            let lam = ctx.weight(&lambda)?;
            let ch = WeightCharacter::Integral(lam);
            let dom = cx.dominance_search(&ch, bound);
            let reg = cx.regularity_search(&ch, bound);
            let out = json!({
                "lambda": d.coords(&lam),
                "dominant_chi": dom,
                "dominant_classical": d.is_dominant_classical(&lam),
                "regular_chi": reg,
                "regular_classical": d.is_regular_dominant_classical(&lam),
            });
            let text = format!(
                "{}: dominant {} (classical {}), regular dominant {} (classical {})\n",
                d.fmt_weight(&lam),
                dom.holds(),
                d.is_dominant_classical(&lam),
                reg.holds(),
                d.is_regular_dominant_classical(&lam)
            );
            ctx.emit(&out, &text)?;
            Ok(true)
        }
        Cmd::Sections { lambda } => {
            ctx.require_a1()?;
            let w = ctx.g.window.unwrap_or_else(|| default_window(lambda));
            let row = section_row(&Oq::new(), lambda, w)?;
            let text = format!(
                "dim Γ(O_q({lambda})) = {} (window {}, certified {})\n",
                row.dim, row.window, row.certified
            );
            ctx.emit(&serde_json::to_value(&row)?, &text)?;
            Ok(true)
        }
        Cmd::Nu { lambda, j } => {
            ctx.require_a1()?;
            let oq = Oq::new();
            let lam = WeightCharacter::Integral(Weight::new(lambda, 0));
            let mut rows = Vec::new();
            let mut text = String::new();
            for jj in 0..=j {
                let dim = gamma_dlambda_graded_dim(&oq, &lam, jj)?;
                text.push_str(&format!("nu_{jj} = {dim}\n"));
                rows.push(json!({ "lambda": lambda, "j": jj, "dim": dim }));
            }
            ctx.emit(&json!(rows), &text)?;
            Ok(true)
        }
        Cmd::MuNu { lambda, j } => {
            ctx.require_a1()?;
            ctx.emit_reports(&[timed(|| check_mu_nu(&Oq::new(), &Weight::new(lambda, 0), j))])
        }
        Cmd::Filt1 { dim, n } => {
            ctx.require_a1()?;
            ctx.emit_reports(&[timed(|| check_filt1(&Oq::new(), dim, n, ctx.g.window.unwrap_or(2)))])
        }
        Cmd::Filt2 { lambda, module, part } => {
            let uq = Uq::new(d);
            let lam = WeightCharacter::Integral(ctx.weight(&lambda)?);
            let v = ctx.weight(&module)?;
            if !uq.datum().is_dominant_classical(&v) {
                bail!("--module must be a dominant weight");
            }
            let part = match part {
                Part::A => Filt2Part::A,
                Part::B => Filt2Part::B,
            };
            let r = timed(|| check_filt2_separation(&uq, &lam, &v, part));
            out(&(serde_json::to_string_pretty(&r.witness)? + "\n"));
            ctx.emit_reports(&[r])
        }
        Cmd::Repring { check_braided: braided, n } => {
            let uq = Uq::new(d.clone());
            let deg = ctx.g.depth.unwrap_or(if d.rank == 1 { 5 } else { 3 });
            let ring = RepRing::standard(d.clone(), if d.rank == 1 { 2 * deg } else { deg })?;
            let mut dims = BTreeMap::new();
            let mut text = String::new();
            for g in ring.grades(deg) {
                let dim = ring.dim(&g)?;
                text.push_str(&format!("dim A_{g:?} = {dim}\n"));
                dims.insert(format!("{g:?}"), dim);
            }
            let mut out = json!({ "datum": d.ty.to_string(), "dims": dims });
            if let Some(c) = ring.quantum_plane_coefficient() {
                text.push_str(&format!("relation: x*y = ({c})*y*x\n"));
                out["relation"] = json!(format!("x*y = ({c})*y*x"));
            }
            let mut ok = true;
            if braided {
                let r = timed(|| check_braided(&uq, deg, n, &mut ctx.rng()));
                text.push_str(&(r.summary_line() + "\n"));
                ok = r.ok();
                out["braided"] = serde_json::to_value(&r)?;
            }
            ctx.emit(&out, &text)?;
            Ok(ok)
        }
        Cmd::TwistTest => {
            let bound = ctx.g.depth.unwrap_or(3);
            let ring = RepRing::standard(d.clone(), bound)?;
            let a = GradedAModule::regular(&ring, bound);
            let comps = a.components(&ring)?;
            let mut results = BTreeMap::new();
            for i in 0..d.rank {
                let t = twist(&a, i);
                results.insert(format!("untwist(twist(A, {i})) = A"), untwist(&t, i) == a);
                let tc = t.components(&ring)?;
                let shifted = tc.iter().all(|(lam, dim)| {
                    let mut under = lam.clone();
                    under[i] += 1;
                    comps.get(&under) == Some(dim)
                });
                results.insert(format!("A({i}) components shift by ω{}", i + 1), shifted);
            }
            if d.rank == 2 {
                results.insert("twists commute".into(), twist(&twist(&a, 0), 1) == twist(&twist(&a, 1), 0));
            }
            results.insert("A is not torsion".into(), !is_torsion(&ring, &a, 1)?);
            results.insert(
                "augmentation module is torsion".into(),
                is_torsion(&ring, &GradedAModule::augmentation(&ring), 1)?,
            );
            let text: String = results.iter().map(|(k, v)| format!("{:5} {k}\n", v)).collect();
            ctx.emit(&json!(results), &text)?;
            Ok(results.values().all(|v| *v))
        }
        Cmd::DqMult { exprs } => {
            ctx.require_a1()?;
            let dq = Dq::new();
            let mut factors = Vec::new();
            for e in &exprs {
                factors.push(parse_dq(&dq, e)?);
            }
            let prod = dq.product(&factors);
            let f = dq.oq().uq().field();
            let terms: Vec<Value> = prod
                .terms()
                .map(|((x, u), c)| {
                    json!({ "oq": x, "uq": dq.oq().uq().fmt_monomial(u), "coeff": ctx.scalar(f, c) })
                })
                .collect();
            let text = format!("{}\n", dq.render(&prod));
            ctx.emit(&json!({ "factors": exprs, "product": dq.render(&prod), "terms": terms }), &text)?;
            Ok(true)
        }
        Cmd::Dlambda { lambda, expr } => {
            ctx.require_a1()?;
            let dq = Dq::new();
            let x = parse_dq(&dq, &expr)?;
            let r = dq.dlambda_reduce(&x, &WeightCharacter::Integral(Weight::new(lambda, 0)));
            let f = dq.oq().uq().field();
            let mut text = String::new();
            let mut terms = Vec::new();
            for ((x, fexp), c) in &r {
                text.push_str(&format!("({}) * x{x:?} ⊗ F^{fexp:?}\n", ctx.scalar_text(f, c)));
                terms.push(json!({ "oq": x, "f": fexp, "coeff": ctx.scalar(f, c) }));
            }
            if r.is_empty() {
                text.push_str("0\n");
            }
            ctx.emit(&json!({ "lambda": lambda, "expr": expr, "class": terms }), &text)?;
            Ok(true)
        }
        Cmd::RunSuite { config, workers } => {
            let mut cfg = match &config {
                Some(p) => {
                    let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                    Config::parse(&text).with_context(|| format!("in {}", p.display()))?
                }
                None => Config::default_for(d.clone()),
            };
            if ctx.g.ty.is_some() && cfg.datum != d {
                let checks = cfg.checks.clone();
                cfg = Config::default_for(d);
                cfg.checks = checks;
            }
            if let Some(s) = ctx.g.seed {
                cfg.seed = s;
            }
            if let Some(depth) = ctx.g.depth {
                cfg.depth = depth;
            }
            if let Some(w) = ctx.g.window {
                cfg.window = Some(w);
            }
            if let Some(p) = &ctx.point {
                cfg.q_eval = Some(p.clone());
            }
            if let Some(w) = workers {
                cfg.workers = w.max(1);
            }
            let report = run_suite(&cfg);
            ctx.emit(&serde_json::to_value(&report)?, &report.summary())?;
            Ok(report.passed())
        }
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn out(s: &str) {
    let mut o = std::io::stdout().lock();
    let _ = o.write_all(s.as_bytes()).and_then(|_| o.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
