use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::checks::{check_filt1, check_filt2_separation, check_mu_nu, filtration_weights, Filt2Part};
use super::config::Config;
use super::invariants::{
    check_braided, check_chi_symmetry, check_dominance, check_hopf, check_relations, check_sections,
    check_smash_product, check_verma,
};
use super::report::{timed, CheckReport};
use crate::oq_dq::{Dq, Oq};
use crate::root_datum::{RootDatum, Weight, WeightCharacter};
use crate::uq_algebra::Uq;
use crate::weight_modules::ChiContext;

type JobFn = Box<dyn Fn(&mut ChaCha8Rng) -> CheckReport + Send + Sync>;

struct Job {
    id: String,
    run: JobFn,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub datum: String,
    pub seed: u64,
    pub reports: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.ok())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.summary_line());
            out.push('\n');
        }
        let failed = self.reports.iter().filter(|r| !r.ok()).count();
        out.push_str(&format!(
            "{} checks, {} failed ({} seed {})\n",
            self.reports.len(),
            failed,
            self.datum,
            self.seed
        ));
        out
    }
}

/// FNV-1a; mixes the check id into the seed so that each check draws the
/// same numbers whichever worker runs it.
fn id_hash(id: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn a1_only(cfg: &Config) -> bool {
    cfg.datum.rank == 1
}

fn jobs(cfg: &Config) -> Vec<Job> {
    let mut out: Vec<Job> = Vec::new();
    let datum = cfg.datum.clone();
    let mut push = |id: String, run: JobFn| out.push(Job { id, run });
    for name in &cfg.checks {
        let d = datum.clone();
        match name.as_str() {
            "relations" => {
                let n = cfg.confluence_trials;
                push(name.clone(), Box::new(move |rng| check_relations(&Uq::new(d.clone()), n, rng)));
            }
            "hopf" => {
                let (n, len) = (cfg.hopf_samples, cfg.hopf_len);
                push(name.clone(), Box::new(move |rng| check_hopf(&Uq::new(d.clone()), n, len, rng)));
            }
            "verma" => {
                let depth = cfg.depth;
                push(name.clone(), Box::new(move |_| check_verma(&Uq::new(d.clone()), depth)));
            }
            "chi-symmetry" => {
                let b = cfg.chi_bound;
                push(name.clone(), Box::new(move |_| check_chi_symmetry(&Uq::new(d.clone()), b)));
            }
            "dominance" => {
                let (b, s) = (cfg.chi_bound, cfg.dominance_search);
                push(name.clone(), Box::new(move |_| check_dominance(&Uq::new(d.clone()), b, s)));
            }
            "sections" if a1_only(cfg) => {
                let (ns, w) = (cfg.sections_n.clone(), cfg.window);
                push(name.clone(), Box::new(move |_| check_sections(&Oq::new(), &ns, w)));
            }
            "filt1" if a1_only(cfg) => {
                for &dim in &cfg.filt1_dims {
                    for &n in &cfg.filt1_n {
                        let w = cfg.filt1_window;
                        push(
                            format!("filt1/dim={dim}/n={n}"),
                            Box::new(move |_| check_filt1(&Oq::new(), dim, n, w)),
                        );
                    }
                }
            }
            "mu-nu" if a1_only(cfg) => {
                for &l in &cfg.mu_nu_lambdas {
                    let j = cfg.mu_nu_j;
                    push(
                        format!("mu-nu/lambda={l}"),
                        Box::new(move |_| check_mu_nu(&Oq::new(), &Weight::new(l, 0), j)),
                    );
                }
            }
            "filt2" => {
                let cases = cfg
                    .filt2_lambdas
                    .iter()
                    .flat_map(|l| [(*l, Filt2Part::A, false), (*l, Filt2Part::B, false)])
                    .chain(cfg.filt2_negative.iter().map(|(l, p)| (*l, *p, true)));
                for (lam, part, negative) in cases {
                    for v in &cfg.filt2_modules {
                        let (dd, v) = (d.clone(), *v);
                        let id = format!(
                            "filt2/{}/lambda={}/V={}",
                            part.label(),
                            datum.fmt_weight(&lam),
                            datum.fmt_weight(&v)
                        );
                        push(
                            id,
                            Box::new(move |_| {
                                let r = check_filt2_separation(
                                    &Uq::new(dd.clone()),
                                    &WeightCharacter::Integral(lam),
                                    &v,
                                    part,
                                );
                                if negative {
                                    r.negative()
                                } else {
                                    r
                                }
                            }),
                        );
                    }
                }
            }
            "braided" => {
                let (deg, n) = (cfg.braided_degree, cfg.braided_samples);
                push(name.clone(), Box::new(move |rng| check_braided(&Uq::new(d.clone()), deg, n, rng)));
            }
            "smash-product" if a1_only(cfg) => {
                let n = cfg.dq_triples;
                let lams = vec![Weight::ZERO, Weight::new(2, 0), Weight::new(-3, 0)];
                push(name.clone(), Box::new(move |rng| check_smash_product(&Dq::new(), n, &lams, rng)));
            }
            "specialize" => {
                if let Some(point) = cfg.q_eval.clone() {
                    let (lams, mods, bound) = (cfg.filt2_lambdas.clone(), cfg.filt2_modules.clone(), cfg.root_of_unity_bound);
                    push(
                        format!("specialize/v={point}"),
                        Box::new(move |_| check_specialization(&Uq::new(d.clone()), &point, &lams, &mods, bound)),
                    );
                }
            }
            _ => {}
        }
    }
    out
}

/// Flags specializations v = point at which q is a small root of unity, a
/// central character has a pole, or two distinct central characters among
/// the Filt2 separations collide.
pub fn check_specialization(
    uq: &Uq,
    point: &BigRational,
    lambdas: &[Weight],
    modules: &[Weight],
    bound: u32,
) -> CheckReport {
    let d = uq.datum();
    let f = uq.field();
    let ctx = ChiContext::new(uq);
    let report = CheckReport::new(format!("specialize/v={point}"), d.ty.to_string())
        .param("v", point.to_string())
        .param("root_of_unity_bound", bound);
    let mut chars = Vec::new();
    for lam in lambdas {
        let neg = -*lam;
        for v in modules {
            let ws = filtration_weights(uq, v);
            for mu in &ws {
                chars.push(neg + *mu - ws[0]);
                chars.push(neg + *mu);
            }
        }
    }
    chars.sort();
    chars.dedup();
    let mut values = Vec::new();
    let mut problems = Vec::new();
    let mut root_order = None;
    for w in &chars {
        let chi = ctx.chi(&WeightCharacter::Integral(*w));
        let mut evals = Vec::new();
        for s in &chi {
            match f.evaluate(s, point, bound) {
                Ok(e) => {
                    root_order = root_order.or(e.root_of_unity_order);
                    evals.push(e.value);
                }
                Err(e) => problems.push(json!({ "character": d.coords(w), "error": e.to_string() })),
            }
        }
        values.push((*w, chi, evals));
    }
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let (wi, ci, ei) = &values[i];
            let (wj, cj, ej) = &values[j];
            if ci != cj && ei.len() == ci.len() && ei == ej {
                problems.push(json!({ "collision": [d.coords(wi), d.coords(wj)] }));
            }
        }
    }
    if let Some(n) = root_order {
        problems.push(json!({ "root_of_unity_order": n }));
    }
    report.with(problems.is_empty(), json!({ "characters": chars.len(), "problems": problems }))
}

/// Runs the configured checks on a pool of `cfg.workers` threads and merges
/// the reports by check id.
pub fn run_suite(cfg: &Config) -> SuiteReport {
    let jobs = jobs(cfg);
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::with_capacity(jobs.len()));
    let workers = cfg.workers.max(1).min(jobs.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(job) = jobs.get(i) else { break };
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ id_hash(&job.id));
                let mut r = timed(|| (job.run)(&mut rng));
                r.id = job.id.clone();
                results.lock().expect("no worker panicked").push(r);
            });
        }
    });
    let mut reports = results.into_inner().expect("no worker panicked");
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteReport {
        datum: cfg.datum.ty.to_string(),
        seed: cfg.seed,
        reports,
    }
}

/// Default suite for a root datum.
pub fn default_suite(datum: RootDatum) -> SuiteReport {
    run_suite(&Config::default_for(datum))
}
