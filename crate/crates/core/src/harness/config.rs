use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::checks::Filt2Part;
use crate::error::CoreError;
use crate::root_datum::{RootDatum, Weight};

/// Every check family the suite knows about.
pub const ALL_CHECKS: &[&str] = &[
    "relations",
    "hopf",
    "verma",
    "chi-symmetry",
    "dominance",
    "sections",
    "filt1",
    "filt2",
    "mu-nu",
    "braided",
    "smash-product",
    "specialize",
];

/// Suite configuration. Parsed from `key = value` lines; `#` starts a comment.
#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub datum: RootDatum,
    pub seed: u64,
    pub workers: usize,
    pub checks: Vec<String>,
    pub confluence_trials: usize,
    pub hopf_samples: usize,
    pub hopf_len: usize,
    pub depth: u32,
    pub chi_bound: i64,
    pub dominance_search: u32,
    pub sections_n: Vec<i64>,
    /// Window override for sections; per-n default when absent.
    pub window: Option<u32>,
    pub filt1_dims: Vec<u32>,
    pub filt1_n: Vec<i64>,
    pub filt1_window: u32,
    pub mu_nu_lambdas: Vec<i64>,
    pub mu_nu_j: u32,
    pub filt2_lambdas: Vec<Weight>,
    pub filt2_modules: Vec<Weight>,
    /// (λ, part) pairs that must produce a coincidence.
    pub filt2_negative: Vec<(Weight, Filt2Part)>,
    pub braided_degree: u32,
    pub braided_samples: usize,
    pub dq_triples: usize,
    pub q_eval: Option<BigRational>,
    pub root_of_unity_bound: u32,
}

impl Config {
    pub fn default_for(datum: RootDatum) -> Self {
        let a1 = datum.rank == 1;
        let rho = datum.rho();
        let modules = if a1 {
            vec![Weight::new(1, 0), Weight::new(2, 0)]
        } else {
            vec![datum.omega(0), datum.omega(1)]
        };
        Config {
            seed: 0,
            workers: 4,
            checks: ALL_CHECKS.iter().map(|s| s.to_string()).collect(),
            confluence_trials: 200,
            hopf_samples: 50,
            hopf_len: 3,
            depth: if a1 { 8 } else { 5 },
            chi_bound: 5,
            dominance_search: 6,
            sections_n: (-4..=6).collect(),
            window: None,
            filt1_dims: vec![1, 2, 3],
            filt1_n: vec![0, 1],
            filt1_window: 2,
            mu_nu_lambdas: vec![0, 2, 4],
            mu_nu_j: 3,
            filt2_lambdas: vec![rho],
            filt2_modules: modules,
            filt2_negative: vec![(Weight::ZERO, Filt2Part::B), (-rho, Filt2Part::A)],
            braided_degree: if a1 { 5 } else { 3 },
            braided_samples: 50,
            dq_triples: 100,
            q_eval: None,
            root_of_unity_bound: 12,
            datum,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CoreError> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (k, v) = body.split_once('=').ok_or_else(|| err(line, "expected `key = value`"))?;
            entries.push((line, k.trim().to_string(), v.trim().to_string()));
        }
        let datum = match entries.iter().rev().find(|(_, k, _)| k == "type") {
            Some((line, _, v)) => RootDatum::from_label(v).map_err(|e| err(*line, &format!("type: {e}")))?,
            None => RootDatum::a1(),
        };
        let mut c = Config::default_for(datum);
        for (line, key, value) in &entries {
            c.set(*line, key, value)?;
        }
        Ok(c)
    }

    fn set(&mut self, line: usize, key: &str, v: &str) -> Result<(), CoreError> {
        let rank = self.datum.rank;
        match key {
            "type" => {}
            "seed" => self.seed = scalar(line, key, v)?,
            "workers" => {
                self.workers = scalar(line, key, v)?;
                if self.workers == 0 {
                    return Err(err(line, "workers: must be at least 1"));
                }
            }
            "checks" => {
                let list = items(v, ',');
                for name in &list {
                    if !ALL_CHECKS.contains(&name.as_str()) {
                        return Err(err(line, &format!("checks: unknown check `{name}`")));
                    }
                }
                self.checks = list;
            }
            "confluence_trials" => self.confluence_trials = scalar(line, key, v)?,
            "hopf.samples" => self.hopf_samples = scalar(line, key, v)?,
            "hopf.max_len" => self.hopf_len = scalar(line, key, v)?,
            "depth" => self.depth = scalar(line, key, v)?,
            "chi.bound" => self.chi_bound = scalar(line, key, v)?,
            "dominance.search" => self.dominance_search = scalar(line, key, v)?,
            "sections.n" => self.sections_n = list(line, key, v)?,
            "window" => self.window = Some(scalar(line, key, v)?),
            "filt1.dims" => self.filt1_dims = list(line, key, v)?,
            "filt1.n" => self.filt1_n = list(line, key, v)?,
            "filt1.window" => self.filt1_window = scalar(line, key, v)?,
            "mu_nu.lambdas" => self.mu_nu_lambdas = list(line, key, v)?,
            "mu_nu.j" => self.mu_nu_j = scalar(line, key, v)?,
            "filt2.lambdas" => self.filt2_lambdas = weights(line, key, v, rank)?,
            "filt2.modules" => {
                let ws = weights(line, key, v, rank)?;
                if let Some(w) = ws.iter().find(|w| !self.datum.is_dominant_classical(w)) {
                    return Err(err(line, &format!("{key}: {} is not dominant", self.datum.fmt_weight(w))));
                }
                self.filt2_modules = ws;
            }
            "filt2.negative" => {
                let mut out = Vec::new();
                for item in items(v, ';') {
                    let (w, p) = item
                        .rsplit_once('/')
                        .ok_or_else(|| err(line, &format!("{key}: expected `weight/part`, got `{item}`")))?;
                    let part = match p.trim() {
                        "a" => Filt2Part::A,
                        "b" => Filt2Part::B,
                        other => return Err(err(line, &format!("{key}: unknown part `{other}`"))),
                    };
                    out.push((weight(line, key, w, rank)?, part));
                }
                self.filt2_negative = out;
            }
            "braided.degree" => self.braided_degree = scalar(line, key, v)?,
            "braided.samples" => self.braided_samples = scalar(line, key, v)?,
            "dq.triples" => self.dq_triples = scalar(line, key, v)?,
            "q_eval" => self.q_eval = Some(parse_rational(v).map_err(|m| err(line, &format!("{key}: {m}")))?),
            "root_of_unity_bound" => self.root_of_unity_bound = scalar(line, key, v)?,
            other => return Err(err(line, &format!("unknown key `{other}`"))),
        }
        Ok(())
    }
}

fn err(line: usize, msg: &str) -> CoreError {
    CoreError::Config {
        line,
        msg: msg.to_string(),
    }
}

fn items(v: &str, sep: char) -> Vec<String> {
    v.split(sep).map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn scalar<T: FromStr>(line: usize, key: &str, v: &str) -> Result<T, CoreError> {
    v.parse().map_err(|_| err(line, &format!("{key}: cannot parse `{v}`")))
}

fn list<T: FromStr>(line: usize, key: &str, v: &str) -> Result<Vec<T>, CoreError> {
    items(v, ',').iter().map(|s| scalar(line, key, s)).collect()
}

fn weight(line: usize, key: &str, v: &str, rank: usize) -> Result<Weight, CoreError> {
    let cs: Vec<i64> = list(line, key, v)?;
    if cs.len() != rank {
        return Err(err(line, &format!("{key}: weight `{}` needs {rank} coordinate(s)", v.trim())));
    }
    Ok(Weight::new(cs[0], cs.get(1).copied().unwrap_or(0)))
}

fn weights(line: usize, key: &str, v: &str, rank: usize) -> Result<Vec<Weight>, CoreError> {
    items(v, ';').iter().map(|s| weight(line, key, s, rank)).collect()
}

/// Parses `a`, `a/b` or a decimal such as `1.5`.
pub fn parse_rational(v: &str) -> Result<BigRational, String> {
    let v = v.trim();
    let bad = || format!("cannot parse `{v}` as a rational number");
    if let Some((n, d)) = v.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((i, f)) = v.split_once('.') {
        let digits = format!("{i}{f}");
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = BigInt::from(10).pow(f.len() as u32);
        return Ok(BigRational::new(n, d));
    }
    Ok(BigRational::from_integer(v.parse().map_err(|_| bad())?))
}
