//! Verification suites. Each suite expands into independent jobs that run
//! on the rayon pool; records are sorted afterwards so output does not
//! depend on scheduling.

use anyhow::{bail, Result};
use capelli::elements::{
    capelli_c, capelli_h, capelli_h_shift, rectangular_k, shaped_k, verify_centrality, verify_det_poly_expansion,
    verify_expansion, verify_factorization, verify_factorization_examples, verify_factorization_shape,
    verify_filtration, verify_h_equals_c, verify_one_row, verify_row_insertion, verify_script_expansion,
    verify_triangularity,
};
use capelli::laws::{find_law, laws, verify_law};
use capelli::report::{Record, SuiteReport};
use capelli::rep::{dominant_weights, verify_capelli_identities, verify_hook_shape, verify_hook_vanishing};
use capelli::shifted::{verify_hc_suite, verify_koszul};
use capelli::ugl::EnvElement;
use capelli::virt::Shape;
use clap::Args;
use rayon::prelude::*;

use crate::descriptor::{build_element, tokens};

pub const SUITES: &[&str] = &[
    "capelli-identity",
    "hook",
    "row-insertion",
    "expansion",
    "factorization",
    "centrality",
    "hc",
    "koszul",
    "proof-machinery",
    "one-row",
    "invariants",
];

#[derive(Args, Debug, Default, Clone)]
pub struct SuiteArgs {
    /// Rank `n`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of rows `p` of a rectangle, or a shift.
    #[arg(long)]
    pub p: Option<usize>,
    /// Column count `d` of the polynomial ring, for capelli-identity.
    #[arg(long)]
    pub d: Option<usize>,
    /// Partition, e.g. `3,2`.
    #[arg(long)]
    pub shape: Option<String>,
    /// Subset of `{1..λ_p}` for row-insertion and expansion, e.g. `1,2`;
    /// an empty string is the empty set.
    #[arg(long = "M", alias = "m")]
    pub subset: Option<String>,
    /// Element descriptor for centrality, e.g. "H 3 2" or e12.
    #[arg(long)]
    pub element: Option<String>,
    /// Random polynomials per case for capelli-identity.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Randomized cases per law for proof-machinery.
    #[arg(long, default_value_t = 50)]
    pub cases: usize,
    /// Run a single law of proof-machinery.
    #[arg(long)]
    pub law: Option<String>,
    /// Largest weight entry for the hook suite.
    #[arg(long, default_value_t = 3)]
    pub max_mu: usize,
}

type Job = Box<dyn FnOnce() -> Vec<Record> + Send>;

fn job(f: impl FnOnce() -> Vec<Record> + Send + 'static) -> Job {
    Box::new(f)
}

fn one(f: impl FnOnce() -> Record + Send + 'static) -> Job {
    Box::new(move || vec![f()])
}

fn parse_subset(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "{}" {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| Ok(t.trim().parse::<usize>()?)).collect()
}

fn shape_arg(a: &SuiteArgs) -> Result<Option<Shape>> {
    a.shape.as_deref().map(Shape::parse).transpose().map_err(Into::into)
}

fn ranks(a: &SuiteArgs, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    a.n.map_or_else(|| default.collect(), |n| vec![n])
}

fn subsets(k: usize) -> Vec<Vec<usize>> {
    (0..1u32 << k).map(|mask| (1..=k).filter(|&i| mask >> (i - 1) & 1 == 1).collect()).collect()
}

/// The theorem grid shared by row-insertion and expansion.
pub const INSERTION_SHAPES: [&[usize]; 4] = [&[2, 1], &[2, 2], &[3, 2], &[3, 2, 2]];

fn insertion_jobs(a: &SuiteArgs, check: fn(&Shape, &[usize], usize) -> Record) -> Result<Vec<Job>> {
    let shapes = match shape_arg(a)? {
        Some(s) => vec![s],
        None => INSERTION_SHAPES.iter().map(|p| Shape::new(p.to_vec())).collect::<capelli::Result<_>>()?,
    };
    let mut jobs = Vec::new();
    for l in shapes {
        let n = a.n.unwrap_or(l.first());
        let ms = match &a.subset {
            Some(m) => vec![parse_subset(m)?],
            None => subsets(l.last()),
        };
        for m in ms {
            let l = l.clone();
            jobs.push(one(move || check(&l, &m, n)));
        }
    }
    Ok(jobs)
}

fn centrality_jobs(a: &SuiteArgs) -> Result<Vec<Job>> {
    if let Some(desc) = &a.element {
        let toks = tokens(desc);
        let x = build_element(&toks, a.n)?;
        let name = desc.clone();
        return Ok(vec![one(move || verify_centrality(&name, &x))]);
    }
    let mut jobs = Vec::new();
    let central = |name: String, x: fn(usize, usize) -> capelli::Result<EnvElement>, n: usize, k: usize| {
        one(move || match x(n, k) {
            Ok(x) => verify_centrality(&name, &x),
            Err(e) => Record::new(format!("central {name}"), "centrality").param("n", n).run(|_| Err(e)),
        })
    };
    for n in ranks(a, 1..=3) {
        for k in 1..=n {
            jobs.push(central(format!("H_{n}^({k})"), capelli_h, n, k));
        }
        for p in 0..=2 {
            jobs.push(central(format!("H_{n}({p})"), |n, p| capelli_h_shift(n, p as i64), n, p));
            jobs.push(central(format!("C_{n}({p})"), |n, p| capelli_c(n, p as i64), n, p));
        }
        for p in 1..=2 {
            jobs.push(central(format!("K_{n}^{p}"), rectangular_k, n, p));
        }
        for w in 1..=4 {
            for l in Shape::all_of_weight(w, n, w) {
                jobs.push(one(move || match shaped_k(&l, n) {
                    Ok(x) => verify_centrality(&format!("K_{l}({n})"), &x),
                    Err(e) => Record::new("central K_λ(n)", "centrality").param("n", n).run(|_| Err(e)),
                }));
            }
        }
    }
    Ok(jobs)
}

fn hook_jobs(a: &SuiteArgs) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    let max_mu = a.max_mu;
    let rect = |n: usize, p: usize| -> Vec<Job> {
        let w = dominant_weights(n, max_mu);
        let w2 = w.clone();
        vec![
            job(move || verify_hook_shape(&Shape::rectangle(n, p), n, &w)),
            one(move || verify_hook_vanishing(n, p, &w2)),
        ]
    };
    match (shape_arg(a)?, a.n, a.p) {
        (Some(l), n, _) => {
            let n = n.unwrap_or(l.first());
            let w = dominant_weights(n, max_mu);
            jobs.push(job(move || verify_hook_shape(&l, n, &w)));
        }
        (None, Some(n), Some(p)) => jobs.extend(rect(n, p)),
        (None, n, p) => {
            for n in n.map_or_else(|| (1..=3).collect(), |n| vec![n]) {
                for w in 1..=6 {
                    for l in Shape::all_of_weight(w, n, w) {
                        let weights = dominant_weights(n, max_mu);
                        jobs.push(job(move || verify_hook_shape(&l, n, &weights)));
                    }
                }
                for p in p.map_or_else(|| (1..=6 / n.max(1)).collect(), |p| vec![p]) {
                    let w = dominant_weights(n, max_mu);
                    jobs.push(one(move || verify_hook_vanishing(n, p, &w)));
                }
            }
        }
    }
    Ok(jobs)
}

fn factorization_jobs(a: &SuiteArgs) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    if let Some(l) = shape_arg(a)? {
        let n = a.n.unwrap_or(l.first());
        jobs.push(job(move || verify_factorization_shape(&l, n)));
        return Ok(jobs);
    }
    for n in ranks(a, 1..=3) {
        for p in a.p.map_or_else(|| (1..=3).collect(), |p| vec![p]) {
            jobs.push(job(move || verify_factorization(n, p)));
        }
    }
    if a.n.is_none() && a.p.is_none() {
        for parts in [vec![3, 2], vec![2, 2, 1]] {
            let l = Shape::new(parts)?;
            jobs.push(job(move || verify_factorization_shape(&l, 3)));
        }
        jobs.push(job(verify_factorization_examples));
    }
    Ok(jobs)
}

fn capelli_identity_jobs(a: &SuiteArgs, seed: u64) -> Vec<Job> {
    let cases = match (a.n, a.d) {
        (Some(n), Some(d)) => vec![(n, d)],
        (Some(n), None) if n > 1 => vec![(n, n - 1), (n, n)],
        (Some(n), None) => vec![(n, n)],
        _ => vec![(2, 1), (3, 2), (2, 2), (3, 3)],
    };
    let count = a.count;
    cases.into_iter().map(|(n, d)| job(move || verify_capelli_identities(n, d, seed, count))).collect()
}

fn law_jobs(a: &SuiteArgs, seed: u64) -> Result<Vec<Job>> {
    let chosen: Vec<_> = match &a.law {
        Some(name) => match find_law(name) {
            Some(l) => vec![l],
            None => bail!(
                "unknown law {name:?}; known: {}",
                laws().iter().map(|l| l.name).collect::<Vec<_>>().join(", ")
            ),
        },
        None => laws().iter().collect(),
    };
    let cases = a.cases;
    Ok(chosen.into_iter().map(|l| one(move || verify_law(l, seed, cases))).collect())
}

fn invariant_jobs(a: &SuiteArgs) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in ranks(a, 1..=3) {
        jobs.push(one(move || verify_triangularity(n)));
        jobs.push(one(move || verify_det_poly_expansion(n)));
        jobs.push(one(move || verify_script_expansion(n)));
        for p in 0..=3 {
            jobs.push(one(move || verify_h_equals_c(n, p)));
        }
        for w in 1..=3 {
            for l in Shape::all_of_weight(w, n, w) {
                jobs.push(one(move || verify_filtration(&l, n)));
            }
        }
    }
    jobs
}

/// Expands `suite` into jobs, runs them on the current rayon pool, and
/// returns the sorted report.
pub fn run(suite: &str, a: &SuiteArgs, seed: u64) -> Result<SuiteReport> {
    let jobs: Vec<Job> = match suite {
        "capelli-identity" => capelli_identity_jobs(a, seed),
        "hook" => hook_jobs(a)?,
        "row-insertion" => insertion_jobs(a, verify_row_insertion)?,
        "expansion" => insertion_jobs(a, verify_expansion)?,
        "factorization" => factorization_jobs(a)?,
        "centrality" => centrality_jobs(a)?,
        "hc" => ranks(a, 1..=3).into_iter().map(|n| job(move || verify_hc_suite(n))).collect(),
        "koszul" => ranks(a, 1..=3).into_iter().map(|n| job(move || verify_koszul(n))).collect(),
        "proof-machinery" => law_jobs(a, seed)?,
        "one-row" => ranks(a, 1..=4).into_iter().map(|n| one(move || verify_one_row(n))).collect(),
        "invariants" => invariant_jobs(a),
        _ => bail!("unknown suite {suite:?}; known: {}", SUITES.join(", ")),
    };
    let mut report = SuiteReport::new(suite);
    for (k, v) in [("n", a.n), ("p", a.p), ("d", a.d)] {
        if let Some(v) = v {
            report = report.param(k, v);
        }
    }
    if let Some(s) = &a.shape {
        report = report.param("shape", s);
    }
    if let Some(m) = &a.subset {
        report = report.param("M", m);
    }
    if let Some(e) = &a.element {
        report = report.param("element", e);
    }
    if matches!(suite, "capelli-identity" | "proof-machinery") {
        report = report.param("seed", seed);
    }
    report.extend(jobs.into_par_iter().flat_map_iter(|j| j()).collect::<Vec<_>>());
    report.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_parsing() {
        assert_eq!(parse_subset("1,2").unwrap(), vec![1, 2]);
        assert!(parse_subset("").unwrap().is_empty());
        assert!(parse_subset("a").is_err());
        assert_eq!(subsets(2), vec![vec![], vec![1], vec![2], vec![1, 2]]);
    }

    #[test]
    fn unknown_suite() {
        assert!(run("nope", &SuiteArgs::default(), 0).is_err());
    }
}
