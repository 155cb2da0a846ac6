use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use serde_json::{json, Value};

use skeinlab::chars::CACHE_ENV;
use skeinlab::composite::{
    composite_invariant, frobenius_congruence, framed_composite, integrality_2z, integrality_z, r_reform, z_reform,
    Verdict,
};
use skeinlab::lmov::{congruent_skein_case, lmov_check, special_polynomial, special_polynomial_truncated};
use skeinlab::parallel::par_map;
use skeinlab::partitions::{Partition, PartitionPair};
use skeinlab::selftest::{run_all, run_suites, STRUCTURAL};
use skeinlab::skein::{framed_bracket, torus_full_invariant, LinkSpec};
use skeinlab::Error;

use crate::{config, Opts};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Engine(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Engine(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Engine(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "i/o: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_) | Error::LabelCountMismatch { .. } | Error::Parse(_) | Error::SizeMismatch(..) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Engine(e.to_string()),
        }
    }
}

fn usage(m: impl Into<String>) -> CliError {
    CliError::Usage(m.into())
}

/// A fully resolved job: flags merged over the config file.
pub struct Job {
    pub opts: Opts,
    pub out: Option<PathBuf>,
}

fn parse_ints(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| usage(format!("not an integer: {x:?}"))))
        .collect()
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, CliError> {
    let s = s.trim();
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.trim_start_matches('=');
            let (a, b) = (parse_ints(a)?, parse_ints(b)?);
            match (a.as_slice(), b.as_slice()) {
                ([a], [b]) if a <= b => Ok(*a..=*b),
                _ => Err(usage(format!("bad range {s:?}"))),
            }
        }
        None => match parse_ints(s)?.as_slice() {
            [k] => Ok(*k..=*k),
            _ => Err(usage(format!("bad range {s:?}"))),
        },
    }
}

fn merge(opts: &mut Opts, file: &BTreeMap<String, String>) -> Result<(), CliError> {
    let get = |k: &str| file.get(k).cloned();
    if opts.torus.is_none() {
        opts.torus = get("torus").map(|s| parse_ints(&s)).transpose()?;
    }
    opts.family = opts.family.take().or(get("family"));
    opts.pairs = opts.pairs.take().or(get("pairs"));
    opts.labels = opts.labels.take().or(get("labels"));
    opts.framing = opts.framing.take().or(get("framing"));
    opts.reversed = opts.reversed.take().or(get("reversed"));
    opts.k = opts.k.take().or(get("k"));
    opts.out = opts.out.take().or(get("out").map(PathBuf::from));
    let num = |k: &str| -> Result<Option<usize>, CliError> {
        get(k).map(|v| v.parse().map_err(|_| usage(format!("{k} = {v:?} is not a count")))).transpose()
    };
    if opts.p.is_none() {
        opts.p = num("p")?;
    }
    if opts.degree.is_none() {
        opts.degree = num("D")?;
    }
    if opts.order.is_none() {
        opts.order = num("K")?;
    }
    if opts.jobs.is_none() {
        opts.jobs = num("jobs")?;
    }
    if let Some(dir) = get("cache") {
        if std::env::var_os(CACHE_ENV).is_none() {
            std::env::set_var(CACHE_ENV, dir);
        }
    }
    Ok(())
}

fn verdict_json(v: &Verdict, shift: i64) -> Value {
    json!({
        "holds": v.holds,
        "failed": v.failed,
        "table": v.rows(shift),
    })
}

impl Job {
    pub fn resolve(mut opts: Opts) -> Result<Job, CliError> {
        if let Some(path) = opts.config.clone() {
            let file = config::load(&path).map_err(|e| usage(format!("{e:#}")))?;
            merge(&mut opts, &file)?;
        }
        let out = opts.out.clone();
        Ok(Job { opts, out })
    }

    #[cfg(feature = "parallel")]
    pub fn configure_threads(&self) -> Result<(), CliError> {
        if let Some(n) = self.opts.jobs {
            if n == 0 {
                return Err(usage("--jobs must be positive"));
            }
            // A second call in the same process (tests) keeps the first pool.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        Ok(())
    }

    #[cfg(not(feature = "parallel"))]
    pub fn configure_threads(&self) -> Result<(), CliError> {
        Ok(())
    }

    fn family(&self) -> &str {
        self.opts.family.as_deref().unwrap_or("torus")
    }

    pub fn spec(&self) -> Result<LinkSpec, CliError> {
        let framing = self.opts.framing.as_deref().map(parse_ints).transpose()?;
        let spec = match self.family() {
            "unknot" => LinkSpec::unknot(match framing.as_deref() {
                None => 0,
                Some([f]) => *f,
                Some(_) => return Err(usage("the unknot takes a single framing")),
            }),
            "torus" => {
                let Some(t) = &self.opts.torus else {
                    return Err(usage("--torus M N L is required"));
                };
                let (m, n, l) = (t[0], t[1], t[2]);
                if m <= 0 || l <= 0 {
                    return Err(usage("--torus needs m >= 1 and L >= 1"));
                }
                let spec = LinkSpec::torus(m as u32, n, l as usize)?;
                match framing {
                    Some(f) => spec.with_framing(f),
                    None => spec,
                }
            }
            other => return Err(usage(format!("unknown family {other:?}"))),
        };
        let spec = match &self.opts.reversed {
            Some(r) => {
                let idx = parse_ints(r)?;
                if idx.iter().any(|&i| i < 0) {
                    return Err(usage("--reversed takes 0-based component indices"));
                }
                spec.with_reversed(idx.into_iter().map(|i| i as usize))
            }
            None => spec,
        };
        spec.validate()?;
        if spec.reversed.iter().any(|&i| i >= spec.components()) {
            return Err(usage("--reversed names a component that does not exist"));
        }
        Ok(spec)
    }

    fn pairs(&self) -> Result<Vec<PartitionPair>, CliError> {
        let raw = self.opts.pairs.as_deref().ok_or_else(|| usage("--pairs is required"))?;
        let v: Vec<(Partition, Partition)> =
            serde_json::from_str(raw).map_err(|e| usage(format!("--pairs: {e}")))?;
        Ok(v.into_iter().map(|(a, b)| PartitionPair::new(a, b)).collect())
    }

    fn labels(&self) -> Result<Vec<Partition>, CliError> {
        let raw = self.opts.labels.as_deref().ok_or_else(|| usage("--labels is required"))?;
        serde_json::from_str(raw).map_err(|e| usage(format!("--labels: {e}")))
    }

    pub fn k_range(&self, default: RangeInclusive<i64>) -> Result<RangeInclusive<i64>, CliError> {
        let r = match &self.opts.k {
            Some(s) => parse_range(s)?,
            None => default,
        };
        if *r.start() < 0 {
            return Err(usage("k must be nonnegative"));
        }
        Ok(r)
    }

    fn prime_p(&self) -> Result<usize, CliError> {
        let p = self.opts.p.ok_or_else(|| usage("--p is required"))?;
        if p < 2 || (2..p).any(|d| p % d == 0) {
            return Err(usage(format!("--p {p} is not prime")));
        }
        Ok(p)
    }

    pub fn invariant(&self) -> Result<(Value, bool), CliError> {
        let (spec, pairs) = (self.spec()?, self.pairs()?);
        let r = torus_full_invariant(&spec, &pairs)?;
        Ok((
            json!({"command": "invariant", "spec": spec.to_string(), "pairs": pairs_json(&pairs),
                   "value": r.value.to_string(), "exact": r.value}),
            true,
        ))
    }

    pub fn bracket(&self) -> Result<(Value, bool), CliError> {
        let (spec, pairs) = (self.spec()?, self.pairs()?);
        let v = framed_bracket(&spec, &pairs)?;
        Ok((
            json!({"command": "bracket", "spec": spec.to_string(), "pairs": pairs_json(&pairs),
                   "value": v.to_string(), "exact": v}),
            true,
        ))
    }

    pub fn composite(&self, framed: bool) -> Result<(Value, bool), CliError> {
        let (spec, labels) = (self.spec()?, self.labels()?);
        let v = if framed {
            framed_composite(&spec, &labels)?
        } else {
            composite_invariant(&spec, &labels)?
        };
        Ok((
            json!({"command": "composite", "framed": framed, "spec": spec.to_string(), "labels": labels,
                   "value": v.to_string(), "exact": v}),
            true,
        ))
    }

    pub fn reform(&self) -> Result<(Value, bool), CliError> {
        let spec = self.spec()?;
        let (kind, v, verdict) = match (self.opts.p, &self.opts.labels) {
            (Some(p), None) => {
                if p == 0 {
                    return Err(usage("--p must be positive"));
                }
                let v = r_reform(&spec, p)?;
                let verdict = integrality_2z(&v);
                ("R", v, verdict)
            }
            (None, Some(_)) => {
                let v = z_reform(&spec, &self.labels()?)?;
                let verdict = integrality_z(&v);
                ("Z", v, verdict)
            }
            _ => return Err(usage("reform takes exactly one of --labels (Ž) or --p (Ř)")),
        };
        let holds = verdict.holds;
        Ok((
            json!({"command": "reform", "kind": kind, "spec": spec.to_string(), "p": self.opts.p,
                   "labels": self.opts.labels.as_ref().map(|_| self.labels().unwrap_or_default()),
                   "value": v.to_string(), "verdict": verdict_json(&verdict, 0)}),
            holds,
        ))
    }

    pub fn lmov(&self) -> Result<(Value, bool), CliError> {
        let (spec, labels) = (self.spec()?, self.labels()?);
        let d = self
            .opts
            .degree
            .unwrap_or_else(|| labels.iter().map(Partition::size).max().unwrap_or(1).max(1));
        let report = lmov_check(&spec, &labels, d)?;
        let holds = report.verdict.holds;
        let mut v = report.to_json();
        v["command"] = json!("lmov");
        v["D"] = json!(d);
        Ok((v, holds))
    }

    pub fn congruence(&self) -> Result<(Value, bool), CliError> {
        let p = self.prime_p()?;
        if self.family() == "t2" {
            let ks: Vec<i64> = self.k_range(0..=3)?.collect();
            let verdicts = par_map(&ks, |&k| congruent_skein_case(p, k));
            let mut cases = Vec::new();
            let mut all = true;
            for (k, v) in ks.iter().zip(verdicts) {
                let v = v?;
                all &= v.holds;
                cases.push(json!({"k": k, "verdict": verdict_json(&v, 0)}));
            }
            return Ok((json!({"command": "congruence", "family": "t2", "p": p, "cases": cases, "verdict": all}), all));
        }
        let spec = self.spec()?;
        let v = frobenius_congruence(&spec, p)?;
        Ok((
            json!({"command": "congruence", "spec": spec.to_string(), "p": p, "verdict": verdict_json(&v, 0)}),
            v.holds,
        ))
    }

    pub fn special(&self) -> Result<(Value, bool), CliError> {
        let (spec, pairs) = (self.spec()?, self.pairs()?);
        let v = match self.opts.order {
            Some(k) => special_polynomial_truncated(&spec, &pairs, k)?,
            None => special_polynomial(&spec, &pairs)?,
        };
        Ok((
            json!({"command": "special", "spec": spec.to_string(), "pairs": pairs_json(&pairs),
                   "value": v.to_string()}),
            true,
        ))
    }

    pub fn selftest(&self, quick: bool) -> Result<(Value, bool), CliError> {
        let reports = if quick { run_suites(STRUCTURAL) } else { run_all() };
        for r in &reports {
            let status = if r.passed() { "ok" } else { "FAILED" };
            eprintln!("{:<28} {:>6} checks  {status}  ({:.2}s)", r.name, r.checked, r.seconds);
        }
        let all = reports.iter().all(|r| r.passed());
        Ok((json!({"command": "selftest", "suites": reports, "passed": all}), all))
    }
}

pub fn pairs_json(pairs: &[PartitionPair]) -> Value {
    Value::Array(pairs.iter().map(|p| json!([p.pos, p.neg])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..3").unwrap(), 0..=3);
        assert_eq!(parse_range("1..=2").unwrap(), 1..=2);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn flags_override_file() {
        let mut opts = Opts {
            p: Some(3),
            ..Default::default()
        };
        let file = config::parse("p = 2\ntorus = 2 3 1\nK = 12").unwrap();
        merge(&mut opts, &file).unwrap();
        assert_eq!(opts.p, Some(3));
        assert_eq!(opts.torus, Some(vec![2, 3, 1]));
        assert_eq!(opts.order, Some(12));
    }
}
