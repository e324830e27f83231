//! Batch front-end: canonical-basis tables and verification suites.

use crate::alcove::{height, Window};
use crate::bridge::{
    reproduce_remark_2, verify_claim_2_6, verify_extremal_weights, verify_b_roundtrip, verify_prop_3_7, verify_theorem_5_5,
    Report,
};
use crate::error::{Error, Result};
use crate::loopmod::{tensor_canonical_basis_with, TensorIdx};
use crate::periodic::canonical_basis_with;
use crate::qcoeff::LaurentScalar;
use crate::rootdata::{dual_data, format_weight, omega_set, Composition, GlpWeight, HighestWeightData};
use crate::triangular::{Direction, ShiftBasis};
use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_UNCOVERED: i32 = 2;

pub const EXTREMAL_MAX_LEN: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Thm55,
    Prop37,
    Lemma343,
    Claim26,
    Remark2,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TriDirection {
    Auto,
    Pos,
    Neg,
}

impl TriDirection {
    fn resolve(self, default: Direction) -> Direction {
        match self {
            TriDirection::Auto => default,
            TriDirection::Pos => Direction::Pos,
            TriDirection::Neg => Direction::Neg,
        }
    }
}

#[derive(Clone, Debug, Parser)]
#[command(name = "perimod", version, about = "Canonical bases of periodic and tensor modules, and their comparison")]
pub struct Args {
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long, help = "composition as a comma list, e.g. 2,1")]
    pub c: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub window: i64,
    #[arg(long, help = "tensor weight as a comma list of e_1..e_p")]
    pub mu: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    #[arg(long = "tri-direction", value_enum, default_value_t = TriDirection::Auto)]
    pub tri_direction: TriDirection,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub d: usize,
    pub p: usize,
    pub c: Option<Composition>,
    pub window: i64,
    pub mu: Option<Vec<usize>>,
    pub format: Format,
    pub suite: Option<Suite>,
    pub tri_direction: TriDirection,
}

impl RunConfig {
    pub fn from_args(a: &Args) -> Result<Self> {
        let c = a.c.as_deref().map(Composition::parse).transpose()?;
        if let Some(c) = &c {
            if !c.is_partition() {
                return Err(Error::Composition(format!("{c} is not a partition")));
            }
        }
        let d = match (a.d, &c) {
            (Some(d), Some(c)) if d != c.total() => {
                return Err(Error::Composition(format!("{c} is not a composition of {d}")));
            }
            (Some(d), _) => d,
            (None, Some(c)) => c.total(),
            (None, None) => 0,
        };
        let p = a.p.unwrap_or(d + 1);
        if p == 0 {
            return Err(Error::Precondition("p must be at least 1".into()));
        }
        if a.window < 0 {
            return Err(Error::Precondition("window radius must be non-negative".into()));
        }
        let mu = a.mu.as_deref().map(|s| Composition::parse(s).map(|e| e.0)).transpose()?;
        Ok(RunConfig { d, p, c, window: a.window, mu, format: a.format, suite: a.suite, tri_direction: a.tri_direction })
    }

    fn data(&self) -> Result<HighestWeightData> {
        let c = self.c.as_ref().ok_or_else(|| Error::Precondition("--c is required".into()))?;
        dual_data(self.p, c)
    }

    fn require_p_above_d(&self) -> Result<()> {
        if self.p > self.d {
            Ok(())
        } else {
            Err(Error::Precondition(format!("verification needs p > d, got p={} d={}", self.p, self.d)))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub index: String,
    pub terms: Vec<(String, LaurentScalar)>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableOutput {
    pub meta: RunConfig,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportOutput {
    pub meta: RunConfig,
    pub reports: Vec<Report>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

pub fn tensor_index_label(t: &TensorIdx) -> String {
    let w: Vec<i64> = t.w.iter().map(|&x| x as i64 + 1).collect();
    format!("[{}|{}]", format_weight(&w), format_weight(&t.coset))
}

pub fn cmd_periodic_cb(cfg: &RunConfig) -> Result<(i32, TableOutput)> {
    let data = cfg.data()?;
    let table = canonical_basis_with(&data, &Window { radius: cfg.window }, cfg.tri_direction.resolve(Direction::Neg))?;
    let mut entries: Vec<_> = table.entries.iter().collect();
    entries.sort_by_cached_key(|e| (height(&e.alcove, &data.c), e.alcove.clone()));
    let rows = entries
        .into_iter()
        .map(|e| Row {
            index: e.alcove.to_string(),
            terms: e.terms.iter().map(|(a, c)| (a.to_string(), c.clone())).collect(),
            verified: e.verified,
        })
        .collect();
    let code = if table.uncovered.is_empty() { EXIT_OK } else { EXIT_UNCOVERED };
    Ok((code, TableOutput { meta: cfg.clone(), rows }))
}

fn coset_box(k: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|v| (-r..=r).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().filter(|v| v.iter().sum::<i64>() == 0).collect()
}

pub fn cmd_tensor_cb(cfg: &RunConfig) -> Result<(i32, TableOutput)> {
    let data = cfg.data()?;
    let e = cfg.mu.clone().ok_or_else(|| Error::Precondition("--mu is required".into()))?;
    if e.len() != cfg.p {
        return Err(Error::Dimension { expected: cfg.p, got: e.len() });
    }
    let mu = GlpWeight::from_e(&Composition(e));
    if !omega_set(cfg.p, cfg.d).contains(&mu) {
        return Err(Error::WeightRange(format!("{mu} is not a weight of degree {}", cfg.d)));
    }
    let basis = match tensor_canonical_basis_with(&data, &mu, cfg.tri_direction.resolve(Direction::Pos)) {
        Ok(b) => b,
        Err(Error::Span(_)) => return Ok((EXIT_UNCOVERED, TableOutput { meta: cfg.clone(), rows: vec![] })),
        Err(e) => return Err(e),
    };
    let q = &basis.quotient;
    let mut idx: Vec<TensorIdx> = q
        .reps
        .iter()
        .flat_map(|w| coset_box(data.c.parts().len(), cfg.window).into_iter().map(|coset| TensorIdx { w: w.clone(), coset }))
        .collect();
    idx.sort_by_cached_key(|t| (q.height(t), t.clone()));
    let mut rows = Vec::new();
    for t in idx {
        let v = basis.element(&t)?;
        rows.push(Row {
            index: tensor_index_label(&t),
            terms: v.iter().map(|(s, c)| (tensor_index_label(s), c.clone())).collect(),
            verified: basis.verified(&t),
        });
    }
    Ok((EXIT_OK, TableOutput { meta: cfg.clone(), rows }))
}

pub fn cmd_verify(cfg: &RunConfig, suite: Suite) -> Result<(i32, ReportOutput)> {
    let all = suite == Suite::All;
    let mut reports = Vec::new();
    if all || suite == Suite::Thm55 {
        cfg.require_p_above_d()?;
        reports.extend(verify_theorem_5_5(&cfg.data()?, &Window { radius: cfg.window })?);
    }
    if all || suite == Suite::Prop37 {
        cfg.require_p_above_d()?;
        reports.push(verify_prop_3_7(&cfg.data()?)?);
    }
    if all || suite == Suite::Lemma343 {
        cfg.require_p_above_d()?;
        reports.push(verify_extremal_weights(cfg.d, cfg.p, EXTREMAL_MAX_LEN)?);
        reports.push(verify_b_roundtrip(&cfg.data()?, &Window { radius: cfg.window })?);
    }
    if all || suite == Suite::Claim26 {
        reports.push(verify_claim_2_6(cfg.p, cfg.d)?);
    }
    if all || suite == Suite::Remark2 {
        reports.extend(reproduce_remark_2());
    }
    let code = if reports.iter().any(|r| r.status == crate::bridge::Status::Mismatch) { EXIT_FAILURE } else { EXIT_OK };
    Ok((code, ReportOutput { meta: cfg.clone(), reports }))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_table(t: &TableOutput, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => out = to_json(t)?,
        Format::Csv => {
            out.push_str("index,verified,term,coefficient\n");
            for r in &t.rows {
                for (i, c) in &r.terms {
                    let _ = writeln!(out, "{},{},{},{}", csv_field(&r.index), r.verified, csv_field(i), csv_field(&c.to_string()));
                }
            }
        }
        Format::Latex => {
            out.push_str("\\begin{tabular}{lll}\n\\hline\nindex & expansion & verified \\\\\n\\hline\n");
            for r in &t.rows {
                let terms: Vec<String> =
                    r.terms.iter().map(|(i, c)| format!("({})\\,\\mathtt{{{}}}", c.to_latex(), i)).collect();
                let _ = writeln!(out, "$\\mathtt{{{}}}$ & ${}$ & {} \\\\", r.index, terms.join(" + "), r.verified);
            }
            out.push_str("\\hline\n\\end{tabular}\n");
        }
    }
    Ok(out)
}

pub fn render_reports(r: &ReportOutput, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => out = to_json(r)?,
        Format::Csv => {
            out.push_str("claim,status,checked,params\n");
            for x in &r.reports {
                let status = serde_json::to_value(x.status).map_err(|e| Error::Inconsistent(e.to_string()))?;
                let _ = writeln!(out, "{},{},{},{}", x.claim, status.as_str().unwrap_or(""), x.checked, csv_field(&x.params.to_string()));
            }
        }
        Format::Latex => {
            out.push_str("\\begin{tabular}{lrl}\n\\hline\nclaim & checked & status \\\\\n\\hline\n");
            for x in &r.reports {
                let _ = writeln!(out, "{} & {} & {:?} \\\\", x.claim, x.checked, x.status);
            }
            out.push_str("\\hline\n\\end{tabular}\n");
        }
    }
    Ok(out)
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Inconsistent(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    if let Some(suite) = cfg.suite {
        let (code, r) = cmd_verify(cfg, suite)?;
        return Ok(Outcome { code, stdout: render_reports(&r, cfg.format)? });
    }
    let (code, t) = if cfg.mu.is_some() { cmd_tensor_cb(cfg)? } else { cmd_periodic_cb(cfg)? };
    Ok(Outcome { code, stdout: render_table(&t, cfg.format)? })
}

pub fn run<I, T>(argv: I) -> (Outcome, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_FAILURE } else { EXIT_OK };
            return (Outcome { code, stdout: String::new() }, e.to_string());
        }
    };
    match RunConfig::from_args(&args).and_then(|cfg| execute(&cfg)) {
        Ok(o) => (o, String::new()),
        Err(e) => (Outcome { code: EXIT_FAILURE, stdout: String::new() }, format!("error: {e}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (Outcome, String) {
        run(std::iter::once("perimod").chain(args.iter().copied()))
    }

    #[test]
    fn periodic_rank_one_table() {
        let (o, _) = go(&["--c", "2", "--p", "3", "--window", "0"]);
        assert_eq!(o.code, EXIT_OK);
        let t: TableOutput = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].terms.len(), 1);
        assert!(t.rows[0].verified);
    }

    #[test]
    fn invalid_composition_fails() {
        let (o, err) = go(&["--c", "1,2"]);
        assert_eq!(o.code, EXIT_FAILURE);
        assert!(err.contains("partition"));
        let (o, _) = go(&["--c", "2,1", "--d", "4"]);
        assert_eq!(o.code, EXIT_FAILURE);
        let (o, _) = go(&["--bogus"]);
        assert_eq!(o.code, EXIT_FAILURE);
    }

    #[test]
    fn tensor_table_validates_weight() {
        let (o, _) = go(&["--c", "2,1", "--p", "4", "--mu", "0,1,1,1"]);
        assert_eq!(o.code, EXIT_OK);
        let (o, _) = go(&["--c", "2,1", "--p", "4", "--mu", "1,1"]);
        assert_eq!(o.code, EXIT_FAILURE);
        let (o, _) = go(&["--c", "2,1", "--p", "4", "--mu", "1,1,1,1"]);
        assert_eq!(o.code, EXIT_FAILURE);
    }

    #[test]
    fn full_column_tensor_table_is_diagonal() {
        let (o, _) = go(&["--c", "3", "--p", "4", "--mu", "0,1,1,1", "--window", "0"]);
        assert_eq!(o.code, EXIT_OK);
        let t: TableOutput = serde_json::from_str(&o.stdout).unwrap();
        assert!(!t.rows.is_empty());
        for r in &t.rows {
            assert_eq!(r.terms.len(), 1);
            assert_eq!(r.terms[0].0, r.index);
            assert!(r.terms[0].1.is_one());
        }
    }

    #[test]
    fn formats_render() {
        for f in ["csv", "latex"] {
            let (o, _) = go(&["--c", "1,1", "--p", "3", "--window", "1", "--format", f]);
            assert_eq!(o.code, EXIT_OK);
            assert!(!o.stdout.is_empty());
        }
        let (o, _) = go(&["--suite", "remark2", "--format", "csv"]);
        assert!(o.stdout.starts_with("claim,status"));
    }

    #[test]
    fn verify_requires_p_above_d() {
        let (o, err) = go(&["--c", "2,1", "--p", "3", "--suite", "prop37"]);
        assert_eq!(o.code, EXIT_FAILURE);
        assert!(err.contains("p > d"));
        let (o, _) = go(&["--c", "2,1", "--p", "4", "--suite", "prop37"]);
        assert_eq!(o.code, EXIT_OK);
    }

    #[test]
    fn claim_suite_with_square_case() {
        let (o, _) = go(&["--d", "3", "--p", "3", "--suite", "claim26"]);
        assert_eq!(o.code, EXIT_OK);
        let r: ReportOutput = serde_json::from_str(&o.stdout).unwrap();
        assert!(r.reports[0].passed());
    }

    #[test]
    fn help_exits_cleanly() {
        let (o, msg) = go(&["--help"]);
        assert_eq!(o.code, EXIT_OK);
        assert!(msg.contains("--tri-direction"));
    }
}
