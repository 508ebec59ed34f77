//! One function per subcommand, each returning a serializable output.

use std::fmt::Write as _;
use std::path::Path;

use netvuln_core::betweenness::{edge_betweenness, p_search_profiles, Side};
use netvuln_core::fractal::{self, BoxCoverCurve};
use netvuln_core::vulnerability::{self, rb_attack, AttackTrace, TieRule};
use netvuln_core::{DistanceMatrix, Error as CoreError, FractalFit, Graph, VulnerabilityReport};
use serde::Serialize;

use crate::config::{AnalysisConfig, OutputFormat};
use crate::edgelist::parse_edge_list;
use crate::error::CliError;

/// A parsed graph plus the name used for it in reports.
pub struct Input {
    pub name: String,
    pub graph: Graph,
}

impl Input {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Input { name: name.into(), graph }
    }

    /// Reads an edge list from a file, or stdin for `-`.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let io = |source| CliError::Io { path: path.display().to_string(), source };
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin()).map_err(io)?
        } else {
            std::fs::read_to_string(path).map_err(io)?
        };
        Ok(Input::new(path.display().to_string(), parse_edge_list(&text)?))
    }
}

pub trait Render: Serialize {
    fn csv(&self) -> String;
    fn table(&self) -> String;

    fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        Ok(match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self)?;
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.csv(),
            OutputFormat::Table => self.table(),
        })
    }
}

fn csv_num(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_text(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn table_num(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.4}")).unwrap_or_else(|| "-".into())
}

fn table_rows(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

fn fit_or_error(fit: Result<FractalFit, CoreError>) -> (Option<FractalFit>, Option<String>) {
    match fit {
        Ok(f) => (Some(f), None),
        Err(e) => (None, Some(e.to_string())),
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalyzeOutput {
    pub graph: String,
    #[serde(flatten)]
    pub report: VulnerabilityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit: Option<FractalFit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit_error: Option<String>,
}

pub fn run_analyze(input: &Input, cfg: &AnalysisConfig) -> Result<AnalyzeOutput, CliError> {
    cfg.validate()?;
    let a = vulnerability::analyze(&input.graph, &cfg.analysis())?;
    let (fit, fit_error) = fit_or_error(a.fit);
    Ok(AnalyzeOutput { graph: input.name.clone(), report: a.report, fit, fit_error })
}

pub const REPORT_CSV_HEADER: &str = "graph,n,edgeCount,vDB,dB,b1Raw,b1Normalized,bNor,invGeo,lcs";

fn report_csv_row(name: &str, r: &VulnerabilityReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        csv_text(name),
        r.n,
        r.edge_count,
        csv_num(r.v_db),
        csv_num(r.d_b),
        csv_num(r.b1_raw),
        csv_num(r.b1_normalized),
        csv_num(r.b_nor),
        csv_num(r.inv_geo),
        csv_num(r.lcs),
    )
}

fn report_table_rows(r: &VulnerabilityReport) -> Vec<(&'static str, String)> {
    vec![
        ("N", r.n.to_string()),
        ("|E|", r.edge_count.to_string()),
        ("d_B", table_num(r.d_b)),
        ("V_dB", table_num(r.v_db)),
        ("b_1", table_num(r.b1_raw)),
        ("b_1 (normalized)", table_num(r.b1_normalized)),
        ("b_nor", table_num(r.b_nor)),
        ("l^-1", table_num(r.inv_geo)),
        ("LCS", table_num(r.lcs)),
    ]
}

impl Render for AnalyzeOutput {
    fn csv(&self) -> String {
        format!("{REPORT_CSV_HEADER}\n{}\n", report_csv_row(&self.graph, &self.report))
    }

    fn table(&self) -> String {
        let mut rows = vec![("graph", self.graph.clone())];
        rows.extend(report_table_rows(&self.report));
        if let Some(f) = &self.fit {
            rows.push(("fit r^2", format!("{:.4}", f.r2)));
            rows.push(("fit range", format!("{}..{}", f.fit_range.0, f.fit_range.1)));
        }
        if let Some(e) = &self.fit_error {
            rows.push(("fit error", e.clone()));
        }
        table_rows(&rows)
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CompareOutput {
    pub graph_a: String,
    pub graph_b: String,
    pub normalized: bool,
    pub b1_a: f64,
    pub b1_b: f64,
    pub indistinguishable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_star: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bp_a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bp_b: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub more_vulnerable: Option<String>,
    /// `(p, f(p))`, oriented so the more vulnerable graph comes first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_curve: Option<Vec<(u32, f64)>>,
    /// `(p, b_p(A) - b_p(B))` when no exponent separates the graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_curve: Option<Vec<(u32, f64)>>,
    pub verdict: String,
}

pub fn run_compare(a: &Input, b: &Input, cfg: &AnalysisConfig) -> Result<CompareOutput, CliError> {
    cfg.validate()?;
    let ps = cfg.p_search();
    let pa = edge_betweenness(&a.graph);
    let pb = edge_betweenness(&b.graph);
    let b1_a = pa.bp(1.0, ps.normalized)?;
    let b1_b = pb.bp(1.0, ps.normalized)?;
    let mut out = CompareOutput {
        graph_a: a.name.clone(),
        graph_b: b.name.clone(),
        normalized: ps.normalized,
        b1_a,
        b1_b,
        indistinguishable: false,
        p_star: None,
        bp_a: None,
        bp_b: None,
        more_vulnerable: None,
        f_curve: None,
        delta_curve: None,
        verdict: String::new(),
    };
    match p_search_profiles(&pa, &pb, &ps) {
        Ok(r) => {
            let name = match r.more_vulnerable {
                Side::A => &a.name,
                Side::B => &b.name,
            };
            out.verdict = format!("{name} is more vulnerable (p* = {})", r.p_star);
            out.p_star = Some(r.p_star);
            out.bp_a = Some(r.bp_a);
            out.bp_b = Some(r.bp_b);
            out.more_vulnerable = Some(name.clone());
            out.f_curve = Some(r.f_curve);
        }
        Err(CoreError::Indistinguishable { curve }) => {
            out.indistinguishable = true;
            out.verdict = format!("indistinguishable for p <= {}", ps.p_max);
            out.delta_curve = Some(curve);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

impl Render for CompareOutput {
    fn csv(&self) -> String {
        let mut out = String::from(
            "graphA,graphB,b1A,b1B,pStar,bpA,bpB,moreVulnerable,indistinguishable,verdict\n",
        );
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            csv_text(&self.graph_a),
            csv_text(&self.graph_b),
            self.b1_a,
            self.b1_b,
            self.p_star.map(|p| p.to_string()).unwrap_or_default(),
            csv_num(self.bp_a),
            csv_num(self.bp_b),
            csv_text(self.more_vulnerable.as_deref().unwrap_or("")),
            self.indistinguishable,
            csv_text(&self.verdict),
        );
        let (head, curve) = match (&self.f_curve, &self.delta_curve) {
            (Some(c), _) => ("p,f", c),
            (None, Some(c)) => ("p,delta", c),
            (None, None) => return out,
        };
        let _ = writeln!(out, "\n{head}");
        for (p, v) in curve {
            let _ = writeln!(out, "{p},{v}");
        }
        out
    }

    fn table(&self) -> String {
        let rows = vec![
            ("graph A", self.graph_a.clone()),
            ("graph B", self.graph_b.clone()),
            ("b_1(A)", table_num(Some(self.b1_a))),
            ("b_1(B)", table_num(Some(self.b1_b))),
            ("p*", self.p_star.map(|p| p.to_string()).unwrap_or_else(|| "-".into())),
            ("b_p*(A)", table_num(self.bp_a)),
            ("b_p*(B)", table_num(self.bp_b)),
            ("verdict", self.verdict.clone()),
        ];
        table_rows(&rows)
    }
}

/// Post-attack row in the layout of a robustness comparison table.
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AttackRow {
    #[serde(rename = "vDB", skip_serializing_if = "Option::is_none")]
    pub v_db: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inv_geo_normalized: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lcs_normalized: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_nor_post: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_nor_ratio: Option<f64>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AttackOutput {
    pub graph: String,
    #[serde(flatten)]
    pub trace: AttackTrace,
    pub row: AttackRow,
}

pub fn run_attack(input: &Input, cfg: &AnalysisConfig) -> Result<AttackOutput, CliError> {
    cfg.validate()?;
    let trace = rb_attack(&input.graph, cfg.attack_fraction, TieRule::SmallestIndex)?;
    let a = vulnerability::analyze(&input.graph, &cfg.analysis())?;
    let row = AttackRow {
        v_db: a.report.v_db,
        inv_geo_normalized: trace.normalized_post.inv_geo,
        lcs_normalized: trace.normalized_post.lcs,
        b_nor_post: trace.post.b_nor,
        b_nor_ratio: trace.normalized_post.b_nor,
    };
    Ok(AttackOutput { graph: input.name.clone(), trace, row })
}

impl Render for AttackOutput {
    fn csv(&self) -> String {
        let r = &self.row;
        let mut out =
            String::from("graph,fraction,removed,vDB,invGeoNormalized,lcsNormalized,bNorPost,bNorRatio\n");
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            csv_text(&self.graph),
            self.trace.fraction,
            self.trace.removed.len(),
            csv_num(r.v_db),
            csv_num(r.inv_geo_normalized),
            csv_num(r.lcs_normalized),
            csv_num(r.b_nor_post),
            csv_num(r.b_nor_ratio),
        );
        let _ = writeln!(out, "\nstep,label,index,betweenness");
        for (i, v) in self.trace.removed.iter().enumerate() {
            let _ = writeln!(out, "{},{},{},{}", i + 1, csv_text(&v.label), v.index, v.betweenness);
        }
        out
    }

    fn table(&self) -> String {
        let r = &self.row;
        let mut out = table_rows(&[
            ("graph", self.graph.clone()),
            ("removed", format!("{} of {}", self.trace.removed.len(), self.trace.initial.n)),
            ("V_dB", table_num(r.v_db)),
            ("~l^-1", table_num(r.inv_geo_normalized)),
            ("~LCS", table_num(r.lcs_normalized)),
            ("b_nor (post)", table_num(r.b_nor_post)),
            ("b_nor ratio", table_num(r.b_nor_ratio)),
        ]);
        out.push('\n');
        for (i, v) in self.trace.removed.iter().enumerate() {
            let _ = writeln!(out, "{:>4}  {}  {:.4}", i + 1, v.label, v.betweenness);
        }
        out
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoxcoverOutput {
    pub graph: String,
    pub seed: u64,
    pub curve: BoxCoverCurve,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit: Option<FractalFit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit_error: Option<String>,
}

pub fn run_boxcover(input: &Input, cfg: &AnalysisConfig) -> Result<BoxcoverOutput, CliError> {
    cfg.validate()?;
    let dm = DistanceMatrix::compute(&input.graph);
    let curve = fractal::box_cover_curve_with(&dm, &cfg.box_cover())?;
    let (fit, fit_error) = fit_or_error(fractal::fit_dimension(&curve, &cfg.fit_options()));
    Ok(BoxcoverOutput { graph: input.name.clone(), seed: cfg.seed, curve, fit, fit_error })
}

impl Render for BoxcoverOutput {
    /// Two-column `lB,meanNB` plot data, then the fit summary.
    fn csv(&self) -> String {
        let mut out = String::from("lB,meanNB\n");
        for (l, m) in self.curve.sizes.iter().zip(&self.curve.mean_nb) {
            let _ = writeln!(out, "{l},{m}");
        }
        match (&self.fit, &self.fit_error) {
            (Some(f), _) => {
                let _ = writeln!(out, "\ndB,intercept,r2,fitLo,fitHi");
                let _ = writeln!(out, "{},{},{},{},{}", f.d_b, f.intercept, f.r2, f.fit_range.0, f.fit_range.1);
            }
            (None, Some(e)) => {
                let _ = writeln!(out, "\nfitError\n{}", csv_text(e));
            }
            (None, None) => {}
        }
        out
    }

    fn table(&self) -> String {
        let mut out = String::from("  l_B      N_B\n");
        for (l, m) in self.curve.sizes.iter().zip(&self.curve.mean_nb) {
            let _ = writeln!(out, "{l:>5}  {m:>9.4}");
        }
        match (&self.fit, &self.fit_error) {
            (Some(f), _) => {
                let _ = writeln!(
                    out,
                    "\nd_B = {:.4}  r^2 = {:.4}  range = {}..{}",
                    f.d_b, f.r2, f.fit_range.0, f.fit_range.1
                );
            }
            (None, Some(e)) => {
                let _ = writeln!(out, "\nfit error: {e}");
            }
            (None, None) => {}
        }
        out
    }
}
