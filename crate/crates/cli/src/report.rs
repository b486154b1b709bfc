//! Report payloads and their two serializations. JSON comes from serde with
//! struct field order, so identical inputs give identical bytes; the text
//! forms are line oriented and re-parse under the table and equation file
//! formats where they embed one.

use semikit::algebra::ReesTriple;
use semikit::classify::{ClassificationReport, QiResult, SurveyOutcome, Verdict};
use semikit::power::{ChainReport, ChainWitness, PowerSolutionSet};
use semikit::relational::SolutionSet;
use serde::Serialize;
use std::fmt::Write as _;

/// How many sample points a solve report shows before truncating.
pub const SAMPLE_CAP: usize = 20;

pub trait Render {
    fn text(&self) -> String;
}

fn ids(list: &[usize]) -> String {
    list.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn tuple(t: &[usize]) -> String {
    format!(
        "[{}]",
        t.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn qi_line(r: &QiResult) -> String {
    match &r.witness {
        None => "holds".to_string(),
        Some(w) => format!(
            "fails (a={}, b={}, alpha={}, beta={}; products {})",
            w.a,
            w.b,
            w.alpha,
            w.beta,
            ids(&w.products)
        ),
    }
}

#[derive(Serialize)]
pub struct CheckReport {
    pub command: &'static str,
    pub order: usize,
    pub classification: ClassificationReport,
}

impl Render for CheckReport {
    fn text(&self) -> String {
        let c = &self.classification;
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", self.order);
        let verdict = match c.verdict {
            Verdict::Simple => "simple",
            Verdict::Hard => "hard",
        };
        let _ = writeln!(out, "verdict: {verdict}");
        let _ = writeln!(out, "left qi: {}", qi_line(&c.qi_left));
        let _ = writeln!(out, "right qi: {}", qi_line(&c.qi_right));
        let _ = writeln!(out, "kernel: {}", ids(&c.kernel));
        let _ = writeln!(out, "reducible: {}", ids(&c.reducible));
        match (c.is_homogroup, c.kernel_identity) {
            (true, Some(e)) => {
                let _ = writeln!(out, "homogroup: yes, kernel identity {e}");
            }
            _ => {
                let _ = writeln!(out, "homogroup: no");
            }
        }
        let _ = writeln!(
            out,
            "rectangular band kernel: {}",
            if c.is_rect_band_kernel { "yes" } else { "no" }
        );
        out
    }
}

#[derive(Serialize)]
pub struct ReesReport {
    pub command: &'static str,
    pub group_order: usize,
    pub lambda_size: usize,
    pub i_size: usize,
    pub order: usize,
    pub simple: bool,
    pub labels: Vec<ReesTriple>,
    pub table: Vec<Vec<usize>>,
}

impl Render for ReesReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group order: {}", self.group_order);
        let _ = writeln!(out, "lambda size: {}", self.lambda_size);
        let _ = writeln!(out, "i size: {}", self.i_size);
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "simple: {}", if self.simple { "yes" } else { "no" });
        let _ = writeln!(out, "labels:");
        for (id, t) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "{id} = ({}, {}, {})", t.lambda, t.g, t.i);
        }
        let _ = writeln!(out, "table:");
        let _ = writeln!(out, "{}", self.order);
        for row in &self.table {
            let _ = writeln!(out, "{}", ids(row));
        }
        out
    }
}

#[derive(Serialize)]
pub struct KernelReport {
    pub command: &'static str,
    pub order: usize,
    pub kernel: Vec<usize>,
    pub reducible: Vec<usize>,
    pub kernel_equals_reducible: bool,
    pub is_homogroup: bool,
    pub kernel_identity: Option<usize>,
}

impl Render for KernelReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "kernel: {}", ids(&self.kernel));
        let _ = writeln!(out, "reducible: {}", ids(&self.reducible));
        let _ = writeln!(
            out,
            "kernel equals reducible: {}",
            if self.kernel_equals_reducible {
                "yes"
            } else {
                "no"
            }
        );
        match (self.is_homogroup, self.kernel_identity) {
            (true, Some(e)) => {
                let _ = writeln!(out, "homogroup: yes, kernel identity {e}");
            }
            _ => {
                let _ = writeln!(out, "homogroup: no");
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct RelationDump {
    pub name: String,
    pub arity: usize,
    pub tuples: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct PredicatizeReport {
    pub command: &'static str,
    pub universe: usize,
    pub relations: Vec<RelationDump>,
}

impl Render for PredicatizeReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "universe: {}", self.universe);
        for rel in &self.relations {
            let _ = writeln!(
                out,
                "relation {}/{}, {} tuples:",
                rel.name,
                rel.arity,
                rel.tuples.len()
            );
            for t in &rel.tuples {
                let _ = writeln!(out, "{}", ids(t));
            }
        }
        out
    }
}

/// One solution point: flat ids over the base, one tuple per variable over
/// a power.
#[derive(Serialize)]
#[serde(untagged)]
pub enum Point {
    Base(Vec<usize>),
    Power(Vec<Vec<usize>>),
}

impl Point {
    fn line(&self) -> String {
        match self {
            Point::Base(p) => ids(p),
            Point::Power(p) => p
                .iter()
                .map(|t| tuple(t))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

#[derive(Serialize)]
pub struct SolveReport {
    pub command: &'static str,
    pub variables: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<usize>,
    pub count: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Point>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated: Option<bool>,
}

impl SolveReport {
    pub fn from_base(sol: &SolutionSet, count_only: bool) -> Self {
        let points = (!count_only).then(|| {
            sol.points()
                .take(SAMPLE_CAP)
                .map(|p| Point::Base(p.to_vec()))
                .collect::<Vec<_>>()
        });
        let truncated = points.as_ref().map(|p| p.len() < sol.count());
        SolveReport {
            command: "solve",
            variables: sol.variables().to_vec(),
            exponent: None,
            count: sol.count() as u128,
            points,
            truncated,
        }
    }

    pub fn from_power(sol: &PowerSolutionSet, count_only: bool) -> Self {
        let points = (!count_only).then(|| {
            sol.points()
                .take(SAMPLE_CAP)
                .map(Point::Power)
                .collect::<Vec<_>>()
        });
        let truncated = points.as_ref().map(|p| (p.len() as u128) < sol.count());
        SolveReport {
            command: "solve",
            variables: sol.variables().to_vec(),
            exponent: Some(sol.exponent()),
            count: sol.count(),
            points,
            truncated,
        }
    }
}

impl Render for SolveReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "variables: {}", self.variables.join(" "));
        if let Some(n) = self.exponent {
            let _ = writeln!(out, "exponent: {n}");
        }
        let _ = writeln!(out, "count: {}", self.count);
        if let Some(points) = &self.points {
            if self.truncated == Some(true) {
                let _ = writeln!(out, "points (first {} of {}):", points.len(), self.count);
            } else {
                let _ = writeln!(out, "points ({}):", points.len());
            }
            for p in points {
                let _ = writeln!(out, "{}", p.line());
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct QiQuad {
    pub a: usize,
    pub b: usize,
    pub alpha: usize,
    pub beta: usize,
}

#[derive(Serialize)]
pub struct Inconsistency {
    pub coordinate: usize,
    pub witness: Vec<String>,
}

#[derive(Serialize)]
pub struct ReduceReport {
    pub command: &'static str,
    pub exponent: usize,
    pub original_atoms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qi_violated: Option<QiQuad>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inconsistent: Option<Inconsistency>,
}

impl Render for ReduceReport {
    // Every branch emits comment lines and atom lines only, so the text
    // form always re-parses as an equation file.
    fn text(&self) -> String {
        let mut out = String::new();
        if let Some(reduced) = &self.reduced {
            let _ = writeln!(
                out,
                "# reduced {} atoms to {} over exponent {}",
                self.original_atoms,
                reduced.len(),
                self.exponent
            );
            for atom in reduced {
                let _ = writeln!(out, "{atom}");
            }
        } else if let Some(w) = &self.qi_violated {
            let _ = writeln!(out, "# reduction impossible: quasi-identity violated");
            let _ = writeln!(
                out,
                "# witness a={} b={} alpha={} beta={}",
                w.a, w.b, w.alpha, w.beta
            );
        } else if let Some(inc) = &self.inconsistent {
            let _ = writeln!(
                out,
                "# inconsistent at coordinate {}; minimal witness:",
                inc.coordinate
            );
            for atom in &inc.witness {
                let _ = writeln!(out, "# {atom}");
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct ChainWitnessJson {
    pub side: &'static str,
    pub a: usize,
    pub b: usize,
    pub alpha: usize,
    pub beta: usize,
    pub c: usize,
}

impl From<&ChainWitness> for ChainWitnessJson {
    fn from(w: &ChainWitness) -> Self {
        ChainWitnessJson {
            side: match w.side {
                semikit::classify::QiSide::Left => "left",
                semikit::classify::QiSide::Right => "right",
            },
            a: w.a,
            b: w.b,
            alpha: w.alpha,
            beta: w.beta,
            c: w.c,
        }
    }
}

#[derive(Serialize)]
pub struct ChainViolationJson {
    pub prefix: usize,
    pub point: Vec<usize>,
    pub equation: usize,
    pub coordinate: usize,
}

#[derive(Serialize)]
pub struct ChainJson {
    pub command: &'static str,
    pub witness: ChainWitnessJson,
    pub exponent: usize,
    pub equations: Vec<String>,
    pub counts: Vec<u128>,
    pub violations: Vec<ChainViolationJson>,
}

impl ChainJson {
    pub fn from_report(rep: &ChainReport) -> Self {
        ChainJson {
            command: "chain",
            witness: (&rep.witness).into(),
            exponent: rep.exponent,
            equations: rep.equations.iter().map(|a| a.to_string()).collect(),
            counts: rep.prefix_counts.clone(),
            violations: rep
                .violations
                .iter()
                .map(|v| ChainViolationJson {
                    prefix: v.prefix,
                    point: v.point.clone(),
                    equation: v.equation,
                    coordinate: v.coordinate,
                })
                .collect(),
        }
    }
}

impl Render for ChainJson {
    fn text(&self) -> String {
        let mut out = String::new();
        let w = &self.witness;
        let _ = writeln!(
            out,
            "witness: {}, a={} b={} alpha={} beta={}, c={}",
            w.side, w.a, w.b, w.alpha, w.beta, w.c
        );
        let _ = writeln!(out, "exponent: {}", self.exponent);
        for (k, eq) in self.equations.iter().enumerate() {
            let _ = writeln!(out, "eq {}: {eq}", k + 1);
        }
        let _ = writeln!(
            out,
            "counts: {}",
            self.counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        for v in &self.violations {
            let _ = writeln!(
                out,
                "violation: point {} solves prefix {}, fails eq {} at coordinate {}",
                tuple(&v.point),
                v.prefix,
                v.equation,
                v.coordinate
            );
        }
        out
    }
}

/// Negative chain outcome: the table passes both quasi-identities.
#[derive(Serialize)]
pub struct ChainAbsent {
    pub command: &'static str,
    pub qi_holds: bool,
}

impl Render for ChainAbsent {
    fn text(&self) -> String {
        "both quasi-identities hold; no counterexample chain exists\n".to_string()
    }
}

#[derive(Serialize)]
pub struct SurveyReport {
    pub command: &'static str,
    pub iso: bool,
    pub outcome: SurveyOutcome,
}

impl Render for SurveyReport {
    fn text(&self) -> String {
        let o = &self.outcome;
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", o.order);
        let _ = writeln!(out, "tables: {}", o.total_tables);
        let _ = writeln!(out, "qi pass: {}", o.qi_pass_count);
        let _ = writeln!(out, "homogroup identity violations: {}", o.homogroup_identity_violations.len());
        let _ = writeln!(out, "qi kernel violations: {}", o.qi_kernel_violations.len());
        let _ = writeln!(out, "homogroup qi violations: {}", o.homogroup_qi_violations.len());
        let _ = writeln!(
            out,
            "conjecture counterexamples: {}",
            o.conjecture_counterexamples.len()
        );
        let mut block = |label: &str, tables: &[String]| {
            for t in tables {
                let _ = writeln!(out, "{label}:");
                out.push_str(t);
            }
        };
        block("homogroup identity violation", &o.homogroup_identity_violations);
        block("qi kernel violation", &o.qi_kernel_violations);
        block("homogroup qi violation", &o.homogroup_qi_violations);
        block("conjecture counterexample", &o.conjecture_counterexamples);
        out
    }
}

/// Rees construction report, labels in id order.
pub fn rees_report(
    spec: &semikit::algebra::ReesSpec,
    labeled: &semikit::algebra::LabeledSemigroup,
) -> ReesReport {
    let s = labeled.semigroup();
    let simple = s.kernel().members.len() == s.order();
    ReesReport {
        command: "rees",
        group_order: spec.group().base().order(),
        lambda_size: spec.lambda_size(),
        i_size: spec.i_size(),
        order: s.order(),
        simple,
        labels: labeled.labels().to_vec(),
        table: s.cayley().rows(),
    }
}
