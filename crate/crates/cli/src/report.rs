//! Report types: serialized as JSON, or rendered as plain text.

use std::fmt::Write;

use serde::Serialize;

use semigroup_norm::green::Partition;
use semigroup_norm::literature::{AxiomReport, AxiomStatus};
use semigroup_norm::minor_norm::WitnessReport;
use semigroup_norm::norms::Verdict;
use semigroup_norm::property::{Proposition, PropositionVerdict, Status};
use semigroup_norm::rational::format_rat;
use semigroup_norm::semigroup::ZeroElements;
use semigroup_norm::{ElementSet, GreenStructure, NormTable, Rat, ValidationReport};

pub trait Report: Serialize {
    fn passed(&self) -> bool;
    fn render_text(&self) -> String;
}

/// A finished command: both renderings plus the verdict that sets the exit code.
pub struct Output {
    pub json: String,
    pub text: String,
    pub passed: bool,
}

impl Output {
    pub fn of<R: Report>(report: &R) -> Self {
        Output {
            json: serde_json::to_string_pretty(report).expect("reports serialize"),
            text: report.render_text(),
            passed: report.passed(),
        }
    }
}

/// Integers without a denominator, everything else as `p/q`.
fn show(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_rat(r)
    }
}

fn show_set(s: &ElementSet) -> String {
    let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn show_partition(p: &Partition) -> String {
    let classes: Vec<String> = p.classes.iter().map(show_set).collect();
    classes.join(" ")
}

#[derive(Serialize)]
pub struct ValidateReport {
    pub semigroup: String,
    pub valid: bool,
    #[serde(flatten)]
    pub report: ValidationReport,
}

impl Report for ValidateReport {
    fn passed(&self) -> bool {
        self.valid
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.valid { "valid semigroup" } else { "NOT a semigroup" };
        writeln!(out, "{}: {verdict} (order {})", self.semigroup, self.report.order).unwrap();
        for e in &self.report.out_of_range {
            writeln!(out, "  entry {} at row {}, column {} is out of range", e.value, e.row, e.col).unwrap();
        }
        for [i, j, k] in &self.report.associativity_violations {
            writeln!(out, "  ({i}·{j})·{k} != {i}·({j}·{k})").unwrap();
        }
        out
    }
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub semigroup: String,
    pub order: usize,
    pub commutative: bool,
    pub identity: Option<usize>,
    pub group: bool,
    pub regular: bool,
    pub idempotents: ElementSet,
    /// `inverses[a]` is the set of inverses of `a`.
    pub inverses: Vec<ElementSet>,
    pub zeros: ZeroElements,
    pub green: GreenStructure,
    /// Pairs `(a, b)` with `a ≤ b` in the natural order.
    pub natural_order: Vec<(usize, usize)>,
}

impl Report for AnalyzeReport {
    fn passed(&self) -> bool {
        true
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(out, "{} (order {})", self.semigroup, self.order).unwrap();
        writeln!(out, "  commutative: {}", yn(self.commutative)).unwrap();
        match self.identity {
            Some(e) => writeln!(out, "  identity: {e}").unwrap(),
            None => writeln!(out, "  identity: none").unwrap(),
        }
        writeln!(out, "  group: {}", yn(self.group)).unwrap();
        writeln!(out, "  regular: {}", yn(self.regular)).unwrap();
        writeln!(out, "  idempotents: {}", show_set(&self.idempotents)).unwrap();
        for (a, v) in self.inverses.iter().enumerate() {
            writeln!(out, "  V({a}) = {}", show_set(v)).unwrap();
        }
        writeln!(out, "  left zeros: {}", show_set(&self.zeros.left)).unwrap();
        writeln!(out, "  right zeros: {}", show_set(&self.zeros.right)).unwrap();
        writeln!(out, "  zero: {}", show_set(&self.zeros.two_sided)).unwrap();
        writeln!(out, "  R-classes: {}", show_partition(&self.green.r_classes)).unwrap();
        writeln!(out, "  L-classes: {}", show_partition(&self.green.l_classes)).unwrap();
        writeln!(out, "  H-classes: {}", show_partition(&self.green.h_classes)).unwrap();
        writeln!(out, "  D-classes: {}", show_partition(&self.green.d_classes)).unwrap();
        let strict: Vec<String> = self
            .natural_order
            .iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| format!("{a}<{b}"))
            .collect();
        if strict.is_empty() {
            writeln!(out, "  natural order: equality").unwrap();
        } else {
            writeln!(out, "  natural order: {}", strict.join(" ")).unwrap();
        }
        out
    }
}

fn render_verdict(out: &mut String, v: &PropositionVerdict) {
    let status = match v.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Inapplicable => "INAPPLICABLE",
    };
    write!(out, "  {:<3} {status:<12} {}", v.proposition, v.proposition.summary()).unwrap();
    if let Some(w) = &v.witness {
        let pairs: Vec<String> = w
            .elements
            .iter()
            .zip(&w.values)
            .map(|(x, nu)| format!("ν({x})={}", show(nu)))
            .collect();
        write!(out, " [witness {}]", pairs.join(", ")).unwrap();
    }
    if let Some(d) = &v.detail {
        write!(out, " | {d}").unwrap();
    }
    out.push('\n');
}

#[derive(Serialize)]
pub struct NormCheckReport {
    pub semigroup: String,
    pub norm_source: String,
    pub norm: NormTable,
    pub submultiplicative: Verdict,
    pub propositions: Vec<PropositionVerdict>,
    pub axioms: AxiomReport,
    pub pass: bool,
}

impl Report for NormCheckReport {
    fn passed(&self) -> bool {
        self.pass
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let values: Vec<String> = self.norm.values().iter().map(show).collect();
        writeln!(out, "{} with norm {} = [{}]", self.semigroup, self.norm_source, values.join(", ")).unwrap();
        match &self.submultiplicative {
            Verdict::Pass => writeln!(out, "submultiplicative: PASS").unwrap(),
            Verdict::Fail { a, b, product, nu_product, nu_a, nu_b } => writeln!(
                out,
                "submultiplicative: FAIL at ({a}, {b}): ν({product}) = {} > {}·{}",
                show(nu_product),
                show(nu_a),
                show(nu_b)
            )
            .unwrap(),
        }
        writeln!(out, "structural laws:").unwrap();
        for v in &self.propositions {
            render_verdict(&mut out, v);
        }
        writeln!(out, "literature axioms ({:?} notation):", self.axioms.notation).unwrap();
        for d in &self.axioms.definitions {
            let parts: Vec<String> = d
                .axioms
                .iter()
                .map(|a| {
                    let s = match &a.status {
                        AxiomStatus::Holds => "holds",
                        AxiomStatus::Fails { .. } => "fails",
                        AxiomStatus::NotFinitelyCheckable => "not finitely checkable",
                        AxiomStatus::Inapplicable { .. } => "inapplicable",
                        AxiomStatus::Ambiguous => "ambiguous",
                    };
                    format!("{}: {s}", a.axiom)
                })
                .collect();
            writeln!(out, "  {:<8} {}", d.definition, parts.join("; ")).unwrap();
        }
        writeln!(out, "result: {}", if self.pass { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

#[derive(Serialize)]
pub struct Tally {
    pub proposition: Proposition,
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
}

#[derive(Serialize)]
pub struct FuzzFailure {
    pub norm_index: usize,
    pub norm: NormTable,
    pub verdict: PropositionVerdict,
}

#[derive(Serialize)]
pub struct FuzzReport {
    pub semigroup: String,
    pub order: usize,
    pub seed: u64,
    pub pool: Vec<String>,
    pub requested: usize,
    pub accepted: usize,
    pub attempts: usize,
    pub rejections: usize,
    /// Checker invocations, `accepted × 7`.
    pub checker_runs: usize,
    /// Invocations whose verdict was PASS or FAIL.
    pub applicable_runs: usize,
    pub fail_count: usize,
    pub tallies: Vec<Tally>,
    pub failures: Vec<FuzzFailure>,
    pub pass: bool,
}

impl Report for FuzzReport {
    fn passed(&self) -> bool {
        self.pass
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let pool: Vec<&str> = self.pool.iter().map(|p| p.strip_suffix("/1").unwrap_or(p)).collect();
        writeln!(out, "{} (order {}), seed {}, pool {{{}}}", self.semigroup, self.order, self.seed, pool.join(", ")).unwrap();
        writeln!(
            out,
            "norms: {}/{} accepted after {} attempts ({} rejected)",
            self.accepted, self.requested, self.attempts, self.rejections
        )
        .unwrap();
        writeln!(out, "  prop  pass  fail  inapplicable").unwrap();
        for t in &self.tallies {
            let p = t.proposition.to_string();
            writeln!(out, "  {p:<4} {:>5} {:>5} {:>13}", t.pass, t.fail, t.inapplicable).unwrap();
        }
        for f in &self.failures {
            write!(out, "norm #{}: ", f.norm_index).unwrap();
            render_verdict(&mut out, &f.verdict);
        }
        writeln!(
            out,
            "checker runs: {} ({} applicable), failures: {}",
            self.checker_runs, self.applicable_runs, self.fail_count
        )
        .unwrap();
        out
    }
}

/// An exact rational or a floating-point approximation.
#[derive(Serialize)]
#[serde(untagged)]
pub enum Number {
    Exact(String),
    Float(f64),
}

impl Number {
    fn text(&self) -> String {
        match self {
            Number::Exact(s) => s.strip_suffix("/1").unwrap_or(s).to_string(),
            Number::Float(x) => format!("{x:e}"),
        }
    }
}

#[derive(Serialize)]
pub struct MinorNormReport {
    pub matrix: String,
    pub mode: &'static str,
    pub n: usize,
    pub k: usize,
    pub coefficient: Number,
    pub nu_k: Number,
    pub rank: usize,
    pub in_n_k: bool,
}

impl Report for MinorNormReport {
    fn passed(&self) -> bool {
        true
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} ({}×{}, {} mode)", self.matrix, self.n, self.n, self.mode).unwrap();
        writeln!(out, "  ν_{}(a) = {} · max|minor| = {}", self.k, self.coefficient.text(), self.nu_k.text()).unwrap();
        writeln!(out, "  rank(a) = {}", self.rank).unwrap();
        let member = if self.in_n_k { "yes" } else { "no" };
        writeln!(out, "  a ∈ N_{}: {member}", self.k).unwrap();
        out
    }
}

pub fn conclusion(n: usize, k: usize, holds: bool) -> String {
    if holds {
        format!("N_{k} is not closed in M_{n}: x_m ∈ N_{k} for every m but lim x_m = 0 ∉ N_{k}")
    } else {
        format!("the sequence does not show that N_{k} is not closed in M_{n}")
    }
}

#[derive(Serialize)]
pub struct ExactWitness {
    pub mode: &'static str,
    #[serde(flatten)]
    pub report: WitnessReport,
    pub conclusion: String,
}

impl Report for ExactWitness {
    fn passed(&self) -> bool {
        self.report.n_k_not_closed
    }

    fn render_text(&self) -> String {
        let r = &self.report;
        let mut out = String::new();
        writeln!(out, "x_m = diag(I_{}/m, 0) in M_{}, ν_{} = {}·max|minor|", r.k, r.n, r.k, show(&r.coefficient)).unwrap();
        writeln!(out, "{:>4} {:>14} {:>5} {:>14} {:>10}", "m", "ν_k(x_m)", "rank", "ν_k(g_m)", "product").unwrap();
        for row in &r.sequence {
            writeln!(
                out,
                "{:>4} {:>14} {:>5} {:>14} {:>10}",
                row.m,
                show(&row.nu_k),
                row.rank,
                show(&row.nu_k_inverse),
                show(&row.product)
            )
            .unwrap();
        }
        writeln!(out, "limit: ν_{}(0) = {}", r.k, show(&r.nu_k_limit)).unwrap();
        writeln!(out, "{}", self.conclusion).unwrap();
        out
    }
}

#[derive(Serialize)]
pub struct FloatWitnessRow {
    pub m: usize,
    pub nu_k: f64,
    pub rank: usize,
    pub in_n_k: bool,
    pub nu_k_inverse: f64,
    pub product: f64,
}

#[derive(Serialize)]
pub struct FloatWitness {
    pub mode: &'static str,
    pub n: usize,
    pub k: usize,
    pub rel_tol: f64,
    pub sequence: Vec<FloatWitnessRow>,
    pub nu_k_limit: f64,
    pub limit_in_n_k: bool,
    pub n_k_not_closed: bool,
    pub conclusion: String,
}

impl Report for FloatWitness {
    fn passed(&self) -> bool {
        self.n_k_not_closed
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "x_m = diag(I_{}/m, 0) in M_{} (float mode, rel tol {:e})", self.k, self.n, self.rel_tol).unwrap();
        writeln!(out, "{:>4} {:>14} {:>5} {:>14} {:>10}", "m", "ν_k(x_m)", "rank", "ν_k(g_m)", "product").unwrap();
        for row in &self.sequence {
            writeln!(
                out,
                "{:>4} {:>14.6e} {:>5} {:>14.6e} {:>10.4}",
                row.m, row.nu_k, row.rank, row.nu_k_inverse, row.product
            )
            .unwrap();
        }
        writeln!(out, "limit: ν_{}(0) = {}", self.k, self.nu_k_limit).unwrap();
        writeln!(out, "{}", self.conclusion).unwrap();
        out
    }
}
