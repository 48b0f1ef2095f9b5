//! Structured analysis reports and their text rendering.
//!
//! The [`AnalysisReport`] bundles everything the library can say about one
//! algebra: Hilbert function, Betti table, Macaulay growth check, the
//! random Lefschetz probe, the exact Hessian-based strong Lefschetz
//! decision, and Jordan types. Reports serialize to JSON with rational
//! numbers rendered as strings, and render to a stable human-readable
//! text layout; both forms are deterministic for a fixed seed.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::apolarity::{dual_generator_from_ideal, DualGenerator, HVector};
use crate::artin::{slp_jordan_type, ArtinAlgebra, LinearForm, ProbeTrial};
use crate::classify::{CiReport, ConjectureReport, EquigeneratedReport, K4Report};
use crate::error::{Error, Result};
use crate::exactla::Rat;
use crate::hessian::{has_slp, SlpDecision};
use crate::polyring::{max_variable_index, Alphabet, Poly, RingSpec};
use crate::resolution::{
    betti_table, check_macaulay, hilbert_from_betti, BettiTable, MacaulayViolation,
};

/// Tuning knobs for the random Lefschetz probe inside [`analyze`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: i64,
}

impl Default for AnalyzeOptions {
    fn default() -> AnalyzeOptions {
        AnalyzeOptions {
            seed: 0,
            trials: 5,
            coeff_bound: 10,
        }
    }
}

/// Echo of what the caller supplied, kept verbatim in the report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputEcho {
    /// `"dual"` or `"ideal"`.
    pub kind: String,
    pub text: String,
    pub socle: Option<usize>,
}

impl InputEcho {
    pub fn dual(text: &str) -> InputEcho {
        InputEcho {
            kind: "dual".to_string(),
            text: text.to_string(),
            socle: None,
        }
    }

    pub fn ideal(text: &str, socle: usize) -> InputEcho {
        InputEcho {
            kind: "ideal".to_string(),
            text: text.to_string(),
            socle: Some(socle),
        }
    }
}

/// One probed candidate, with rational coefficients as strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrialReport {
    pub description: String,
    pub coefficients: Vec<String>,
    pub display: String,
    pub wlp: bool,
    pub slp: bool,
    pub jordan: Vec<usize>,
}

/// The exact strong Lefschetz decision from the Hessian zero-tests.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SlpCertificate {
    pub holds: bool,
    pub witness: Option<Vec<String>>,
    pub witness_display: Option<String>,
    /// When the property fails, the order whose Hessian determinant
    /// vanishes identically.
    pub vanishing_order: Option<usize>,
}

/// The random probe plus the exact certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LefschetzReport {
    pub seed: u64,
    pub random_trials: usize,
    pub coeff_bound: i64,
    pub probes: Vec<TrialReport>,
    pub wlp_witness: Option<Vec<String>>,
    pub wlp_witness_display: Option<String>,
    pub slp_witness: Option<Vec<String>>,
    pub slp_witness_display: Option<String>,
    pub certificate: SlpCertificate,
}

/// Lefschetz data for one caller-specified linear form.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EllReport {
    pub coefficients: Vec<String>,
    pub display: String,
    pub wlp: bool,
    pub slp: bool,
    pub jordan: Vec<usize>,
}

/// Macaulay growth-bound check of the Hilbert function.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MacaulayReport {
    pub ok: bool,
    pub violations: Vec<MacaulayViolation>,
}

/// Everything the library can say about one algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub n: usize,
    pub socle_degree: usize,
    pub dual_generator: String,
    pub hilbert_function: HVector,
    pub nondegenerate: bool,
    pub cone: bool,
    pub minimal_generator_degrees: Vec<usize>,
    pub betti: BettiTable,
    pub betti_totals: Vec<usize>,
    /// Whether the Betti-derived Hilbert function matches the direct one.
    pub hilbert_consistent: bool,
    pub macaulay: MacaulayReport,
    pub lefschetz: LefschetzReport,
    /// Jordan type of the certified witness (the exact certificate's
    /// witness when the property holds, otherwise the probe's weak
    /// Lefschetz witness if one was found).
    pub jordan_type: Option<Vec<usize>>,
    pub conjugate_sorted_hilbert: Vec<usize>,
    pub jordan_is_conjugate_hilbert: Option<bool>,
    pub requested_ell: Option<EllReport>,
}

fn rat_strings(coeffs: &[Rat]) -> Vec<String> {
    coeffs.iter().map(|c| c.to_string()).collect()
}

fn form_strings(ell: &LinearForm) -> Vec<String> {
    rat_strings(ell.coefficients())
}

fn partition_string(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("({})", inner.join(","))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn trial_report(trial: &ProbeTrial) -> TrialReport {
    TrialReport {
        description: trial.description.clone(),
        coefficients: form_strings(&trial.candidate),
        display: trial.candidate.to_string(),
        wlp: trial.wlp,
        slp: trial.slp,
        jordan: trial.jordan.parts().to_vec(),
    }
}

/// Parses a comma-separated list of rational coefficients into a linear
/// form, e.g. `1,1,1,1` or `3/2,-1,0,2`.
pub fn parse_linear_form(text: &str) -> Result<LinearForm> {
    let mut coeffs = Vec::new();
    let mut offset = 0usize;
    for part in text.split(',') {
        let trimmed = part.trim();
        let c = Rat::from_str(trimmed).map_err(|e| Error::Parse {
            position: offset,
            message: format!("invalid rational coefficient `{trimmed}`: {e}"),
        })?;
        coeffs.push(c);
        offset += part.len() + 1;
    }
    Ok(LinearForm(coeffs))
}

fn infer_nvars(texts: &[&str], explicit: Option<usize>) -> Result<usize> {
    if let Some(n) = explicit {
        if n == 0 {
            return Err(Error::InvalidInput(
                "the number of variables must be at least 1".to_string(),
            ));
        }
        return Ok(n);
    }
    texts
        .iter()
        .filter_map(|t| max_variable_index(t))
        .max()
        .ok_or_else(|| {
            Error::InvalidInput(
                "cannot infer the number of variables from the input; pass --n".to_string(),
            )
        })
}

/// Parses a dual generator in the uppercase alphabet, inferring the
/// number of variables from the largest index used unless given.
pub fn dual_from_text(text: &str, n: Option<usize>) -> Result<DualGenerator> {
    let n = infer_nvars(&[text], n)?;
    let form = RingSpec::new(n).parse_as(text, Alphabet::Dual)?;
    DualGenerator::new(form)
}

/// Parses a comma-separated generator list in the lowercase alphabet.
pub fn ideal_from_text(text: &str, n: Option<usize>) -> Result<Vec<Poly>> {
    let parts: Vec<&str> = text.split(',').collect();
    let n = infer_nvars(&parts, n)?;
    let ring = RingSpec::new(n);
    parts
        .iter()
        .map(|p| ring.parse_as(p, Alphabet::Operator))
        .collect()
}

/// Parses an ideal and recovers the dual generator of its socle-degree
/// `socle` Gorenstein quotient.
pub fn dual_from_ideal_text(text: &str, socle: usize, n: Option<usize>) -> Result<DualGenerator> {
    let gens = ideal_from_text(text, n)?;
    dual_generator_from_ideal(&gens, socle)
}

/// Runs the full analysis pipeline on one dual generator.
pub fn analyze(
    dual: DualGenerator,
    input: InputEcho,
    opts: &AnalyzeOptions,
    requested: Option<&LinearForm>,
) -> Result<AnalysisReport> {
    let algebra = ArtinAlgebra::build(dual);
    if let Some(ell) = requested {
        if ell.nvars() != algebra.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "the linear form has {} coefficients but the ring has {} variables",
                ell.nvars(),
                algebra.nvars()
            )));
        }
    }
    let h = algebra.hilbert_function().clone();
    let betti = betti_table(&algebra);
    let hilbert_consistent = hilbert_from_betti(&betti).is_ok_and(|derived| derived == h);
    let violations = check_macaulay(&h);
    let probe = algebra.probe_lefschetz(opts.seed, opts.trials, opts.coeff_bound)?;
    let decision = has_slp(&algebra);

    let certificate = match &decision {
        SlpDecision::Holds { witness } => SlpCertificate {
            holds: true,
            witness: Some(form_strings(witness)),
            witness_display: Some(witness.to_string()),
            vanishing_order: None,
        },
        SlpDecision::Fails { vanishing_order } => SlpCertificate {
            holds: false,
            witness: None,
            witness_display: None,
            vanishing_order: Some(*vanishing_order),
        },
    };

    let certified = match &decision {
        SlpDecision::Holds { witness } => Some(witness.clone()),
        SlpDecision::Fails { .. } => probe.wlp_witness.clone(),
    };
    let jordan = match &certified {
        Some(w) => Some(algebra.jordan_type(w)?),
        None => None,
    };
    debug_assert!(jordan.as_ref().is_none_or(|j| j.total() == h.total()));
    let expected = slp_jordan_type(&h);
    let jordan_is_conjugate_hilbert = jordan.as_ref().map(|j| *j == expected);

    let requested_ell = match requested {
        Some(ell) => Some(EllReport {
            coefficients: form_strings(ell),
            display: ell.to_string(),
            wlp: algebra.has_wlp_at(ell)?,
            slp: algebra.has_slp_at(ell)?,
            jordan: algebra.jordan_type(ell)?.parts().to_vec(),
        }),
        None => None,
    };

    Ok(AnalysisReport {
        input,
        n: algebra.nvars(),
        socle_degree: algebra.socle_degree(),
        dual_generator: algebra.dual().form().to_string(),
        hilbert_function: h,
        nondegenerate: algebra.dual().is_nondegenerate(),
        cone: algebra.dual().is_cone(),
        minimal_generator_degrees: algebra.ideal().generator_degrees(),
        betti_totals: betti.totals(),
        hilbert_consistent,
        macaulay: MacaulayReport {
            ok: violations.is_empty(),
            violations,
        },
        lefschetz: LefschetzReport {
            seed: opts.seed,
            random_trials: opts.trials,
            coeff_bound: opts.coeff_bound,
            probes: probe.trials.iter().map(trial_report).collect(),
            wlp_witness: probe.wlp_witness.as_ref().map(form_strings),
            wlp_witness_display: probe.wlp_witness.as_ref().map(|w| w.to_string()),
            slp_witness: probe.slp_witness.as_ref().map(form_strings),
            slp_witness_display: probe.slp_witness.as_ref().map(|w| w.to_string()),
            certificate,
        },
        jordan_type: jordan.as_ref().map(|j| j.parts().to_vec()),
        conjugate_sorted_hilbert: expected.parts().to_vec(),
        jordan_is_conjugate_hilbert,
        requested_ell,
        betti,
    })
}

impl AnalysisReport {
    /// Stable human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.input.socle {
            Some(s) => writeln!(
                out,
                "input ({}, socle {}): {}",
                self.input.kind, s, self.input.text
            )
            .unwrap(),
            None => writeln!(out, "input ({}): {}", self.input.kind, self.input.text).unwrap(),
        }
        writeln!(out, "n: {}", self.n).unwrap();
        writeln!(out, "socle degree: {}", self.socle_degree).unwrap();
        writeln!(out, "dual generator: {}", self.dual_generator).unwrap();
        writeln!(out, "Hilbert function: {}", self.hilbert_function).unwrap();
        writeln!(out, "nondegenerate: {}", yes_no(self.nondegenerate)).unwrap();
        writeln!(out, "cone: {}", yes_no(self.cone)).unwrap();
        writeln!(
            out,
            "minimal generator degrees: {:?}",
            self.minimal_generator_degrees
        )
        .unwrap();
        if self.macaulay.ok {
            writeln!(out, "Macaulay growth bounds: satisfied").unwrap();
        } else {
            writeln!(
                out,
                "Macaulay growth bounds: {} violation(s)",
                self.macaulay.violations.len()
            )
            .unwrap();
            for v in &self.macaulay.violations {
                writeln!(
                    out,
                    "  degree {}: value {} exceeds bound {}",
                    v.degree, v.value, v.bound
                )
                .unwrap();
            }
        }
        writeln!(out, "Betti table (totals {:?}):", self.betti_totals).unwrap();
        out.push_str(&self.betti.render_text());
        writeln!(
            out,
            "Betti-derived Hilbert function matches: {}",
            yes_no(self.hilbert_consistent)
        )
        .unwrap();
        out.push('\n');
        let lf = &self.lefschetz;
        writeln!(
            out,
            "Lefschetz probe: seed {}, random trials {}, coefficients in [-{}, {}]",
            lf.seed, lf.random_trials, lf.coeff_bound, lf.coeff_bound
        )
        .unwrap();
        for t in &lf.probes {
            writeln!(out, "  {}: {}", t.description, t.display).unwrap();
            writeln!(
                out,
                "    WLP {}, SLP {}, Jordan type {}",
                yes_no(t.wlp),
                yes_no(t.slp),
                partition_string(&t.jordan)
            )
            .unwrap();
        }
        match &lf.wlp_witness_display {
            Some(w) => writeln!(out, "WLP witness: {w}").unwrap(),
            None => writeln!(out, "WLP witness: none found").unwrap(),
        }
        match &lf.slp_witness_display {
            Some(w) => writeln!(out, "SLP witness: {w}").unwrap(),
            None => writeln!(out, "SLP witness: none found").unwrap(),
        }
        if lf.certificate.holds {
            writeln!(
                out,
                "exact SLP decision: holds, witness {}",
                lf.certificate.witness_display.as_deref().unwrap_or("?")
            )
            .unwrap();
        } else {
            writeln!(
                out,
                "exact SLP decision: fails, the order-{} Hessian determinant vanishes identically",
                lf.certificate.vanishing_order.unwrap_or(0)
            )
            .unwrap();
        }
        match &self.jordan_type {
            Some(j) => {
                writeln!(
                    out,
                    "Jordan type of the certified witness: {}",
                    partition_string(j)
                )
                .unwrap();
            }
            None => writeln!(out, "Jordan type of the certified witness: none").unwrap(),
        }
        writeln!(
            out,
            "conjugate of the sorted Hilbert function: {}",
            partition_string(&self.conjugate_sorted_hilbert)
        )
        .unwrap();
        if let Some(m) = self.jordan_is_conjugate_hilbert {
            writeln!(
                out,
                "witness Jordan type is strong Lefschetz: {}",
                yes_no(m)
            )
            .unwrap();
        }
        if let Some(e) = &self.requested_ell {
            out.push('\n');
            writeln!(out, "requested linear form: {}", e.display).unwrap();
            writeln!(
                out,
                "  WLP {}, SLP {}, Jordan type {}",
                yes_no(e.wlp),
                yes_no(e.slp),
                partition_string(&e.jordan)
            )
            .unwrap();
        }
        out
    }
}

/// Report for the `dual` command: an ideal's recovered dual generator.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DualReport {
    pub input: InputEcho,
    pub n: usize,
    pub socle_degree: usize,
    pub dual_generator: String,
    pub hilbert_function: HVector,
}

pub fn dual_report(text: &str, socle: usize, n: Option<usize>) -> Result<DualReport> {
    let dual = dual_from_ideal_text(text, socle, n)?;
    Ok(DualReport {
        input: InputEcho::ideal(text, socle),
        n: dual.nvars(),
        socle_degree: dual.socle_degree(),
        dual_generator: dual.form().to_string(),
        hilbert_function: dual.hilbert_function(),
    })
}

impl DualReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "input (ideal, socle {}): {}",
            self.socle_degree, self.input.text
        )
        .unwrap();
        writeln!(out, "n: {}", self.n).unwrap();
        writeln!(out, "dual generator: {}", self.dual_generator).unwrap();
        writeln!(out, "Hilbert function: {}", self.hilbert_function).unwrap();
        out
    }
}

/// Report for the `bounds` command: Macaulay growth check of an H-vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundsReport {
    pub hvector: HVector,
    pub symmetric: bool,
    pub ok: bool,
    pub violations: Vec<MacaulayViolation>,
}

pub fn bounds_report(h: HVector) -> BoundsReport {
    let violations = check_macaulay(&h);
    BoundsReport {
        symmetric: h.is_symmetric(),
        ok: violations.is_empty(),
        violations,
        hvector: h,
    }
}

impl BoundsReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "H-vector: {}", self.hvector).unwrap();
        writeln!(out, "symmetric: {}", yes_no(self.symmetric)).unwrap();
        if self.ok {
            writeln!(out, "Macaulay growth bounds: satisfied (valid O-sequence)").unwrap();
        } else {
            writeln!(
                out,
                "Macaulay growth bounds: {} violation(s)",
                self.violations.len()
            )
            .unwrap();
            for v in &self.violations {
                writeln!(
                    out,
                    "  degree {}: value {} exceeds bound {}",
                    v.degree, v.value, v.bound
                )
                .unwrap();
            }
        }
        out
    }
}

/// Report for the `jordan` command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JordanReport {
    pub input: InputEcho,
    pub n: usize,
    pub socle_degree: usize,
    pub hilbert_function: HVector,
    pub ell: EllReport,
    pub conjugate_sorted_hilbert: Vec<usize>,
    /// Whether the Jordan type equals the conjugate of the sorted
    /// Hilbert function, i.e. whether `ell` is strong Lefschetz.
    pub strong_lefschetz: bool,
}

pub fn jordan_report(
    dual: DualGenerator,
    input: InputEcho,
    ell: &LinearForm,
) -> Result<JordanReport> {
    let algebra = ArtinAlgebra::build(dual);
    if ell.nvars() != algebra.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "the linear form has {} coefficients but the ring has {} variables",
            ell.nvars(),
            algebra.nvars()
        )));
    }
    let h = algebra.hilbert_function().clone();
    let jordan = algebra.jordan_type(ell)?;
    let expected = slp_jordan_type(&h);
    Ok(JordanReport {
        input,
        n: algebra.nvars(),
        socle_degree: algebra.socle_degree(),
        hilbert_function: h,
        ell: EllReport {
            coefficients: form_strings(ell),
            display: ell.to_string(),
            wlp: algebra.has_wlp_at(ell)?,
            slp: algebra.has_slp_at(ell)?,
            jordan: jordan.parts().to_vec(),
        },
        conjugate_sorted_hilbert: expected.parts().to_vec(),
        strong_lefschetz: jordan == expected,
    })
}

impl JordanReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.input.socle {
            Some(s) => writeln!(
                out,
                "input ({}, socle {}): {}",
                self.input.kind, s, self.input.text
            )
            .unwrap(),
            None => writeln!(out, "input ({}): {}", self.input.kind, self.input.text).unwrap(),
        }
        writeln!(out, "n: {}", self.n).unwrap();
        writeln!(out, "socle degree: {}", self.socle_degree).unwrap();
        writeln!(out, "Hilbert function: {}", self.hilbert_function).unwrap();
        writeln!(out, "linear form: {}", self.ell.display).unwrap();
        writeln!(out, "Jordan type: {}", partition_string(&self.ell.jordan)).unwrap();
        writeln!(out, "WLP at this form: {}", yes_no(self.ell.wlp)).unwrap();
        writeln!(out, "SLP at this form: {}", yes_no(self.ell.slp)).unwrap();
        writeln!(
            out,
            "conjugate of the sorted Hilbert function: {}",
            partition_string(&self.conjugate_sorted_hilbert)
        )
        .unwrap();
        writeln!(
            out,
            "strong Lefschetz Jordan type: {}",
            yes_no(self.strong_lefschetz)
        )
        .unwrap();
        out
    }
}

/// Text rendering of the complete intersection classification.
pub fn render_ci_report(report: &CiReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "complete intersections with n = {}, socle degree = {}: {} degree tuple(s)",
        report.n,
        report.socle,
        report.degrees.len()
    )
    .unwrap();
    for ((degrees, table), h) in report
        .degrees
        .iter()
        .zip(&report.tables)
        .zip(&report.hvectors)
    {
        out.push('\n');
        writeln!(out, "degrees {degrees:?}: H = {h}").unwrap();
        out.push_str(&table.render_text());
    }
    out
}

/// Text rendering of the equigenerated classification.
pub fn render_equigenerated_report(report: &EquigeneratedReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "equigenerated ideals with H starting (1,4,...): search bound {}",
        report.search_bound
    )
    .unwrap();
    out.push('\n');
    writeln!(
        out,
        "quadric template solutions (k,a,b,e): {:?}",
        report.quadric_solutions
    )
    .unwrap();
    writeln!(
        out,
        "a complete intersection of four quadrics has socle degree {}, so the quadric template is {}",
        report.quadric_ci_socle,
        if report.quadric_excluded { "excluded" } else { "admissible" }
    )
    .unwrap();
    out.push_str(&report.quadric_ci_table.render_text());
    out.push('\n');
    writeln!(
        out,
        "cubic template: {} cubic generators, {} first syzygies in degree 4",
        report.cubic_d, report.cubic_e
    )
    .unwrap();
    writeln!(out, "H = {}", report.hvector).unwrap();
    out.push_str(&report.table.render_text());
    out
}

/// Text rendering of the constant-Hilbert-function table search.
pub fn render_k4_report(report: &K4Report) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "search for the Betti table of H = (1,4,4,4,4,1), bound {}",
        report.search_bound
    )
    .unwrap();
    if report.skipped.is_empty() {
        writeln!(out, "constraints skipped: none").unwrap();
    } else {
        writeln!(out, "constraints skipped: {}", report.skipped.join(", ")).unwrap();
    }
    writeln!(out, "eliminated, by first failing constraint:").unwrap();
    for (name, count) in &report.eliminated {
        writeln!(out, "  {name}: {count}").unwrap();
    }
    writeln!(out, "survivors: {}", report.survivor_count).unwrap();
    let shown = if report.survivors.len() > 10 {
        &report.survivors[..10]
    } else {
        &report.survivors[..]
    };
    for t in shown {
        out.push('\n');
        writeln!(out, "{t}").unwrap();
        out.push_str(&t.betti_table().render_text());
    }
    if report.survivor_count as usize > shown.len() {
        writeln!(
            out,
            "... and {} more",
            report.survivor_count as usize - shown.len()
        )
        .unwrap();
    }
    out
}

/// Text rendering of the conjectured-table consistency report.
pub fn render_conjecture_report(report: &ConjectureReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "conjectured Betti tables for H = {}: {} tables",
        report.target_hvector,
        report.tables.len()
    )
    .unwrap();
    writeln!(out, "all symmetric: {}", yes_no(report.all_symmetric)).unwrap();
    writeln!(
        out,
        "all Hilbert-consistent: {}",
        yes_no(report.all_hilbert_consistent)
    )
    .unwrap();
    writeln!(out, "all distinct: {}", yes_no(report.all_distinct)).unwrap();
    for (k, table) in report.tables.iter().enumerate() {
        out.push('\n');
        writeln!(out, "table {} (totals {:?}):", k + 1, table.totals()).unwrap();
        out.push_str(&table.render_text());
    }
    out.push('\n');
    writeln!(out, "entrywise partial order:").unwrap();
    writeln!(
        out,
        "  strictly comparable pairs: {}",
        report.comparable_pairs.len()
    )
    .unwrap();
    writeln!(out, "  antisymmetric: {}", yes_no(report.antisymmetric)).unwrap();
    writeln!(out, "  transitive: {}", yes_no(report.transitive)).unwrap();
    let edges: Vec<String> = report
        .hasse_edges
        .iter()
        .map(|(i, j)| format!("{} < {}", i + 1, j + 1))
        .collect();
    writeln!(out, "  covering relations: {}", edges.join(", ")).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn running_example_full_report() {
        let dual = dual_from_text("X1*X2*X3*X4^2", None).unwrap();
        let ell = LinearForm::ones(4);
        let report = analyze(
            dual,
            InputEcho::dual("X1*X2*X3*X4^2"),
            &AnalyzeOptions::default(),
            Some(&ell),
        )
        .unwrap();
        assert_eq!(report.n, 4);
        assert_eq!(report.socle_degree, 5);
        assert_eq!(report.hilbert_function.values(), &[1, 4, 7, 7, 4, 1]);
        assert!(report.nondegenerate);
        assert!(!report.cone);
        assert_eq!(report.minimal_generator_degrees, vec![2, 2, 2, 3]);
        assert_eq!(report.betti.entry(1, 2), 3);
        assert_eq!(report.betti_totals, vec![1, 4, 6, 4, 1]);
        assert!(report.hilbert_consistent);
        assert!(report.macaulay.ok);
        assert_eq!(report.lefschetz.probes.len(), 6);
        assert!(report.lefschetz.certificate.holds);
        assert!(report.lefschetz.slp_witness.is_some());
        assert_eq!(report.jordan_type, Some(vec![6, 4, 4, 4, 2, 2, 2]));
        assert_eq!(report.jordan_is_conjugate_hilbert, Some(true));
        let e = report.requested_ell.as_ref().unwrap();
        assert!(e.wlp && e.slp);
        assert_eq!(e.jordan, vec![6, 4, 4, 4, 2, 2, 2]);
        let text = report.to_text();
        assert!(text.contains("Hilbert function: (1,4,7,7,4,1)"));
        assert!(text.contains("exact SLP decision: holds"));
        assert!(text.contains("Jordan type of the certified witness: (6,4,4,4,2,2,2)"));
        assert_eq!(text, report.to_text());
    }

    #[test]
    fn ideal_input_recovers_the_dual_generator() {
        let dual = dual_from_ideal_text("x1^2,x2^2,x3*x4,x3^3-x4^3", 5, None).unwrap();
        assert_eq!(dual.hilbert_function().values(), &[1, 4, 7, 7, 4, 1]);
        let ell = parse_linear_form("1,1,1,1").unwrap();
        let report =
            jordan_report(dual, InputEcho::ideal("x1^2,x2^2,x3*x4,x3^3-x4^3", 5), &ell).unwrap();
        assert_eq!(report.ell.jordan, vec![6, 4, 4, 4, 2, 2, 2]);
        assert!(report.strong_lefschetz);
        assert!(report.ell.slp);
        assert!(report.to_text().contains("Jordan type: (6,4,4,4,2,2,2)"));
    }

    #[test]
    fn json_round_trips_exactly() {
        let dual = dual_from_text("X1*X2*X3", None).unwrap();
        let report = analyze(
            dual,
            InputEcho::dual("X1*X2*X3"),
            &AnalyzeOptions::default(),
            None,
        )
        .unwrap();
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(json, serde_json::to_string_pretty(&back).unwrap());
    }

    #[test]
    fn perazzo_report_records_the_exact_failure() {
        let dual = dual_from_text("X1*X4^2 + X2*X4*X5 + X3*X5^2", None).unwrap();
        let report = analyze(
            dual,
            InputEcho::dual("X1*X4^2 + X2*X4*X5 + X3*X5^2"),
            &AnalyzeOptions {
                seed: 3,
                trials: 2,
                coeff_bound: 5,
            },
            None,
        )
        .unwrap();
        assert!(!report.lefschetz.certificate.holds);
        assert_eq!(report.lefschetz.certificate.vanishing_order, Some(1));
        assert!(report.lefschetz.wlp_witness.is_none());
        assert_eq!(report.jordan_type, None);
        let text = report.to_text();
        assert!(text.contains("exact SLP decision: fails, the order-1 Hessian"));
        assert!(text.contains("WLP witness: none found"));
    }

    #[test]
    fn linear_form_parsing() {
        let ell = parse_linear_form("3/2, -1, 0, 2").unwrap();
        assert_eq!(ell.coefficients()[0], rat(3, 2));
        assert_eq!(ell.coefficients()[1], rat(-1, 1));
        assert_eq!(ell.nvars(), 4);
        assert!(matches!(
            parse_linear_form("1,x,3"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_linear_form(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn mismatched_linear_form_length_errors() {
        let dual = dual_from_text("X1*X2*X3", None).unwrap();
        let ell = LinearForm::ones(4);
        assert!(matches!(
            analyze(
                dual,
                InputEcho::dual("X1*X2*X3"),
                &AnalyzeOptions::default(),
                Some(&ell)
            ),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn bounds_report_flags_violations() {
        let good = bounds_report(HVector(vec![1, 4, 7, 7, 4, 1]));
        assert!(good.ok && good.symmetric);
        assert!(good.to_text().contains("valid O-sequence"));
        let bad = bounds_report(HVector(vec![1, 2, 5]));
        assert!(!bad.ok);
        assert_eq!(bad.violations[0].degree, 2);
        assert!(bad.to_text().contains("value 5 exceeds bound 3"));
    }

    #[test]
    fn dual_command_report() {
        let report = dual_report("x1^2,x2^2,x3^2", 3, None).unwrap();
        assert_eq!(report.n, 3);
        assert_eq!(report.hilbert_function.values(), &[1, 3, 3, 1]);
        assert!(report.dual_generator.contains("X1*X2*X3"));
    }
}
