//! Report assembly and rendering for the analyze subcommand.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use vlab_core::decomp::{self, SymDecomp, UnimodalityGuarantee};
use vlab_core::diagnostics::{self, ChainReport, DiagnosticsReport};
use vlab_core::error::{Error, Result};
use vlab_core::hecke::UnResult;
use vlab_core::roots::{self, RootReport};
use vlab_core::series::HVector;

pub fn bigint_list(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

pub fn un_json(result: &UnResult) -> Value {
    json!({
        "h": result.input.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "d": result.d(),
        "n": result.n,
        "method": result.method.to_string(),
        "result": result.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn report_json(report: &DiagnosticsReport) -> Value {
    json!({
        "op": report.op,
        "all_hold": report.all_hold(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "status": c.status.to_string(),
            "witness": c.witness,
            "margin": c.margin.as_ref().map(|m| m.to_string()),
        })).collect::<Vec<_>>(),
    })
}

fn skipped(reason: &Error) -> Value {
    json!({ "skipped": reason.to_string() })
}

pub struct AnalysisReport {
    h: HVector,
    un: UnResult,
    parts: SymDecomp,
    betke: Result<DiagnosticsReport>,
    leading: DiagnosticsReport,
    refined: Result<DiagnosticsReport>,
    hibi: Result<DiagnosticsReport>,
    ahs: DiagnosticsReport,
    shape: DiagnosticsReport,
    chain: ChainReport,
    unimodality: Result<UnimodalityGuarantee>,
    roots: RootReport,
    cauchy: Option<BigRational>,
}

impl AnalysisReport {
    pub fn build(h: &HVector, un: &UnResult, width: &BigRational) -> Result<Self> {
        let poly = un.as_poly();
        let roots = roots::sturm_real_roots_with_width(&poly, width);
        let cauchy = if poly.degree().is_some_and(|d| d >= 1) {
            Some(roots::cauchy_bound(&poly))
        } else {
            None
        };
        Ok(AnalysisReport {
            h: h.clone(),
            un: un.clone(),
            parts: decomp::decompose(h),
            betke: diagnostics::betke_mcmullen_bounds(h),
            leading: diagnostics::leading_coeff_bounds(h),
            refined: diagnostics::refined_bounds(h),
            hibi: diagnostics::hibi_inequalities(h),
            ahs: diagnostics::ahs_inequalities(h),
            shape: diagnostics::logconcave_unimodal(poly.coeffs()),
            chain: diagnostics::interlacing_chain(h, un.n)?,
            unimodality: decomp::certified_unimodality(h, un.n),
            roots,
            cauchy,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input h: {} (d = {})", self.h, self.h.d());
        let _ = writeln!(out, "U_{} h: {}", self.un.n, self.un);
        let _ = writeln!(out, "decomposition: a = {}, b = {}", self.parts.a, self.parts.b);

        let section = |out: &mut String, name: &str, r: &Result<DiagnosticsReport>| {
            match r {
                Ok(report) => {
                    let _ = write!(out, "{report}");
                }
                Err(e) => {
                    let _ = writeln!(out, "{name}: skipped ({e})");
                }
            }
        };
        section(&mut out, "betke-mcmullen-bounds", &self.betke);
        let _ = write!(out, "{}", self.leading);
        section(&mut out, "refined-bounds", &self.refined);
        section(&mut out, "hibi-inequalities", &self.hibi);
        let _ = write!(out, "{}", self.ahs);
        let _ = write!(out, "{}", self.shape);

        let _ = write!(out, "{}", self.chain.hypothesis);
        let _ = write!(out, "{}", self.chain.chain);
        let _ = write!(out, "{}", self.chain.unconditional);
        let _ = writeln!(
            out,
            "chain multiplier: m_d = {}, empirical = {}",
            self.chain.multiplier,
            self.chain
                .empirical_multiplier
                .as_ref()
                .map_or(String::from("-"), |m| m.to_string())
        );
        match &self.unimodality {
            Ok(g) => {
                let _ = writeln!(
                    out,
                    "unimodality certificate: holds = {}, threshold n_d = {}, certified = {}",
                    g.holds, g.threshold, g.certified
                );
            }
            Err(e) => {
                let _ = writeln!(out, "unimodality certificate: skipped ({e})");
            }
        }

        let _ = writeln!(
            out,
            "roots: degree {}, {} real ({} negative), simple = {}, all-real-simple-negative = {}",
            self.roots.degree,
            self.roots.real_root_count,
            self.roots.negative_root_count,
            self.roots.simple,
            self.roots.all_real_simple_negative
        );
        if let Some(bound) = &self.cauchy {
            let _ = writeln!(out, "root radius bound: {bound}");
        }
        for iv in &self.roots.intervals {
            let _ = writeln!(out, "  root in {iv}");
        }
        out
    }

    pub fn render_json(&self) -> Value {
        let result_section = |r: &Result<DiagnosticsReport>| match r {
            Ok(report) => report_json(report),
            Err(e) => skipped(e),
        };
        json!({
            "input": {
                "h": self.h.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "d": self.h.d(),
            },
            "dilated": un_json(&self.un),
            "decomposition": {
                "a": bigint_list(self.parts.a.coeffs()),
                "b": bigint_list(self.parts.b.coeffs()),
            },
            "diagnostics": {
                "betke_mcmullen": result_section(&self.betke),
                "leading_coeff_bounds": report_json(&self.leading),
                "refined_bounds": result_section(&self.refined),
                "hibi": result_section(&self.hibi),
                "ahs": report_json(&self.ahs),
                "shape": report_json(&self.shape),
            },
            "chain": {
                "hypothesis": report_json(&self.chain.hypothesis),
                "chain": report_json(&self.chain.chain),
                "unconditional": report_json(&self.chain.unconditional),
                "multiplier": self.chain.multiplier.to_string(),
                "empirical_multiplier": self.chain.empirical_multiplier.as_ref().map(|m| m.to_string()),
                "holds": self.chain.chain_holds(),
            },
            "unimodality_certificate": match &self.unimodality {
                Ok(g) => json!({
                    "holds": g.holds,
                    "threshold": g.threshold,
                    "certified": g.certified,
                    "witness": g.witness,
                }),
                Err(e) => skipped(e),
            },
            "roots": {
                "degree": self.roots.degree,
                "real_root_count": self.roots.real_root_count,
                "negative_root_count": self.roots.negative_root_count,
                "zero_multiplicity": self.roots.zero_multiplicity,
                "simple": self.roots.simple,
                "all_real_simple_negative": self.roots.all_real_simple_negative,
                "cauchy_bound": self.cauchy.as_ref().map(|b| b.to_string()),
                "intervals": self.roots.intervals.iter().map(|iv| json!({
                    "lo": iv.lo.to_string(),
                    "hi": iv.hi.to_string(),
                    "exact": iv.is_point(),
                })).collect::<Vec<_>>(),
            },
        })
    }
}
