//! Verification reports and their deterministic text/JSON renderings.

use serde::Serialize;

use crate::series::{Agreement, QSeries};
use crate::Rat;

/// Current JSON schema version emitted by the CLI.
pub const SCHEMA_VERSION: u32 = 1;

/// First point of disagreement between two compared series.
#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    /// Scaled exponent where the sides first differ.
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity (or table-row) verification.
///
/// `pass` implies exact coefficient agreement over the entire certified
/// window `[.., order_certified]` at the stated scale.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tag: String,
    pub params: String,
    pub scale: i64,
    pub order_certified: i64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<Discrepancy>,
    pub millis: u128,
}

impl VerificationReport {
    pub fn from_agreement(tag: &str, params: String, agreement: &Agreement, millis: u128) -> Self {
        Self {
            tag: tag.to_string(),
            params,
            scale: agreement.scale,
            order_certified: agreement.order,
            pass: agreement.pass,
            discrepancy: agreement.first_diff.as_ref().map(|(v, l, r)| Discrepancy {
                exponent: *v,
                lhs: l.to_string(),
                rhs: r.to_string(),
            }),
            millis,
        }
    }

    /// One human-readable line: `PASS R1 [a symbolic, x = q] certified t^120 (q^120)`.
    pub fn to_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let qord = Rat::new(self.order_certified, self.scale);
        let mut line = format!(
            "{} {} [{}] certified t^{} (q^{})",
            status, self.tag, self.params, self.order_certified, qord
        );
        if let Some(d) = &self.discrepancy {
            line.push_str(&format!(
                " first diff at t^{}: lhs = {} vs rhs = {}",
                d.exponent, d.lhs, d.rhs
            ));
        }
        line
    }
}

/// Envelope for a batch of reports (CLI `verify` output).
#[derive(Clone, Debug, Serialize)]
pub struct ReportSet {
    pub schema: u32,
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
}

impl ReportSet {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        let passed = reports.iter().filter(|r| r.pass).count();
        let failed = reports.len() - passed;
        Self { schema: SCHEMA_VERSION, reports, passed, failed }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// JSON value for one series: deterministic, ascending scaled exponents,
/// ascending a-exponents inside each coefficient, integer coefficients as
/// decimal strings.
pub fn series_to_json(x: &QSeries) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = x
        .iter()
        .map(|(v, c)| {
            let coeff: Vec<serde_json::Value> = c
                .iter()
                .map(|(e, n)| serde_json::json!([e, n.to_string()]))
                .collect();
            serde_json::json!({ "exp": v, "coeff": coeff })
        })
        .collect();
    serde_json::json!({
        "schema": SCHEMA_VERSION,
        "scale": x.scale(),
        "order": x.order(),
        "terms": terms,
    })
}
