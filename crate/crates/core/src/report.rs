//! Line-oriented verification records and their JSON form. Rationals are
//! serialized as decimal strings of numerator and denominator so that every
//! table re-parses to the exact value emitted.

use serde::{Deserialize, Serialize};

use crate::exact::{Rational, UniPoly};

/// Exact rational as numerator/denominator strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalRepr {
    fn from(r: &Rational) -> Self {
        RationalRepr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl RationalRepr {
    pub fn parse(&self) -> Option<Rational> {
        let num = self.num.parse().ok()?;
        let den = self.den.parse().ok()?;
        Some(Rational::new(num, den))
    }
}

/// Ascending coefficient list of a polynomial, exact.
pub fn poly_repr(p: &UniPoly) -> Vec<RationalRepr> {
    p.coeffs().iter().map(RationalRepr::from).collect()
}

/// One verification record.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// Stable identifier of the identity family the check belongs to.
    #[serde(rename = "ref")]
    pub ref_id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A full suite report. `waivers` lists display defects in the source
/// tables that the recomputation overrides; they are informational and do
/// not fail the suite.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub waivers: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
            waivers: Vec::new(),
        }
    }

    pub fn record(&mut self, name: impl Into<String>, ref_id: impl Into<String>, outcome: crate::Result<()>) {
        let (status, counterexample) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        self.checks.push(CheckRecord {
            name: name.into(),
            ref_id: ref_id.into(),
            status,
            counterexample,
        });
    }

    pub fn pass(&mut self, name: impl Into<String>, ref_id: impl Into<String>) {
        self.record(name, ref_id, Ok(()));
    }

    pub fn waive(&mut self, text: impl Into<String>) {
        self.waivers.push(text.into());
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.waivers.extend(other.waivers);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn rationals_round_trip_through_strings() {
        let v = rat(-14843, 6);
        let repr = RationalRepr::from(&v);
        assert_eq!(repr.parse().unwrap(), v);
    }

    #[test]
    fn report_json_shape() {
        let mut r = Report::new("demo");
        r.pass("a", "family/a");
        r.record("b", "family/b", Err(crate::Error::violation("b", "k = 3")));
        r.waive("display defect overridden");
        let json = r.to_json();
        assert!(json.contains("\"suite\": \"demo\""));
        assert!(json.contains("\"ref\": \"family/a\""));
        assert!(json.contains("\"counterexample\""));
        assert!(!r.all_passed());
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back.checks.len(), 2);
    }
}
