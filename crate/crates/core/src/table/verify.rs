use rayon::prelude::*;
use serde::Serialize;

use crate::bsg::BlockStructureGraph;
use crate::construction::{build_mother, lift_with, Anchoring, SlopeSequence};
use crate::girth::{g_max, girth_bsg};

use super::{CodeRecord, Flag};

/// Ways of reading a published slope sequence. The table never states
/// which circulant of a column carries the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interpretation {
    /// `S[k]` is the bottom block's exponent; the top block is `I^0`.
    TopAnchor,
    /// Every slope negated.
    Negated,
    /// `S[k]` is the top block's exponent; the bottom block is `I^0`.
    BottomAnchor,
}

impl Interpretation {
    pub const LADDER: [Interpretation; 3] = [
        Interpretation::TopAnchor,
        Interpretation::Negated,
        Interpretation::BottomAnchor,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterpretationOutcome {
    pub interpretation: Interpretation,
    pub girth: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Confirmed,
    ConfirmedUnderVariant,
    Erratum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordReport {
    pub b: usize,
    pub c: usize,
    pub a: usize,
    pub rate: String,
    pub m: usize,
    pub claimed_girth: usize,
    pub claimed_n: usize,
    pub computed_n: usize,
    pub sequence_length: usize,
    pub expected_sequence_length: usize,
    pub gmax: usize,
    pub flags: Vec<Flag>,
    pub structurally_consistent: bool,
    /// Empty when the sequence cannot be lifted (wrong length).
    pub interpretations: Vec<InterpretationOutcome>,
    pub matched_by: Option<Interpretation>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub confirmed: usize,
    pub confirmed_under_variant: usize,
    pub errata: usize,
    pub structurally_inconsistent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub girth_method: &'static str,
    pub records: Vec<RecordReport>,
    pub summary: Summary,
}

fn girth_under(record: &CodeRecord, interpretation: Interpretation) -> Option<usize> {
    let params = record.params();
    let mother = build_mother(params).ok()?;
    let seq = SlopeSequence::new(record.m, record.s.iter().copied()).ok()?;
    let (seq, anchoring) = match interpretation {
        Interpretation::TopAnchor => (seq, Anchoring::Top),
        Interpretation::Negated => (seq.negated(), Anchoring::Top),
        Interpretation::BottomAnchor => (seq, Anchoring::Bottom),
    };
    let code = lift_with(&mother, &seq, anchoring).ok()?;
    let result = girth_bsg(&BlockStructureGraph::from_lifted(&code)).ok()?;
    result.girth.value()
}

pub fn verify_record(record: &CodeRecord) -> RecordReport {
    let params = record.params();
    let flags = record.flags();
    let structurally_consistent = !flags.iter().any(|f| f.is_structural());
    let liftable = record.s.len() == params.block_cols();

    let interpretations: Vec<InterpretationOutcome> = if liftable {
        Interpretation::LADDER
            .iter()
            .map(|&interpretation| InterpretationOutcome {
                interpretation,
                girth: girth_under(record, interpretation),
            })
            .collect()
    } else {
        Vec::new()
    };
    let matched_by = interpretations
        .iter()
        .find(|o| o.girth == Some(record.g))
        .map(|o| o.interpretation);
    let verdict = match matched_by {
        Some(Interpretation::TopAnchor) => Verdict::Confirmed,
        Some(_) => Verdict::ConfirmedUnderVariant,
        None => Verdict::Erratum,
    };

    RecordReport {
        b: record.b,
        c: record.c,
        a: record.a,
        rate: record.rate.to_string(),
        m: record.m,
        claimed_girth: record.g,
        claimed_n: record.n,
        computed_n: record.m * params.block_cols(),
        sequence_length: record.s.len(),
        expected_sequence_length: params.block_cols(),
        gmax: g_max(&params),
        flags,
        structurally_consistent,
        interpretations,
        matched_by,
        verdict,
    }
}

/// Verifies every record; output order follows the input.
pub fn verify_table(records: &[CodeRecord]) -> VerificationReport {
    let reports: Vec<RecordReport> = records.par_iter().map(verify_record).collect();
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let summary = Summary {
        records: reports.len(),
        confirmed: count(Verdict::Confirmed),
        confirmed_under_variant: count(Verdict::ConfirmedUnderVariant),
        errata: count(Verdict::Erratum),
        structurally_inconsistent: reports
            .iter()
            .filter(|r| !r.structurally_consistent)
            .count(),
    };
    VerificationReport {
        girth_method: "bsg-walk",
        records: reports,
        summary,
    }
}

impl VerificationReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let girths: Vec<String> = r
                .interpretations
                .iter()
                .map(|o| o.girth.map_or("-".to_string(), |g| g.to_string()))
                .collect();
            let flags: Vec<String> = r
                .flags
                .iter()
                .map(|f| {
                    serde_json::to_value(f)
                        .unwrap()
                        .as_str()
                        .unwrap()
                        .to_string()
                })
                .collect();
            out.push_str(&format!(
                "b={} c={} a={} m={} n={} g={} computed=[{}] verdict={} flags=[{}]\n",
                r.b,
                r.c,
                r.a,
                r.m,
                r.claimed_n,
                r.claimed_girth,
                girths.join(","),
                serde_json::to_value(r.verdict).unwrap().as_str().unwrap(),
                flags.join(","),
            ));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "records={} confirmed={} confirmed-under-variant={} errata={} inconsistent={}\n",
            s.records,
            s.confirmed,
            s.confirmed_under_variant,
            s.errata,
            s.structurally_inconsistent
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::load_fixtures;

    #[test]
    fn first_row_is_confirmed() {
        let rows = load_fixtures();
        let r = verify_record(&rows[0]);
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.interpretations[0].girth, Some(40));
    }

    #[test]
    fn unliftable_rows_become_errata_not_failures() {
        let rows = load_fixtures();
        let row = rows.iter().find(|r| (r.b, r.c, r.a) == (3, 5, 5)).unwrap();
        let r = verify_record(row);
        assert!(r.interpretations.is_empty());
        assert_eq!(r.verdict, Verdict::Erratum);
        assert!(!r.structurally_consistent);
    }
}
