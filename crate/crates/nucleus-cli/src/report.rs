use std::collections::BTreeMap;

use serde::Serialize;

use nucleus_core::classify::{Property, SpectrumModel, Value, Verdict};

/// Stable identifier of the JSON report schema.
pub const REPORT_SCHEMA: &str = "nucleus-report/1";

/// A machine-readable report; the text renderers print the same content.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    pub lines: Vec<ReportLine>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum ReportLine {
    Verdict {
        property: String,
        value: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        range: Option<(i32, i32)>,
        provenance: Vec<String>,
    },
    Text {
        text: String,
    },
}

impl Report {
    pub fn new(command: impl Into<String>, subject: Option<String>) -> Report {
        Report {
            schema: REPORT_SCHEMA,
            command: command.into(),
            subject,
            lines: Vec::new(),
        }
    }

    pub fn push_text(&mut self, text: impl Into<String>) {
        self.lines.push(ReportLine::Text { text: text.into() });
    }

    pub fn push_verdict(&mut self, v: &Verdict) {
        self.lines.push(ReportLine::Verdict {
            property: v.property.name().to_string(),
            value: v.value.to_string(),
            range: v.range,
            provenance: v.provenance.clone(),
        });
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(subject) = &self.subject {
            out.push_str(subject);
            out.push('\n');
        }
        for line in &self.lines {
            match line {
                ReportLine::Text { text } => out.push_str(text),
                ReportLine::Verdict {
                    property,
                    value,
                    range,
                    provenance,
                } => {
                    out.push_str(&format!("{property}: {value}"));
                    if let Some((lo, hi)) = range {
                        out.push_str(&format!(" [degrees {lo}..{hi}]"));
                    }
                    if !provenance.is_empty() {
                        out.push_str(&format!(" [{}]", provenance.join("; ")));
                    }
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// The classify report: the command echo line plus one verdict per property
/// in a fixed order.
pub fn classification_report(
    model: &SpectrumModel,
    verdicts: &BTreeMap<Property, Verdict>,
    max_degree: i32,
) -> Report {
    let subject = format!(
        "spectrum {} (p = {}, bottom degree {}, max degree {max_degree})",
        model.name(),
        model.prime(),
        model.hurewicz_dim()
    );
    let mut report = Report::new("classify", Some(subject));
    for p in Property::ALL {
        report.push_verdict(&verdicts[&p]);
    }
    report
}

/// Yes/no/unknown counts, used by batch mode summaries.
pub fn verdict_counts(verdicts: &BTreeMap<Property, Verdict>) -> (usize, usize, usize) {
    let mut yes = 0;
    let mut no = 0;
    let mut unknown = 0;
    for v in verdicts.values() {
        match v.value {
            Value::Yes => yes += 1,
            Value::No => no += 1,
            Value::Unknown => unknown += 1,
        }
    }
    (yes, no, unknown)
}
