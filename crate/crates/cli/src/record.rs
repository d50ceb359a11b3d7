//! Serialized output records and their JSON, CSV and table renderings.

use std::collections::BTreeMap;

use posgroup_core::{GroupSpec, LemmaReport, OrderSpectrum, PosVerdict};
use serde::{Deserialize, Serialize};

/// One `(order, count)` pair; both as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub order: String,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    /// Group order.
    pub order: String,
    /// Ascending by element order; empty when the verdict came from a counting argument.
    pub spectrum: Vec<Entry>,
    pub pos: bool,
    pub violations: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evidence: Option<LemmaReport>,
}

impl OutputRecord {
    pub fn new(spec: &GroupSpec, spectrum: Option<&OrderSpectrum>, verdict: &PosVerdict) -> Self {
        OutputRecord {
            family: spec.family_name().to_string(),
            params: spec.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            order: verdict.group_order.to_string(),
            spectrum: spectrum
                .map(|s| {
                    s.iter()
                        .map(|(d, c)| Entry {
                            order: d.to_string(),
                            count: c.to_string(),
                        })
                        .collect()
                })
                .unwrap_or_default(),
            pos: verdict.is_pos,
            violations: verdict
                .violations
                .iter()
                .map(|v| Entry {
                    order: v.order.to_string(),
                    count: v.count.to_string(),
                })
                .collect(),
            evidence: None,
        }
    }

    /// Parameter names in output order.
    fn param_names(&self) -> impl Iterator<Item = &String> {
        self.params.keys()
    }

    fn violations_field(&self) -> String {
        self.violations
            .iter()
            .map(|v| format!("{}:{}", v.order, v.count))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes") + "\n"
    }

    /// `family,<params…>,order,count`, one row per spectrum entry.
    pub fn spectrum_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["family".to_string()];
        header.extend(self.param_names().cloned());
        header.extend(["order".to_string(), "count".to_string()]);
        w.write_record(&header).unwrap();
        for e in &self.spectrum {
            let mut row = vec![self.family.clone()];
            row.extend(self.params.values().map(u64::to_string));
            row.extend([e.order.clone(), e.count.clone()]);
            w.write_record(&row).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn verdict_csv_header(&self) -> Vec<String> {
        let mut header = vec!["family".to_string()];
        header.extend(self.param_names().cloned());
        header.extend(["group_order", "pos", "violations"].map(String::from));
        header
    }

    pub fn verdict_csv_row(&self) -> Vec<String> {
        let mut row = vec![self.family.clone()];
        row.extend(self.params.values().map(u64::to_string));
        row.extend([self.order.clone(), self.pos.to_string(), self.violations_field()]);
        row
    }

    pub fn verdict_csv(&self) -> String {
        csv_table(&self.verdict_csv_header(), std::slice::from_ref(&self.verdict_csv_row()))
    }

    fn title(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        format!("{} {params}  |G| = {}", self.family, self.order)
    }

    pub fn spectrum_table(&self) -> String {
        let width = self.spectrum.iter().map(|e| e.order.len()).max().unwrap_or(0).max(5);
        let mut out = self.title() + "\n";
        out.push_str(&format!("{:>width$}  count\n", "order"));
        for e in &self.spectrum {
            out.push_str(&format!("{:>width$}  {}\n", e.order, e.count));
        }
        out
    }

    pub fn verdict_table(&self) -> String {
        let mut out = self.title() + "\n";
        out.push_str(&format!("pos: {}\n", self.pos));
        for v in &self.violations {
            out.push_str(&format!("violation: {} elements of order {}\n", v.count, v.order));
        }
        if let Some(report) = &self.evidence {
            out.push_str(&format!("evidence: {}\n", report.summary_line()));
        }
        out
    }
}

pub fn csv_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).unwrap();
    for row in rows {
        w.write_record(row).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use posgroup_core::{check_pos, spectrum_closed_form};

    fn record(spec: GroupSpec) -> OutputRecord {
        let spectrum = spectrum_closed_form(&spec).unwrap();
        OutputRecord::new(&spec, Some(&spectrum), &check_pos(&spec).unwrap())
    }

    #[test]
    fn json_round_trip() {
        for spec in [GroupSpec::symmetric(21).unwrap(), GroupSpec::z2_power(3, 4).unwrap()] {
            let rec = record(spec);
            let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
            assert_eq!(back, rec);
        }
    }

    #[test]
    fn dihedral_nine_csv() {
        let csv = record(GroupSpec::dihedral(9).unwrap()).spectrum_csv();
        assert_eq!(
            csv,
            "family,n,order,count\ndihedral,9,1,1\ndihedral,9,2,9\ndihedral,9,3,2\ndihedral,9,9,6\n"
        );
    }

    #[test]
    fn verdict_row() {
        let rec = record(GroupSpec::symmetric(4).unwrap());
        assert_eq!(rec.verdict_csv(), "family,n,group_order,pos,violations\nsymmetric,4,24,false,2:9\n");
    }

    #[test]
    fn big_counts_are_strings() {
        let rec = record(GroupSpec::symmetric(21).unwrap());
        let json = rec.to_json();
        assert!(json.contains("\"order\": \"51090942171709440000\""));
    }
}
