use serde::Serialize;

use ambitoric::classifier::{ClassificationReport, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub holds: bool,
    pub digest: String,
    pub millis: u128,
}

impl From<&Verdict> for Section {
    fn from(v: &Verdict) -> Self {
        Section { name: v.criterion.clone(), holds: v.holds, digest: v.witness.clone(), millis: v.millis }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub spec: String,
    pub sections: Vec<Section>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    spec: &'a str,
    criteria: Vec<&'a str>,
    verdicts: Vec<bool>,
    residual_digests: Vec<&'a str>,
    timings_ms: Vec<u128>,
    notes: &'a [String],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn from_classification(spec_text: String, c: &ClassificationReport) -> Self {
        let mut notes = c.notes.clone();
        if let (Some(pi), Some(p)) = (&c.pi, &c.p_part) {
            notes.push(format!("pi = {pi}, P = {p}"));
        }
        notes.push(format!("s+ = {}", c.s_plus));
        notes.push(format!("s- = {}", c.s_minus));
        if let Some(k) = &c.em_constant {
            notes.push(format!("Einstein-Maxwell constant c = {k}"));
        }
        Report { spec: spec_text, sections: c.verdicts.iter().map(Section::from).collect(), notes }
    }

    pub fn push(&mut self, name: impl Into<String>, holds: bool, digest: impl Into<String>, millis: u128) {
        self.sections.push(Section { name: name.into(), holds, digest: digest.into(), millis });
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => self.json(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for line in self.spec.lines() {
            out.push_str(&format!("# {line}\n"));
        }
        let width = self.sections.iter().map(|s| s.name.len()).max().unwrap_or(0);
        for s in &self.sections {
            let mark = if s.holds { "holds" } else { "FAILS" };
            out.push_str(&format!("{:width$}  {mark}  {}  ({} ms)\n", s.name, s.digest, s.millis));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }

    fn json(&self) -> String {
        let doc = JsonReport {
            spec: &self.spec,
            criteria: self.sections.iter().map(|s| s.name.as_str()).collect(),
            verdicts: self.sections.iter().map(|s| s.holds).collect(),
            residual_digests: self.sections.iter().map(|s| s.digest.as_str()).collect(),
            timings_ms: self.sections.iter().map(|s| s.millis).collect(),
            notes: &self.notes,
        };
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_json_is_valid() {
        let v: serde_json::Value = serde_json::from_str(&Report::default().emit(Format::Json)).unwrap();
        assert_eq!(v["verdicts"], serde_json::json!([]));
    }

    #[test]
    fn text_layout() {
        let mut r = Report { spec: "type: parabolic".into(), ..Default::default() };
        r.push("extremal", false, "a0+b0 = 2", 3);
        assert_eq!(r.emit(Format::Text), "# type: parabolic\nextremal  FAILS  a0+b0 = 2  (3 ms)\n");
    }
}
