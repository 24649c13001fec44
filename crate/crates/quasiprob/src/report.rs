//! Command output: aligned text tables or one JSON document.

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Structured,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Section {
    pub heading: Option<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    pub fn new(heading: Option<&str>, columns: &[&str]) -> Self {
        Section {
            heading: heading.map(str::to_string),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// The result of one command. `ok` is false when a check or expectation
/// failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            ok: true,
            sections: Vec::new(),
        }
    }

    pub fn section(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Structured => self.structured(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        for (k, s) in self.sections.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            if let Some(h) = &s.heading {
                out.push_str(h);
                out.push('\n');
            }
            let widths: Vec<usize> = (0..s.columns.len())
                .map(|c| {
                    s.rows
                        .iter()
                        .map(|r| r[c].chars().count())
                        .chain([s.columns[c].chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                format!("{}\n", padded.join("  ").trim_end())
            };
            out.push_str(&line(&s.columns));
            out.push_str(&line(
                &widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>(),
            ));
            for r in &s.rows {
                out.push_str(&line(r));
            }
        }
        out.push_str(if self.ok { "\nresult: ok\n" } else { "\nresult: FAILED\n" });
        out
    }

    fn structured(&self) -> String {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let rows: Vec<Value> = s
                    .rows
                    .iter()
                    .map(|r| {
                        let obj: Map<String, Value> = s
                            .columns
                            .iter()
                            .cloned()
                            .zip(r.iter().map(|c| Value::from(c.as_str())))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let mut obj = Map::new();
                if let Some(h) = &s.heading {
                    obj.insert("heading".into(), h.as_str().into());
                }
                obj.insert("rows".into(), rows.into());
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("command".into(), self.command.as_str().into());
        doc.insert("ok".into(), self.ok.into());
        doc.insert("sections".into(), sections.into());
        let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("plain data");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("eval");
        let mut s = Section::new(Some("values"), &["statement", "value"]);
        s.push(["a", "1/2"]);
        s.push(["⊤", "1"]);
        r.section(s);
        r
    }

    #[test]
    fn aligned_table() {
        let text = sample().render(Format::Table);
        assert_eq!(
            text,
            "values\nstatement  value\n---------  -----\na          1/2\n⊤          1\n\nresult: ok\n"
        );
    }

    #[test]
    fn structured_document() {
        let v: Value = serde_json::from_str(&sample().render(Format::Structured)).unwrap();
        assert_eq!(v["command"], "eval");
        assert_eq!(v["sections"][0]["rows"][1]["value"], "1");
    }
}
