use std::fs::File;
use std::io::{self, IsTerminal, Write};
use std::path::Path;

use serde::Serialize;

use crate::args::Format;

/// Something a command can print in each output format.
pub trait Render {
    fn json(&self) -> String;
    fn csv(&self) -> String;
    fn text(&self, color: bool) -> String;
}

pub fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize") + "\n"
}

pub fn json_document<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}

pub fn paint(text: &str, ok: bool, color: bool) -> String {
    if color {
        format!("\x1b[{}m{text}\x1b[0m", if ok { 32 } else { 31 })
    } else {
        text.to_string()
    }
}

pub fn emit(report: &dyn Render, format: Format, path: Option<&Path>) -> io::Result<()> {
    let color = path.is_none() && std::env::var_os("NO_COLOR").is_none() && io::stdout().is_terminal();
    let body = match format {
        Format::Json => report.json(),
        Format::Csv => report.csv(),
        Format::Text => report.text(color),
    };
    match path {
        Some(p) => File::create(p)?.write_all(body.as_bytes()),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}
