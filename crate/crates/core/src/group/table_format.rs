//! Plain-text Cayley tables: the order on the first line, then one row per
//! element of whitespace-separated 0-based indices.

use std::path::Path;

use super::{FiniteGroup, GroupError};

pub fn parse_table_text(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| GroupError::Parse("empty input".into()))?;
    let order: usize = header
        .parse()
        .map_err(|_| GroupError::Parse(format!("bad order line {header:?}")))?;
    let rows = lines
        .enumerate()
        .map(|(i, line)| {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| GroupError::Parse(format!("row {i}: bad entry {tok:?}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    FiniteGroup::from_table(order, &rows)
}

pub fn read_table_file(path: impl AsRef<Path>) -> Result<FiniteGroup, GroupError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_table_text(&text)
}

pub fn write_table_text(g: &FiniteGroup) -> String {
    let mut out = format!("{}\n", g.order());
    for x in g.elements() {
        let row: Vec<String> = g.row(x).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
