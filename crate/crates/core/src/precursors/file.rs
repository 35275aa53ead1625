//! Text format for precursor tables.
//!
//! ```text
//! # comment
//! @sequence s_tilde r=4 arity=2
//! 0 0 1
//! 2 1 1
//! ```
//!
//! Rows hold `arity` indices and a decimal value, sorted lexicographically.
//! Missing rows are zero. A sequence is known up to the largest first index
//! among its rows, so the exporter writes an explicit zero row when the top
//! level of a table is empty.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use super::{Backend, PrecursorSet, Sequence};
use crate::counts::{Count, SeqId, SeqTable};
use crate::error::{Error, Result};

pub fn load_precursors(path: &Path) -> Result<PrecursorSet> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, message: format!("cannot read {}: {e}", path.display()) })?;
    parse_precursors(&text)
}

struct Section {
    seq: Sequence,
    table: SeqTable,
    rows: Vec<(usize, Vec<usize>, Count)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_precursors(text: &str) -> Result<PrecursorSet> {
    let mut set = PrecursorSet::new(Backend::File);
    let mut seen = HashSet::new();
    let mut current: Option<Section> = None;
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(header) = line.strip_prefix("@sequence") {
            if let Some(section) = current.take() {
                finish(section, &mut set)?;
            }
            let section = parse_header(header, line_no)?;
            if !seen.insert((section.seq, section.table.id.r)) {
                return Err(parse_err(line_no, format!("duplicate section {}", section.table.id)));
            }
            current = Some(section);
            continue;
        }
        let Some(section) = current.as_mut() else {
            return Err(parse_err(line_no, "data row before any @sequence header"));
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != section.seq.arity() + 1 {
            return Err(parse_err(
                line_no,
                format!("expected {} indices and a value, found {} fields", section.seq.arity(), fields.len()),
            ));
        }
        let (index_fields, value_field) = fields.split_at(fields.len() - 1);
        let mut index = Vec::with_capacity(index_fields.len());
        for f in index_fields {
            if f.starts_with('-') {
                return Err(parse_err(line_no, format!("negative index {f}")));
            }
            index.push(f.parse::<usize>().map_err(|_| parse_err(line_no, format!("bad index {f:?}")))?);
        }
        let value_text = value_field[0];
        if value_text.starts_with('-') {
            return Err(parse_err(line_no, format!("negative value {value_text}")));
        }
        let value = value_text
            .parse::<Count>()
            .map_err(|_| parse_err(line_no, format!("bad value {value_text:?}")))?;
        if let Some((_, last, _)) = section.rows.last() {
            if *last == index {
                return Err(parse_err(line_no, format!("duplicate index {index:?}")));
            }
            if *last > index {
                return Err(parse_err(line_no, format!("index {index:?} out of lexicographic order")));
            }
        }
        section.rows.push((line_no, index, value));
    }
    if let Some(section) = current.take() {
        finish(section, &mut set)?;
    }
    Ok(set)
}

fn parse_header(header: &str, line_no: usize) -> Result<Section> {
    let mut parts = header.split_whitespace();
    let name = parts.next().ok_or_else(|| parse_err(line_no, "missing sequence name"))?;
    let seq = Sequence::from_name(name).ok_or_else(|| parse_err(line_no, format!("unknown sequence {name:?}")))?;
    let (mut r, mut arity) = (None, None);
    for part in parts {
        let (key, value) = part.split_once('=').ok_or_else(|| parse_err(line_no, format!("bad header field {part:?}")))?;
        let value: usize = value.parse().map_err(|_| parse_err(line_no, format!("bad header value {part:?}")))?;
        match key {
            "r" => r = Some(value),
            "arity" => arity = Some(value),
            _ => return Err(parse_err(line_no, format!("unknown header field {key:?}"))),
        }
    }
    let r = r.ok_or_else(|| parse_err(line_no, "header lacks r="))?;
    let arity = arity.ok_or_else(|| parse_err(line_no, "header lacks arity="))?;
    if arity != seq.arity() {
        return Err(parse_err(line_no, format!("{name} has arity {}, header says {arity}", seq.arity())));
    }
    Ok(Section { seq, table: SeqTable::new(SeqId::new(name, r), arity), rows: Vec::new() })
}

fn finish(mut section: Section, set: &mut PrecursorSet) -> Result<()> {
    if section.seq == Sequence::STilde2 {
        let values: std::collections::HashMap<&[usize], &Count> =
            section.rows.iter().map(|(_, i, v)| (i.as_slice(), v)).collect();
        for (line_no, index, value) in &section.rows {
            let mirror = [index[0], index[2], index[1]];
            let other = values.get(mirror.as_slice()).copied().cloned().unwrap_or_default();
            if &other != value {
                return Err(parse_err(
                    *line_no,
                    format!("s_tilde2 not symmetric: {index:?} = {value} but {mirror:?} = {other}"),
                ));
            }
        }
    }
    for (_, index, value) in section.rows.drain(..) {
        section.table.advance_frontier(index[0]);
        section.table.set(&index, value);
    }
    set.insert(section.seq, section.table);
    Ok(())
}

/// Canonical text of a precursor set: sections ordered by sequence and r,
/// rows in lexicographic order. Identical sets give identical bytes.
pub fn export_precursors(set: &PrecursorSet) -> String {
    let mut out = String::from("# toromaps precursor tables\n");
    for (seq, table) in set.tables() {
        let _ = writeln!(out, "@sequence {} r={} arity={}", seq.name(), table.id.r, table.arity);
        let entries = table.entries();
        for (index, value) in &entries {
            let idx: Vec<String> = index.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{} {}", idx.join(" "), value);
        }
        if let Some(f) = table.frontier() {
            if entries.last().map_or(true, |(i, _)| i[0] < f) {
                let zeros = vec!["0"; table.arity - 1];
                let tail = if zeros.is_empty() { String::new() } else { format!(" {}", zeros.join(" ")) };
                let _ = writeln!(out, "{f}{tail} 0");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_is_an_empty_set() {
        let set = parse_precursors("").unwrap();
        assert!(set.is_empty());
        assert!(matches!(set.get(Sequence::STilde, 4, &[0, 0]), Err(Error::ProviderExhausted { .. })));
    }

    #[test]
    fn rows_and_ranges() {
        let set = parse_precursors("# x\n@sequence kappa r=4 arity=1\n4 4\n6 0\n").unwrap();
        assert_eq!(set.range(Sequence::Kappa, 4), Some(6));
        assert_eq!(set.get(Sequence::Kappa, 4, &[4]).unwrap(), &Count::from(4u32));
        assert_eq!(set.get(Sequence::Kappa, 4, &[5]).unwrap(), &Count::from(0u32));
        assert!(set.get(Sequence::Kappa, 4, &[7]).is_err());
    }

    fn line_of(text: &str) -> usize {
        match parse_precursors(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejections_carry_line_numbers() {
        assert_eq!(line_of("@sequence p r=4 arity=2\n0 0 1\n0 0 2\n"), 3);
        assert_eq!(line_of("@sequence p r=4 arity=2\n0 0 -1\n"), 2);
        assert_eq!(line_of("@sequence p r=4 arity=2\n0 1\n"), 2);
        assert_eq!(line_of("@sequence p r=4 arity=2\n2 0 1\n1 0 1\n"), 3);
        assert_eq!(line_of("\n1 2 3\n"), 2);
        assert_eq!(line_of("@sequence q r=4 arity=2\n"), 1);
        assert_eq!(line_of("@sequence p r=4 arity=3\n"), 1);
        assert_eq!(line_of("@sequence s_tilde2 r=4 arity=3\n2 1 2 1\n2 2 1 3\n"), 2);
    }
}
