//! Text formats for contexts and concept lists.
//!
//! Burmeister `.cxt`:
//!
//! ```text
//! B
//!
//! <number of objects>
//! <number of attributes>
//!
//! <object names, one per line>
//! <attribute names, one per line>
//! <one row per object, '.' or 'X' per attribute>
//! ```
//!
//! Names are partition serialisations such as `5,3,2,1,1`. Every line,
//! including the last row, ends in `\n`.

use std::io::{self, BufRead, Write};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::fca::concepts::Concept;
use crate::fca::context::FormalContext;
use crate::partition::Partition;

pub fn write_cxt<W: Write>(ctx: &FormalContext, mut out: W) -> io::Result<()> {
    writeln!(out, "B")?;
    writeln!(out)?;
    writeln!(out, "{}", ctx.objects().len())?;
    writeln!(out, "{}", ctx.attributes().len())?;
    writeln!(out)?;
    for g in ctx.objects() {
        writeln!(out, "{g}")?;
    }
    for m in ctx.attributes() {
        writeln!(out, "{m}")?;
    }
    let mut line = String::with_capacity(ctx.attributes().len() + 1);
    for g in 0..ctx.objects().len() {
        line.clear();
        line.extend(
            (0..ctx.attributes().len()).map(|m| if ctx.incidence(g, m) { 'X' } else { '.' }),
        );
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}

pub fn to_cxt_string(ctx: &FormalContext) -> String {
    let mut buf = Vec::new();
    write_cxt(ctx, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("cxt output is ASCII")
}

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::ContextFormat {
        line,
        msg: msg.into(),
    }
}

/// Parses a Burmeister context. The second line (a context name in some tools) is ignored.
pub fn read_cxt<R: BufRead>(input: R) -> Result<FormalContext> {
    let lines: Vec<String> = input
        .lines()
        .map(|l| l.map(|s| s.trim_end_matches('\r').to_string()))
        .collect::<io::Result<_>>()?;
    let get = |i: usize| -> Result<&str> {
        lines
            .get(i)
            .map(String::as_str)
            .ok_or_else(|| format_err(i + 1, "unexpected end of input"))
    };
    if get(0)?.trim() != "B" {
        return Err(format_err(1, "expected \"B\""));
    }
    let count = |i: usize| -> Result<usize> {
        get(i)?
            .trim()
            .parse()
            .map_err(|_| format_err(i + 1, "expected a count"))
    };
    let n_objects = count(2)?;
    let n_attributes = count(3)?;
    if !get(4)?.trim().is_empty() {
        return Err(format_err(5, "expected a blank line"));
    }
    let mut next = 5;
    let mut names = |k: usize| -> Result<Vec<Partition>> {
        (0..k)
            .map(|_| {
                let i = next;
                next += 1;
                get(i)?
                    .parse()
                    .map_err(|e: Error| format_err(i + 1, e.to_string()))
            })
            .collect()
    };
    let objects = names(n_objects)?;
    let attributes = names(n_attributes)?;
    let first_row = 5 + n_objects + n_attributes;
    let mut rows = Vec::with_capacity(n_objects);
    for g in 0..n_objects {
        let i = first_row + g;
        let text = get(i)?;
        if text.chars().count() != n_attributes {
            return Err(format_err(
                i + 1,
                format!(
                    "expected {n_attributes} cells, found {}",
                    text.chars().count()
                ),
            ));
        }
        let mut row = FixedBitSet::with_capacity(n_attributes);
        for (m, c) in text.chars().enumerate() {
            match c {
                'X' | 'x' => row.insert(m),
                '.' => {}
                other => return Err(format_err(i + 1, format!("unexpected cell {other:?}"))),
            }
        }
        rows.push(row);
    }
    if lines[first_row + n_objects..]
        .iter()
        .any(|l| !l.trim().is_empty())
    {
        return Err(format_err(first_row + n_objects + 1, "trailing content"));
    }
    FormalContext::from_rows(objects, attributes, rows)
}

pub fn parse_cxt(text: &str) -> Result<FormalContext> {
    read_cxt(text.as_bytes())
}

/// Cross table as CSV: a header with an empty corner cell followed by the
/// attribute names, then one row per object with `1`/`0` cells.
pub fn write_csv<W: Write>(ctx: &FormalContext, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec![String::new()];
    header.extend(ctx.attributes().iter().map(Partition::to_string));
    w.write_record(&header)?;
    for (g, obj) in ctx.objects().iter().enumerate() {
        let mut record = vec![obj.to_string()];
        record.extend(
            (0..ctx.attributes().len())
                .map(|m| if ctx.incidence(g, m) { "1" } else { "0" }.to_string()),
        );
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(ctx: &FormalContext) -> String {
    let mut buf = Vec::new();
    write_csv(ctx, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("csv output is UTF-8")
}

pub fn parse_csv(text: &str) -> Result<FormalContext> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(false)
        .from_reader(text.as_bytes());
    let mut records = r.records();
    let header = match records.next() {
        Some(h) => h?,
        None => return Err(format_err(1, "missing header")),
    };
    let attributes = header
        .iter()
        .skip(1)
        .map(|s| {
            s.parse::<Partition>()
                .map_err(|e| format_err(1, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut objects = Vec::new();
    let mut rows = Vec::new();
    for (i, record) in records.enumerate() {
        let record = record?;
        let line = i + 2;
        let mut cells = record.iter();
        let name = cells.next().ok_or_else(|| format_err(line, "empty row"))?;
        objects.push(
            name.parse::<Partition>()
                .map_err(|e| format_err(line, e.to_string()))?,
        );
        let mut row = FixedBitSet::with_capacity(attributes.len());
        for (m, cell) in cells.enumerate() {
            match cell {
                "1" => row.insert(m),
                "0" => {}
                other => return Err(format_err(line, format!("unexpected cell {other:?}"))),
            }
        }
        rows.push(row);
    }
    FormalContext::from_rows(objects, attributes, rows)
}

fn join_names(names: impl Iterator<Item = Partition>) -> String {
    names.map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

/// One concept per line: extent size, intent size, extent members, intent
/// members, separated by tabs; members within a field are space-separated.
pub fn write_concepts<W: Write>(
    ctx: &FormalContext,
    concepts: &[Concept],
    mut out: W,
) -> io::Result<()> {
    for c in concepts {
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            c.extent_size(),
            c.intent_size(),
            join_names(ctx.objects_of(&c.extent).into_iter()),
            join_names(ctx.attributes_of(&c.intent).into_iter()),
        )?;
    }
    Ok(())
}
