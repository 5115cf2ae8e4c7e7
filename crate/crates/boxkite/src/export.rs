//! Deterministic serializations of emanation tables and census data.
//!
//! Four formats: a spreadsheet-style text grid (blank cells empty, dashed
//! cells prefixed `-`), CSV of filled cells, PGM grayscale (one pixel per
//! cell), and a JSON document that round-trips back into a table. All text
//! is UTF-8 with LF line endings; output bytes depend only on the input
//! table, never on worker count or platform.

use serde::{Deserialize, Serialize};

use crate::cdp::UnitIndex;
use crate::emanation::{fill_stats, CensusRow, EmanationTable, FillStats};
use crate::kite::{
    classify_kite_type, vizier_check, BoxKite, Context, EdgeSign, VERTEX_NAMES,
};
use crate::{Error, Result};

fn render_index(value: UnitIndex, bits: Option<u32>) -> String {
    match bits {
        None => value.to_string(),
        Some(width) => format!("{value:0width$b}", width = width as usize),
    }
}

/// Text grid: column headers over a ruled box, row labels down the left,
/// each filled cell showing its P (dash-prefixed when blue), blanks empty.
/// `bits` renders every index as a fixed-width binary string instead of
/// decimal. Lines are right-trimmed.
pub fn ascii_table(et: &EmanationTable, bits: bool) -> String {
    let width = bits.then(|| et.n() - 1);
    let label_w = et.labels().iter().map(|&l| render_index(l, width).len()).max().unwrap_or(1);
    let cell_w = label_w + 1;

    let mut out = String::new();
    let mut push_row = |line: &str| {
        out.push_str(line.trim_end());
        out.push('\n');
    };

    let mut header = format!("{:label_w$} |", "");
    for &l in et.labels() {
        header.push_str(&format!(" {:>cell_w$}", render_index(l, width)));
    }
    push_row(&header);
    push_row(&format!("{}-+{}", "-".repeat(label_w), "-".repeat((cell_w + 1) * et.side())));

    for (r, &rl) in et.labels().iter().enumerate() {
        let mut line = format!("{:>label_w$} |", render_index(rl, width));
        for c in 0..et.side() {
            let cell = match et.cell(r, c) {
                None => String::new(),
                Some((p, EdgeSign::Red)) => render_index(p, width),
                Some((p, EdgeSign::Blue)) => format!("-{}", render_index(p, width)),
            };
            line.push_str(&format!(" {cell:>cell_w$}"));
        }
        push_row(&line);
    }
    out
}

fn sign_name(sign: EdgeSign) -> &'static str {
    match sign {
        EdgeSign::Red => "red",
        EdgeSign::Blue => "blue",
    }
}

/// CSV of filled cells, one per line in (row position, column position)
/// order, with header `row_label,col_label,P,edge_sign`.
pub fn csv_table(et: &EmanationTable) -> String {
    let mut out = String::from("row_label,col_label,P,edge_sign\n");
    for (r, c, p, sign) in et.filled_cells() {
        out.push_str(&format!(
            "{},{},{},{}\n",
            et.labels()[r],
            et.labels()[c],
            p,
            sign_name(sign)
        ));
    }
    out
}

const PGM_BLANK: u8 = 0;
const PGM_BLUE: u8 = 128;
const PGM_RED: u8 = 255;

/// PGM grayscale image, one pixel per cell: 0 blank, 128 blue, 255 red.
/// `binary` selects the P5 raster; otherwise P2 (ASCII) with one row of
/// pixels per line.
pub fn pgm_table(et: &EmanationTable, binary: bool) -> Vec<u8> {
    let side = et.side();
    let pixel = |r: usize, c: usize| match et.cell(r, c) {
        None => PGM_BLANK,
        Some((_, EdgeSign::Blue)) => PGM_BLUE,
        Some((_, EdgeSign::Red)) => PGM_RED,
    };
    let mut out = Vec::new();
    out.extend_from_slice(format!("{}\n{side} {side}\n255\n", if binary { "P5" } else { "P2" }).as_bytes());
    if binary {
        for r in 0..side {
            for c in 0..side {
                out.push(pixel(r, c));
            }
        }
    } else {
        for r in 0..side {
            let row: Vec<String> = (0..side).map(|c| pixel(r, c).to_string()).collect();
            out.extend_from_slice(row.join(" ").as_bytes());
            out.push(b'\n');
        }
    }
    out
}

/// JSON document shape for a table: identifying scalars, the label order,
/// every filled cell, and fill statistics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableDoc {
    pub n: u32,
    pub s: UnitIndex,
    pub g: UnitIndex,
    pub labels: Vec<UnitIndex>,
    pub cells: Vec<CellDoc>,
    pub stats: StatsDoc,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CellDoc {
    pub row_label: UnitIndex,
    pub col_label: UnitIndex,
    pub p: UnitIndex,
    pub edge_sign: EdgeSign,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct StatsDoc {
    pub filled: usize,
    pub boxkites: usize,
    pub full: bool,
}

impl From<FillStats> for StatsDoc {
    fn from(s: FillStats) -> StatsDoc {
        StatsDoc { filled: s.filled, boxkites: s.boxkites, full: s.full }
    }
}

pub fn table_doc(et: &EmanationTable) -> Result<TableDoc> {
    let cells = et
        .filled_cells()
        .into_iter()
        .map(|(r, c, p, sign)| CellDoc {
            row_label: et.labels()[r],
            col_label: et.labels()[c],
            p,
            edge_sign: sign,
        })
        .collect();
    Ok(TableDoc {
        n: et.n(),
        s: et.s(),
        g: et.g(),
        labels: et.labels().to_vec(),
        cells,
        stats: fill_stats(et)?.into(),
    })
}

/// Pretty JSON for a table.
pub fn json_table(et: &EmanationTable) -> Result<String> {
    let doc = table_doc(et)?;
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Anomaly(format!("json encode: {e}")))
}

/// Parses a table document back into a validated table.
pub fn table_from_json(text: &str) -> Result<EmanationTable> {
    let doc: TableDoc =
        serde_json::from_str(text).map_err(|e| Error::Anomaly(format!("json decode: {e}")))?;
    let position = |label: UnitIndex| {
        doc.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::InvalidAssessor { l: label })
    };
    let mut filled = Vec::with_capacity(doc.cells.len());
    for cell in &doc.cells {
        filled.push((position(cell.row_label)?, position(cell.col_label)?, cell.p, cell.edge_sign));
    }
    EmanationTable::from_parts(doc.n, doc.s, doc.labels, filled)
}

/// JSON box-kite shape: identity, structure, classification, and the
/// vizier sign summary.
#[derive(Debug, Clone, Serialize)]
pub struct KiteDoc {
    pub n: u32,
    pub s: UnitIndex,
    pub zigzag: crate::cdp::Trip,
    pub sextet: [UnitIndex; 6],
    pub kite_type: String,
    pub assessors: Vec<AssessorDoc>,
    pub viziers_exact: bool,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct AssessorDoc {
    pub vertex: char,
    pub l: UnitIndex,
    pub u: UnitIndex,
}

pub fn kite_doc(ctx: &Context, kite: &BoxKite) -> Result<KiteDoc> {
    let kind = classify_kite_type(ctx, kite)?;
    let viziers = vizier_check(ctx, kite)?;
    Ok(KiteDoc {
        n: kite.n,
        s: kite.s,
        zigzag: kite.zigzag,
        sextet: kite.sextet(),
        kite_type: kind.to_string(),
        assessors: kite
            .assessors
            .iter()
            .zip(VERTEX_NAMES)
            .map(|(a, vertex)| AssessorDoc { vertex, l: a.l, u: a.u })
            .collect(),
        viziers_exact: viziers.all_exact(),
    })
}

/// Text listing of a context's box-kites.
pub fn ascii_boxkites(ctx: &Context, kites: &[BoxKite], bits: bool) -> Result<String> {
    let width = bits.then(|| ctx.n());
    let idx = |v: UnitIndex| render_index(v, width);
    let mut out = format!(
        "box-kites of the {}-ions at S={} (G={}, X={}): {} found\n",
        1u64 << ctx.n(),
        idx(ctx.s()),
        idx(ctx.g()),
        idx(ctx.x()),
        kites.len()
    );
    for (i, kite) in kites.iter().enumerate() {
        let doc = kite_doc(ctx, kite)?;
        let sextet: Vec<String> = doc.sextet.iter().map(|&l| idx(l)).collect();
        out.push_str(&format!(
            "[{}] zigzag {}, type {}, sextet ({})\n",
            i + 1,
            kite.zigzag,
            doc.kite_type,
            sextet.join(",")
        ));
        let pairs: Vec<String> = doc
            .assessors
            .iter()
            .map(|a| format!("{}({},{})", a.vertex, idx(a.l), idx(a.u)))
            .collect();
        out.push_str(&format!("    assessors {}\n", pairs.join(" ")));
        out.push_str(&format!("    viziers exact: {}\n", doc.viziers_exact));
    }
    Ok(out)
}

/// JSON census shape: one row per strut constant plus totals.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusDoc {
    pub n: u32,
    pub rows: Vec<CensusRowDoc>,
    pub total_boxkites: usize,
    pub total_type_ii: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusRowDoc {
    pub s: UnitIndex,
    pub band: String,
    pub boxkites: usize,
    pub type_ii: usize,
}

pub fn census_doc(n: u32, rows: &[CensusRow]) -> CensusDoc {
    CensusDoc {
        n,
        rows: rows
            .iter()
            .map(|r| CensusRowDoc {
                s: r.s,
                band: r.band.to_string(),
                boxkites: r.boxkites,
                type_ii: r.type_ii,
            })
            .collect(),
        total_boxkites: rows.iter().map(|r| r.boxkites).sum(),
        total_type_ii: rows.iter().map(|r| r.type_ii).sum(),
    }
}

/// Text census: fixed-width columns, one line per strut constant.
pub fn ascii_census(n: u32, rows: &[CensusRow]) -> String {
    let mut out = format!("box-kite census of the {}-ions (n = {n})\n", 1u64 << n);
    out.push_str(&format!("{:>4} {:<14} {:>8} {:>8}  band notes\n", "S", "band", "boxkites", "type II"));
    for r in rows {
        out.push_str(&format!(
            "{:>4} {:<14} {:>8} {:>8}  {}\n",
            r.s,
            r.band.to_string(),
            r.boxkites,
            r.type_ii,
            crate::emanation::band_descriptor(r.band)
        ));
    }
    out.push_str(&format!(
        "total boxkites {}, type II {}\n",
        rows.iter().map(|r| r.boxkites).sum::<usize>(),
        rows.iter().map(|r| r.type_ii).sum::<usize>()
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emanation::build_table;
    use crate::kite::Context;

    fn table(n: u32, s: UnitIndex) -> EmanationTable {
        build_table(&Context::new(n, s).unwrap()).unwrap()
    }

    #[test]
    fn the_printed_sedenion_table_byte_for_byte() {
        let want = "  |  2  4  6  7  5  3
--+------------------
2 |     6 -4  5 -7
4 |  6    -2  3    -7
6 | -4 -2        3  5
7 |  5  3       -2 -4
5 | -7     3 -2     6
3 |    -7  5 -4  6
";
        assert_eq!(ascii_table(&table(4, 1), false), want);
    }

    #[test]
    fn binary_rendering_uses_fixed_width_bit_strings() {
        let text = ascii_table(&table(4, 1), true);
        let first = text.lines().next().unwrap();
        assert!(first.contains("010") && first.contains("111"), "{first}");
        assert!(text.contains("-100"), "{text}");
    }

    #[test]
    fn csv_lists_cells_in_position_order() {
        let text = csv_table(&table(4, 1));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "row_label,col_label,P,edge_sign");
        assert_eq!(lines[1], "2,4,6,red");
        assert_eq!(lines[2], "2,6,4,blue");
        assert_eq!(lines.len(), 25);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn pgm_encodes_blank_blue_red() {
        let ascii = pgm_table(&table(4, 1), false);
        let text = String::from_utf8(ascii).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("P2"));
        assert_eq!(lines.next(), Some("6 6"));
        assert_eq!(lines.next(), Some("255"));
        assert_eq!(lines.next(), Some("0 255 128 255 128 0"));

        let binary = pgm_table(&table(4, 1), true);
        let header = b"P5\n6 6\n255\n";
        assert_eq!(&binary[..header.len()], header);
        let raster = &binary[header.len()..];
        assert_eq!(raster.len(), 36);
        assert_eq!(&raster[..6], &[0, 255, 128, 255, 128, 0]);
        // The half-generator atlas fills everything off the long diagonals.
        let atlas = pgm_table(&table(5, 8), true);
        let raster = &atlas[b"P5\n14 14\n255\n".len()..];
        assert_eq!(raster.iter().filter(|&&p| p == 0).count(), 2 * 14);
    }

    #[test]
    fn json_round_trips() {
        for (n, s) in [(4, 1), (5, 9), (5, 8)] {
            let et = table(n, s);
            let text = json_table(&et).unwrap();
            let back = table_from_json(&text).unwrap();
            assert_eq!(et, back, "n={n} s={s}");
        }
    }

    #[test]
    fn json_rejects_cells_off_the_xor_law() {
        let et = table(4, 1);
        let mut doc = table_doc(&et).unwrap();
        doc.cells[0].p ^= 1;
        let text = serde_json::to_string(&doc).unwrap();
        assert!(table_from_json(&text).is_err());
    }

    #[test]
    fn kite_listing_names_vertices_and_type() {
        let ctx = Context::new(4, 1).unwrap();
        let kites = crate::kite::discover_boxkites(&ctx).unwrap();
        let text = ascii_boxkites(&ctx, &kites, false).unwrap();
        assert!(text.starts_with("box-kites of the 16-ions at S=1 (G=8, X=9): 1 found\n"));
        assert!(text.contains("[1] zigzag (3,6,5), type I, sextet (3,6,5,4,7,2)"));
        assert!(text.contains("A(3,10)"));
        assert!(text.contains("F(2,11)"));
        assert!(text.contains("viziers exact: true"));
    }

    #[test]
    fn census_doc_totals() {
        let rows = crate::emanation::census(4).unwrap();
        let doc = census_doc(4, &rows);
        assert_eq!(doc.total_boxkites, 7);
        assert_eq!(doc.total_type_ii, 0);
        let text = ascii_census(4, &rows);
        assert!(text.contains("total boxkites 7, type II 0"));
    }
}
