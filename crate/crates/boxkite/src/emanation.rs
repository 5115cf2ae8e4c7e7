//! Emanation tables: the spreadsheet view of a context's DMZ structure.
//!
//! Rows and columns carry the context's assessor L-indices in a fixed mirror
//! order; cell (r, c) holds the emanated third `P = r XOR c` when the two
//! assessors annihilate, dashed when the blue (like-signed) diagonals do the
//! annihilating. Fill counts run the box-kite census by table arithmetic:
//! every box-kite owns exactly 24 cells.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cdp::{enumerate_trips, Trip, UnitIndex};
use crate::kite::{
    classify_kite_type, discover_boxkites, emanation_third, strut_opposite, Context, EdgeSign,
    KiteType,
};
use crate::{Error, Result};

/// Largest dimension exponent stored as a dense grid; sparser, larger
/// contexts keep a filled-cell map instead (high-S tables are mostly empty).
const DENSE_MAX_N: u32 = 9;

/// Row/column label order: ascending low indices enter from the left while
/// their strut opposites mirror in from the right, so the two long diagonals
/// carry exactly the self and strut-opposite pairings.
pub fn label_order(ctx: &Context) -> Vec<UnitIndex> {
    let count = ctx.assessor_count();
    let mut slots = vec![0 as UnitIndex; count];
    let mut placed = vec![false; ctx.g() as usize];
    let (mut left, mut right) = (0usize, count - 1);
    for k in 1..ctx.g() {
        if k == ctx.s() || placed[k as usize] {
            continue;
        }
        let partner = k ^ ctx.s();
        slots[left] = k;
        slots[right] = partner;
        left += 1;
        right -= 1;
        placed[k as usize] = true;
        placed[partner as usize] = true;
    }
    slots
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum CellStore {
    Dense(Vec<Option<(UnitIndex, EdgeSign)>>),
    Sparse(BTreeMap<(usize, usize), (UnitIndex, EdgeSign)>),
}

/// An immutable emanation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmanationTable {
    n: u32,
    s: UnitIndex,
    g: UnitIndex,
    labels: Vec<UnitIndex>,
    cells: CellStore,
}

impl EmanationTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn s(&self) -> UnitIndex {
        self.s
    }

    pub fn g(&self) -> UnitIndex {
        self.g
    }

    /// Rows (and columns) per side: G - 2.
    pub fn side(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[UnitIndex] {
        &self.labels
    }

    pub fn position_of(&self, label: UnitIndex) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Cell at row/column positions.
    pub fn cell(&self, r: usize, c: usize) -> Option<(UnitIndex, EdgeSign)> {
        match &self.cells {
            CellStore::Dense(v) => v[r * self.side() + c],
            CellStore::Sparse(m) => m.get(&(r, c)).copied(),
        }
    }

    pub fn cell_by_labels(&self, rl: UnitIndex, cl: UnitIndex) -> Option<(UnitIndex, EdgeSign)> {
        let r = self.position_of(rl)?;
        let c = self.position_of(cl)?;
        self.cell(r, c)
    }

    /// Filled cells in (row position, column position) order.
    pub fn filled_cells(&self) -> Vec<(usize, usize, UnitIndex, EdgeSign)> {
        match &self.cells {
            CellStore::Dense(v) => {
                let side = self.side();
                v.iter()
                    .enumerate()
                    .filter_map(|(i, cell)| {
                        cell.map(|(p, sign)| (i / side, i % side, p, sign))
                    })
                    .collect()
            }
            CellStore::Sparse(m) => {
                m.iter().map(|(&(r, c), &(p, sign))| (r, c, p, sign)).collect()
            }
        }
    }

    pub fn filled(&self) -> usize {
        match &self.cells {
            CellStore::Dense(v) => v.iter().filter(|c| c.is_some()).count(),
            CellStore::Sparse(m) => m.len(),
        }
    }

    /// Rebuilds a table from its parts, validating shape and cell contents
    /// against the XOR law. Used by the serialization round-trip.
    pub fn from_parts(
        n: u32,
        s: UnitIndex,
        labels: Vec<UnitIndex>,
        filled: impl IntoIterator<Item = (usize, usize, UnitIndex, EdgeSign)>,
    ) -> Result<EmanationTable> {
        let ctx = Context::new(n, s)?;
        if labels != label_order(&ctx) {
            return Err(Error::Anomaly(format!("label order mismatch for n={n}, s={s}")));
        }
        let side = labels.len();
        let mut map = BTreeMap::new();
        for (r, c, p, sign) in filled {
            if r >= side || c >= side {
                return Err(Error::Anomaly(format!("cell ({r},{c}) outside {side}x{side}")));
            }
            if labels[r] ^ labels[c] != p {
                return Err(Error::Anomaly(format!("cell ({r},{c}) content {p} breaks XOR law")));
            }
            map.insert((r, c), (p, sign));
        }
        let cells = if n <= DENSE_MAX_N {
            let mut v = vec![None; side * side];
            for (&(r, c), &val) in &map {
                v[r * side + c] = Some(val);
            }
            CellStore::Dense(v)
        } else {
            CellStore::Sparse(map)
        };
        Ok(EmanationTable { n, s, g: ctx.g(), labels, cells })
    }
}

/// Builds the context's table by brute DMZ testing of every cell. Rows are
/// independent and compute in parallel; output is position-ordered and
/// deterministic regardless of worker count.
pub fn build_table(ctx: &Context) -> Result<EmanationTable> {
    type Row = Vec<Option<(UnitIndex, EdgeSign)>>;
    let labels = label_order(ctx);
    let side = labels.len();
    let rows: Result<Vec<Row>> = (0..side)
        .into_par_iter()
        .map(|r| {
            let rl = labels[r];
            let opposite = strut_opposite(ctx, rl)?;
            let mut row = vec![None; side];
            for (c, &cl) in labels.iter().enumerate() {
                if cl == rl || cl == opposite {
                    continue;
                }
                row[c] = emanation_third(ctx, rl, cl)?;
            }
            Ok(row)
        })
        .collect();
    let rows = rows?;
    let cells = if ctx.n() <= DENSE_MAX_N {
        CellStore::Dense(rows.into_iter().flatten().collect())
    } else {
        let mut map = BTreeMap::new();
        for (r, row) in rows.into_iter().enumerate() {
            for (c, cell) in row.into_iter().enumerate() {
                if let Some(val) = cell {
                    map.insert((r, c), val);
                }
            }
        }
        CellStore::Sparse(map)
    };
    Ok(EmanationTable { n: ctx.n(), s: ctx.s(), g: ctx.g(), labels, cells })
}

/// Fill census of a table. `boxkites` is `filled / 24`: each box-kite owns
/// twelve edges and each edge two mirror cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FillStats {
    pub filled: usize,
    pub boxkites: usize,
    pub full: bool,
}

/// Counts filled cells; errors if the count is not a multiple of 24, since
/// that would break the cell-ownership argument behind the census.
pub fn fill_stats(et: &EmanationTable) -> Result<FillStats> {
    let filled = et.filled();
    if !filled.is_multiple_of(24) {
        return Err(Error::Anomaly(format!(
            "fill count {filled} not divisible by 24 at n={}, s={}",
            et.n(),
            et.s()
        )));
    }
    let g = et.g() as usize;
    Ok(FillStats { filled, boxkites: filled / 24, full: filled == (g - 4) * (g - 2) })
}

/// Reads zigzag L-trips straight off the grid: a row holds a zigzag exactly
/// when two of its unmarked cells point at each other's column labels.
pub fn extract_zigzags(et: &EmanationTable) -> Vec<Trip> {
    let mut found: Vec<Trip> = Vec::new();
    for (r, &rl) in et.labels().iter().enumerate() {
        for (c1, &cl1) in et.labels().iter().enumerate() {
            let Some((p, EdgeSign::Red)) = et.cell(r, c1) else { continue };
            let Some(c2) = et.position_of(p) else { continue };
            if c2 <= c1 {
                continue;
            }
            if et.cell(r, c2) == Some((cl1, EdgeSign::Red)) {
                let trip = crate::cdp::orient_trip([rl, cl1, p]).expect("zigzag cells close");
                if !found.contains(&trip) {
                    found.push(trip);
                }
            }
        }
    }
    found.sort();
    found
}

/// Labels whose row is filled everywhere except its two long-diagonal
/// crossings (near-solid lines).
pub fn near_solid_lines(et: &EmanationTable) -> Vec<UnitIndex> {
    let side = et.side();
    et.labels()
        .iter()
        .enumerate()
        .filter(|&(r, _)| (0..side).filter(|&c| et.cell(r, c).is_some()).count() == side - 2)
        .map(|(_, &l)| l)
        .collect()
}

/// Spectral position of a strut constant: the low band fills its table, and
/// past S = 8 behavior shifts every time S crosses a multiple of 8, with
/// powers of two as their own class. Band m covers 8m < S <= 8(m+1); the
/// upper multiple of 8 belongs to the band it bounds since it is not a
/// power of two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "band", rename_all = "kebab-case")]
pub enum BandClass {
    Low,
    PowerOfTwo,
    Band(u32),
}

pub fn band_class(ctx: &Context) -> BandClass {
    let s = ctx.s();
    if s <= 8 {
        BandClass::Low
    } else if s.is_power_of_two() {
        BandClass::PowerOfTwo
    } else {
        BandClass::Band(s.div_ceil(8) - 1)
    }
}

/// Qualitative description of a band's table texture. Bands past the third
/// have no established description and are reported as open findings.
pub fn band_descriptor(band: BandClass) -> &'static str {
    match band {
        BandClass::Low => "full table: every off-diagonal cell filled",
        BandClass::PowerOfTwo => {
            "atlas: upper-left quadrant reproduces the half-dimension trip table"
        }
        BandClass::Band(1) => {
            "sand mandala: two near-solid lines march inward through mostly empty cells"
        }
        BandClass::Band(2) => "(s,g)-modular texture: filled runs recur modulo the half-generator",
        BandClass::Band(3) => "hide/fill involution: filled and empty regions swap roles",
        BandClass::Band(_) => "no established description; census counts reported as findings",
    }
}

impl std::fmt::Display for BandClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BandClass::Low => write!(f, "low"),
            BandClass::PowerOfTwo => write!(f, "power-of-two"),
            BandClass::Band(m) => write!(f, "band({m})"),
        }
    }
}

/// One frame of the flip-book: the moving-line anatomy of a single high-S
/// table in dimension 32.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlipFrame {
    pub s: UnitIndex,
    /// The two labels whose rows and columns fill solid: S - 8 and 8.
    pub line_labels: (UnitIndex, UnitIndex),
    /// Positions of those labels in the label order.
    pub line_positions: (usize, usize),
    /// Filled cells lying on the two rows or two columns.
    pub line_cells: usize,
    /// Filled cells off the lines: (row position, col position, row label,
    /// col label, P).
    pub content_cells: Vec<(usize, usize, UnitIndex, UnitIndex, UnitIndex)>,
    pub boxkites: usize,
    pub filled: usize,
}

/// Builds the seven high-S frames of the 32-dimensional flip-book,
/// S = 9 through 15. Each frame holds 3 box-kites and 72 filled cells: 48 on
/// the two label-lines, 24 content cells whose P is a line label.
pub fn flipbook(n: u32) -> Result<Vec<FlipFrame>> {
    if n != 5 {
        return Err(Error::UnsupportedDimension(n));
    }
    (9..16)
        .map(|s| {
            let ctx = Context::new(n, s)?;
            let et = build_table(&ctx)?;
            let kites = discover_boxkites(&ctx)?;
            let low = s - 8;
            let lp = et.position_of(low).ok_or(Error::InvalidAssessor { l: low })?;
            let hp = et.position_of(8).ok_or(Error::InvalidAssessor { l: 8 })?;
            let mut line_cells = 0;
            let mut content = Vec::new();
            for (r, c, p, _sign) in et.filled_cells() {
                if r == lp || r == hp || c == lp || c == hp {
                    line_cells += 1;
                } else {
                    content.push((r, c, et.labels()[r], et.labels()[c], p));
                }
            }
            Ok(FlipFrame {
                s,
                line_labels: (low, 8),
                line_positions: (lp, hp),
                line_cells,
                content_cells: content,
                boxkites: kites.len(),
                filled: et.filled(),
            })
        })
        .collect()
}

/// One strut constant's census line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub s: UnitIndex,
    pub band: BandClass,
    pub boxkites: usize,
    pub type_ii: usize,
}

/// Runs discovery and classification for every strut constant of dimension
/// 2^n, in parallel, rows ordered by S.
pub fn census(n: u32) -> Result<Vec<CensusRow>> {
    let g = crate::cdp::generator(n);
    (1..g)
        .into_par_iter()
        .map(|s| {
            let ctx = Context::new(n, s)?;
            let kites = discover_boxkites(&ctx)?;
            let mut type_ii = 0;
            for kite in &kites {
                if classify_kite_type(&ctx, kite)? == KiteType::II {
                    type_ii += 1;
                }
            }
            Ok(CensusRow { s, band: band_class(&ctx), boxkites: kites.len(), type_ii })
        })
        .collect()
}

/// Zigzag L-trips of dimension 2^n read from the half-dimension trip list:
/// the S = G/2 table's upper-left quadrant is exactly that trip table.
pub fn atlas_quadrant_trips(n: u32) -> Result<Vec<Trip>> {
    enumerate_trips(n - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_orders_match_the_mirror_convention() {
        let order = |n, s| label_order(&Context::new(n, s).unwrap());
        assert_eq!(order(4, 1), vec![2, 4, 6, 7, 5, 3]);
        assert_eq!(order(4, 4), vec![1, 2, 3, 7, 6, 5]);
        assert_eq!(order(5, 9), vec![1, 2, 3, 4, 5, 6, 7, 14, 15, 12, 13, 10, 11, 8]);
        assert_eq!(order(5, 8), vec![1, 2, 3, 4, 5, 6, 7, 15, 14, 13, 12, 11, 10, 9]);
        assert_eq!(order(5, 15), (1..15).collect::<Vec<_>>());
    }

    #[test]
    fn the_unit_strut_sedenion_table() {
        let ctx = Context::new(4, 1).unwrap();
        let et = build_table(&ctx).unwrap();
        assert_eq!(et.labels(), &[2, 4, 6, 7, 5, 3]);
        // Row 2 of the printed table: blank, 6, -4, 5, -7, blank.
        assert_eq!(et.cell_by_labels(2, 2), None);
        assert_eq!(et.cell_by_labels(2, 4), Some((6, EdgeSign::Red)));
        assert_eq!(et.cell_by_labels(2, 6), Some((4, EdgeSign::Blue)));
        assert_eq!(et.cell_by_labels(2, 7), Some((5, EdgeSign::Red)));
        assert_eq!(et.cell_by_labels(2, 5), Some((7, EdgeSign::Blue)));
        assert_eq!(et.cell_by_labels(2, 3), None);
        assert_eq!(et.cell_by_labels(6, 5), Some((3, EdgeSign::Red)));
        let stats = fill_stats(&et).unwrap();
        assert_eq!((stats.filled, stats.boxkites, stats.full), (24, 1, true));
    }

    #[test]
    fn tables_are_symmetric_with_marks() {
        for (n, s) in [(4, 1), (4, 6), (5, 9), (5, 8), (6, 20)] {
            let et = build_table(&Context::new(n, s).unwrap()).unwrap();
            for r in 0..et.side() {
                for c in 0..et.side() {
                    assert_eq!(et.cell(r, c), et.cell(c, r), "n={n} s={s} ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn low_strut_tables_fill_completely() {
        for s in 1..8 {
            let et = build_table(&Context::new(5, s).unwrap()).unwrap();
            let stats = fill_stats(&et).unwrap();
            assert_eq!((stats.filled, stats.boxkites, stats.full), (168, 7, true), "s={s}");
        }
    }

    #[test]
    fn zigzags_read_off_the_grid() {
        let et = build_table(&Context::new(4, 1).unwrap()).unwrap();
        let zz: Vec<[u32; 3]> = extract_zigzags(&et).iter().map(|t| t.cpo()).collect();
        assert_eq!(zz, vec![[3, 6, 5]]);

        // The half-generator table is an atlas of the octonion trips.
        let et = build_table(&Context::new(5, 8).unwrap()).unwrap();
        let zz = extract_zigzags(&et);
        assert_eq!(zz, atlas_quadrant_trips(5).unwrap());
    }

    #[test]
    fn sand_mandala_frames_hold_three_kites_and_72_cells() {
        let frames = flipbook(5).unwrap();
        assert_eq!(frames.len(), 7);
        for frame in &frames {
            assert_eq!(frame.boxkites, 3, "s={}", frame.s);
            assert_eq!(frame.filled, 72, "s={}", frame.s);
            assert_eq!(frame.line_cells, 48, "s={}", frame.s);
            assert_eq!(frame.content_cells.len(), 24, "s={}", frame.s);
            for &(_, _, _, _, p) in &frame.content_cells {
                assert!(p == frame.s - 8 || p == 8, "s={} p={p}", frame.s);
            }
        }
        // Lines march inward from the edges until they collide at the center.
        assert_eq!(frames[0].line_positions, (0, 13));
        assert_eq!(frames[6].line_positions, (6, 7));
    }

    #[test]
    fn near_solid_lines_are_the_moving_pair() {
        let et = build_table(&Context::new(5, 9).unwrap()).unwrap();
        assert_eq!(near_solid_lines(&et), vec![1, 8]);
    }

    #[test]
    fn bands_classify_by_eights_and_powers() {
        let band = |n, s| band_class(&Context::new(n, s).unwrap());
        assert_eq!(band(5, 3), BandClass::Low);
        assert_eq!(band(5, 8), BandClass::Low);
        assert_eq!(band(5, 9), BandClass::Band(1));
        assert_eq!(band(5, 15), BandClass::Band(1));
        assert_eq!(band(6, 16), BandClass::PowerOfTwo);
        assert_eq!(band(6, 20), BandClass::Band(2));
        assert_eq!(band(6, 24), BandClass::Band(2));
        assert_eq!(band(6, 25), BandClass::Band(3));
        assert_eq!(band(6, 31), BandClass::Band(3));
        assert_eq!(band(7, 32), BandClass::PowerOfTwo);
    }

    #[test]
    fn the_pathion_census_totals_77() {
        let rows = census(5).unwrap();
        assert_eq!(rows.len(), 15);
        let total: usize = rows.iter().map(|r| r.boxkites).sum();
        assert_eq!(total, 77);
        for row in &rows {
            let want = if row.s <= 8 { 7 } else { 3 };
            assert_eq!(row.boxkites, want, "s={}", row.s);
            let want_ii = if row.s < 8 { 3 } else { 0 };
            assert_eq!(row.type_ii, want_ii, "s={}", row.s);
        }
    }

    #[test]
    fn round_trip_through_parts() {
        let et = build_table(&Context::new(5, 9).unwrap()).unwrap();
        let rebuilt = EmanationTable::from_parts(
            et.n(),
            et.s(),
            et.labels().to_vec(),
            et.filled_cells(),
        )
        .unwrap();
        assert_eq!(et, rebuilt);
    }
}
