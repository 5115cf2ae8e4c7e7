//! Re-runnable invariant suites over the whole stack: fill laws, atlas
//! structure, flip-book anatomy, census totals, genealogy reproduction, and
//! cross-oracle product equivalence. Each check returns a pass/fail record
//! with a human-readable detail line; any internal anomaly fails the check
//! rather than crashing the run.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cdp::{doubling, enumerate_trips, generator, trip_count, unit_product, UnitIndex};
use crate::emanation::{build_table, census, extract_zigzags, fill_stats, flipbook, near_solid_lines};
use crate::genealogy::{genealogy_run, pathion_families, PathionFamily};
use crate::kite::{discover_boxkites, dmz_edge, strut_opposite, Context, EdgeSign};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn guard(name: &str, body: impl FnOnce() -> Result<String>) -> CheckResult {
    match body() {
        Ok(detail) => CheckResult { name: name.to_string(), passed: true, detail },
        Err(e) => CheckResult { name: name.to_string(), passed: false, detail: e.to_string() },
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Anomaly(msg()))
    }
}

/// Fill counts are multiples of 24 for every strut constant of dimension
/// 2^n (each box-kite owns exactly 24 cells).
pub fn check_fill_divisibility(n: u32) -> CheckResult {
    guard(&format!("fill counts divide by 24 (n={n})"), || {
        let g = generator(n);
        let mut total = 0usize;
        for s in 1..g {
            let et = build_table(&Context::new(n, s)?)?;
            total += fill_stats(&et)?.filled;
        }
        Ok(format!("all {} strut constants checked; {total} cells total", g - 1))
    })
}

/// Low strut constants (S <= 7) fill their tables completely, with the
/// box-kite count equal to the half-dimension trip count.
pub fn check_low_strut_fullness(n: u32) -> CheckResult {
    guard(&format!("low-strut tables are full (n={n})"), || {
        let g = generator(n) as usize;
        let want_kites = trip_count(n - 2) as usize;
        for s in 1..8.min(generator(n)) {
            let et = build_table(&Context::new(n, s)?)?;
            let stats = fill_stats(&et)?;
            expect(stats.full, || format!("s={s} not full: {}", stats.filled))?;
            expect(stats.filled == (g - 4) * (g - 2), || {
                format!("s={s} fill {} != ({}-4)({}-2)", stats.filled, g, g)
            })?;
            expect(stats.boxkites == want_kites, || {
                format!("s={s} kites {} != {want_kites}", stats.boxkites)
            })?;
        }
        Ok(format!("fill {} and {want_kites} box-kites at every S <= 7", (g - 4) * (g - 2)))
    })
}

/// At S = G/2 the table is full, its upper-left quadrant is the unmarked
/// trip table of the half dimension, the zigzags are exactly those trips,
/// and every sextet is (a, b, c, g+c, g+b, g+a).
pub fn check_half_generator_atlas(n: u32) -> CheckResult {
    guard(&format!("half-generator atlas (n={n})"), || {
        let g = generator(n) / 2;
        let ctx = Context::new(n, g)?;
        let et = build_table(&ctx)?;
        let stats = fill_stats(&et)?;
        expect(stats.full, || format!("table at S={g} not full"))?;

        // Quadrant: labels below g occupy the first g-1 positions.
        for r in 0..(g - 1) as usize {
            for c in 0..(g - 1) as usize {
                if r == c {
                    continue;
                }
                let (rl, cl) = (et.labels()[r], et.labels()[c]);
                match et.cell(r, c) {
                    Some((p, EdgeSign::Red)) => {
                        expect(p == rl ^ cl, || format!("cell ({rl},{cl}) holds {p}"))?
                    }
                    other => {
                        return Err(Error::Anomaly(format!(
                            "quadrant cell ({rl},{cl}) is {other:?}, want unmarked {}",
                            rl ^ cl
                        )))
                    }
                }
            }
        }

        let zigzags: BTreeSet<_> = extract_zigzags(&et).into_iter().collect();
        let want: BTreeSet<_> = enumerate_trips(n - 2)?.into_iter().collect();
        expect(zigzags == want, || "zigzag set differs from half-dimension trips".into())?;

        let kites = discover_boxkites(&ctx)?;
        for kite in &kites {
            let [a, b, c, d, e, f] = kite.sextet();
            expect(
                [a, b, c].iter().all(|&l| l < g) && d == c + g && e == b + g && f == a + g,
                || format!("sextet {:?} not of the (a,b,c,g+c,g+b,g+a) form", kite.sextet()),
            )?;
        }
        Ok(format!("{} box-kites at S={g}, all of mirrored form", kites.len()))
    })
}

/// The seven high-S frames of the 32-ion flip-book: three box-kites and 72
/// filled cells each (48 on the two moving lines, 24 content cells), lines
/// marching inward to a crossbar, and the S=15 diamond geometry.
pub fn check_flipbook() -> CheckResult {
    guard("sand-mandala flip-book (n=5)", || {
        let frames = flipbook(5)?;
        expect(frames.len() == 7, || format!("{} frames", frames.len()))?;
        for frame in &frames {
            expect(frame.boxkites == 3, || format!("s={}: {} kites", frame.s, frame.boxkites))?;
            expect(frame.filled == 72, || format!("s={}: {} cells", frame.s, frame.filled))?;
            expect(frame.line_cells == 48, || {
                format!("s={}: {} line cells", frame.s, frame.line_cells)
            })?;
            expect(frame.content_cells.len() == 24, || {
                format!("s={}: {} content cells", frame.s, frame.content_cells.len())
            })?;
            for &(_, _, rl, cl, p) in &frame.content_cells {
                expect(p == frame.s - 8 || p == 8, || {
                    format!("s={}: content ({rl},{cl}) holds {p}", frame.s)
                })?;
            }
            let et = build_table(&Context::new(5, frame.s)?)?;
            let nsl = near_solid_lines(&et);
            expect(nsl == vec![frame.s - 8, 8], || {
                format!("s={}: near-solid lines {nsl:?}", frame.s)
            })?;
            let (lo, hi) = frame.line_positions;
            let step = (frame.s - 9) as usize;
            expect((lo, hi) == (step, 13 - step), || {
                format!("s={}: line positions ({lo},{hi})", frame.s)
            })?;
        }

        // Final frame: adjacent lines (crossbar), content strokes forming
        // the diamond: P=7 cells run against the main diagonal, P=8 along it.
        let last = &frames[6];
        expect(last.line_positions == (6, 7), || "no crossbar at s=15".into())?;
        for &(r, c, rl, cl, p) in &last.content_cells {
            match p {
                7 => expect(r + c == 5 || r + c == 21, || {
                    format!("P=7 cell ({rl},{cl}) off the upward strokes")
                })?,
                8 => expect(r.abs_diff(c) == 8, || {
                    format!("P=8 cell ({rl},{cl}) off the downward strokes")
                })?,
                _ => unreachable!("content P checked above"),
            }
        }
        Ok("7 frames, 3 kites and 72 = 48+24 cells each, crossbar and diamond at S=15".into())
    })
}

/// The 32-ion census: 77 box-kites split 7/7/3 by band, each low strut
/// partitioning 1 zero-padded + 3 strongboxes + 3 type II.
pub fn check_pathion_census() -> CheckResult {
    guard("32-ion census partition", || {
        let rows = census(5)?;
        let total: usize = rows.iter().map(|r| r.boxkites).sum();
        expect(total == 77, || format!("total {total}"))?;
        for row in &rows {
            let want = if row.s <= 8 { 7 } else { 3 };
            expect(row.boxkites == want, || format!("s={}: {} kites", row.s, row.boxkites))?;
        }
        let mut type_ii_total = 0;
        for s in 1..8 {
            let tagged = pathion_families(s)?;
            let count = |f: PathionFamily| tagged.iter().filter(|(_, g)| *g == f).count();
            expect(
                count(PathionFamily::ZeroPadded) == 1
                    && count(PathionFamily::Strongbox) == 3
                    && count(PathionFamily::TypeII) == 3,
                || format!("family partition broken at s={s}"),
            )?;
            type_ii_total += count(PathionFamily::TypeII);
        }
        expect(type_ii_total == 21, || format!("{type_ii_total} type II"))?;

        let s1: BTreeSet<[u32; 6]> = pathion_families(1)?
            .into_iter()
            .filter(|(_, f)| *f == PathionFamily::TypeII)
            .map(|(k, _)| k.sextet())
            .collect();
        let want: BTreeSet<[u32; 6]> =
            [[3, 13, 14, 15, 12, 2], [6, 11, 13, 12, 10, 7], [5, 14, 11, 10, 15, 4]]
                .into_iter()
                .collect();
        expect(s1 == want, || format!("S=1 type II sextets {s1:?}"))?;
        Ok("77 box-kites; 1+3+3 per low strut; 21 type II; S=1 sextets verbatim".into())
    })
}

/// The fixed-S genealogy reproduces its reference lists and counts.
pub fn check_genealogy(s: UnitIndex, n_max: u32) -> CheckResult {
    guard(&format!("zigzag genealogy (s={s}, n<={n_max})"), || {
        let levels = genealogy_run(s, n_max)?;
        let counts: Vec<usize> = levels.iter().map(|l| l.zigzags.len()).collect();
        let want: Vec<usize> = (4..=n_max).map(|n| trip_count(n - 2) as usize).collect();
        expect(counts == want, || format!("counts {counts:?}, want {want:?}"))?;
        if let Some(level) = levels.iter().find(|l| l.n == 6) {
            expect(level.raw == level.zigzags.len() + level.duplicates.len(), || {
                "raw emission does not reconcile with duplicates".into()
            })?;
        }
        Ok(format!("counts {counts:?}, cross-validated against discovery"))
    })
}

/// The trip-rule product and the calibrated doubling formula agree on every
/// ordered basis pair through dimension 2^n.
pub fn check_oracle_equivalence(n: u32) -> CheckResult {
    guard(&format!("product oracle equivalence (n<={n})"), || {
        let conv = doubling::calibrate()?;
        let dim = 1u32 << n;
        let mut pairs = 0u64;
        for p in 0..dim {
            for q in 0..dim {
                let a = unit_product(p, q, n)?;
                let b = doubling::product(conv, p, q, n)?;
                expect(a == b, || format!("e{p} e{q}: rules say {a}, doubling says {b}"))?;
                pairs += 1;
            }
        }
        Ok(format!("{pairs} ordered products agree"))
    })
}

/// Structural laws: strut opposites never annihilate, every DMZ edge closes
/// into a sail, tables are symmetric, and sampled empty cells re-verify as
/// non-divisors by direct four-term expansion.
pub fn check_structural(n_max: u32) -> CheckResult {
    guard(&format!("structural laws (n<={n_max})"), || {
        let conv = doubling::calibrate()?;
        let mut contexts = 0;
        for n in 4..=n_max {
            for s in 1..generator(n) {
                let ctx = Context::new(n, s)?;
                contexts += 1;

                for l in ctx.assessor_l_indices() {
                    let opposite = strut_opposite(&ctx, l)?;
                    expect(dmz_edge(&ctx, l, opposite)?.is_none(), || {
                        format!("strut pair ({l},{opposite}) annihilates at n={n}, s={s}")
                    })?;
                }

                // Discovery hard-errors unless every edge closes into a sail
                // inside a well-formed octahedron.
                discover_boxkites(&ctx)?;

                let et = build_table(&ctx)?;
                let mut resampled = 0;
                for r in 0..et.side() {
                    for c in (r + 1)..et.side() {
                        expect(et.cell(r, c) == et.cell(c, r), || {
                            format!("asymmetry at n={n}, s={s}, ({r},{c})")
                        })?;
                        let (rl, cl) = (et.labels()[r], et.labels()[c]);
                        if et.cell(r, c).is_none() && rl != cl && cl != (rl ^ s) && resampled < 8 {
                            resampled += 1;
                            expect(!dyads_annihilate(conv, &ctx, rl, cl)?, || {
                                format!("empty cell ({rl},{cl}) hides a zero divisor")
                            })?;
                        }
                    }
                }
            }
        }
        Ok(format!("{contexts} contexts: struts inert, sails close, tables symmetric"))
    })
}

/// Four-term dyad expansion via the doubling formula: do any diagonal sign
/// choices annihilate? Independent of the trip-rule path used by dmz_edge.
fn dyads_annihilate(
    conv: &doubling::Convention,
    ctx: &Context,
    l1: UnitIndex,
    l2: UnitIndex,
) -> Result<bool> {
    let x = ctx.x();
    let (u1, u2) = (l1 ^ x, l2 ^ x);
    for (s1, s2) in [(1i32, 1i32), (1, -1)] {
        let mut coeff = std::collections::HashMap::new();
        for (p, q, w) in [(l1, l2, 1), (l1, u2, s2), (u1, l2, s1), (u1, u2, s1 * s2)] {
            let prod = doubling::product(conv, p, q, ctx.n())?;
            *coeff.entry(prod.index).or_insert(0i32) += w * prod.sign.as_i8() as i32;
        }
        if coeff.values().all(|&v| v == 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The default full suite: every check at its standard scope.
pub fn full_report(n_lo: u32, n_hi: u32) -> Report {
    let mut checks = Vec::new();
    for n in n_lo..=n_hi {
        checks.push(check_fill_divisibility(n));
        if n >= 5 {
            checks.push(check_low_strut_fullness(n));
            checks.push(check_half_generator_atlas(n));
        }
    }
    checks.push(check_flipbook());
    checks.push(check_pathion_census());
    for s in 1..8 {
        checks.push(check_genealogy(s, 6));
    }
    checks.push(check_oracle_equivalence(6));
    checks.push(check_structural(5));
    Report { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_default_check_passes() {
        let report = full_report(4, 5);
        for check in &report.checks {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn atlas_check_names_the_trip_count() {
        let check = check_half_generator_atlas(5);
        assert!(check.passed, "{}", check.detail);
        assert!(check.detail.contains("7 box-kites"), "{}", check.detail);
    }

    #[test]
    fn oracle_equivalence_through_128_dimensions() {
        let check = check_oracle_equivalence(7);
        assert!(check.passed, "{}", check.detail);
        assert!(check.detail.contains("16384"), "{}", check.detail);
    }
}
