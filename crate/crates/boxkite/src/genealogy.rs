//! Fixed-strut zigzag genealogy: how one sedenion zigzag grows a family of
//! trips across doublings.
//!
//! With the strut constant S held fixed, the zigzag L-trips at one dimension
//! seed the next: each carried trip persists verbatim (Rule 0), each index u
//! of the seed set owns a *median* trip {u, g, g+u} through the new central
//! element g, and each seed trip spawns three *sides* by Rule 2. A median is
//! a trefoil sail of some box-kite one level up; the trip the family records
//! is that kite's zigzag. Two indices on one strut (u and u XOR S) share a
//! kite, so some medians only rediscover an earlier zigzag — those are the
//! family's redundancies.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cdp::{generator, orient_trip, rule2_trips, trip_count, Trip, UnitIndex};
use crate::kite::{
    classify_kite_type, discover_boxkites, dmz_edge, BoxKite, Context, EdgeSign, KiteType,
};
use crate::{Error, Result, MAX_N};

/// Where an emitted trip came from within its level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TripRole {
    Carried,
    Median,
    Side,
}

/// One median: the index that owns it, the median trip itself, the zigzag of
/// the box-kite holding that median, and whether the kite was reached
/// through a trefoil (its zigzag sits on the strut-opposite index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MedianRecord {
    pub u: UnitIndex,
    pub median: Trip,
    pub zigzag: Trip,
    pub via_trefoil: bool,
    pub redundant: bool,
}

/// A raw emission that only repeated an already-recorded zigzag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DuplicateRecord {
    pub role: TripRole,
    pub trip: Trip,
    pub duplicate_of: Trip,
}

/// One dimension's output of the trip machine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenealogyLevel {
    pub n: u32,
    /// Trips carried verbatim from the level below.
    pub rule0: Vec<Trip>,
    pub medians: Vec<MedianRecord>,
    /// Per carried parent, its three Rule 2 sides.
    pub sides: Vec<(Trip, [Trip; 3])>,
    /// Distinct zigzags in emission order: carried, then medians by first
    /// occurrence of their index, then sides parent by parent.
    pub zigzags: Vec<Trip>,
    /// Total emissions before deduplication.
    pub raw: usize,
    pub duplicates: Vec<DuplicateRecord>,
}

fn push_emission(
    role: TripRole,
    trip: Trip,
    raw: &mut usize,
    zigzags: &mut Vec<Trip>,
    seen: &mut BTreeSet<Trip>,
    duplicates: &mut Vec<DuplicateRecord>,
    duplicate_form: Trip,
) {
    *raw += 1;
    if seen.insert(trip) {
        zigzags.push(trip);
    } else {
        duplicates.push(DuplicateRecord { role, trip: duplicate_form, duplicate_of: trip });
    }
}

/// Edge colors of a three-assessor sail candidate; errors if any pair fails
/// to annihilate, since sail edges always do.
fn sail_is_all_red(ctx: &Context, members: [UnitIndex; 3]) -> Result<bool> {
    let mut red = 0;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            match dmz_edge(ctx, a, b)? {
                Some(EdgeSign::Red) => red += 1,
                Some(EdgeSign::Blue) => {}
                None => {
                    return Err(Error::Anomaly(format!(
                        "sail candidate {members:?} has a non-annihilating pair ({a},{b})"
                    )))
                }
            }
        }
    }
    Ok(red == 3)
}

/// The zigzag of the box-kite whose trefoil is the median {u, g, g+u}:
/// of the kite's four sails, exactly one is all red. Returns the zigzag and
/// whether it sits on u's strut opposite rather than u.
fn median_zigzag(ctx: &Context, u: UnitIndex, g: UnitIndex) -> Result<(Trip, bool)> {
    let s = ctx.s();
    let candidates = [
        ([u, (g ^ u) ^ s, g ^ s], false),
        ([u ^ s, g ^ u, g ^ s], true),
        ([u, g, g ^ u], false),
        ([u ^ s, g, g ^ u ^ s], true),
    ];
    let mut found = None;
    for (members, via) in candidates {
        if sail_is_all_red(ctx, members)? {
            if found.is_some() {
                return Err(Error::Anomaly(format!(
                    "median of {u} has two all-red sails at n={}, s={s}",
                    ctx.n()
                )));
            }
            found = Some((orient_trip(members)?, via));
        }
    }
    found.ok_or_else(|| {
        Error::Anomaly(format!("median of {u} has no all-red sail at n={}, s={}", ctx.n(), s))
    })
}

/// Runs one level of the trip machine: carries `rule0`, emits one median per
/// distinct index (in first-occurrence order), and three Rule 2 sides per
/// carried trip. `strut = Some(s)` resolves each median to its box-kite's
/// zigzag in the (n, s) context; `strut = None` runs the pure trip recursion
/// with medians kept as {u, g, g+u} (the octonion seed story, where no
/// annihilation exists to consult).
pub fn trip_machine(rule0: &[Trip], n: u32, strut: Option<UnitIndex>) -> Result<GenealogyLevel> {
    if !(4..=MAX_N).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    let g = generator(n) / 2;
    for t in rule0 {
        if t.max_member() >= g {
            return Err(Error::InvalidTrip(t.cpo()));
        }
    }
    let ctx = strut.map(|s| Context::new(n, s)).transpose()?;

    let mut zigzags = Vec::new();
    let mut seen = BTreeSet::new();
    let mut duplicates = Vec::new();
    let mut raw = 0;

    for &t in rule0 {
        push_emission(
            TripRole::Carried,
            t,
            &mut raw,
            &mut zigzags,
            &mut seen,
            &mut duplicates,
            t,
        );
    }

    let mut medians = Vec::new();
    let mut used = BTreeSet::new();
    for t in rule0 {
        for u in t.cpo() {
            if !used.insert(u) {
                continue;
            }
            let median = orient_trip([u, g, g ^ u])?;
            let (zigzag, via_trefoil) = match &ctx {
                Some(ctx) => median_zigzag(ctx, u, g)?,
                None => (median, false),
            };
            let redundant = seen.contains(&zigzag);
            medians.push(MedianRecord { u, median, zigzag, via_trefoil, redundant });
            push_emission(
                TripRole::Median,
                zigzag,
                &mut raw,
                &mut zigzags,
                &mut seen,
                &mut duplicates,
                median,
            );
        }
    }

    let mut sides = Vec::new();
    for &t in rule0 {
        let three = rule2_trips(t, g)?;
        for side in three {
            push_emission(
                TripRole::Side,
                side,
                &mut raw,
                &mut zigzags,
                &mut seen,
                &mut duplicates,
                side,
            );
        }
        sides.push((t, three));
    }

    Ok(GenealogyLevel { n, rule0: rule0.to_vec(), medians, sides, zigzags, raw, duplicates })
}

/// Grows the fixed-S zigzag family from its sedenion seed up to `n_max`.
///
/// Every level's distinct count must hit the full trip count of the
/// half-dimension, and every emitted trip must be the zigzag of a discovered
/// box-kite: checked by whole-census comparison through n = 7 and by
/// per-trip all-red verification above that.
pub fn genealogy_run(s: UnitIndex, n_max: u32) -> Result<Vec<GenealogyLevel>> {
    if !(1..8).contains(&s) {
        return Err(Error::InvalidStrut { s, n: 4, g: 8 });
    }
    if !(4..=MAX_N).contains(&n_max) {
        return Err(Error::UnsupportedDimension(n_max));
    }

    let seed_ctx = Context::new(4, s)?;
    let seed = discover_boxkites(&seed_ctx)?;
    if seed.len() != 1 {
        return Err(Error::Anomaly(format!("{} sedenion box-kites at s={s}, want 1", seed.len())));
    }
    let mut levels = vec![GenealogyLevel {
        n: 4,
        rule0: Vec::new(),
        medians: Vec::new(),
        sides: Vec::new(),
        zigzags: vec![seed[0].zigzag],
        raw: 1,
        duplicates: Vec::new(),
    }];

    for n in 5..=n_max {
        let prev = levels.last().expect("seed level present").zigzags.clone();
        let level = trip_machine(&prev, n, Some(s))?;
        let want = trip_count(n - 2) as usize;
        if level.zigzags.len() != want {
            return Err(Error::Anomaly(format!(
                "level n={n} holds {} zigzags, want {want}",
                level.zigzags.len()
            )));
        }
        cross_validate(&level, s)?;
        levels.push(level);
    }
    Ok(levels)
}

/// Levels through n = 7 are checked against full box-kite discovery; above
/// that each zigzag is individually re-verified as an all-red sail.
fn cross_validate(level: &GenealogyLevel, s: UnitIndex) -> Result<()> {
    let ctx = Context::new(level.n, s)?;
    if level.n <= 7 {
        let discovered: BTreeSet<Trip> =
            discover_boxkites(&ctx)?.iter().map(|k| k.zigzag).collect();
        let emitted: BTreeSet<Trip> = level.zigzags.iter().copied().collect();
        if discovered != emitted {
            return Err(Error::Anomaly(format!(
                "genealogy level n={} disagrees with discovery at s={s}",
                level.n
            )));
        }
    } else {
        for t in &level.zigzags {
            if !sail_is_all_red(&ctx, t.cpo())? {
                return Err(Error::Anomaly(format!(
                    "genealogy trip {t} is not an all-red sail at n={}, s={s}",
                    level.n
                )));
            }
        }
    }
    Ok(())
}

/// The five structural families of 32-dimensional box-kites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathionFamily {
    /// Low strut, zigzag identical to the sedenion seed's.
    ZeroPadded,
    /// Low strut, generator-half 8 among the six L-indices.
    Strongbox,
    /// Low strut, neither of the above; always two reversed struts.
    TypeII,
    /// S = 8: the full table doubles as the octonion trip atlas.
    Atlas,
    /// S > 8: three kites in a mostly empty table.
    SandMandala,
}

/// Classifies one 32-dimensional box-kite into its family. The TypeII family
/// must agree with strut-orientation classification; disagreement is an
/// anomaly.
pub fn pathion_family(kite: &BoxKite) -> Result<PathionFamily> {
    if kite.n != 5 {
        return Err(Error::UnsupportedDimension(kite.n));
    }
    if kite.s == 8 {
        return Ok(PathionFamily::Atlas);
    }
    if kite.s > 8 {
        return Ok(PathionFamily::SandMandala);
    }
    let seed_ctx = Context::new(4, kite.s)?;
    let seed_zigzag = discover_boxkites(&seed_ctx)?[0].zigzag;
    if kite.zigzag == seed_zigzag {
        return Ok(PathionFamily::ZeroPadded);
    }
    if kite.contains_l(8) {
        return Ok(PathionFamily::Strongbox);
    }
    let ctx = Context::new(kite.n, kite.s)?;
    if classify_kite_type(&ctx, kite)? != KiteType::II {
        return Err(Error::Anomaly(format!(
            "family says type II but strut orientation disagrees for {:?}",
            kite.sextet()
        )));
    }
    Ok(PathionFamily::TypeII)
}

/// Discovers all box-kites of a 32-dimensional context and tags each with
/// its family.
pub fn pathion_families(s: UnitIndex) -> Result<Vec<(BoxKite, PathionFamily)>> {
    let ctx = Context::new(5, s)?;
    discover_boxkites(&ctx)?
        .into_iter()
        .map(|kite| {
            let family = pathion_family(&kite)?;
            Ok((kite, family))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cpo_list(trips: &[Trip]) -> Vec<[u32; 3]> {
        trips.iter().map(|t| t.cpo()).collect()
    }

    #[test]
    fn the_pure_machine_grows_the_octonions_from_the_quaternion_seed() {
        let seed = orient_trip([1, 2, 3]).unwrap();
        let level = trip_machine(&[seed], 4, None).unwrap();
        assert_eq!(
            cpo_list(&level.zigzags),
            vec![
                [1, 2, 3],
                [1, 4, 5],
                [2, 4, 6],
                [3, 4, 7],
                [1, 7, 6],
                [2, 5, 7],
                [3, 6, 5],
            ]
        );
        assert_eq!(level.raw, 7);
        assert!(level.duplicates.is_empty());
    }

    #[test]
    fn the_unit_strut_family_in_dimension_32() {
        let levels = genealogy_run(1, 5).unwrap();
        assert_eq!(cpo_list(&levels[0].zigzags), vec![[3, 6, 5]]);
        let level = &levels[1];
        assert_eq!(
            cpo_list(&level.zigzags),
            vec![
                [3, 6, 5],
                [3, 10, 9],
                [6, 15, 9],
                [5, 12, 9],
                [3, 13, 14],
                [6, 11, 13],
                [5, 14, 11],
            ]
        );
        assert_eq!(level.raw, 7);
        assert!(level.duplicates.is_empty());
        assert!(level.medians.iter().all(|m| !m.via_trefoil && !m.redundant));
    }

    #[test]
    fn the_unit_strut_family_in_dimension_64() {
        let levels = genealogy_run(1, 6).unwrap();
        let level = &levels[2];
        assert_eq!(level.raw, 38);
        assert_eq!(level.zigzags.len(), 35);
        assert_eq!(level.medians.len(), 10);

        let emitted: BTreeSet<[u32; 3]> = level
            .medians
            .iter()
            .filter(|m| !m.redundant)
            .map(|m| m.zigzag.cpo())
            .collect();
        let want: BTreeSet<[u32; 3]> = [
            [3, 18, 17],
            [5, 20, 17],
            [6, 23, 17],
            [9, 24, 17],
            [10, 27, 17],
            [12, 29, 17],
            [15, 30, 17],
        ]
        .into_iter()
        .collect();
        assert_eq!(emitted, want);

        assert_eq!(level.duplicates.len(), 3);
        let dup_trips: BTreeSet<[u32; 3]> =
            level.duplicates.iter().map(|d| d.trip.cpo()).collect();
        assert!(dup_trips.contains(&[14, 16, 30]));
        assert!(dup_trips.contains(&[11, 16, 27]));
        for d in &level.duplicates {
            assert_eq!(d.role, TripRole::Median);
            let expect = match d.trip.cpo() {
                [11, 16, 27] => [10, 27, 17],
                [13, 16, 29] => [12, 29, 17],
                [14, 16, 30] => [15, 30, 17],
                other => panic!("unexpected duplicate {other:?}"),
            };
            assert_eq!(d.duplicate_of.cpo(), expect);
        }
    }

    #[test]
    fn rule_2_sides_in_dimension_64() {
        let levels = genealogy_run(1, 6).unwrap();
        let level = &levels[2];
        assert_eq!(level.sides.len(), 7);
        let by_parent: Vec<([u32; 3], Vec<[u32; 3]>)> = level
            .sides
            .iter()
            .map(|(p, three)| (p.cpo(), three.iter().map(|t| t.cpo()).collect()))
            .collect();
        let want: Vec<([u32; 3], Vec<[u32; 3]>)> = vec![
            ([3, 6, 5], vec![[3, 21, 22], [6, 19, 21], [5, 22, 19]]),
            ([3, 10, 9], vec![[3, 25, 26], [10, 19, 25], [9, 26, 19]]),
            ([6, 15, 9], vec![[6, 25, 31], [15, 22, 25], [9, 31, 22]]),
            ([5, 12, 9], vec![[5, 25, 28], [12, 21, 25], [9, 28, 21]]),
            ([3, 13, 14], vec![[3, 30, 29], [13, 19, 30], [14, 29, 19]]),
            ([6, 11, 13], vec![[6, 29, 27], [11, 22, 29], [13, 27, 22]]),
            ([5, 14, 11], vec![[5, 27, 30], [14, 21, 27], [11, 30, 21]]),
        ];
        assert_eq!(by_parent, want);
    }

    #[test]
    fn counts_follow_the_half_dimension_trip_law() {
        let levels = genealogy_run(1, 7).unwrap();
        let counts: Vec<usize> = levels.iter().map(|l| l.zigzags.len()).collect();
        assert_eq!(counts, vec![1, 7, 35, 155]);
    }

    #[test]
    fn every_low_strut_family_reaches_35() {
        for s in 1..8 {
            let levels = genealogy_run(s, 6).unwrap();
            assert_eq!(levels[2].zigzags.len(), 35, "s={s}");
        }
    }

    #[test]
    fn recursion_requires_a_sedenion_strut() {
        assert!(genealogy_run(9, 5).is_err());
        assert!(genealogy_run(8, 5).is_err());
        assert!(genealogy_run(0, 5).is_err());
    }

    #[test]
    fn pathion_families_partition_low_struts() {
        for s in 1..8 {
            let tagged = pathion_families(s).unwrap();
            assert_eq!(tagged.len(), 7, "s={s}");
            let count = |f: PathionFamily| tagged.iter().filter(|(_, g)| *g == f).count();
            assert_eq!(count(PathionFamily::ZeroPadded), 1, "s={s}");
            assert_eq!(count(PathionFamily::Strongbox), 3, "s={s}");
            assert_eq!(count(PathionFamily::TypeII), 3, "s={s}");
        }
        assert!(pathion_families(8)
            .unwrap()
            .iter()
            .all(|(_, f)| *f == PathionFamily::Atlas));
        assert!(pathion_families(9)
            .unwrap()
            .iter()
            .all(|(_, f)| *f == PathionFamily::SandMandala));
    }

    #[test]
    fn known_family_members_at_unit_strut() {
        let tagged = pathion_families(1).unwrap();
        let family_of = |sextet: [u32; 6]| {
            tagged
                .iter()
                .find(|(k, _)| k.sextet() == sextet)
                .map(|(_, f)| *f)
                .expect("sextet present")
        };
        assert_eq!(family_of([3, 6, 5, 4, 7, 2]), PathionFamily::ZeroPadded);
        assert_eq!(family_of([3, 10, 9, 8, 11, 2]), PathionFamily::Strongbox);
        assert_eq!(family_of([6, 11, 13, 12, 10, 7]), PathionFamily::TypeII);
    }
}
