//! Zero-divisor structure of the 2^n-ions for n >= 4: strut contexts,
//! assessors, mutually annihilating dyad edges, and box-kites.
//!
//! Fix a generator `G = 2^(n-1)` and a strut constant `0 < S < G`, and write
//! `X = G + S`. An *assessor* is the plane spanned by a low unit `e_L`
//! (`0 < L < G`, `L != S`) and its high partner `e_U` with `U = L XOR X`.
//! Diagonal dyads `e_L ± e_U` from two different assessors can multiply to
//! exactly zero; when they do, the unordered pair is a *DMZ edge*. Edges
//! organize into octahedral six-assessor cliques (box-kites), each with four
//! triangular sails whose L-indices close as trips.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::cdp::{generator, orient_trip, unit_product, Sign, Trip, UnitIndex};
use crate::{Error, Result, MAX_N, MIN_KITE_N};

/// Vertex labels of a box-kite in canonical order. The zigzag sail is
/// (A, B, C); strut pairs are (A, F), (B, E), (C, D).
pub const VERTEX_NAMES: [char; 6] = ['A', 'B', 'C', 'D', 'E', 'F'];

/// Strut pairs as vertex positions.
pub const STRUTS: [(usize, usize); 3] = [(0, 5), (1, 4), (2, 3)];

/// Sails as vertex positions: the zigzag ABC and the trefoils ADE, FDB, FEC.
pub const SAILS: [[usize; 3]; 4] = [[0, 1, 2], [0, 3, 4], [5, 3, 1], [5, 4, 2]];

/// A zero-divisor search context: dimension exponent, generator, strut
/// constant, and their sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Context {
    n: u32,
    g: UnitIndex,
    s: UnitIndex,
    x: UnitIndex,
}

impl Context {
    pub fn new(n: u32, s: UnitIndex) -> Result<Context> {
        if !(MIN_KITE_N..=MAX_N).contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        let g = generator(n);
        if s == 0 || s >= g {
            return Err(Error::InvalidStrut { s, n, g });
        }
        Ok(Context { n, g, s, x: g + s })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn g(&self) -> UnitIndex {
        self.g
    }

    pub fn s(&self) -> UnitIndex {
        self.s
    }

    pub fn x(&self) -> UnitIndex {
        self.x
    }

    /// Number of assessors: every low imaginary index except S itself.
    pub fn assessor_count(&self) -> usize {
        self.g as usize - 2
    }

    pub fn is_assessor_l(&self, l: UnitIndex) -> bool {
        l > 0 && l < self.g && l != self.s
    }

    /// Valid assessor L-indices, ascending.
    pub fn assessor_l_indices(&self) -> Vec<UnitIndex> {
        (1..self.g).filter(|&l| l != self.s).collect()
    }

    fn check_l(&self, l: UnitIndex) -> Result<()> {
        if self.is_assessor_l(l) {
            Ok(())
        } else {
            Err(Error::InvalidAssessor { l })
        }
    }
}

/// An assessor plane, named by its low and high unit indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Assessor {
    pub l: UnitIndex,
    pub u: UnitIndex,
}

/// The assessor with low index `l`: the high index is `l XOR X`.
pub fn assessor_of(ctx: &Context, l: UnitIndex) -> Result<Assessor> {
    ctx.check_l(l)?;
    Ok(Assessor { l, u: l ^ ctx.x })
}

/// The L-index sharing a strut with `l`: `l XOR S`.
pub fn strut_opposite(ctx: &Context, l: UnitIndex) -> Result<UnitIndex> {
    ctx.check_l(l)?;
    Ok(l ^ ctx.s)
}

/// Polarity of a DMZ edge: which diagonal pairing annihilates.
///
/// `Blue` means the like-signed diagonals multiply to zero,
/// `(e_L1 + e_U1)(e_L2 + e_U2) = 0`; emanation tables mark blue cells with a
/// dash. `Red` means the unlike-signed pairing annihilates instead, and the
/// cell is unmarked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeSign {
    Blue,
    Red,
}

/// Tests two assessors for mutual annihilation by expanding the four-term
/// dyad product. No structural shortcuts: the four basis products decide.
///
/// With `t1 = sgn(L1 L2)`, `t2 = sgn(L1 U2)`, `t3 = sgn(U1 L2)`,
/// `t4 = sgn(U1 U2)`, the two index groups cancel simultaneously iff
/// `t1 t4 == t2 t3`, and then the annihilating diagonal pairing has
/// `s1 s2 = -(t1 t4)`.
pub fn dmz_edge(ctx: &Context, l1: UnitIndex, l2: UnitIndex) -> Result<Option<EdgeSign>> {
    let a1 = assessor_of(ctx, l1)?;
    let a2 = assessor_of(ctx, l2)?;
    if l1 == l2 {
        return Ok(None);
    }
    let n = ctx.n;
    let t1 = unit_product(a1.l, a2.l, n)?.sign;
    let t2 = unit_product(a1.l, a2.u, n)?.sign;
    let t3 = unit_product(a1.u, a2.l, n)?.sign;
    let t4 = unit_product(a1.u, a2.u, n)?.sign;
    if t1 * t4 != t2 * t3 {
        return Ok(None);
    }
    Ok(Some(match t1 * t4 {
        Sign::Minus => EdgeSign::Blue,
        Sign::Plus => EdgeSign::Red,
    }))
}

/// The emanated third of a DMZ edge: `P = L1 XOR L2`, the low index of the
/// sail vertex the edge points at. `None` when the pair shares an assessor,
/// sits on a strut, or does not annihilate.
pub fn emanation_third(
    ctx: &Context,
    l1: UnitIndex,
    l2: UnitIndex,
) -> Result<Option<(UnitIndex, EdgeSign)>> {
    Ok(dmz_edge(ctx, l1, l2)?.map(|sign| (l1 ^ l2, sign)))
}

/// One edge of a box-kite, as vertex positions into its assessor array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub sign: EdgeSign,
}

/// A box-kite: six assessors on an octahedral frame.
///
/// Vertices store in the order A..F with the zigzag L-trip's CPO at (A, B, C)
/// starting from its least member, and D, E, F the strut opposites of C, B, A
/// respectively. All twelve non-strut vertex pairs are DMZ edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoxKite {
    pub n: u32,
    pub s: UnitIndex,
    pub assessors: [Assessor; 6],
    pub zigzag: Trip,
    pub edges: Vec<Edge>,
}

impl BoxKite {
    /// The six L-indices in vertex order A..F.
    pub fn sextet(&self) -> [UnitIndex; 6] {
        [
            self.assessors[0].l,
            self.assessors[1].l,
            self.assessors[2].l,
            self.assessors[3].l,
            self.assessors[4].l,
            self.assessors[5].l,
        ]
    }

    pub fn contains_l(&self, l: UnitIndex) -> bool {
        self.assessors.iter().any(|a| a.l == l)
    }

    pub fn edge_sign(&self, a: usize, b: usize) -> Option<EdgeSign> {
        self.edges
            .iter()
            .find(|e| (e.a, e.b) == (a.min(b), a.max(b)))
            .map(|e| e.sign)
    }

    /// L-trip of one of the four sails.
    pub fn sail_l_trip(&self, sail: usize) -> Result<Trip> {
        let [i, j, k] = SAILS[sail];
        orient_trip([self.assessors[i].l, self.assessors[j].l, self.assessors[k].l])
    }
}

/// Finds every box-kite of the context.
///
/// All assessor pairs are brute-tested for annihilation; each edge closes
/// into a sail through its emanated third, and each sail extends to the
/// octahedron holding it and its strut opposites. Any failure of that
/// closure is a structural anomaly and errors out loudly rather than being
/// skipped.
pub fn discover_boxkites(ctx: &Context) -> Result<Vec<BoxKite>> {
    let labels = ctx.assessor_l_indices();
    let mut edges: BTreeMap<(UnitIndex, UnitIndex), EdgeSign> = BTreeMap::new();
    for (i, &l1) in labels.iter().enumerate() {
        for &l2 in &labels[i + 1..] {
            if let Some(sign) = dmz_edge(ctx, l1, l2)? {
                if l2 == l1 ^ ctx.s {
                    return Err(Error::Anomaly(format!(
                        "strut pair ({l1},{l2}) annihilates at n={}, s={}",
                        ctx.n, ctx.s
                    )));
                }
                edges.insert((l1, l2), sign);
            }
        }
    }

    let key = |a: UnitIndex, b: UnitIndex| (a.min(b), a.max(b));
    let mut sails: BTreeSet<[UnitIndex; 3]> = BTreeSet::new();
    for &(l1, l2) in edges.keys() {
        let p = l1 ^ l2;
        if !ctx.is_assessor_l(p) {
            return Err(Error::Anomaly(format!(
                "edge ({l1},{l2}) emanates invalid third {p}"
            )));
        }
        for other in [l1, l2] {
            if !edges.contains_key(&key(other, p)) {
                return Err(Error::Anomaly(format!(
                    "sail of edge ({l1},{l2}) fails to close at ({other},{p})"
                )));
            }
        }
        let mut sail = [l1, l2, p];
        sail.sort_unstable();
        sails.insert(sail);
    }

    let mut kite_sets: BTreeSet<[UnitIndex; 6]> = BTreeSet::new();
    for sail in &sails {
        let mut six = [
            sail[0],
            sail[1],
            sail[2],
            sail[0] ^ ctx.s,
            sail[1] ^ ctx.s,
            sail[2] ^ ctx.s,
        ];
        six.sort_unstable();
        kite_sets.insert(six);
    }

    let mut kites = Vec::with_capacity(kite_sets.len());
    for set in &kite_sets {
        kites.push(assemble_kite(ctx, set, &edges, &sails)?);
    }
    kites.sort_by_key(|k| k.zigzag);
    Ok(kites)
}

fn assemble_kite(
    ctx: &Context,
    set: &[UnitIndex; 6],
    edges: &BTreeMap<(UnitIndex, UnitIndex), EdgeSign>,
    sails: &BTreeSet<[UnitIndex; 3]>,
) -> Result<BoxKite> {
    let in_set = |l: UnitIndex| set.contains(&l);
    let own_sails: Vec<&[UnitIndex; 3]> =
        sails.iter().filter(|s| s.iter().all(|&l| in_set(l))).collect();
    if own_sails.len() != 4 {
        return Err(Error::Anomaly(format!(
            "assessor set {set:?} holds {} sails, want 4",
            own_sails.len()
        )));
    }

    let sail_sign = |sail: &[UnitIndex; 3]| -> Vec<EdgeSign> {
        let mut signs: Vec<EdgeSign> = Vec::with_capacity(3);
        for (i, &a) in sail.iter().enumerate() {
            for &b in &sail[i + 1..] {
                signs.push(edges[&(a.min(b), a.max(b))]);
            }
        }
        signs
    };
    let all_red: Vec<&&[UnitIndex; 3]> = own_sails
        .iter()
        .filter(|s| sail_sign(s).iter().all(|&e| e == EdgeSign::Red))
        .collect();
    if all_red.len() != 1 {
        return Err(Error::Anomaly(format!(
            "assessor set {set:?} holds {} all-red sails, want exactly 1",
            all_red.len()
        )));
    }

    let zigzag = orient_trip(**all_red[0])?;
    let [a, b, c] = zigzag.cpo();
    let ls = [a, b, c, c ^ ctx.s, b ^ ctx.s, a ^ ctx.s];
    let mut assessors = [Assessor { l: 0, u: 0 }; 6];
    for (i, &l) in ls.iter().enumerate() {
        assessors[i] = assessor_of(ctx, l)?;
    }

    let mut kite_edges = Vec::with_capacity(12);
    for i in 0..6 {
        for j in (i + 1)..6 {
            let is_strut = STRUTS.contains(&(i, j));
            let sign = edges.get(&(ls[i].min(ls[j]), ls[i].max(ls[j]))).copied();
            match (is_strut, sign) {
                (true, None) => {}
                (false, Some(sign)) => kite_edges.push(Edge { a: i, b: j, sign }),
                (true, Some(_)) => {
                    return Err(Error::Anomaly(format!(
                        "strut ({},{}) of {set:?} is an edge",
                        ls[i], ls[j]
                    )))
                }
                (false, None) => {
                    return Err(Error::Anomaly(format!(
                        "octahedron edge ({},{}) of {set:?} missing",
                        ls[i], ls[j]
                    )))
                }
            }
        }
    }

    let kite = BoxKite { n: ctx.n, s: ctx.s, assessors, zigzag, edges: kite_edges };
    check_edge_pattern(&kite, set)?;
    Ok(kite)
}

/// Every box-kite carries one sign pattern: zigzag and vent triangles red,
/// the six zigzag-to-vent edges blue.
fn check_edge_pattern(kite: &BoxKite, set: &[UnitIndex; 6]) -> Result<()> {
    for e in &kite.edges {
        let zig_ends = (e.a < 3) as usize + (e.b < 3) as usize;
        let want = if zig_ends == 1 { EdgeSign::Blue } else { EdgeSign::Red };
        if e.sign != want {
            return Err(Error::Anomaly(format!(
                "edge {}{} of {set:?} is {:?}, want {want:?}",
                VERTEX_NAMES[e.a], VERTEX_NAMES[e.b], e.sign
            )));
        }
    }
    Ok(())
}

/// Strut-orientation classes. Type I kites have every strut in standard
/// orientation; type II kites have exactly two reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KiteType {
    I,
    II,
}

impl std::fmt::Display for KiteType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            KiteType::I => "I",
            KiteType::II => "II",
        })
    }
}

/// Classifies by strut orientation: a strut is standard when the product of
/// its vent and zigzag low units, read vent first, is `+e_S`. Zero reversed
/// struts make type I, two make type II; any other count is an anomaly.
pub fn classify_kite_type(ctx: &Context, kite: &BoxKite) -> Result<KiteType> {
    let mut reversed = 0;
    for &(zi, vi) in &STRUTS {
        let z = kite.assessors[zi].l;
        let v = kite.assessors[vi].l;
        let prod = unit_product(v, z, ctx.n)?;
        if prod.index != ctx.s {
            return Err(Error::Anomaly(format!(
                "strut product e{v} e{z} has index {}, want {}",
                prod.index, ctx.s
            )));
        }
        if prod.sign == Sign::Minus {
            reversed += 1;
        }
    }
    match reversed {
        0 => Ok(KiteType::I),
        2 => Ok(KiteType::II),
        k => Err(Error::Anomaly(format!(
            "{} reversed struts in {:?}, want 0 or 2",
            k,
            kite.sextet()
        ))),
    }
}

/// The four trips a sail carries: its L-trip plus one U-trip per vertex
/// (that vertex's low unit with the other two vertices' high units).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SailTrips {
    pub l_trip: Trip,
    pub u_trips: [Trip; 3],
}

/// Trips of sail `sail` (0 = zigzag ABC, then ADE, FDB, FEC).
pub fn sail_trip_system(kite: &BoxKite, sail: usize) -> Result<SailTrips> {
    if sail >= SAILS.len() {
        return Err(Error::Anomaly(format!("sail index {sail} out of range")));
    }
    let [i, j, k] = SAILS[sail];
    let (ai, aj, ak) = (kite.assessors[i], kite.assessors[j], kite.assessors[k]);
    Ok(SailTrips {
        l_trip: orient_trip([ai.l, aj.l, ak.l])?,
        u_trips: [
            orient_trip([ai.l, aj.u, ak.u])?,
            orient_trip([ai.u, aj.l, ak.u])?,
            orient_trip([ai.u, aj.u, ak.l])?,
        ],
    })
}

/// Sign-level record of the three vizier identities on one strut.
///
/// Writing (z, Z) for the zigzag assessor's low and high units and (v, V)
/// for the vent's: `v z` and `V Z` land on `±e_S` (first vizier), `Z v` and
/// `V z` on `±e_G` (second), `V v` and `z Z` on `±e_X` (third). The index
/// parts are unconditional; the sign parts are all `+` exactly in dimension
/// 16, and only the second vizier keeps both signs positive beyond it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrutViziers {
    pub zig_l: UnitIndex,
    pub vent_l: UnitIndex,
    pub vz1: (Sign, Sign),
    pub vz2: (Sign, Sign),
    pub vz3: (Sign, Sign),
}

impl StrutViziers {
    pub fn exact(&self) -> bool {
        let all = [self.vz1, self.vz2, self.vz3];
        all.iter().all(|&(a, b)| a == Sign::Plus && b == Sign::Plus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VizierReport {
    pub struts: [StrutViziers; 3],
}

impl VizierReport {
    pub fn all_exact(&self) -> bool {
        self.struts.iter().all(|s| s.exact())
    }
}

/// Evaluates the vizier identities on every strut, erroring on any index
/// mismatch and reporting the signs.
pub fn vizier_check(ctx: &Context, kite: &BoxKite) -> Result<VizierReport> {
    let mut out = [StrutViziers {
        zig_l: 0,
        vent_l: 0,
        vz1: (Sign::Plus, Sign::Plus),
        vz2: (Sign::Plus, Sign::Plus),
        vz3: (Sign::Plus, Sign::Plus),
    }; 3];
    for (idx, &(zi, vi)) in STRUTS.iter().enumerate() {
        let (z, zz) = (kite.assessors[zi].l, kite.assessors[zi].u);
        let (v, vv) = (kite.assessors[vi].l, kite.assessors[vi].u);
        let n = ctx.n;
        let expect = |p: UnitIndex, q: UnitIndex, want: UnitIndex| -> Result<Sign> {
            let prod = unit_product(p, q, n)?;
            if prod.index != want {
                return Err(Error::Anomaly(format!(
                    "e{p} e{q} has index {}, want {want}",
                    prod.index
                )));
            }
            Ok(prod.sign)
        };
        out[idx] = StrutViziers {
            zig_l: z,
            vent_l: v,
            vz1: (expect(v, z, ctx.s)?, expect(vv, zz, ctx.s)?),
            vz2: (expect(zz, v, ctx.g)?, expect(vv, z, ctx.g)?),
            vz3: (expect(vv, v, ctx.x)?, expect(z, zz, ctx.x)?),
        };
    }
    Ok(VizierReport { struts: out })
}
