//! Randomized laws over the public API: orientation, product algebra,
//! zero-padding, table geometry, and blank-cell soundness.

use proptest::prelude::*;

use boxkite::cdp::{doubling, generator, orient_trip, zero_pad};
use boxkite::export::json_table;
use boxkite::kite::dmz_edge;
use boxkite::{build_table, unit_product, Context, Sign, SignedUnit};

/// Signed basis product inside a fixed dimension, for composing chains.
fn mul(a: SignedUnit, b: SignedUnit, n: u32) -> SignedUnit {
    let p = unit_product(a.index, b.index, n).unwrap();
    let sign = match (a.sign, b.sign) {
        (Sign::Plus, Sign::Plus) | (Sign::Minus, Sign::Minus) => p.sign,
        _ => p.sign.flip(),
    };
    SignedUnit::new(sign, p.index)
}

/// Two distinct nonzero indices below 2^n; their XOR completes a trip.
fn trip_members(n: u32) -> impl Strategy<Value = [u32; 3]> {
    let top = 1u32 << n;
    (1..top, 1..top)
        .prop_filter("members must differ", |(x, y)| x != y)
        .prop_map(|(x, y)| [x, y, x ^ y])
}

proptest! {
    /// Every cyclic arc of a CPO multiplies forward with a plus sign, and
    /// backward with a minus.
    #[test]
    fn cpo_arcs_multiply_forward(members in (3u32..=8).prop_flat_map(trip_members)) {
        let n = 32 - members.iter().max().unwrap().leading_zeros();
        let t = orient_trip(members).unwrap();
        let [a, b, c] = t.cpo();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            prop_assert_eq!(unit_product(x, y, n).unwrap(), SignedUnit::new(Sign::Plus, z));
            prop_assert_eq!(unit_product(y, x, n).unwrap(), SignedUnit::new(Sign::Minus, z));
        }
    }

    /// The index of any basis product is the XOR of the factor indices; the
    /// scalar unit commutes; every imaginary squares to minus one and
    /// anti-commutes with any other.
    #[test]
    fn product_index_and_sign_laws(n in 1u32..=7, seed in any::<u64>()) {
        let dim = 1u64 << n;
        let p = (seed % dim) as u32;
        let q = ((seed >> 32) % dim) as u32;
        let pq = unit_product(p, q, n).unwrap();
        prop_assert_eq!(pq.index, p ^ q);
        if p == 0 || q == 0 {
            prop_assert_eq!(pq.sign, Sign::Plus);
        } else if p == q {
            prop_assert_eq!(pq, SignedUnit::new(Sign::Minus, 0));
        } else {
            let qp = unit_product(q, p, n).unwrap();
            prop_assert_eq!(qp, pq.negate());
        }
    }

    /// Any single trip spans an associative (quaternion) subalgebra.
    #[test]
    fn trips_span_associative_subalgebras(members in (3u32..=8).prop_flat_map(trip_members)) {
        let n = 32 - members.iter().max().unwrap().leading_zeros();
        let t = orient_trip(members).unwrap();
        let units: Vec<u32> = std::iter::once(0).chain(t.cpo()).collect();
        for &x in &units {
            for &y in &units {
                for &z in &units {
                    let (sx, sy, sz) = (
                        SignedUnit::new(Sign::Plus, x),
                        SignedUnit::new(Sign::Plus, y),
                        SignedUnit::new(Sign::Plus, z),
                    );
                    prop_assert_eq!(mul(mul(sx, sy, n), sz, n), mul(sx, mul(sy, sz, n), n));
                }
            }
        }
    }

    /// Zero-padding keeps every cyclic arc oriented and forward-positive.
    #[test]
    fn zero_padding_preserves_orientation(
        members in (3u32..=6).prop_flat_map(trip_members),
        j in 0u32..=6,
        bits in 1u32..=4,
    ) {
        let n = 32 - members.iter().max().unwrap().leading_zeros();
        let j = j.min(n);
        let t = orient_trip(members).unwrap();
        let padded = zero_pad(t, j, bits).unwrap();
        let pad = |m: u32| ((m >> j) << (j + bits)) | (m & ((1 << j) - 1));
        for m in t.cpo() {
            let succ = t.successor(m).unwrap();
            prop_assert!(padded.is_forward(pad(m), pad(succ)));
        }
        let [a, b, c] = padded.cpo();
        prop_assert_eq!(
            unit_product(a, b, n + bits).unwrap(),
            SignedUnit::new(Sign::Plus, c)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Tables are symmetric, hold P = r XOR c everywhere, and leave the two
    /// long diagonals (self and strut opposite) empty.
    #[test]
    fn tables_are_symmetric_xor_grids(n in 4u32..=6, seed in any::<u64>()) {
        let s = 1 + (seed % (generator(n) - 1) as u64) as u32;
        let et = build_table(&Context::new(n, s).unwrap()).unwrap();
        for r in 0..et.side() {
            for c in 0..et.side() {
                let (rl, cl) = (et.labels()[r], et.labels()[c]);
                prop_assert_eq!(et.cell(r, c), et.cell(c, r));
                if let Some((p, _)) = et.cell(r, c) {
                    prop_assert_eq!(p, rl ^ cl);
                }
                if rl == cl || cl == (rl ^ s) {
                    prop_assert_eq!(et.cell(r, c), None);
                }
            }
        }
    }

    /// A blank off-diagonal cell really holds no zero divisor: all four
    /// diagonal sign pairings leave a nonzero coefficient under the
    /// independent doubling formula.
    #[test]
    fn blank_cells_hide_no_divisors(n in 4u32..=5, seed in any::<u64>()) {
        let s = 1 + (seed % (generator(n) - 1) as u64) as u32;
        let ctx = Context::new(n, s).unwrap();
        let ls = ctx.assessor_l_indices();
        let l1 = ls[(seed >> 16) as usize % ls.len()];
        let l2 = ls[(seed >> 40) as usize % ls.len()];
        prop_assume!(l1 != l2 && l2 != (l1 ^ s));
        prop_assume!(dmz_edge(&ctx, l1, l2).unwrap().is_none());

        let conv = doubling::calibrate().unwrap();
        let x = ctx.x();
        for (s1, s2) in [(1i32, 1i32), (1, -1), (-1, 1), (-1, -1)] {
            let mut coeff = std::collections::HashMap::new();
            let terms =
                [(l1, l2, 1), (l1, l2 ^ x, s2), (l1 ^ x, l2, s1), (l1 ^ x, l2 ^ x, s1 * s2)];
            for (p, q, w) in terms {
                let prod = doubling::product(conv, p, q, ctx.n()).unwrap();
                *coeff.entry(prod.index).or_insert(0i32) += w * prod.sign.as_i8() as i32;
            }
            prop_assert!(coeff.values().any(|&v| v != 0), "({l1},{l2}) annihilates at s={s}");
        }
    }
}

/// The table a worker pool builds does not depend on the pool's width.
#[test]
fn exports_are_thread_count_invariant() {
    let build = || {
        let et = build_table(&Context::new(5, 13).unwrap()).unwrap();
        json_table(&et).unwrap()
    };
    let narrow = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(build);
    let wide = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap().install(build);
    assert_eq!(narrow, wide);
}
