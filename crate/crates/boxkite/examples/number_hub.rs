//! The half-generator atlas: at S = G/2 the table fills completely and its
//! upper-left quadrant is the unmarked trip table of the half dimension, so
//! each 2^n-ion grid indexes the whole 2^(n-1)-ion multiplication story.

use std::collections::BTreeSet;

use boxkite::cdp::enumerate_trips;
use boxkite::emanation::{extract_zigzags, fill_stats};
use boxkite::{build_table, discover_boxkites, Context, Result};

fn main() -> Result<()> {
    for n in [5, 6] {
        let g = boxkite::cdp::generator(n) / 2;
        let ctx = Context::new(n, g)?;
        let et = build_table(&ctx)?;
        let stats = fill_stats(&et)?;
        println!(
            "n={n}, S={g}: full={} ({} cells), {} box-kites",
            stats.full, stats.filled, stats.boxkites
        );

        // Quadrant read: rows and columns with labels below g hold exactly
        // r XOR c, unmarked — the trip table one dimension down.
        let atlas: BTreeSet<_> = extract_zigzags(&et).into_iter().collect();
        let trips: BTreeSet<_> = enumerate_trips(n - 2)?.into_iter().collect();
        println!(
            "  zigzags == all {} trips of the {}-ions: {}",
            trips.len(),
            1u64 << (n - 2),
            atlas == trips
        );

        // Every sextet mirrors: (a, b, c, g+c, g+b, g+a).
        let kites = discover_boxkites(&ctx)?;
        let mirrored = kites.iter().all(|k| {
            let [a, b, c, d, e, f] = k.sextet();
            a < g && b < g && c < g && d == c + g && e == b + g && f == a + g
        });
        println!("  all sextets of the (a,b,c,g+c,g+b,g+a) form: {mirrored}");
        for kite in kites.iter().take(3) {
            println!("    {:?}", kite.sextet());
        }
    }
    Ok(())
}
