//! Basis-unit arithmetic from the ground up: signed products, oriented
//! trips, the generator rules, and the doubling-formula cross-check.

use boxkite::cdp::{doubling, enumerate_trips, orient_trip, rule2_trips, trip_count};
use boxkite::{unit_product, Result};

fn main() -> Result<()> {
    // A product of imaginary basis units is another basis unit up to sign,
    // and the index is always the XOR of the factors' indices.
    println!("quaternion seed trip:");
    for (p, q) in [(1, 2), (2, 1), (2, 3), (3, 1)] {
        println!("  e{p} e{q} = {}", unit_product(p, q, 2)?);
    }

    // The generator G = 2^(n-1) reaches the upper half: u G = +(G+u) but
    // G u = -(G+u).
    println!("\ngenerator products in the 16-ions (G = 8):");
    for (p, q) in [(1, 8), (8, 1), (5, 8)] {
        println!("  e{p} e{q} = {}", unit_product(p, q, 4)?);
    }

    // Trips: XOR-closed triples carrying a cyclic orientation. (1,7,6) is
    // positive as written; ascending order (1,6,7) would read negatively.
    println!("\noctonion trips in cyclic positive order:");
    for t in enumerate_trips(3)? {
        println!("  {t}");
    }

    // Each trip spawns three descendants one doubling up.
    let seed = orient_trip([1, 2, 3])?;
    println!("\ndescendants of {seed} under g = 4:");
    for t in rule2_trips(seed, 4)? {
        println!("  {t}");
    }

    // Counts follow (2^n - 1)(2^n - 2)/6.
    let counts: Vec<u64> = (2..=6).map(trip_count).collect();
    println!("\ntrip counts for n = 2..6: {counts:?}");

    // An entirely independent product: recursive doubling on index halves,
    // calibrated once against the anchor products above. The two engines
    // agree on every ordered pair (exhaustively tested through n = 7).
    let conv = doubling::calibrate()?;
    println!("\ndoubling convention: {conv}");
    let (p, q, n) = (13, 14, 5);
    println!(
        "  spot check: trip rules e{p} e{q} = {}, doubling = {}",
        unit_product(p, q, n)?,
        doubling::product(conv, p, q, n)?
    );
    Ok(())
}
