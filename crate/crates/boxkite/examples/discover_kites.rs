//! Zero-divisor discovery: from one annihilating dyad pair to the full
//! box-kite anatomy of a strut context.

use boxkite::kite::{
    classify_kite_type, emanation_third, sail_trip_system, vizier_check, SAILS, VERTEX_NAMES,
};
use boxkite::{discover_boxkites, Context, Result};

fn main() -> Result<()> {
    // Fix the 16-ions with strut constant S = 1. Assessors pair a low unit
    // e_L with its high partner e_(L XOR 9); diagonals of two assessors can
    // multiply to exactly zero.
    let ctx = Context::new(4, 1)?;
    println!(
        "context: n={}, G={}, S={}, X={}, {} assessors",
        ctx.n(),
        ctx.g(),
        ctx.s(),
        ctx.x(),
        ctx.assessor_count()
    );

    println!("\nedge tests (brute four-term expansion):");
    for (l1, l2) in [(2, 4), (2, 6), (2, 3)] {
        match emanation_third(&ctx, l1, l2)? {
            Some((p, sign)) => println!("  ({l1},{l2}): {sign:?} edge, emanates {p}"),
            None => println!("  ({l1},{l2}): no annihilation (strut pair)"),
        }
    }

    // Edges close into sails, sails into octahedra.
    let kites = discover_boxkites(&ctx)?;
    let kite = &kites[0];
    println!("\nbox-kite: zigzag {}, sextet {:?}", kite.zigzag, kite.sextet());
    for (i, a) in kite.assessors.iter().enumerate() {
        println!("  {} = ({}, {})", VERTEX_NAMES[i], a.l, a.u);
    }
    println!("  type {}", classify_kite_type(&ctx, kite)?);

    println!("\nedges (zigzag and vent triangles red, mixed edges blue):");
    for e in &kite.edges {
        println!("  {}{}: {:?}", VERTEX_NAMES[e.a], VERTEX_NAMES[e.b], e.sign);
    }

    println!("\nsail trip systems (one L-trip + three U-trips each):");
    for (sail, vertices) in SAILS.iter().enumerate() {
        let trips = sail_trip_system(kite, sail)?;
        let names: String = vertices.iter().map(|&v| VERTEX_NAMES[v]).collect();
        println!("  {names}: L {}, U {} {} {}", trips.l_trip, trips.u_trips[0], trips.u_trips[1], trips.u_trips[2]);
    }

    let viziers = vizier_check(&ctx, kite)?;
    println!("\nvizier signs exact on all struts: {}", viziers.all_exact());

    // One doubling up, the same strut constant owns seven kites.
    let ctx = Context::new(5, 1)?;
    println!("\n32-ions at S=1:");
    for kite in discover_boxkites(&ctx)? {
        println!("  zigzag {}, type {}", kite.zigzag, classify_kite_type(&ctx, &kite)?);
    }
    Ok(())
}
