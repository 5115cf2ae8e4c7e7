//! Trip genealogy: seed with the sedenion zigzag at a strut constant, then
//! climb dimension by dimension. Each level carries the zigzags below
//! verbatim, resolves one median per fresh index, and descends Rule 2 sides
//! from every carried parent — reproducing the full trip count of the half
//! dimension with a handful of redundant emissions along the way.

use boxkite::cdp::trip_count;
use boxkite::genealogy::{genealogy_run, trip_machine};
use boxkite::{Result, Trip};

fn main() -> Result<()> {
    let s = 1;
    let levels = genealogy_run(s, 6)?;

    println!("genealogy at S={s}, seeded from the sedenion zigzag {}", levels[0].zigzags[0]);
    for level in &levels {
        println!(
            "\nn={}: {} distinct zigzags ({} raw emissions), trip count check {}",
            level.n,
            level.zigzags.len(),
            level.raw,
            trip_count(level.n - 2)
        );
        if !level.rule0.is_empty() {
            let carried: Vec<String> = level.rule0.iter().map(Trip::to_string).collect();
            println!("  carried : {}", carried.join(" "));
        }
        for m in &level.medians {
            let mark = if m.redundant { "  [redundant]" } else { "" };
            let via = if m.via_trefoil { " via trefoil" } else { "" };
            println!("  median  : u={:2} {} -> zigzag {}{via}{mark}", m.u, m.median, m.zigzag);
        }
        for (parent, sides) in &level.sides {
            println!("  sides of {parent}: {} {} {}", sides[0], sides[1], sides[2]);
        }
        for d in &level.duplicates {
            println!("  duplicate {:?} {} already recorded as {}", d.role, d.trip, d.duplicate_of);
        }
    }

    // The machine also runs without a strut context: medians keep the plain
    // (u, g, g+u) form. One quaternion trip regenerates all of octonion space.
    let pure = trip_machine(&[Trip::new([1, 2, 3])?], 4, None)?;
    println!("\npure machine, rule0 = (1,2,3), n=4:");
    let zigzags: Vec<String> = pure.zigzags.iter().map(Trip::to_string).collect();
    println!("  {}", zigzags.join(" "));
    Ok(())
}
