//! Building and reading emanation tables: label order, cell contents, fill
//! statistics, zigzag extraction, and near-solid lines.

use boxkite::emanation::{extract_zigzags, fill_stats, near_solid_lines};
use boxkite::export::ascii_table;
use boxkite::{build_table, label_order, Context, Result};

fn main() -> Result<()> {
    // The classic 6x6: sedenions, S = 1. Low indices enter from the left,
    // strut opposites mirror in from the right, so both long diagonals are
    // structurally blank.
    let ctx = Context::new(4, 1)?;
    println!("label order: {:?}", label_order(&ctx));
    let et = build_table(&ctx)?;
    println!("\n{}", ascii_table(&et, false));

    let stats = fill_stats(&et)?;
    println!("filled {} cells = {} box-kite(s); full: {}", stats.filled, stats.boxkites, stats.full);

    // A zigzag shows up as a row whose two unmarked cells name each other's
    // columns; each zigzag appears in three rows.
    println!("zigzags read off the grid: {:?}", extract_zigzags(&et).iter().map(|t| t.to_string()).collect::<Vec<_>>());

    // High strut constants empty most of the grid; what remains are two
    // near-solid lines and a handful of content cells.
    let ctx = Context::new(5, 9)?;
    let et = build_table(&ctx)?;
    let stats = fill_stats(&et)?;
    println!(
        "\n32-ions at S=9: {} of {} cells filled, {} box-kites, near-solid lines at labels {:?}",
        stats.filled,
        et.side() * et.side(),
        stats.boxkites,
        near_solid_lines(&et)
    );
    println!("\n{}", ascii_table(&et, false));
    Ok(())
}
