//! One table, four wire formats: ASCII grid, CSV rows, PGM image, and a
//! JSON document that round-trips back into an identical table.

use boxkite::export::{ascii_table, csv_table, json_table, pgm_table, table_from_json};
use boxkite::{build_table, Context, Result};

fn main() -> Result<()> {
    let ctx = Context::new(4, 1)?;
    let et = build_table(&ctx)?;

    println!("ASCII, decimal labels:\n{}", ascii_table(&et, false));
    println!("ASCII, bit-string labels:\n{}", ascii_table(&et, true));

    let csv = csv_table(&et);
    println!("CSV ({} lines):", csv.lines().count());
    for line in csv.lines().take(5) {
        println!("  {line}");
    }
    println!("  ...");

    // P2 is printable; pass binary=true for the P5 raster the render
    // subcommand writes to disk.
    let pgm = pgm_table(&et, false);
    println!("\nPGM (plain): {}", String::from_utf8(pgm).expect("P2 is ASCII"));

    let json = json_table(&et)?;
    let restored = table_from_json(&json)?;
    println!("JSON: {} bytes, round-trips: {}", json.len(), restored == et);
    Ok(())
}
