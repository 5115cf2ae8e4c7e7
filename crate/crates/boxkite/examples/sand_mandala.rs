//! The seven-frame flip-book: as S walks from 9 to 15 in the 32-ions, two
//! perpendicular pairs of filled lines march inward until they form a
//! crossbar, and 24 content cells trace a diamond.

use boxkite::emanation::flipbook;
use boxkite::export::ascii_table;
use boxkite::{build_table, Context, Result};

fn main() -> Result<()> {
    for frame in flipbook(5)? {
        let (lo, hi) = frame.line_positions;
        println!(
            "S={:2}: lines at labels {:?} (positions {lo} and {hi}), {} box-kites, {} = {} line + {} content cells",
            frame.s,
            frame.line_labels,
            frame.boxkites,
            frame.filled,
            frame.line_cells,
            frame.content_cells.len()
        );
    }

    // First and last frames, drawn. At S=9 the lines hug the edges; at S=15
    // they collide at the center while the content cells split into upward
    // strokes (P=7) and downward strokes (P=8).
    for s in [9, 15] {
        let et = build_table(&Context::new(5, s)?)?;
        println!("\nS = {s}:\n{}", ascii_table(&et, false));
    }

    let frames = flipbook(5)?;
    let last = &frames[6];
    println!("S=15 content cells by P:");
    for want in [7, 8] {
        let cells: Vec<String> = last
            .content_cells
            .iter()
            .filter(|&&(_, _, _, _, p)| p == want)
            .map(|&(r, c, rl, cl, _)| format!("({rl},{cl})@[{r},{c}]"))
            .collect();
        println!("  P={want}: {}", cells.join(" "));
    }
    Ok(())
}
