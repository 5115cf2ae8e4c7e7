//! The 32-ion census: 77 box-kites across the 15 strut constants, with the
//! Type II count per row and the family split of each low-strut septet.

use boxkite::export::ascii_census;
use boxkite::genealogy::{pathion_families, PathionFamily};
use boxkite::kite::classify_kite_type;
use boxkite::{census, Context, Result};

fn main() -> Result<()> {
    let rows = census(5)?;
    print!("{}", ascii_census(5, &rows));

    let total: usize = rows.iter().map(|r| r.boxkites).sum();
    let type_ii: usize = rows.iter().map(|r| r.type_ii).sum();
    println!("\n{total} box-kites, {type_ii} of Type II");

    // Each S < 8 row splits 1 + 3 + 3: the zero-padded carrier of the
    // sedenion kite, three strongboxes riding index 8, three Type II.
    for s in 1..8 {
        let ctx = Context::new(5, s)?;
        let mut zero_padded = 0;
        let mut strongboxes = 0;
        let mut type_ii = Vec::new();
        for (kite, family) in pathion_families(s)? {
            match family {
                PathionFamily::ZeroPadded => zero_padded += 1,
                PathionFamily::Strongbox => strongboxes += 1,
                PathionFamily::TypeII => type_ii.push(kite),
                other => panic!("family {other:?} at low strut"),
            }
        }
        let zigzags: Vec<String> = type_ii.iter().map(|k| k.zigzag.to_string()).collect();
        println!(
            "S={s}: {zero_padded} zero-padded, {strongboxes} strongboxes, type II at {}",
            zigzags.join(" ")
        );
        for kite in &type_ii {
            assert_eq!(classify_kite_type(&ctx, kite)?.to_string(), "II");
        }
    }
    Ok(())
}
