//! Command-line front end: basis products, trip enumeration, emanation
//! tables in four formats, box-kite discovery, census, genealogy, image
//! rendering, and the verification suites.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use boxkite::cdp::{enumerate_trips, unit_product, Sign};
use boxkite::emanation::{build_table, census, flipbook};
use boxkite::export::{
    ascii_boxkites, ascii_census, ascii_table, census_doc, csv_table, json_table, kite_doc,
    pgm_table,
};
use boxkite::genealogy::{genealogy_run, GenealogyLevel, TripRole};
use boxkite::kite::{discover_boxkites, Context};
use boxkite::verify::{
    check_fill_divisibility, check_flipbook, check_genealogy, check_half_generator_atlas,
    check_low_strut_fullness, check_oracle_equivalence, check_pathion_census, check_structural,
    full_report, Report,
};

type AnyError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(name = "boxkite", version, about = "Zero-divisor box-kites and emanation tables")]
struct Cli {
    /// Worker threads for table builds and censuses (default: all cores).
    /// Output bytes never depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum TextFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum TableFormat {
    #[default]
    Ascii,
    Csv,
    Pgm,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two basis units: `product 1 2 --n 4` prints `+e3`.
    Product {
        p: u32,
        q: u32,
        /// Dimension exponent: units live in the 2^n-ions.
        #[arg(long)]
        n: u32,
        /// Render indices as fixed-width binary.
        #[arg(long)]
        bits: bool,
    },
    /// Enumerate the trips of the 2^n-ion imaginaries.
    Trips {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TextFormat,
        #[arg(long)]
        bits: bool,
    },
    /// Build the emanation table of a (n, S) context.
    Et {
        #[arg(long)]
        n: u32,
        /// Strut constant, 0 < S < 2^(n-1).
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
        /// With --format pgm: emit the binary (P5) raster instead of P2.
        #[arg(long)]
        binary: bool,
        /// Render indices as fixed-width binary (ascii format only).
        #[arg(long)]
        bits: bool,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Discover and classify the box-kites of a (n, S) context.
    Boxkites {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TextFormat,
        #[arg(long)]
        bits: bool,
    },
    /// Count box-kites and type II kites for every strut constant of 2^n.
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TextFormat,
    },
    /// Grow the fixed-S zigzag family from its sedenion seed (S < 8).
    Genealogy {
        #[arg(long)]
        s: u32,
        /// Highest dimension exponent to reach.
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TextFormat,
    },
    /// Run the invariant suites; exits nonzero on any failure.
    Verify {
        /// Dimension exponent or inclusive range, e.g. `5` or `4..6`.
        #[arg(long, default_value = "4..6")]
        n: String,
        /// Run a single numbered fill law: 8 (counts divide by 24),
        /// 9 (low-strut tables full), 10 (half-generator atlas).
        #[arg(long)]
        thm: Option<u8>,
        /// Run only the 32-ion census partition check.
        #[arg(long)]
        census: bool,
        /// Run only the flip-book anatomy check.
        #[arg(long)]
        flipbook: bool,
        /// Run only the genealogy checks (S = 1..7).
        #[arg(long)]
        genealogy: bool,
        /// Run only the structural-law checks.
        #[arg(long)]
        properties: bool,
        /// Run only the product-oracle equivalence check.
        #[arg(long)]
        oracle: bool,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Render a table (or the whole flip-book) as PGM images.
    Render {
        #[arg(long)]
        n: u32,
        /// Strut constant; omit with --flipbook to render all seven frames.
        #[arg(long)]
        s: Option<u32>,
        /// Emit binary (P5) rasters instead of P2.
        #[arg(long)]
        binary: bool,
        /// Output file, or directory with --flipbook.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Render the seven S = 9..15 frames (n = 5).
        #[arg(long)]
        flipbook: bool,
    },
}

fn parse_range(text: &str) -> std::result::Result<(u32, u32), String> {
    let parse_one = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad bound {t:?}: {e}"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = parse_one(lo)?;
        let hi = parse_one(hi.strip_prefix('=').unwrap_or(hi))?;
        if lo > hi {
            return Err(format!("empty range {text:?}"));
        }
        Ok((lo, hi))
    } else {
        let v = parse_one(text)?;
        Ok((v, v))
    }
}

fn render_signed(sign: Sign, index: u32, n: u32, bits: bool) -> String {
    if bits {
        format!("{sign}e{index:0width$b}", width = n as usize)
    } else {
        format!("{sign}e{index}")
    }
}

fn emit(output: &Option<PathBuf>, bytes: &[u8]) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, bytes),
        None => std::io::stdout().write_all(bytes),
    }
}

fn genealogy_text(levels: &[GenealogyLevel]) -> String {
    let mut out = String::new();
    for level in levels {
        out.push_str(&format!(
            "level n={}: {} distinct zigzags, raw {}\n",
            level.n,
            level.zigzags.len(),
            level.raw
        ));
        if level.rule0.is_empty() {
            out.push_str(&format!("  seed: {}\n", level.zigzags[0]));
            continue;
        }
        let carried: Vec<String> = level.rule0.iter().map(|t| t.to_string()).collect();
        out.push_str(&format!("  carried: {}\n", carried.join(" ")));
        let medians: Vec<String> = level
            .medians
            .iter()
            .filter(|m| !m.redundant)
            .map(|m| m.zigzag.to_string())
            .collect();
        out.push_str(&format!("  medians: {}\n", medians.join(" ")));
        for (parent, sides) in &level.sides {
            let sides: Vec<String> = sides.iter().map(|t| t.to_string()).collect();
            out.push_str(&format!("  sides of {parent}: {}\n", sides.join(" ")));
        }
        for dup in &level.duplicates {
            let role = match dup.role {
                TripRole::Carried => "carried trip",
                TripRole::Median => "median",
                TripRole::Side => "side",
            };
            out.push_str(&format!(
                "  redundant {role} {} rediscovers {}\n",
                dup.trip, dup.duplicate_of
            ));
        }
    }
    out
}

fn selected_report(
    (n_lo, n_hi): (u32, u32),
    thm: Option<u8>,
    census_only: bool,
    flipbook_only: bool,
    genealogy_only: bool,
    properties_only: bool,
    oracle_only: bool,
) -> std::result::Result<Report, String> {
    let any_selector = thm.is_some()
        || census_only
        || flipbook_only
        || genealogy_only
        || properties_only
        || oracle_only;
    if !any_selector {
        return Ok(full_report(n_lo, n_hi));
    }
    let mut checks = Vec::new();
    if let Some(k) = thm {
        for n in n_lo..=n_hi {
            match k {
                8 => checks.push(check_fill_divisibility(n)),
                9 if n >= 5 => checks.push(check_low_strut_fullness(n)),
                10 if n >= 5 => checks.push(check_half_generator_atlas(n)),
                9 | 10 => {}
                other => return Err(format!("no numbered law {other}; use 8, 9, or 10")),
            }
        }
        if checks.is_empty() {
            return Err(format!("law {} needs n >= 5 in range", thm.unwrap_or(0)));
        }
    }
    if census_only {
        checks.push(check_pathion_census());
    }
    if flipbook_only {
        checks.push(check_flipbook());
    }
    if genealogy_only {
        for s in 1..8 {
            checks.push(check_genealogy(s, n_hi.clamp(5, 7)));
        }
    }
    if properties_only {
        checks.push(check_structural(n_hi.min(5)));
    }
    if oracle_only {
        checks.push(check_oracle_equivalence(n_hi.min(7)));
    }
    Ok(Report { checks })
}

fn run(cli: Cli) -> std::result::Result<ExitCode, AnyError> {
    match cli.cmd {
        Cmd::Product { p, q, n, bits } => {
            let prod = unit_product(p, q, n)?;
            println!("{}", render_signed(prod.sign, prod.index, n, bits));
        }
        Cmd::Trips { n, format, bits } => {
            let trips = enumerate_trips(n)?;
            match format {
                TextFormat::Json => println!("{}", serde_json::to_string_pretty(&trips)?),
                TextFormat::Text => {
                    for t in &trips {
                        if bits {
                            let [a, b, c] = t.cpo();
                            let w = n as usize;
                            println!("({a:0w$b},{b:0w$b},{c:0w$b})");
                        } else {
                            println!("{t}");
                        }
                    }
                    println!("{} trips", trips.len());
                }
            }
        }
        Cmd::Et { n, s, format, binary, bits, output } => {
            let ctx = Context::new(n, s)?;
            let et = build_table(&ctx)?;
            let bytes = match format {
                TableFormat::Ascii => ascii_table(&et, bits).into_bytes(),
                TableFormat::Csv => csv_table(&et).into_bytes(),
                TableFormat::Pgm => pgm_table(&et, binary),
                TableFormat::Json => json_table(&et)?.into_bytes(),
            };
            emit(&output, &bytes)?;
        }
        Cmd::Boxkites { n, s, format, bits } => {
            let ctx = Context::new(n, s)?;
            let kites = discover_boxkites(&ctx)?;
            match format {
                TextFormat::Text => print!("{}", ascii_boxkites(&ctx, &kites, bits)?),
                TextFormat::Json => {
                    let docs: boxkite::Result<Vec<_>> =
                        kites.iter().map(|k| kite_doc(&ctx, k)).collect();
                    println!("{}", serde_json::to_string_pretty(&docs?)?);
                }
            }
        }
        Cmd::Census { n, format } => {
            let rows = census(n)?;
            match format {
                TextFormat::Text => print!("{}", ascii_census(n, &rows)),
                TextFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&census_doc(n, &rows))?)
                }
            }
        }
        Cmd::Genealogy { s, nmax, format } => {
            let levels = genealogy_run(s, nmax)?;
            match format {
                TextFormat::Text => print!("{}", genealogy_text(&levels)),
                TextFormat::Json => println!("{}", serde_json::to_string_pretty(&levels)?),
            }
        }
        Cmd::Verify { n, thm, census, flipbook, genealogy, properties, oracle, json } => {
            let range = parse_range(&n).map_err(AnyError::from)?;
            let report = selected_report(range, thm, census, flipbook, genealogy, properties, oracle)
                .map_err(AnyError::from)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for check in &report.checks {
                    let tag = if check.passed { "PASS" } else { "FAIL" };
                    println!("{tag} {} — {}", check.name, check.detail);
                }
                let failed = report.checks.iter().filter(|c| !c.passed).count();
                println!(
                    "{} checks, {} failed",
                    report.checks.len(),
                    failed
                );
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::Render { n, s, binary, output, flipbook: book } => {
            if book {
                let dir = output.unwrap_or_else(|| PathBuf::from("."));
                std::fs::create_dir_all(&dir)?;
                for frame in flipbook(n)? {
                    let et = build_table(&Context::new(n, frame.s)?)?;
                    let path = dir.join(format!("et_n{n}_s{}.pgm", frame.s));
                    std::fs::write(&path, pgm_table(&et, binary))?;
                    println!("{}", path.display());
                }
            } else {
                let s = s.ok_or(boxkite::Error::Anomaly("--s required without --flipbook".into()))?;
                let et = build_table(&Context::new(n, s)?)?;
                emit(&output, &pgm_table(&et, binary))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
