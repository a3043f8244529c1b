//! Command-line front end: parse hypergraph files, enumerate orientations,
//! run the characterization checks next to their oracles, export diagrams,
//! and drive the exhaustive verification sweep.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use hyperlat::verify::{check_instance, verdict_text, verify_sweep, CheckOptions, MorphismMode};
use hyperlat::weak::{weak_leq, Permutation};
use hyperlat::{Hypergraph, Orientation};

#[derive(Parser)]
#[command(
    name = "hyperlat",
    about = "Hypergraphic posets on [n]: orientations, lattice checks, exports, verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the acyclic orientations of a hypergraph
    Orientations {
        /// Hypergraph JSON file
        #[arg(long)]
        input: PathBuf,
        /// text | json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run every characterization next to its brute-force oracle
    Check {
        #[arg(long)]
        input: PathBuf,
        /// text | json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Export the orientation poset, flip graph, or irreducible subposet
    Export {
        #[arg(long)]
        input: PathBuf,
        /// dot | json
        #[arg(long)]
        format: String,
        /// poset | flipgraph | irreducibles
        #[arg(long, default_value = "poset")]
        target: String,
        /// Output file; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Fiber of an orientation `"(1,4,3,4)"` or of a permutation `4132`
    Fiber {
        #[arg(long)]
        input: PathBuf,
        /// Orientation tuple or permutation word
        point: String,
    },
    /// Sweep all interval hypergraphs on [n], cross-checking every theorem
    Verify {
        /// Ground-set size to sweep
        #[arg(long, default_value_t = 5)]
        nmax: u8,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Seed for the sampled morphism pairs at n = 6
        #[arg(long)]
        seed: Option<u64>,
        /// text | json
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Orientations { input, format } => {
            let hg = load(&input)?;
            cmd_orientations(&hg, &format)?;
            Ok(true)
        }
        Command::Check { input, format } => {
            let hg = load(&input)?;
            cmd_check(&hg, &format)
        }
        Command::Export {
            input,
            format,
            target,
            output,
        } => {
            let hg = load(&input)?;
            let text = render_export(&hg, &format, &target)?;
            match output {
                Some(path) => fs::write(&path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::Fiber { input, point } => {
            let hg = load(&input)?;
            cmd_fiber(&hg, &point)?;
            Ok(true)
        }
        Command::Verify {
            nmax,
            jobs,
            seed,
            format,
        } => cmd_verify(nmax, jobs, seed, &format),
    }
}

fn load(path: &PathBuf) -> Result<Hypergraph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(Hypergraph::from_json(&text)?)
}

fn cmd_orientations(hg: &Hypergraph, format: &str) -> Result<()> {
    let orientations = hg.acyclic_orientations();
    match format {
        "text" => {
            println!("{} acyclic orientations", orientations.len());
            for o in &orientations {
                println!("{}", hg.orientation_tuple(o));
            }
        }
        "json" => {
            let tuples: Vec<String> =
                orientations.iter().map(|o| hg.orientation_tuple(o)).collect();
            println!(
                "{}",
                serde_json::json!({ "count": orientations.len(), "orientations": tuples })
            );
        }
        other => bail!("unknown format {other:?} (expected text or json)"),
    }
    Ok(())
}

/// Display labels for the theorem-backed checks.
fn check_labels(name: &str) -> (&'static str, &'static str) {
    match name {
        "thm1-lattice" => ("lattice", "Thm 1"),
        "thm2-distributive" => ("distributive", "Thm 2"),
        "thm3-join-semidistributive" => ("join-semidistributive", "Thm 3"),
        "thm3-meet-semidistributive" => ("meet-semidistributive", "Thm 3"),
        "thm4-meet-morphism" => ("meet-morphism", "Thm 4"),
        "thm4-join-morphism" => ("join-morphism", "Thm 4"),
        _ => ("", "characterization"),
    }
}

fn check_options_for(n: u8) -> CheckOptions {
    CheckOptions {
        // The brute-force scans enumerate n! permutations; keep them to
        // desk-size inputs and fall back to the characterizations alone.
        morphism: if n <= 6 {
            MorphismMode::Exhaustive
        } else {
            MorphismMode::Skip
        },
        fibers: n <= 6,
        acyclicity: n <= 6,
        ..CheckOptions::default()
    }
}

fn cmd_check(hg: &Hypergraph, format: &str) -> Result<bool> {
    let Some(iv) = hg.as_interval() else {
        return check_general(hg, format);
    };
    let report = check_instance(&iv, None, &check_options_for(hg.n()));
    match format {
        "text" => {
            println!("instance: n={} {}", hg.n(), hg.non_singleton_summary());
            for check in &report.checks {
                let (label, source) = check_labels(check.name);
                let label = if label.is_empty() { check.name } else { label };
                let flag = if check.matches() { "" } else { "  MISMATCH" };
                println!(
                    "{label}: {} (oracle) / {} ({source}){flag}",
                    verdict_text(&check.oracle),
                    verdict_text(&check.characterization),
                );
            }
            println!(
                "{} checks, {} mismatches",
                report.checks.len(),
                report.mismatches().len()
            );
        }
        "json" => println!("{}", report.to_json()),
        other => bail!("unknown format {other:?} (expected text or json)"),
    }
    Ok(report.all_match())
}

/// Oracle-only verdicts for hypergraphs with non-interval edges.
fn check_general(hg: &Hypergraph, format: &str) -> Result<bool> {
    eprintln!("warning: not an interval hypergraph; reporting oracle verdicts only");
    let hp = hg.orientation_poset();
    let lattice = hp.poset.is_lattice();
    let verdicts = [
        ("lattice", lattice),
        ("distributive", lattice && hp.poset.is_distributive()),
        (
            "join-semidistributive",
            lattice && hp.poset.is_join_semidistributive(),
        ),
        (
            "meet-semidistributive",
            lattice && hp.poset.is_meet_semidistributive(),
        ),
    ];
    match format {
        "text" => {
            println!("instance: n={} {}", hg.n(), hg.non_singleton_summary());
            println!("{} acyclic orientations", hp.len());
            for (label, verdict) in verdicts {
                println!("{label}: {} (oracle)", if verdict { "YES" } else { "NO" });
            }
        }
        "json" => {
            let map: serde_json::Map<String, serde_json::Value> = verdicts
                .iter()
                .map(|(label, verdict)| (label.to_string(), serde_json::json!(verdict)))
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "instance": serde_json::from_str::<serde_json::Value>(&hg.to_json())?,
                    "oracle": map,
                })
            );
        }
        other => bail!("unknown format {other:?} (expected text or json)"),
    }
    Ok(true)
}

fn render_export(hg: &Hypergraph, format: &str, target: &str) -> Result<String> {
    if format != "dot" && format != "json" {
        bail!("unknown format {format:?} (expected dot or json)");
    }
    match target {
        "poset" => {
            let hp = hg.orientation_poset();
            Ok(if format == "dot" {
                hp.poset.to_dot()
            } else {
                format!("{}\n", hp.poset.to_json())
            })
        }
        "irreducibles" => {
            let hp = hg.orientation_poset();
            let sub = hp.poset.induced(&hp.poset.join_irreducibles());
            Ok(if format == "dot" {
                sub.to_dot()
            } else {
                format!("{}\n", sub.to_json())
            })
        }
        "flipgraph" => {
            let hp = hg.orientation_poset();
            let mut arcs = Vec::new();
            for (a, o) in hp.elements.iter().enumerate() {
                for (_, _, flipped) in hg.increasing_flip_targets(o) {
                    let b = hp.index_of(&flipped).expect("flip target is acyclic");
                    arcs.push((a, b));
                }
            }
            arcs.sort_unstable();
            if format == "dot" {
                let mut out =
                    String::from("digraph flipgraph {\n  rankdir=BT;\n  node [shape=box];\n");
                for (k, label) in hp.poset.labels().iter().enumerate() {
                    out.push_str(&format!("  {k} [label=\"{label}\"];\n"));
                }
                for (a, b) in &arcs {
                    out.push_str(&format!("  {a} -> {b};\n"));
                }
                out.push_str("}\n");
                Ok(out)
            } else {
                Ok(format!(
                    "{}\n",
                    serde_json::json!({ "elements": hp.poset.labels(), "edges": arcs })
                ))
            }
        }
        other => bail!("unknown target {other:?} (expected poset, flipgraph, or irreducibles)"),
    }
}

fn cmd_fiber(hg: &Hypergraph, point: &str) -> Result<()> {
    let orientation: Orientation = if point.trim_start().starts_with('(') {
        hg.parse_orientation(point)?
    } else {
        let pi: Permutation = point
            .parse()
            .map_err(|e| anyhow!("cannot parse {point:?} as a permutation: {e}"))?;
        if pi.n() != hg.n() {
            bail!("permutation length {} does not match n={}", pi.n(), hg.n());
        }
        hg.orient(&pi)
    };
    if !hg.is_acyclic(&orientation) {
        bail!(
            "orientation {} is cyclic; fibers exist for acyclic orientations only",
            hg.orientation_tuple(&orientation)
        );
    }
    println!("orientation: {}", hg.orientation_tuple(&orientation));
    let fiber = hg.fiber(&orientation);
    println!("{} permutations", fiber.len());
    for pi in &fiber {
        println!("{pi}");
    }
    match hg.as_interval() {
        Some(iv) => {
            let (lo, hi) = iv.fiber_bounds(&orientation);
            println!("min: {lo}");
            println!("max: {hi}");
        }
        None => {
            // Without interval edges the fiber need not be an interval;
            // report its extreme members only when they exist.
            match fiber.iter().find(|p| fiber.iter().all(|q| weak_leq(p, q))) {
                Some(lo) => println!("min: {lo}"),
                None => println!("min: none (fiber has several minimal members)"),
            }
            match fiber.iter().find(|p| fiber.iter().all(|q| weak_leq(q, p))) {
                Some(hi) => println!("max: {hi}"),
                None => println!("max: none (fiber has several maximal members)"),
            }
        }
    }
    Ok(())
}

/// Enumeration cap for `verify`: 5 by default, 6 when HYPERLAT_MAX_N allows.
fn verify_bound() -> u8 {
    match std::env::var("HYPERLAT_MAX_N") {
        Ok(raw) => match raw.trim().parse::<u8>() {
            Ok(n) => n.clamp(1, 6).max(5),
            Err(_) => 5,
        },
        Err(_) => 5,
    }
}

fn cmd_verify(nmax: u8, jobs: usize, seed: Option<u64>, format: &str) -> Result<bool> {
    if format != "text" && format != "json" {
        bail!("unknown format {format:?} (expected text or json)");
    }
    let morphism = if nmax >= 6 {
        MorphismMode::SampledPairs {
            seed: seed.unwrap_or(0),
            count: 20_000,
        }
    } else {
        MorphismMode::Exhaustive
    };
    let opts = CheckOptions {
        morphism,
        acyclicity: nmax <= 5,
        ..CheckOptions::default()
    };
    let reports = verify_sweep(nmax, verify_bound(), jobs, &opts)?;
    let total = reports.len();
    let mut mismatched = 0usize;
    for report in &reports {
        if format == "json" {
            println!("{}", report.to_json());
            if !report.all_match() {
                mismatched += 1;
            }
            continue;
        }
        let verdict = if report.all_match() {
            "ok"
        } else {
            mismatched += 1;
            "MISMATCH"
        };
        println!(
            "[{:>5}/{total}] n={} {} {} ({} checks)",
            report.index + 1,
            report.n,
            report.label,
            verdict,
            report.checks.len()
        );
        for check in report.mismatches() {
            println!(
                "    {}: oracle={} characterization={}",
                check.name,
                verdict_text(&check.oracle),
                verdict_text(&check.characterization)
            );
        }
    }
    if format == "text" {
        println!("{total} instances, {mismatched} mismatches");
    }
    Ok(mismatched == 0)
}
