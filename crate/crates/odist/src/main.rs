//! Command-line front end: exact parameter queries, extremal scans over all
//! orientations, the reference-table verification harness, and constructive
//! certificates (rigid orientations, word sets, labelled constructions,
//! asymmetric Latin squares).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use odist::constructions::{
    find_asymmetric_latin_square, latin_to_arc_colouring, rigid_orientation,
};
use odist::graph::orient;
use odist::LabelTarget;
use odist::tables::{verify_table, TableRow};
use odist::words::{
    column_sum, from_deleted_words, full_antitwins, full_twins, in_degree_from_deleted,
    pair_antitwins, theorem54_orientation, words_of, DeletedWordSet,
};
use odist::{
    automorphisms, is_distinguishing, is_rigid, parameter_value, Direction, Error, Family,
    Labelling, OrientationMask, OrientedGraph, ParamKind, Result,
};

#[derive(Parser)]
#[command(name = "odist", version, about = "Exact distinguishing parameters of oriented graphs")]
struct Cli {
    /// Emit a JSON report instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress witness details; print only values and verdicts.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one parameter of one fixed orientation.
    Compute(ComputeArgs),
    /// Minimise or maximise a parameter over all orientations of a base graph.
    Extremal(ExtremalArgs),
    /// Recompute reference-table cells by exhaustive search and compare.
    Verify(VerifyArgs),
    /// Emit a construction together with its verification certificate.
    #[command(subcommand)]
    Construct(ConstructCmd),
}

#[derive(Args)]
struct ComputeArgs {
    /// Base graph: path:n, cycle:n, complete:n, star:n, biclique:m,n or file:PATH.
    #[arg(long)]
    family: Family,
    /// Orientation bitstring over the canonical edge order (0 = low-to-high).
    #[arg(long)]
    orientation: OrientationMask,
    /// One of OD, OchiD, ODp, OchiDp.
    #[arg(long)]
    param: ParamKind,
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    param: ParamKind,
    #[arg(long)]
    dir: Direction,
}

#[derive(Args)]
struct VerifyArgs {
    /// Table id: 1 (vertex parameters) or 2 (arc parameters).
    #[arg(long)]
    table: u8,
    /// Row-id range LO..HI (inclusive); all rows when absent.
    #[arg(long)]
    rows: Option<String>,
    /// Skip instances with more vertices than this.
    #[arg(long)]
    max_size: Option<usize>,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// A rigid orientation of the given base graph.
    Rigid {
        #[arg(long)]
        family: Family,
    },
    /// Orientation of a biclique from deleted words, with optional analysis.
    Words {
        #[arg(long)]
        m: usize,
        /// Comma-separated binary words of length m to delete.
        #[arg(long)]
        deleted: String,
        /// Also report twins, antitwins, column sums and in-degrees.
        #[arg(long)]
        analyze: bool,
    },
    /// Distinguishing labellings of a biclique orientation with few labels.
    Theorem54 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// An asymmetric Latin square by seeded randomized search.
    Latin {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn labelling_json(lab: &Labelling) -> Value {
    json!({
        "target": match lab.target { LabelTarget::Vertices => "vertices", LabelTarget::Arcs => "arcs" },
        "labels": lab.labels,
        "r": lab.r,
    })
}

fn arcs_json(og: &OrientedGraph) -> Value {
    json!(og.arcs.iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>())
}

fn emit(report: &Value, as_json: bool, human: impl FnOnce()) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
    } else {
        human();
    }
}

fn cmd_compute(a: &ComputeArgs, json_out: bool, quiet: bool) -> Result<u8> {
    let g = odist::build_family(&a.family)?;
    let og = orient(&g, &a.orientation)?;
    let (value, witness) = parameter_value(&og, a.param)?;
    let report = json!({
        "command": "compute",
        "family": a.family.to_string(),
        "m_edges": g.m(),
        "parameter": a.param.to_string(),
        "orientation": a.orientation.to_string(),
        "value": value,
        "witness_labelling": labelling_json(&witness),
        "status": "ok",
    });
    emit(&report, json_out, || {
        println!("{}({}, {}) = {}", a.param, a.family, a.orientation, value);
        if !quiet {
            println!("witness labelling: {:?}", witness.labels);
        }
    });
    Ok(0)
}

fn cmd_extremal(a: &ExtremalArgs, json_out: bool, quiet: bool) -> Result<u8> {
    let g = odist::build_family(&a.family)?;
    let res = odist::extremal(&g, a.param, a.dir)?;
    let dir = match a.dir {
        Direction::Min => "min",
        Direction::Max => "max",
    };
    let report = json!({
        "command": "extremal",
        "family": a.family.to_string(),
        "m_edges": g.m(),
        "parameter": a.param.to_string(),
        "direction": dir,
        "value": res.value,
        "witness_mask": res.witness_mask.to_string(),
        "witness_labelling": labelling_json(&res.witness_labelling),
        "orientations_scanned": res.orientations_scanned,
        "status": "ok",
    });
    emit(&report, json_out, || {
        println!("{}{}({}) = {}", a.param, dir, a.family, res.value);
        if !quiet {
            println!("witness orientation: {}", res.witness_mask);
            println!("witness labelling:   {:?}", res.witness_labelling.labels);
            println!("orientations scanned: {}", res.orientations_scanned);
        }
    });
    Ok(0)
}

fn parse_row_range(s: &str) -> Result<(u8, u8)> {
    let parts: Vec<&str> = s.split("..").collect();
    let bad = || Error::InvalidInput(format!("bad row range '{s}'; expected LO..HI"));
    match parts.as_slice() {
        [one] => {
            let r = one.parse::<u8>().map_err(|_| bad())?;
            Ok((r, r))
        }
        [lo, hi] => Ok((lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?)),
        _ => Err(bad()),
    }
}

fn row_json(r: &TableRow) -> Value {
    json!({
        "table": r.table,
        "row": r.row,
        "family": r.family.to_string(),
        "expected": r.expected,
        "computed": r.computed,
        "matched": r.matched,
    })
}

fn cmd_verify(a: &VerifyArgs, json_out: bool, quiet: bool) -> Result<u8> {
    let range = a.rows.as_deref().map(parse_row_range).transpose()?;
    let rows = verify_table(a.table, range, a.max_size)?;
    let all_ok = rows.iter().all(|r| r.matched);
    let report = json!({
        "command": "verify",
        "table": a.table,
        "rows": rows.iter().map(row_json).collect::<Vec<_>>(),
        "status": if all_ok { "ok" } else { "mismatch" },
    });
    emit(&report, json_out, || {
        if !quiet {
            for r in &rows {
                println!(
                    "table {} row {:>2}  {:<16} expected {:?} computed {:?}  {}",
                    r.table,
                    r.row,
                    r.family.to_string(),
                    r.expected,
                    r.computed.unwrap_or([0; 4]),
                    if r.matched { "ok" } else { "MISMATCH" }
                );
            }
        }
        println!(
            "table {}: {}/{} rows match",
            a.table,
            rows.iter().filter(|r| r.matched).count(),
            rows.len()
        );
    });
    Ok(if all_ok { 0 } else { 1 })
}

fn construct_rigid(family: &Family, json_out: bool, quiet: bool) -> Result<u8> {
    let og = rigid_orientation(family)?;
    let group = automorphisms(&og)?;
    let words = og.parts.and_then(|_| words_of(&og).ok());
    let report = json!({
        "command": "construct rigid",
        "family": family.to_string(),
        "arcs": arcs_json(&og),
        "words": words.as_ref().map(|w| w.to_string()),
        "certificate": { "group_order": group.len(), "rigid": group.len() == 1 },
        "status": "ok",
    });
    emit(&report, json_out, || {
        println!("rigid orientation of {family}: group order {}", group.len());
        if !quiet {
            if let Some(w) = &words {
                println!("Y words: {w}");
            }
            println!("arcs: {:?}", og.arcs);
        }
    });
    Ok(0)
}

fn construct_words(m: usize, deleted: &str, analyze: bool, json_out: bool, quiet: bool) -> Result<u8> {
    let dw = DeletedWordSet::parse(m, deleted)?;
    let og = from_deleted_words(&dw)?;
    let mut report = json!({
        "command": "construct words",
        "family": Family::Biclique(m, dw.n()).to_string(),
        "deleted": dw.to_string(),
        "arcs": arcs_json(&og),
        "status": "ok",
    });
    if analyze {
        let rigid = is_rigid(&og)?;
        let twins = full_twins(&og)?;
        let anti = full_antitwins(&og)?;
        let mut pairwise = Vec::new();
        for i in 0..m {
            for ip in i + 1..m {
                pairwise.push(json!({
                    "x_pair": [i + 1, ip + 1],
                    "antitwins": pair_antitwins(&og, i, ip)?,
                }));
            }
        }
        let in_degrees: Vec<u64> =
            (1..=m).map(|i| in_degree_from_deleted(&dw, i)).collect::<Result<_>>()?;
        let sums: Vec<u64> = (1..=m).map(|i| column_sum(&dw, i)).collect::<Result<_>>()?;
        report["analysis"] = json!({
            "rigid": rigid,
            "full_twins": twins,
            "full_antitwins": anti,
            "pair_antitwins": pairwise,
            "x_in_degrees": in_degrees,
            "column_sums": sums,
        });
    }
    emit(&report, json_out, || {
        println!("K_{{{},{}}} minus deleted words {}", m, dw.n(), dw);
        if let Some(a) = report.get("analysis") {
            println!("rigid: {}", a["rigid"]);
            if !quiet {
                println!("full twins (Y index pairs):     {}", a["full_twins"]);
                println!("full antitwins (Y index pairs): {}", a["full_antitwins"]);
                println!("x in-degrees: {}", a["x_in_degrees"]);
                println!("column sums:  {}", a["column_sums"]);
                for p in a["pair_antitwins"].as_array().unwrap() {
                    println!("antitwins for x pair {}: {}", p["x_pair"], p["antitwins"]);
                }
            }
        } else if !quiet {
            println!("arcs: {:?}", og.arcs);
        }
    });
    Ok(0)
}

fn construct_theorem54(m: usize, n: usize, json_out: bool, quiet: bool) -> Result<u8> {
    let (og, lab, proper) = theorem54_orientation(m, n)?;
    let lab_ok = is_distinguishing(&og, &lab)?;
    let proper_ok = is_distinguishing(&og, &proper)? && proper.is_proper(&og);
    let words = words_of(&og)?;
    let report = json!({
        "command": "construct theorem54",
        "family": Family::Biclique(m, n).to_string(),
        "words": words.to_string(),
        "labelling": labelling_json(&lab),
        "proper_labelling": labelling_json(&proper),
        "certificate": { "distinguishing": lab_ok, "proper_distinguishing": proper_ok },
        "status": "ok",
    });
    emit(&report, json_out, || {
        println!(
            "K_{{{m},{n}}}: {}-labelling distinguishing: {lab_ok}; proper {}-colouring distinguishing: {proper_ok}",
            lab.r, proper.r
        );
        if !quiet {
            println!("Y words:   {words}");
            println!("labels:    {:?}", lab.labels);
            println!("proper:    {:?}", proper.labels);
        }
    });
    if lab_ok && proper_ok {
        Ok(0)
    } else {
        Ok(1)
    }
}

fn construct_latin(order: usize, budget: usize, seed: u64, json_out: bool, quiet: bool) -> Result<u8> {
    match find_asymmetric_latin_square(order, budget, seed)? {
        Some(sq) => {
            let og = odist::constructions::all_x_to_y(order, order)?;
            let colouring = latin_to_arc_colouring(&sq, &og)?;
            let applied = colouring.is_proper(&og) && is_distinguishing(&og, &colouring)?;
            let report = json!({
                "command": "construct latin",
                "order": order,
                "budget": budget,
                "seed": seed,
                "square": sq.to_string(),
                "certificate": {
                    "asymmetric": true,
                    "biclique_proper_distinguishing": applied,
                },
                "status": "ok",
            });
            emit(&report, json_out, || {
                println!("asymmetric Latin square of order {order}:");
                println!("{sq}");
                if !quiet {
                    println!(
                        "proper distinguishing {order}-arc-colouring of oriented K_{{{order},{order}}}: {applied}"
                    );
                }
            });
            Ok(0)
        }
        None => {
            let exists = order > 5;
            let report = json!({
                "command": "construct latin",
                "order": order,
                "budget": budget,
                "seed": seed,
                "square": Value::Null,
                "status": if exists { "exhausted" } else { "none_exists" },
            });
            emit(&report, json_out, || {
                if exists {
                    println!("no asymmetric square of order {order} found within budget {budget}");
                } else {
                    println!("no asymmetric Latin square of order {order} exists");
                }
            });
            Ok(if exists { 3 } else { 0 })
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let (j, q) = (cli.json, cli.quiet);
    match &cli.command {
        Command::Compute(a) => cmd_compute(a, j, q),
        Command::Extremal(a) => cmd_extremal(a, j, q),
        Command::Verify(a) => cmd_verify(a, j, q),
        Command::Construct(c) => match c {
            ConstructCmd::Rigid { family } => construct_rigid(family, j, q),
            ConstructCmd::Words { m, deleted, analyze } => {
                construct_words(*m, deleted, *analyze, j, q)
            }
            ConstructCmd::Theorem54 { m, n } => construct_theorem54(*m, *n, j, q),
            ConstructCmd::Latin { order, budget, seed } => {
                construct_latin(*order, *budget, *seed, j, q)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidInput(_) => ExitCode::from(2),
                Error::ResourceCap(_) => ExitCode::from(3),
            }
        }
    }
}
