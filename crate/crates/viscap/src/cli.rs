//! Command-line surface: JSON on stdout, warnings on stderr, deterministic
//! exit codes (0 success / holds, 1 property or verification failure,
//! 2 input error, 3 precondition violation).

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Read;
use viscap::chroma::{clique_number_hfree, colour_capped, colour_hfree, ColouringResult};
use viscap::error::Error;
use viscap::geometry::{random_simple_polygon, visibility_graph, Polygon};
use viscap::obstructions::{
    find_capped_violation, find_crossing_pair, find_h_obstruction, find_ordered_hole,
};
use viscap::oracles::{
    bf_capped, bf_chromatic, bf_clique, bf_crossing_sequence, bf_holes, verify_colouring,
    BF_CAPPED_DEFAULT_MAX_N, BF_CHROMATIC_DEFAULT_MAX_N, BF_CLIQUE_DEFAULT_MAX_N,
    BF_HOLES_DEFAULT_MAX_N, BF_XSEQ_DEFAULT_MAX_EDGES,
};
use viscap::partition::partition_three_capped;
use viscap::OrderedGraph;

#[derive(Parser)]
#[command(name = "viscap", version, about = "Ordered-graph visibility toolkit")]
struct Cli {
    /// Pretty-print JSON output
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check hereditary properties of an ordered graph
    Check {
        /// Input `.og` file, or `-` for stdin
        input: String,
        /// Check H-freeness (default: all three base properties)
        #[arg(long)]
        h_free: bool,
        /// Check ordered-hole-freeness
        #[arg(long)]
        ordered_hole_free: bool,
        /// Check cappedness
        #[arg(long)]
        capped: bool,
        /// Additionally check ordered outerplanarity
        #[arg(long)]
        outerplanar: bool,
    },
    /// Clique number of an H-free ordered graph via decomposition
    Clique { input: String },
    /// Colouring certificate for a capped or H-free ordered graph
    Color {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Skip the embedded re-verification of the certificate
        #[arg(long)]
        no_verify: bool,
        input: String,
    },
    /// Partition an H-free ordered graph into three capped parts
    Partition {
        #[arg(long)]
        no_verify: bool,
        input: String,
    },
    /// Generators
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Visibility graph of a polygon, in `.og` format
    Visgraph { input: String },
    /// Verify a colouring JSON against a graph
    Verify { graph: String, colours: String },
    /// Brute-force reference implementations
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Capped,
    Hfree,
}

#[derive(Subcommand)]
enum GenCmd {
    /// Seeded random simple polygon, in `.poly` format
    Polygon(GenPolygonArgs),
}

#[derive(Args)]
struct GenPolygonArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    span: i64,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Exact clique number by branch-and-bound
    Clique {
        input: String,
        #[arg(long, default_value_t = BF_CLIQUE_DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Exact chromatic number by backtracking
    Chromatic {
        input: String,
        #[arg(long, default_value_t = BF_CHROMATIC_DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Cappedness by quadruple enumeration
    Capped {
        input: String,
        #[arg(long, default_value_t = BF_CAPPED_DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Ordered holes by subset enumeration
    Holes {
        input: String,
        #[arg(long, default_value_t = BF_HOLES_DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Crossing-sequence existence by literal chain search
    Xseq {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        input: String,
        #[arg(long, default_value_t = BF_XSEQ_DEFAULT_MAX_EDGES)]
        max_edges: usize,
    },
    /// Colouring verification
    Verify { graph: String, colours: String },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match dispatch(cli.cmd, pretty) {
        Ok(code) => code,
        Err(e) => {
            emit(&error_json(&e), pretty);
            exit_code_for(&e)
        }
    }
}

fn dispatch(cmd: Cmd, pretty: bool) -> Result<i32, Error> {
    match cmd {
        Cmd::Check { input, h_free, ordered_hole_free, capped, outerplanar } => {
            let g = load_graph(&input)?;
            let explicit = h_free || ordered_hole_free || capped || outerplanar;
            let want_h = h_free || !explicit;
            let want_holes = ordered_hole_free || !explicit;
            let want_capped = capped || !explicit;
            let mut out = serde_json::Map::new();
            let mut witnesses = serde_json::Map::new();
            let mut all_hold = true;
            if want_h {
                let w = find_h_obstruction(&g);
                out.insert("h_free".into(), json!(w.is_none()));
                if let Some(w) = w {
                    all_hold = false;
                    witnesses.insert(
                        "h_obstruction".into(),
                        json!({"kind": "h_obstruction", "u": w.u, "v": w.v,
                               "seq_uv": w.seq_uv, "seq_vu": w.seq_vu}),
                    );
                }
            }
            if want_holes {
                let w = find_ordered_hole(&g);
                out.insert("ordered_hole_free".into(), json!(w.is_none()));
                if let Some(w) = w {
                    all_hold = false;
                    witnesses.insert(
                        "ordered_hole".into(),
                        json!({"kind": "ordered_hole", "cycle": w.cycle}),
                    );
                }
            }
            if want_capped {
                let w = find_capped_violation(&g);
                out.insert("capped".into(), json!(w.is_none()));
                if let Some(w) = w {
                    all_hold = false;
                    witnesses.insert(
                        "capped_violation".into(),
                        json!({"kind": "capped_violation", "a": w.a, "b": w.b, "c": w.c, "d": w.d}),
                    );
                }
            }
            if outerplanar {
                let w = find_crossing_pair(&g);
                out.insert("outerplanar".into(), json!(w.is_none()));
                if let Some((e, f)) = w {
                    all_hold = false;
                    witnesses.insert(
                        "crossing_pair".into(),
                        json!({"kind": "crossing_pair", "e": e, "f": f}),
                    );
                }
            }
            out.insert("witnesses".into(), Value::Object(witnesses));
            emit(&Value::Object(out), pretty);
            Ok(if all_hold { 0 } else { 1 })
        }
        Cmd::Clique { input } => {
            let g = load_graph(&input)?;
            let omega = clique_number_hfree(&g)?;
            emit(&json!({"omega": omega, "method": "decomposition"}), pretty);
            Ok(0)
        }
        Cmd::Color { mode, no_verify, input } => {
            let g = load_graph(&input)?;
            let r = match mode {
                Mode::Capped => colour_capped(&g)?,
                Mode::Hfree => colour_hfree(&g)?,
            };
            let proper = if no_verify {
                Value::Null
            } else {
                let check = verify_colouring(&g, &r.colours);
                json!(check.proper && (r.num_colours as u128) <= r.bound)
            };
            emit(&colouring_json(&r, proper.clone()), pretty);
            Ok(if proper == Value::Bool(false) { 1 } else { 0 })
        }
        Cmd::Partition { no_verify, input } => {
            let g = load_graph(&input)?;
            let parts = partition_three_capped(&g)?;
            let certified = if no_verify {
                Value::Null
            } else {
                let ok = parts.iter().all(|p| {
                    let (sub, _) = g.induced(p).expect("parts are sorted");
                    find_capped_violation(&sub).is_none()
                });
                json!(ok)
            };
            emit(
                &json!({"parts": [parts[0], parts[1], parts[2]], "capped_certificates": certified}),
                pretty,
            );
            Ok(if certified == Value::Bool(false) { 1 } else { 0 })
        }
        Cmd::Gen { what: GenCmd::Polygon(a) } => {
            let p = random_simple_polygon(a.n, a.seed, a.span)?;
            print!("{}", p.serialize());
            Ok(0)
        }
        Cmd::Visgraph { input } => {
            let p = load_polygon(&input)?;
            print!("{}", visibility_graph(&p).serialize());
            Ok(0)
        }
        Cmd::Verify { graph, colours } => {
            let g = load_graph(&graph)?;
            let cols = load_colours(&colours)?;
            let check = verify_colouring(&g, &cols);
            emit(&serde_json::to_value(&check).expect("serializable"), pretty);
            Ok(if check.proper { 0 } else { 1 })
        }
        Cmd::Oracle { which } => oracle(which, pretty),
    }
}

fn oracle(which: OracleCmd, pretty: bool) -> Result<i32, Error> {
    match which {
        OracleCmd::Clique { input, max_n } => {
            let g = load_graph(&input)?;
            let omega = bf_clique(&g, max_n)?;
            emit(&json!({"omega": omega, "method": "brute_force"}), pretty);
            Ok(0)
        }
        OracleCmd::Chromatic { input, max_n } => {
            let g = load_graph(&input)?;
            let chi = bf_chromatic(&g, max_n)?;
            emit(&json!({"chi": chi, "method": "brute_force"}), pretty);
            Ok(0)
        }
        OracleCmd::Capped { input, max_n } => {
            let g = load_graph(&input)?;
            let w = bf_capped(&g, max_n)?;
            let ok = w.is_none();
            let witness = w.map_or(Value::Null, |w| json!({"a": w.a, "b": w.b, "c": w.c, "d": w.d}));
            emit(&json!({"capped": ok, "witness": witness}), pretty);
            Ok(if ok { 0 } else { 1 })
        }
        OracleCmd::Holes { input, max_n } => {
            let g = load_graph(&input)?;
            let w = bf_holes(&g, max_n)?;
            let ok = w.is_none();
            let witness = w.map_or(Value::Null, |w| json!({"cycle": w.cycle}));
            emit(&json!({"ordered_hole_free": ok, "witness": witness}), pretty);
            Ok(if ok { 0 } else { 1 })
        }
        OracleCmd::Xseq { from, to, input, max_edges } => {
            let g = load_graph(&input)?;
            let reachable = bf_crossing_sequence(&g, from, to, max_edges)?;
            emit(&json!({"from": from, "to": to, "reachable": reachable}), pretty);
            Ok(if reachable { 0 } else { 1 })
        }
        OracleCmd::Verify { graph, colours } => {
            let g = load_graph(&graph)?;
            let cols = load_colours(&colours)?;
            let check = verify_colouring(&g, &cols);
            emit(&serde_json::to_value(&check).expect("serializable"), pretty);
            Ok(if check.proper { 0 } else { 1 })
        }
    }
}

fn colouring_json(r: &ColouringResult, proper: Value) -> Value {
    json!({
        "colours": r.colours,
        "num_colours": r.num_colours,
        "omega": r.omega,
        "bound": r.bound,
        "palette": r.palette,
        "class": r.class_tag,
        "proper": proper,
    })
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse { line: 0, msg: format!("stdin: {e}") })?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse { line: 0, msg: format!("{path}: {e}") })
    }
}

fn load_graph(path: &str) -> Result<OrderedGraph, Error> {
    let text = read_input(path)?;
    let (g, warnings) = OrderedGraph::parse(&text)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    Ok(g)
}

fn load_polygon(path: &str) -> Result<Polygon, Error> {
    Polygon::parse(&read_input(path)?)
}

/// Accepts either a bare JSON array of colours or an object with a
/// `colours` field (the `color` command's own output).
fn load_colours(path: &str) -> Result<Vec<usize>, Error> {
    let text = read_input(path)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse { line: 0, msg: format!("colours JSON: {e}") })?;
    let arr = match &v {
        Value::Array(a) => a,
        Value::Object(o) => o
            .get("colours")
            .and_then(Value::as_array)
            .ok_or(Error::Parse { line: 0, msg: "expected a `colours` array".into() })?,
        _ => return Err(Error::Parse { line: 0, msg: "expected array or object".into() }),
    };
    arr.iter()
        .map(|x| {
            x.as_u64()
                .map(|u| u as usize)
                .ok_or(Error::Parse { line: 0, msg: format!("bad colour value {x}") })
        })
        .collect()
}

fn emit(v: &Value, pretty: bool) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
    } else {
        println!("{}", serde_json::to_string(v).expect("serializable"));
    }
}

fn error_json(e: &Error) -> Value {
    let witness = match e {
        Error::NotHFree(w) => {
            json!({"kind": "h_obstruction", "u": w.u, "v": w.v, "seq_uv": w.seq_uv, "seq_vu": w.seq_vu})
        }
        Error::NotCapped(w) => {
            json!({"kind": "capped_violation", "a": w.a, "b": w.b, "c": w.c, "d": w.d})
        }
        Error::NotHoleFree(w) => json!({"kind": "ordered_hole", "cycle": w.cycle}),
        Error::NotTriangleFree(t) => json!({"kind": "triangle", "vertices": t}),
        _ => Value::Null,
    };
    json!({"error": {"message": e.to_string(), "witness": witness}})
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::InvalidPolygon { .. }
        | Error::InvalidSubset { .. }
        | Error::CoordinateOverflow { .. }
        | Error::GenerationFailed { .. } => 2,
        _ => 3,
    }
}
