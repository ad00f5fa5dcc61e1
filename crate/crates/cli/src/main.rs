use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tauexc::bqa::auslander_algebra;
use tauexc::config::{self, Config};
use tauexc::json::{algebra_json, lattice_dot, pair_json, pair_label, sequence_from_json, sequence_json};
use tauexc::modrep::Catalog;
use tauexc::sequences::{
    enumerate_complete_exc, mutation_graph, phi_mutate, psi_mutate, verify, Dir, ExcSeq, SeqCategory, Theorem,
};
use tauexc::tautilt::{enumerate_tilting, Lattice};
use tauexc::{Error, Result};

#[derive(Parser)]
#[command(name = "tauexc", version, about = "Exact computations over the Auslander algebra of K[x]/(x^t)")]
struct Cli {
    /// Nilpotency degree t of x.
    #[arg(long, global = true, default_value_t = 2, env = "TAUEXC_T")]
    t: usize,
    /// Seed for randomized linear-algebra trials.
    #[arg(long, global = true, env = "TAUEXC_SEED")]
    seed: Option<u64>,
    /// Emit JSON instead of text where both exist.
    #[arg(long, global = true, env = "TAUEXC_JSON")]
    json: bool,
    /// Emit a Graphviz graph where one exists.
    #[arg(long, global = true, env = "TAUEXC_DOT")]
    dot: bool,
    /// Largest exchange graph that may be enumerated.
    #[arg(long, global = true, env = "TAUEXC_CAP_NODES")]
    cap_nodes: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Describe A_t: arrows, relations and path dimensions between vertices.
    Algebra {
        #[arg(value_parser = ["info"])]
        what: Option<String>,
    },
    /// List objects, one JSON record per line.
    Enumerate { what: Kind },
    /// The lattice of torsion classes with its support τ-tilting pairs.
    Lattice,
    /// Mutate a sequence read from a file, `-` for stdin, or inline JSON.
    Mutate {
        #[arg(long, value_enum)]
        kind: MutKind,
        #[arg(long, value_enum)]
        dir: DirArg,
        #[arg(long)]
        pos: usize,
        #[arg(long)]
        seq: String,
    },
    /// Check a statement exhaustively over A_t, or `all` of them.
    Verify { statement: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sttilt,
    Tilting,
    Exc,
    TauExc,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutKind {
    Psi,
    Phi,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Left,
    Right,
}

struct Out {
    lines: Vec<String>,
    code: u8,
}

impl Out {
    fn new() -> Out {
        Out { lines: Vec::new(), code: 0 }
    }

    fn push(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn json(&mut self, v: &Value) {
        self.push(v.to_string());
    }
}

fn header(cli: &Cli, cfg: &Config, command: &str, style: &str) -> String {
    let meta = json!({"meta": {
        "command": command,
        "t": cli.t,
        "seed": cfg.seed,
        "node_cap": cfg.node_cap,
        "trials": cfg.trials,
        "length_factor": cfg.length_factor,
    }});
    match style {
        "dot" => format!("// {meta}"),
        "text" => format!("# {meta}"),
        _ => meta.to_string(),
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Algebra { .. } => "algebra".into(),
        Command::Enumerate { what } => format!("enumerate {}", what.to_possible_value().unwrap().get_name()),
        Command::Lattice => "lattice".into(),
        Command::Mutate { .. } => "mutate".into(),
        Command::Verify { statement } => format!("verify {statement}"),
    }
}

fn algebra(cli: &Cli, out: &mut Out) -> Result<()> {
    let alg = auslander_algebra(cli.t)?;
    let dims = alg.pair_dims();
    if cli.json {
        let mut v = algebra_json(&alg);
        v["pair_dims"] = json!(dims);
        out.json(&v);
        return Ok(());
    }
    out.push(format!("{}: {} vertices, {} arrows, dimension {}", alg.name(), alg.vertex_count(), alg.arrows().len(), alg.dim()));
    for a in alg.arrows() {
        out.push(format!("  {}: {} -> {}", a.name, a.source + 1, a.target + 1));
    }
    for r in algebra_json(&alg)["relations"].as_array().into_iter().flatten() {
        out.push(format!("  {} = 0", r.as_str().unwrap_or_default()));
    }
    out.push("dim e_i A e_j:".to_string());
    for row in &dims {
        out.push(format!("  {}", row.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")));
    }
    Ok(())
}

fn tilting_pairs(lat: &Lattice) -> Result<Vec<usize>> {
    let mut v: Vec<usize> = enumerate_tilting(lat.algebra())?.iter().map(|t| t.pair).collect();
    v.sort_unstable();
    Ok(v)
}

fn enumerate(cli: &Cli, what: Kind, out: &mut Out) -> Result<()> {
    let alg = auslander_algebra(cli.t)?;
    match what {
        Kind::Sttilt => {
            let lat = Lattice::of(&alg)?;
            let tilting = tilting_pairs(&lat)?;
            if cli.dot {
                out.push(lattice_dot(&lat, &tilting));
                return Ok(());
            }
            for (k, p) in lat.pairs().iter().enumerate() {
                let mut v = pair_json(&lat, p);
                v["index"] = json!(k);
                v["tilting"] = json!(tilting.contains(&k));
                out.json(&v);
            }
        }
        Kind::Tilting => {
            let lat = Lattice::of(&alg)?;
            let cat = lat.catalog();
            for (k, tm) in enumerate_tilting(&alg)?.iter().enumerate() {
                // Summands listed from e_t T down to e_1 T.
                let parts: Vec<String> = tm.rigid.iter().rev().map(|&x| cat.label(lat.rigid()[x].catalog_id)).collect();
                out.json(&json!({
                    "index": k,
                    "label": pair_label(&lat, lat.pair(tm.pair)),
                    "summands": parts,
                    "pair": tm.pair,
                }));
            }
        }
        Kind::Exc => {
            let cat = Catalog::of(&alg);
            for (k, s) in enumerate_complete_exc(&alg)?.iter().enumerate() {
                let mut v = sequence_json(&cat, &s.terms);
                v["index"] = json!(k);
                out.json(&v);
            }
        }
        Kind::TauExc => {
            let sc = SeqCategory::of(&alg)?;
            let g = mutation_graph(&sc)?;
            if cli.dot {
                out.push(g.to_dot());
                return Ok(());
            }
            for s in 0..sc.len() {
                let mut v = sequence_json(sc.catalog(), &sc.seqs()[s].terms);
                v["index"] = json!(s);
                v["exceptional"] = json!(g.exceptional[s]);
                out.json(&v);
            }
        }
    }
    Ok(())
}

fn lattice(cli: &Cli, out: &mut Out) -> Result<()> {
    let alg = auslander_algebra(cli.t)?;
    let lat = Lattice::of(&alg)?;
    let tilting = tilting_pairs(&lat)?;
    if cli.dot {
        out.push(lattice_dot(&lat, &tilting));
        return Ok(());
    }
    for (k, p) in lat.pairs().iter().enumerate() {
        out.json(&json!({"index": k, "label": pair_label(&lat, p), "tilting": tilting.contains(&k)}));
    }
    out.json(&json!({"hasse": lat.hasse()}));
    Ok(())
}

fn read_seq(arg: &str) -> Result<Value> {
    let text = match arg.trim_start().chars().next() {
        Some('{') | Some('[') => arg.to_string(),
        _ if arg == "-" => std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(e.to_string()))?,
        _ => fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?,
    };
    Ok(serde_json::from_str(&text)?)
}

fn mutate(cli: &Cli, kind: MutKind, dir: DirArg, pos: usize, seq: &str, out: &mut Out) -> Result<()> {
    let alg = auslander_algebra(cli.t)?;
    let modules = sequence_from_json(&alg, &read_seq(seq)?)?;
    let dir = match dir {
        DirArg::Left => Dir::Left,
        DirArg::Right => Dir::Right,
    };
    let cat = Catalog::of(&alg);
    let result = match kind {
        MutKind::Psi => {
            let terms = modules.iter().map(|m| cat.intern(m)).collect::<Result<Vec<_>>>()?;
            let exc = enumerate_complete_exc(&alg)?;
            let e = ExcSeq { terms };
            if !exc.contains(&e) {
                return Err(Error::NotApplicable("not a complete exceptional sequence".into()));
            }
            psi_mutate(&alg, &e, pos, dir)?.map(|r| r.terms)
        }
        MutKind::Phi => {
            let sc = SeqCategory::of(&alg)?;
            let s = sc
                .find_modules(&modules)?
                .ok_or_else(|| Error::NotApplicable("not a complete τ-exceptional sequence".into()))?;
            Some(sc.seqs()[phi_mutate(&sc, s, pos, dir)?].terms.clone())
        }
    };
    match result {
        Some(terms) if cli.json => out.json(&sequence_json(&cat, &terms)),
        Some(terms) => {
            let labels: Vec<String> = terms.iter().rev().map(|&c| cat.label(c)).collect();
            out.push(format!("({})", labels.join(", ")));
        }
        None if cli.json => out.json(&Value::Null),
        None => out.push("undefined"),
    }
    Ok(())
}

fn verify_cmd(cli: &Cli, statement: &str, out: &mut Out) -> Result<()> {
    let list: Vec<Theorem> = if statement == "all" { Theorem::ALL.to_vec() } else { vec![statement.parse()?] };
    for th in list {
        let r = verify(th, cli.t)?;
        if !r.passed() {
            out.code = 1;
        }
        if cli.json || !r.passed() {
            out.json(&json!({
                "statement": r.theorem,
                "t": r.t,
                "checked": r.checked.len(),
                "passed": r.passed(),
                "failures": r.failures,
            }));
        } else {
            out.push(format!("{}: ok ({} instances)", r.theorem, r.checked.len()));
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Out> {
    let mut cfg = config::get();
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(c) = cli.cap_nodes {
        cfg.node_cap = c;
    }
    config::set(cfg.clone());
    let style = match &cli.command {
        Command::Lattice | Command::Enumerate { .. } if cli.dot => "dot",
        Command::Enumerate { .. } | Command::Lattice => "json",
        _ if cli.json => "json",
        _ => "text",
    };
    let mut out = Out::new();
    out.push(header(cli, &cfg, &command_name(&cli.command), style));
    match &cli.command {
        Command::Algebra { .. } => algebra(cli, &mut out)?,
        Command::Enumerate { what } => enumerate(cli, *what, &mut out)?,
        Command::Lattice => lattice(cli, &mut out)?,
        Command::Mutate { kind, dir, pos, seq } => mutate(cli, *kind, *dir, *pos, seq, &mut out)?,
        Command::Verify { statement } => verify_cmd(cli, statement, &mut out)?,
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.t == 0 {
        eprintln!("error: --t must be at least 1");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            for l in &out.lines {
                println!("{}", l.trim_end_matches('\n'));
            }
            ExitCode::from(out.code)
        }
        Err(e @ (Error::Parse(_) | Error::Json(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
