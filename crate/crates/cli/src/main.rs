use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use traceform::classify::{self, Table1Row, COMPUTED_PROVENANCE, LOOKUP_PROVENANCE};
use traceform::dynkin::{self, DEFAULT_SEARCH_BOUND};
use traceform::lattice::{self, GroupSpec};
use traceform::verify;
use traceform::{build_root_system, Error, RootSystem, TypeLetter, Weight};

const GROUP_SPEC_HELP: &str = "\
Group specs:
  SL<n>, SL<n>/mu<m>, PGL<n>     SL_n / mu_m (m | n)
  Sp<2n>, PSp<2n>                type C_n
  Spin<n>, SO<n>, PSO<n>         n >= 5
  HSpin<4n>                      n >= 3
  E6sc, E6ad, E7sc, E7ad, E8, F4, G2
  <L><rank>sc, <L><rank>ad       any type, e.g. B3ad
  <L><rank>[a,b]...              subgroup of P/Q generated by the listed
                                 classes in invariant-factor coordinates

Weights are fundamental-weight coordinates: [1,0,2], 1,0,2 or 1 0 2.
Characteristic zero is --char 0.

Exit codes: 0 success, 1 invalid input or failed check, 2 inconclusive.";

#[derive(Parser)]
#[command(name = "traceform", version, about = "Dynkin indices, E(G), and trace-form classification for split almost-simple groups", after_help = GROUP_SPEC_HELP)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Root system data for a Cartan type.
    Rootsys { letter: String, rank: usize },
    /// Orbit index N(Wλ) of a dominant weight.
    Index {
        letter: String,
        rank: usize,
        #[arg(num_args = 1.., allow_hyphen_values = true)]
        weight: Vec<String>,
    },
    /// Dimension, dominant multiplicities and Dynkin index of V(λ).
    Irrep {
        letter: String,
        rank: usize,
        #[arg(num_args = 1.., allow_hyphen_values = true)]
        weight: Vec<String>,
    },
    /// N(G) as a gcd over the box of dominant weights in T*.
    Ng {
        group: String,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u32,
    },
    /// E(G), and E_q(G) with --quadratic.
    Eg {
        group: String,
        #[arg(long)]
        quadratic: bool,
    },
    /// Whether nonzero and nondegenerate trace forms exist in characteristic p.
    Classify {
        group: String,
        #[arg(long = "char")]
        characteristic: u64,
        /// Order of the Galois image in the diagram automorphisms (1, 2, 3, 6).
        #[arg(long)]
        twist: Option<u8>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u32,
    },
    /// Degenerate and zero primes for every family up to a rank.
    Table1 {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u32,
    },
    /// Matrix-model and finite-sum checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Trace,
    Appendix,
}

#[derive(Serialize)]
struct OutputRecord {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    group: Option<String>,
    provenance: &'static str,
    result: Value,
    flags: Vec<String>,
}

enum Outcome {
    Ok,
    Failed,
    Inconclusive,
}

struct Report {
    record: OutputRecord,
    rows: Option<Vec<Table1Row>>,
    outcome: Outcome,
}

fn parse_letter(s: &str) -> Result<TypeLetter, Error> {
    let mut chars = s.trim().chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => TypeLetter::from_char(c.to_ascii_uppercase()),
        _ => None,
    }
    .ok_or_else(|| Error::Precondition(format!("unknown Cartan type letter {s:?}")))
}

fn root_system(letter: &str, rank: usize) -> Result<RootSystem, Error> {
    build_root_system(parse_letter(letter)?, rank)
}

fn parse_weight(rs: &RootSystem, parts: &[String]) -> Result<Weight, Error> {
    let w: Weight = parts.join(",").parse()?;
    rs.check_weight(&w)?;
    Ok(w)
}

fn primes(set: &std::collections::BTreeSet<u64>) -> Value {
    json!(set.iter().collect::<Vec<_>>())
}

fn record(command: String, group: Option<String>, result: Value) -> Report {
    Report {
        record: OutputRecord {
            command,
            group,
            provenance: COMPUTED_PROVENANCE,
            result,
            flags: Vec::new(),
        },
        rows: None,
        outcome: Outcome::Ok,
    }
}

fn run(cmd: Command, echo: String) -> Result<Report, Error> {
    match cmd {
        Command::Rootsys { letter, rank } => {
            let rs = root_system(&letter, rank)?;
            let fg = lattice::fundamental_group(&rs);
            Ok(record(
                echo,
                None,
                json!({
                    "type": rs.cartan_type.to_string(),
                    "rank": rs.rank(),
                    "roots": rs.num_roots(),
                    "long_roots": rs.long_roots.len(),
                    "short_roots": rs.short_roots.len(),
                    "weyl_order": rs.weyl_order,
                    "coxeter_number": rs.coxeter_number(),
                    "dual_coxeter_number": rs.dual_coxeter_number(),
                    "cartan_matrix": rs.cartan_matrix,
                    "fundamental_group": fg.factors,
                    "highest_root": rs.highest_root_weight(),
                }),
            ))
        }
        Command::Index {
            letter,
            rank,
            weight,
        } => {
            let rs = root_system(&letter, rank)?;
            let w = parse_weight(&rs, &weight)?;
            let dominant = rs.dominant_representative(&w);
            Ok(record(
                echo,
                None,
                json!({
                    "type": rs.cartan_type.to_string(),
                    "weight": w,
                    "dominant": dominant,
                    "orbit_size": rs.orbit_size(&dominant)?,
                    "orbit_index": dynkin::orbit_index_closed(&rs, &dominant)?,
                }),
            ))
        }
        Command::Irrep {
            letter,
            rank,
            weight,
        } => {
            let rs = root_system(&letter, rank)?;
            let w = parse_weight(&rs, &weight)?;
            let data = dynkin::irrep_data(&rs, &w)?;
            let mults: Vec<Value> = data
                .dominant_weight_multiplicities
                .iter()
                .rev()
                .map(|(mu, m)| json!({ "weight": mu, "multiplicity": m }))
                .collect();
            Ok(record(
                echo,
                None,
                json!({
                    "type": rs.cartan_type.to_string(),
                    "highest_weight": data.highest_weight,
                    "dimension": data.dimension,
                    "dynkin_index": data.dynkin_index,
                    "dominant_multiplicities": mults,
                }),
            ))
        }
        Command::Ng { group, bound } => {
            let spec: GroupSpec = group.parse()?;
            let r = classify::index_ratio(&spec, bound);
            let mut rep = record(
                echo,
                Some(spec.to_string()),
                json!({
                    "N": r.n_of_g.value,
                    "N_previous_bound": r.n_of_g.previous,
                    "bound": bound,
                    "stabilized": r.n_of_g.stabilized,
                    "E": r.e_of_g,
                    "conclusive": r.conclusive,
                }),
            );
            if !r.conclusive {
                rep.record.flags.push(format!("inconclusive at bound {bound}"));
                rep.outcome = Outcome::Inconclusive;
            }
            Ok(rep)
        }
        Command::Eg { group, quadratic } => {
            let spec: GroupSpec = group.parse()?;
            let mut result = json!({ "E": lattice::compute_e(&spec) });
            if quadratic {
                result["E_q"] = json!(lattice::compute_eq(&spec));
            }
            Ok(record(echo, Some(spec.to_string()), result))
        }
        Command::Classify {
            group,
            characteristic,
            twist,
            bound,
        } => {
            let spec: GroupSpec = group.parse()?;
            if let Some(t) = twist {
                let r = classify::twisted_classify(
                    spec.cartan_type(),
                    t,
                    spec.is_simply_connected(),
                    characteristic,
                )?;
                let mut value = serde_json::to_value(&r).expect("serializable");
                if let Value::Object(map) = &mut value {
                    map.remove("provenance");
                }
                let mut rep = record(echo, Some(spec.to_string()), value);
                rep.record.provenance = LOOKUP_PROVENANCE;
                return Ok(rep);
            }
            let r = classify::classify(&spec, &[characteristic], bound)?;
            let v = r.verdicts[0];
            Ok(record(
                echo,
                Some(r.group.clone()),
                json!({
                    "characteristic": characteristic,
                    "exists_nonzero": v.exists_nonzero,
                    "exists_nondegenerate": v.exists_nondegenerate,
                    "N": r.n_of_g.value,
                    "E": r.e_of_g,
                    "stabilized": r.n_of_g.stabilized,
                    "ratio_primes": primes(&r.ratio_primes),
                    "very_good_primes_excluded": primes(&r.very_good_primes_excluded),
                }),
            ))
        }
        Command::Table1 { max_rank, bound } => {
            if max_rank < 1 {
                return Err(Error::Precondition("max rank must be at least 1".into()));
            }
            let rows = classify::table1_render(max_rank, bound);
            let inconclusive = rows.iter().any(|r| !r.stabilized);
            let mut rep = record(echo, None, serde_json::to_value(&rows).expect("serializable"));
            if inconclusive {
                rep.record.flags.push("some rows are inconclusive".into());
                rep.outcome = Outcome::Inconclusive;
            }
            rep.rows = Some(rows);
            Ok(rep)
        }
        Command::Verify { suite } => {
            let mut checks = Vec::new();
            if matches!(suite, Suite::All | Suite::Trace) {
                checks.extend(verify::trace_suite()?);
            }
            if matches!(suite, Suite::All | Suite::Appendix) {
                checks.extend(verify::appendix_suite()?);
            }
            let failed = checks.iter().any(|c| !c.passed);
            let mut rep = record(echo, None, serde_json::to_value(&checks).expect("serializable"));
            if failed {
                rep.record.flags.push("some checks failed".into());
                rep.outcome = Outcome::Failed;
            }
            Ok(rep)
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn write_text(out: &mut impl Write, rep: &Report) -> io::Result<()> {
    let r = &rep.record;
    if let Some(g) = &r.group {
        writeln!(out, "group: {g}")?;
    }
    if let Some(rows) = &rep.rows {
        writeln!(
            out,
            "{:<20} {:<10} {:<10} {:>5} {:>4}  {:<10} {:<10} flags",
            "family", "params", "group", "N", "E", "degenerate", "zero"
        )?;
        for row in rows {
            writeln!(
                out,
                "{:<20} {:<10} {:<10} {:>5} {:>4}  {:<10} {:<10} {}",
                row.family,
                row.params,
                row.group,
                row.n,
                row.e,
                classify::format_primes(&row.degenerate_primes),
                classify::format_primes(&row.zero_primes),
                row.flags.join("; ")
            )?;
        }
    } else {
        match &r.result {
            Value::Object(map) => {
                for (k, v) in map {
                    match v {
                        Value::Array(items) if items.iter().any(Value::is_object) => {
                            writeln!(out, "{k}:")?;
                            for item in items {
                                writeln!(out, "  {}", scalar_text(item))?;
                            }
                        }
                        _ => writeln!(out, "{k}: {}", scalar_text(v))?,
                    }
                }
            }
            Value::Array(items) => {
                for item in items {
                    let name = item.get("name").map(scalar_text).unwrap_or_default();
                    let passed = item.get("passed").and_then(Value::as_bool).unwrap_or(false);
                    let detail = item.get("detail").map(scalar_text).unwrap_or_default();
                    writeln!(out, "{} {name}: {detail}", if passed { "PASS" } else { "FAIL" })?;
                }
            }
            other => writeln!(out, "{}", scalar_text(other))?,
        }
    }
    if r.provenance != COMPUTED_PROVENANCE {
        writeln!(out, "provenance: {}", r.provenance)?;
    }
    for f in &r.flags {
        writeln!(out, "flag: {f}")?;
    }
    Ok(())
}

fn set_text(set: &std::collections::BTreeSet<u64>) -> String {
    set.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn write_csv(out: impl Write, rep: &Report) -> Result<(), Box<dyn std::error::Error>> {
    let mut w = csv::Writer::from_writer(out);
    if let Some(rows) = &rep.rows {
        w.write_record([
            "family",
            "params",
            "N",
            "E",
            "ratio_primes",
            "degenerate_primes",
            "zero_primes",
            "flags",
        ])?;
        for row in rows {
            w.write_record([
                row.family.clone(),
                row.params.clone(),
                row.n.to_string(),
                row.e.to_string(),
                set_text(&row.ratio_primes),
                set_text(&row.degenerate_primes),
                set_text(&row.zero_primes),
                row.flags.join("; "),
            ])?;
        }
    } else {
        match &rep.record.result {
            Value::Array(items) => {
                w.write_record(["name", "passed", "detail"])?;
                for item in items {
                    let field = |k: &str| item.get(k).map(scalar_text).unwrap_or_default();
                    w.write_record([field("name"), field("passed"), field("detail")])?;
                }
            }
            Value::Object(map) => {
                w.write_record(["key", "value"])?;
                if let Some(g) = &rep.record.group {
                    w.write_record(["group", g.as_str()])?;
                }
                for (k, v) in map {
                    w.write_record([k.as_str(), scalar_text(v).as_str()])?;
                }
            }
            other => w.write_record(["value", scalar_text(other).as_str()])?,
        }
    }
    w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let rep = match run(cli.command, echo) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::Inconclusive { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written: Result<(), Box<dyn std::error::Error>> = match cli.format {
        Format::Text => write_text(&mut out, &rep).map_err(Into::into),
        Format::Json => {
            // through Value so that key order is canonical
            let v = serde_json::to_value(&rep.record).expect("serializable");
            serde_json::to_writer_pretty(&mut out, &v)
                .map_err(Into::into)
                .and_then(|_| writeln!(out).map_err(Into::into))
        }
        Format::Csv => write_csv(&mut out, &rep),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match rep.outcome {
        Outcome::Ok => ExitCode::SUCCESS,
        Outcome::Failed => ExitCode::from(1),
        Outcome::Inconclusive => ExitCode::from(2),
    }
}
