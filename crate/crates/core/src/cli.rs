//! Command-line front end.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classify::enumerate::{for_each_network, EnumerationSpec};
use crate::classify::minimal::is_embedding_minimal;
use crate::classify::{classify, Shape};
use crate::network::{parse_inline, parse_network, Network};
use crate::rational::{parse_q, Q};
use crate::witness::{build_witness, certify, WitnessError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_OUT_OF_SCOPE: i32 = 2;
pub const EXIT_WITNESS: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "crnms", version, about = "Multistationarity of small mass-action reaction networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Network file, one reaction per line.
    file: Option<PathBuf>,
    /// Inline network with `;` between reactions.
    #[arg(long, conflicts_with = "file")]
    net: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Capacities for positive, nondegenerate and stable steady states.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Rate constants and a class realizing steady states, certified exactly.
    Witness {
        #[command(flatten)]
        input: Input,
        /// Number of nondegenerate steady states to realize.
        #[arg(long)]
        count: Option<usize>,
        /// Prescribed positive steady states of a one-species network.
        #[arg(long, value_delimiter = ',')]
        roots: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
    /// Classify every network of a shape up to a molecularity.
    Enumerate {
        #[arg(long, value_enum)]
        shape: ShapeArg,
        #[arg(long)]
        max_molecularity: u32,
        /// Largest one-species network.
        #[arg(long, default_value_t = 3)]
        max_reactions: usize,
        /// Number of species; defaults to 1 for one-species and 2 otherwise.
        #[arg(long)]
        species: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Whether no embedded network is already nondegenerately multistationary.
    Minimal {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Box diagram of a two-species, two-reaction network.
    Boxdiagram {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ShapeArg {
    OneSpecies,
    SingleReaction,
    TwoIrrev,
    RevIrrev,
    TwoRev,
}

impl ShapeArg {
    fn shape(self) -> Shape {
        match self {
            ShapeArg::OneSpecies => Shape::OneSpecies,
            ShapeArg::SingleReaction => Shape::SingleReaction,
            ShapeArg::TwoIrrev => Shape::TwoIrreversible,
            ShapeArg::RevIrrev => Shape::ReversibleIrreversible,
            ShapeArg::TwoRev => Shape::TwoReversible,
        }
    }
}

fn load(input: &Input) -> Result<Network, String> {
    match (&input.file, &input.net) {
        (_, Some(s)) => parse_inline(s).map_err(|e| format!("--net: {}", e)),
        (Some(p), None) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {}", p.display(), e))?;
            parse_network(&text).map_err(|e| format!("{}: {}", p.display(), e))
        }
        (None, None) => Err("expected a network file or --net".to_string()),
    }
}

/// Runs one command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            EXIT_PARSE
        }
    }
}

fn emit_json(out: &mut dyn Write, v: &serde_json::Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json values serialize"))
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match cmd {
        Command::Classify { input, json } => {
            let net = load(&input)?;
            let v = classify(&net);
            if json {
                emit_json(out, &v.to_json()).map_err(io)?;
            } else {
                write!(out, "{}{}", net.render(), v.to_human()).map_err(io)?;
            }
            Ok(if v.is_out_of_scope() { EXIT_OUT_OF_SCOPE } else { EXIT_OK })
        }
        Command::Witness { input, count, roots, json } => {
            let net = load(&input)?;
            let roots: Option<Vec<Q>> = match roots {
                None => None,
                Some(rs) => Some(
                    rs.iter().map(|r| parse_q(r).ok_or_else(|| format!("bad rational in --roots: {:?}", r))).collect::<Result<_, _>>()?,
                ),
            };
            let w = match build_witness(&net, count, roots.as_deref()) {
                Ok(w) => w,
                Err(WitnessError::OutOfScope) => {
                    writeln!(err, "error: network is out of scope for witness construction").map_err(io)?;
                    return Ok(EXIT_OUT_OF_SCOPE);
                }
                Err(e) => {
                    writeln!(err, "error: {}", e).map_err(io)?;
                    return Ok(EXIT_WITNESS);
                }
            };
            let report = match certify(&net, &w) {
                Ok(r) => r,
                Err(e) => {
                    writeln!(err, "error: certification failed: {}", e).map_err(io)?;
                    return Ok(EXIT_WITNESS);
                }
            };
            if json {
                let mut v = w.to_json(&net);
                v["certification"] = report.to_json();
                emit_json(out, &v).map_err(io)?;
            } else {
                write!(out, "{}{}", net.render(), w.to_human(&net)).map_err(io)?;
                writeln!(
                    out,
                    "certified: {} steady states, {} nondegenerate, {} stable{}",
                    report.steady_states,
                    report.nondegenerate,
                    report.stable,
                    if report.continuum { ", continuum" } else { "" }
                )
                .map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { shape, max_molecularity, max_reactions, species, json } => {
            let shape = shape.shape();
            let species = species.unwrap_or(if shape == Shape::OneSpecies { 1 } else { 2 });
            if (shape == Shape::OneSpecies) != (species == 1) {
                return Err("one-species enumeration needs --species 1, other shapes at least 2".into());
            }
            let spec = EnumerationSpec { shape, species, max_molecularity, max_reactions };
            let mut cases: BTreeMap<&'static str, usize> = BTreeMap::new();
            let (mut total, mut ms, mut nondeg, mut multistable) = (0usize, 0usize, 0usize, 0usize);
            let mut rows = Vec::new();
            let mut failed: Option<std::io::Error> = None;
            for_each_network(spec, |_| true, |n| {
                let v = classify(&n);
                total += 1;
                *cases.entry(v.case.as_str()).or_default() += 1;
                ms += (v.multistationary() == Some(true)) as usize;
                nondeg += (v.nondegenerately_multistationary() == Some(true)) as usize;
                multistable += (v.multistable == Some(true)) as usize;
                if json {
                    rows.push(json!({"network": n.render_inline(), "verdict": v.to_json()}));
                } else if failed.is_none() {
                    if let Err(e) = writeln!(
                        out,
                        "{:<48} {:<24} pss={} npss={} stable={}",
                        n.render_inline(),
                        v.case.as_str(),
                        v.cap_pss,
                        v.cap_npss,
                        v.cap_stable
                    ) {
                        failed = Some(e);
                    }
                }
            });
            if let Some(e) = failed {
                return Err(e.to_string());
            }
            let summary = json!({
                "shape": shape.as_str(),
                "species": species,
                "max_molecularity": max_molecularity,
                "networks": total,
                "multistationary": ms,
                "nondegenerately_multistationary": nondeg,
                "multistable": multistable,
                "cases": cases,
            });
            if json {
                emit_json(out, &json!({"networks": rows, "summary": summary})).map_err(io)?;
            } else {
                writeln!(out, "\nsummary ({}, {} species, molecularity <= {})", shape.as_str(), species, max_molecularity).map_err(io)?;
                writeln!(out, "  networks                         {}", total).map_err(io)?;
                writeln!(out, "  multistationary                  {}", ms).map_err(io)?;
                writeln!(out, "  nondegenerately multistationary  {}", nondeg).map_err(io)?;
                writeln!(out, "  multistable                      {}", multistable).map_err(io)?;
                for (case, n) in &cases {
                    writeln!(out, "  {:<32} {}", case, n).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Minimal { input, json } => {
            let net = load(&input)?;
            let report = match is_embedding_minimal(&net) {
                Ok(r) => r,
                Err(e) => {
                    let code = if classify(&net).is_out_of_scope() { EXIT_OUT_OF_SCOPE } else { EXIT_OK };
                    if json {
                        emit_json(out, &json!({"minimal": false, "reason": e.to_string()})).map_err(io)?;
                    } else {
                        writeln!(out, "minimal: false ({})", e).map_err(io)?;
                    }
                    return Ok(code);
                }
            };
            let smaller = report.smaller.as_ref().map(|(n, removal)| {
                (n.render_inline(), removal.describe(&net))
            });
            if json {
                emit_json(
                    out,
                    &json!({
                        "minimal": report.minimal,
                        "family": report.family.map(|f| f.to_string()),
                        "embedded": smaller.as_ref().map(|(n, how)| json!({"network": n, "removal": how})),
                    }),
                )
                .map_err(io)?;
            } else {
                writeln!(out, "minimal: {}", report.minimal).map_err(io)?;
                if let Some(f) = report.family {
                    writeln!(out, "family: {}", f).map_err(io)?;
                }
                if let Some((n, how)) = smaller {
                    writeln!(out, "nondegenerately multistationary embedded network ({}): {}", how, n).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Boxdiagram { input, svg } => {
            let net = load(&input)?;
            match crate::svg::box_diagram_svg(&net) {
                Ok(s) => {
                    std::fs::write(&svg, s).map_err(|e| format!("{}: {}", svg.display(), e))?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "error: {}", e).map_err(io)?;
                    Ok(EXIT_OUT_OF_SCOPE)
                }
            }
        }
    }
}
