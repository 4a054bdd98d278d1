//! `fibra`: verify construction files, run the bundled corpus, evaluate the
//! numeric bounds.

use clap::{Parser, Subcommand, ValueEnum};
use fibra::algebra::{q, Q};
use fibra::bounds::{self, Irregularity};
use fibra::pipeline::{corpus_dir, run_corpus, verify_path};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fibra", version, about = "Exact verification of canonically fibred 3-fold constructions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify one construction file.
    Verify {
        file: PathBuf,
        /// Write the JSON report here.
        #[arg(long, value_name = "PATH")]
        emit_json: Option<PathBuf>,
    },
    /// Verify every file of the corpus (FIBRA_CORPUS_DIR overrides the location).
    Corpus {
        #[arg(long)]
        parallel: bool,
    },
    /// Evaluate one of the bounds.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum QF {
    Zero,
    Positive,
}

#[derive(clap::Args)]
struct BoundsArgs {
    /// One of 2.1, 2.2, 3.1, 3.2, 4.1, 4.2, MY, parity.
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    pg: Option<u64>,
    #[arg(long)]
    b: Option<u8>,
    #[arg(long = "qF", value_enum)]
    q_f: Option<QF>,
    /// Genus of the fibre curve C.
    #[arg(long)]
    g: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    xi: Option<String>,
    /// K_{F0}^2.
    #[arg(long)]
    k2: Option<u64>,
    #[arg(long)]
    k3: Option<String>,
    #[arg(long)]
    chi: Option<String>,
    #[arg(long)]
    emit_json: bool,
}

enum CmdError {
    Input(String),
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, CmdError> {
    v.clone().ok_or_else(|| CmdError::Input(format!("missing input --{flag}")))
}

fn rational(v: &Option<String>, flag: &str) -> Result<Q, CmdError> {
    let s = need(v, flag)?;
    s.trim().parse::<Q>().map_err(|_| CmdError::Input(format!("--{flag}: {s:?} is not a rational number")))
}

fn input<E: std::fmt::Display>(e: E) -> CmdError {
    CmdError::Input(e.to_string())
}

/// The value object plus the text lines to print.
fn evaluate(a: &BoundsArgs) -> Result<(Value, Vec<String>), CmdError> {
    let id = a.theorem.as_str();
    Ok(match id {
        "2.1" => {
            let (p, beta, xi) = (need(&a.p, "p")?, rational(&a.beta, "beta")?, rational(&a.xi, "xi")?);
            let rhs = bounds::vol_inequality_rhs(p, &beta, &xi).map_err(input)?;
            let mut lines = vec![format!("K^3 >= p*beta*xi = {rhs}")];
            let mut v = json!({"rhs": rhs.to_string()});
            if a.k3.is_some() {
                let k3 = rational(&a.k3, "k3")?;
                let holds = k3 >= rhs;
                lines.push(format!("K^3 = {k3}: {}", if holds { "holds" } else { "violated" }));
                v["holds"] = json!(holds);
            }
            (v, lines)
        }
        "2.2" => {
            let (g, p, beta) = (need(&a.g, "g")?, need(&a.p, "p")?, rational(&a.beta, "beta")?);
            let xi = bounds::xi_lower_bound(g, p, &beta).map_err(input)?;
            let edge = bounds::xi_on_strictness_boundary(g, p, &beta).map_err(input)?;
            let mut lines = vec![format!("xi >= {xi}")];
            if edge {
                lines.push(format!("boundary case: the bound equals g - 2 = {}", g - 2));
            }
            (json!({"xi_lower_bound": xi.to_string(), "equals_g_minus_2": edge}), lines)
        }
        "3.1" => {
            let r = bounds::prop31_bound(need(&a.g, "g")?, need(&a.pg, "pg")?).map_err(input)?;
            let mut lines = vec![format!("K^3 >= {} (ceiling form)", r.ceiling_form)];
            if let Some(x) = r.refined {
                lines.push(format!("K^3 >= {x} (refined)"));
            }
            lines.push(format!("best: {}", r.best));
            (serde_json::to_value(&r).expect("serializable"), lines)
        }
        "3.2" => {
            let g = bounds::thm32_max_genus(need(&a.pg, "pg")?).map_err(input)?;
            (json!({"max_genus": g}), vec![g.to_string()])
        }
        "4.1" => {
            let (k2, pg, b) = (need(&a.k2, "k2")?, need(&a.pg, "pg")?, need(&a.b, "b")?);
            let v = bounds::prop41_lower_bound(k2, pg, b).map_err(input)?;
            (json!({"K3_lower_bound": v.to_string()}), vec![format!("K^3 >= {v}")])
        }
        "4.2" => {
            let (pg, b) = (need(&a.pg, "pg")?, need(&a.b, "b")?);
            let qf = match a.q_f {
                Some(QF::Positive) => Irregularity::Positive,
                Some(QF::Zero) => Irregularity::Zero,
                None if b == 1 => Irregularity::Zero,
                None => return Err(CmdError::Input("missing input --qF".into())),
            };
            let r = bounds::thm42_max_k2(pg, b, qf).map_err(input)?;
            let mut lines = vec![format!("K^2 = {}, p_g(F) <= {}", r.max_k2, r.max_pg_f)];
            let mut v = serde_json::to_value(&r).expect("serializable");
            if b == 0 {
                let targets: &[u64] = if qf == Irregularity::Positive { &[72, 71] } else { &[71] };
                let mut flips = serde_json::Map::new();
                for &t in targets {
                    let at = bounds::thm42_flip(t, qf).map_err(input)?;
                    lines.push(format!("K^2 <= {t} holds from p_g(X) = {at} on"));
                    flips.insert(t.to_string(), json!(at));
                }
                v["thresholds"] = Value::Object(flips);
            }
            (v, lines)
        }
        "MY" => {
            let (k3, chi) = (rational(&a.k3, "k3")?, rational(&a.chi, "chi")?);
            let ok = bounds::miyaoka_yau_check(&k3, &chi);
            let rhs = q(72) * &chi;
            (json!({"holds": ok, "rhs": rhs.to_string()}), vec![format!("K^3 = {k3} <= 72*chi = {rhs}: {ok}")])
        }
        "parity" => {
            let t = bounds::parity_threshold_pg();
            (json!({"threshold": t, "from": t + 1}), vec![format!("{t}/{}", t + 1), format!("K.N^2 = 0 for p_g(X) >= {}", t + 1)])
        }
        other => return Err(CmdError::Input(format!("unknown theorem {other:?}"))),
    })
}

fn run(cli: Cli) -> Result<bool, CmdError> {
    match cli.cmd {
        Cmd::Verify { file, emit_json } => {
            let report = verify_path(&file).map_err(input)?;
            print!("{}", report.render());
            if let Some(p) = emit_json {
                std::fs::write(&p, report.to_json() + "\n").map_err(|e| CmdError::Input(format!("{}: {e}", p.display())))?;
            }
            Ok(report.passed)
        }
        Cmd::Corpus { parallel } => {
            let summary = run_corpus(&corpus_dir(), parallel).map_err(input)?;
            print!("{}", summary.render());
            Ok(summary.all_passed())
        }
        Cmd::Bounds(a) => {
            let (mut v, lines) = evaluate(&a)?;
            if a.emit_json {
                v["theorem"] = json!(a.theorem);
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                for l in lines {
                    println!("{l}");
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CmdError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
