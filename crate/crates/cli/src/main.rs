use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use jordanopt::eja::{classify_simple, exclusion_check, EjaKind};
use jordanopt::verifier::{theory_report, verify, Postulate, Tolerances, VerificationReport};
use jordanopt::{
    choi_from_kraus, classify_process, eta_epsilon_check, kraus_from_choi, snake_check, spectral_peel,
    spectral_state, tensor_system, SystemSpec,
};
use serde::Serialize;
use serde_json::json;

mod files;

use files::{read_json, MatrixFile, ProcessFile, TheorySpecFile};

#[derive(Parser)]
#[command(name = "jordanopt", version, about = "Jordan-algebraic operational theories: checks and decompositions")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Look up the simple EJA with a given rank and dimension.
    Classify {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        dim: usize,
    },
    /// Run the self-tensor exclusion test for a simple kind.
    Exclude {
        /// e.g. "RealSym(3)", "Spin(5)", "OctHerm3"
        #[arg(long)]
        kind: EjaKind,
    },
    /// Verify postulates on a system, or on every system of a spec file.
    Verify {
        #[arg(long, required_unless_present = "spec")]
        system: Option<SystemSpec>,
        #[arg(long, conflicts_with = "system")]
        spec: Option<PathBuf>,
        /// Defaults to all four core postulates.
        #[arg(long)]
        postulate: Option<PostulateArg>,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Spectral decomposition of a state from a matrix file.
    Spectral {
        #[arg(long)]
        input: PathBuf,
        /// Also run the constructive peel and compare weights.
        #[arg(long)]
        peel: bool,
    },
    /// Composite of two systems.
    Tensor {
        #[arg(long)]
        a: SystemSpec,
        #[arg(long)]
        b: SystemSpec,
    },
    /// Snake and eta/epsilon identities.
    Snake {
        #[arg(long)]
        system: SystemSpec,
    },
    /// Choi -> Kraus -> Choi round trip of a process file.
    ChoiRoundtrip {
        #[arg(long)]
        input: PathBuf,
    },
    /// Classical / fully quantum / hybrid classification with witnesses.
    TheoryClass {
        #[arg(long)]
        system: SystemSpec,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PostulateArg {
    Sharpness,
    Mixing,
    Filtering,
    LocalEquality,
    PerfectDistinguishability,
    Indistinguishability,
}

impl From<PostulateArg> for Postulate {
    fn from(p: PostulateArg) -> Self {
        match p {
            PostulateArg::Sharpness => Postulate::SymmetricSharpness,
            PostulateArg::Mixing => Postulate::CompleteMixing,
            PostulateArg::Filtering => Postulate::Filtering,
            PostulateArg::LocalEquality => Postulate::LocalEquality,
            PostulateArg::PerfectDistinguishability => Postulate::PerfectDistinguishability,
            PostulateArg::Indistinguishability => Postulate::Indistinguishability,
        }
    }
}

/// Input problems exit with 2; failed checks with 1.
enum Outcome {
    Pass,
    Fail,
}

fn base_tolerance() -> anyhow::Result<f64> {
    match std::env::var("JORDANOPT_TOL") {
        Ok(s) => {
            let t: f64 = s.trim().parse().with_context(|| format!("JORDANOPT_TOL={s:?} is not a number"))?;
            if !(t > 0.0 && t.is_finite()) {
                anyhow::bail!("JORDANOPT_TOL must be positive, got {t}");
            }
            Ok(t)
        }
        Err(_) => Ok(1e-9),
    }
}

fn emit<S: Serialize>(json_mode: bool, value: &S, text: impl FnOnce() -> String) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        println!("{}", text());
    }
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = format!(
        "{} on ({}): {} [{} trials, max deviation {:.3e}]",
        r.postulate,
        r.system,
        if r.passed { "PASS" } else { "FAIL" },
        r.trials,
        r.max_deviation
    );
    for w in &r.witnesses {
        s.push_str(&format!("\n  witness: {w}"));
    }
    s
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let tol = base_tolerance()?;
    let json_mode = cli.json;
    match cli.command {
        Command::Classify { rank, dim } => {
            let kind = classify_simple(rank, dim);
            let name = kind.map_or_else(|| "NoMatch".to_string(), |k| k.to_string());
            emit(json_mode, &json!({ "rank": rank, "dim": dim, "kind": name }), || name.clone());
            Ok(Outcome::Pass)
        }
        Command::Exclude { kind } => {
            let r = exclusion_check(kind)?;
            let matched = r.matched.map_or_else(|| "NoMatch".to_string(), |k| k.to_string());
            let value = json!({
                "kind": kind.to_string(),
                "tensor_rank": r.tensor_rank,
                "tensor_dim": r.tensor_dim,
                "matched": matched,
                "ruled_out": r.ruled_out(),
            });
            emit(json_mode, &value, || {
                format!(
                    "{kind}: self-tensor (rank, dim) = ({}, {}) -> {matched}{}",
                    r.tensor_rank,
                    r.tensor_dim,
                    if r.ruled_out() { " (ruled out)" } else { "" }
                )
            });
            Ok(Outcome::Pass)
        }
        Command::Verify { system, spec, postulate, trials, seed } => {
            let (systems, tol, seed) = match spec {
                Some(path) => {
                    let file: TheorySpecFile = read_json(&path)?;
                    let systems = file
                        .systems
                        .iter()
                        .map(|(label, blocks)| {
                            SystemSpec::new(blocks.clone()).with_context(|| format!("systems.{label}"))
                        })
                        .collect::<anyhow::Result<Vec<_>>>()?;
                    (systems, file.tolerance, seed.unwrap_or(file.seed))
                }
                None => (vec![system.expect("required by clap")], tol, seed.unwrap_or(0)),
            };
            if trials == 0 {
                anyhow::bail!("--trials must be at least 1");
            }
            let tolerances = Tolerances::from_base(tol);
            let postulates: Vec<Postulate> = match postulate {
                Some(p) => vec![p.into()],
                None => Postulate::CORE.to_vec(),
            };
            let reports: Vec<VerificationReport> = systems
                .iter()
                .flat_map(|s| postulates.iter().map(move |&p| (p, s)))
                .map(|(p, s)| verify(p, s, trials, seed, &tolerances))
                .collect();
            let passed = reports.iter().all(|r| r.passed);
            emit(json_mode, &reports, || reports.iter().map(report_text).collect::<Vec<_>>().join("\n"));
            Ok(if passed { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Spectral { input, peel } => {
            let file: MatrixFile = read_json(&input)?;
            let rho = file.to_element()?;
            let sp = spectral_state(&rho, tol)?;
            let residual = sp.reconstruct().distance(&rho)?;
            let frame: Vec<_> = sp
                .frame
                .members()
                .iter()
                .map(|m| {
                    json!({
                        "block": m.block(),
                        "re": m.vector().iter().map(|z| z.re).collect::<Vec<_>>(),
                        "im": m.vector().iter().map(|z| z.im).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut value = json!({
                "system": rho.system(),
                "weights": sp.weights,
                "frame": frame,
                "reconstruction_error": residual,
            });
            let mut ok = residual <= tol;
            if peel {
                let pl = spectral_peel(&rho, tol)?;
                let (a, b) = (sp.sorted_weights(), pl.sorted_weights());
                let gap = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
                ok &= gap <= 1e-7;
                value["peel_weights"] = json!(pl.weights);
                value["peel_gap"] = json!(gap);
            }
            emit(json_mode, &value, || {
                let mut s = format!("weights: {:?}\nreconstruction error: {residual:.3e}", sp.weights);
                if let Some(p) = value.get("peel_weights") {
                    s.push_str(&format!("\npeel weights (in peel order): {p}\npeel gap: {:.3e}", value["peel_gap"].as_f64().unwrap_or(f64::NAN)));
                }
                s
            });
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Tensor { a, b } => {
            let (c, _) = tensor_system(&a, &b);
            let ok = c.rank() == a.rank() * b.rank() && c.dim() == a.dim() * b.dim();
            let value = json!({ "blocks": c, "rank": c.rank(), "dim": c.dim(), "multiplicative": ok });
            emit(json_mode, &value, || format!("blocks {c}\nN = {}\nD = {}", c.rank(), c.dim()));
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Snake { system } => {
            let snake = snake_check::<f64>(&system);
            let ee = eta_epsilon_check::<f64>(&system, tol);
            let strict = tol * 0.1;
            let ok = snake <= strict && ee.deviation <= strict;
            let value = json!({
                "system": system,
                "snake_deviation": snake,
                "eta_epsilon_deviation": ee.deviation,
                "eta_in_cone": ee.eta_in_cone,
                "passed": ok,
            });
            emit(json_mode, &value, || {
                format!(
                    "snake deviation {snake:.3e}\neta/epsilon deviation {:.3e}\neta in cone: {}",
                    ee.deviation, ee.eta_in_cone
                )
            });
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Command::ChoiRoundtrip { input } => {
            let file: ProcessFile = read_json(&input)?;
            let f = file.to_process()?;
            let class = classify_process(&f, tol);
            match kraus_from_choi(&f, tol) {
                Ok(k) => {
                    let d = choi_from_kraus(&k).choi_distance(&f)?;
                    let ok = d <= tol;
                    let value = json!({ "class": class, "kraus_count": k.len(), "roundtrip_error": d, "passed": ok });
                    emit(json_mode, &value, || {
                        format!("{class:?}\n{} Kraus operators\nround-trip error {d:.3e}", k.len())
                    });
                    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
                }
                Err(e) => {
                    let value = json!({ "class": class, "error": e.to_string(), "passed": false });
                    emit(json_mode, &value, || format!("{class:?}\nwitness: {e}"));
                    Ok(Outcome::Fail)
                }
            }
        }
        Command::TheoryClass { system, trials, seed } => {
            let r = theory_report(&system, trials, seed, &Tolerances::from_base(tol));
            emit(json_mode, &r, || {
                let mut s = format!("{}", r.class);
                for (name, rep) in [("perfect distinguishability", &r.perfect_distinguishability), ("indistinguishability", &r.indistinguishability)] {
                    s.push_str(&format!("\n{name}: {}", if rep.passed { "holds" } else { "fails" }));
                    if let Some(w) = rep.witnesses.first() {
                        s.push_str(&format!(" ({w})"));
                    }
                }
                s
            });
            Ok(if r.consistent { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
