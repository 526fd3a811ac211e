use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qgrass_cli::tasks::pass_word;
use qgrass_cli::{
    parse_expression, parse_indices, run_all, run_task, CliError, Conv, Mode, Params, Report, Task,
};
use qgrass_core::coeffs::LocScalar;
use qgrass_core::drinfeld::{comm_normalize, poisson_bracket, CommPoly};
use qgrass_core::hopf::{GroupMode, QuantumMatrix, TensorPoly};
use qgrass_core::ncalg::{Gen, NCPoly};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "qgrass",
    version,
    about = "Exact checks for quantum matrices, Grassmannians and their semiclassical limits"
)]
struct Cli {
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    #[arg(long, global = true, default_value_t = 1)]
    r: usize,
    /// Truncation order N in (q-1).
    #[arg(long, global = true, default_value_t = 3)]
    order: usize,
    /// Degree bound D.
    #[arg(long, global = true, default_value_t = 2)]
    deg: usize,
    #[arg(long, global = true, value_enum, default_value_t = Mode::GL)]
    mode: Mode,
    #[arg(long = "q-conv", global = true, value_enum, default_value_t = Conv::Standard)]
    q_conv: Conv,
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Normal form of an expression in x[i,j].
    Nf { expr: String },
    /// The quantum determinant and its central / group-like checks.
    Qdet,
    /// A quantum minor.
    Minor {
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
    },
    /// Semiclassical bracket of two commutative polynomials in x[i,j].
    Poisson { a: String, b: String },
    /// Run one verification task, or `all`.
    Verify { task: String },
    /// One-line summary of every task.
    Report,
}

impl Cli {
    fn params(&self) -> Params {
        Params {
            n: self.n,
            r: self.r,
            order: self.order,
            deg: self.deg,
            mode: self.mode,
            q_conv: self.q_conv,
            seed: self.seed,
        }
    }
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable")
        );
    } else {
        print!("{text}");
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let p = cli.params();
    let alg = QuantumMatrix::new(p.n, p.q_conv.into())?;
    let labels = alg.pres().labels().to_vec();
    match &cli.cmd {
        Cmd::Nf { expr } => {
            let e = parse_expression(expr, &labels)?;
            let nf = match GroupMode::from(p.mode) {
                GroupMode::GL => alg.nf(&e),
                GroupMode::SL => alg.sl_reduce(&alg.nf(&e)),
            };
            let s = alg.display(&nf);
            emit(
                cli.json,
                json!({"input": expr, "normal_form": s}),
                format!("{s}\n"),
            );
            Ok(true)
        }
        Cmd::Qdet => {
            let d = alg.quantum_determinant();
            let central = (0..labels.len())
                .all(|g| alg.commutator(&d, &NCPoly::generator(g as Gen)).is_zero());
            let group_like = alg.coproduct(&d) == TensorPoly::pure(&d, &d);
            let s = alg.display(&d);
            emit(
                cli.json,
                json!({"qdet": s, "central": central, "group_like": group_like}),
                format!(
                    "D_q = {s}\ncentral: {}\ngroup-like: {}\n",
                    pass_word(central),
                    pass_word(group_like)
                ),
            );
            Ok(central && group_like)
        }
        Cmd::Minor { rows, cols } => {
            let (rows, cols) = (parse_indices(rows)?, parse_indices(cols)?);
            let idx = qgrass_core::minors::MinorIndex::new(rows, cols, p.n)?;
            let s = alg.display(&qgrass_core::minors::quantum_minor(&alg, &idx));
            emit(cli.json, json!({"minor": s}), format!("{s}\n"));
            Ok(true)
        }
        Cmd::Poisson { a, b } => {
            let comm = |src: &str| -> Result<CommPoly, CliError> {
                let e = parse_expression(src, &labels)?;
                Ok(comm_normalize(&e.try_map_coeffs(|c| c.eval_at_one())?))
            };
            let br = poisson_bracket(&alg, &comm(a)?, &comm(b)?)?;
            let s = alg.display(&br.map_coeffs(|c| LocScalar::from_rational(c.clone())));
            emit(cli.json, json!({"bracket": s}), format!("{s}\n"));
            Ok(true)
        }
        Cmd::Verify { task } => {
            if task == "all" {
                let reports = collect(run_all(&p))?;
                let pass = reports.iter().all(|r| r.pass);
                emit(
                    cli.json,
                    serde_json::to_value(&reports).expect("serializable"),
                    reports.iter().map(Report::to_text).collect(),
                );
                return Ok(pass);
            }
            let t = Task::from_str(task, true).map_err(CliError::Usage)?;
            let r = run_task(t, &p)?;
            emit(
                cli.json,
                serde_json::to_value(&r).expect("serializable"),
                r.to_text(),
            );
            Ok(r.pass)
        }
        Cmd::Report => {
            let reports = collect(run_all(&p))?;
            let pass = reports.iter().all(|r| r.pass);
            let summary: Vec<_> = reports
                .iter()
                .map(|r| json!({"check": r.check, "pass": r.pass, "flags": r.flags.len()}))
                .collect();
            let text = reports
                .iter()
                .map(|r| {
                    format!(
                        "{} {:<16} {:>4} checks  {:.3?}\n",
                        pass_word(r.pass),
                        r.check,
                        r.checks.len(),
                        r.wall_time
                    )
                })
                .collect();
            emit(cli.json, json!(summary), text);
            Ok(pass)
        }
    }
}

fn collect(v: Vec<(Task, qgrass_cli::tasks::TaskResult)>) -> Result<Vec<Report>, CliError> {
    v.into_iter()
        .map(|(_, r)| r.map_err(CliError::from))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
