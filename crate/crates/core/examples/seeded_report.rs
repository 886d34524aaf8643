// Run a command in-process and print its JSON report.

use cjl::cli::{execute, to_json, Command, FamilyArg, RunConfig};

pub fn run_example() -> cjl::Result<()> {
    let cfg = RunConfig {
        family: FamilyArg::H,
        m: 2,
        n: 1,
        m2: None,
        n2: None,
        count: 2,
        seed: 7,
        tol_residual: cjl::RESIDUAL_TOL,
        tol_rank: cjl::numerics::RANK_RATIO,
    };
    let report = execute(Command::Sample, &cfg, false)?;
    println!("{}", to_json(&report));
    println!("exit code {}", report.exit_code());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("report example failed");
}
