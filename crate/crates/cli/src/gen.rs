use std::fs;
use std::path::Path;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootcount::format::{cpoly_to_json, rpoly_to_json};
use rootcount::oracle::{build_cpoly, build_rpoly, random_spec_with, SpecConfig};

use crate::{CliError, CliResult, GenArgs};

fn write(path: &Path, text: String) -> CliResult<()> {
    fs::write(path, text + "\n")
        .map_err(|e| CliError::parse(format!("cannot write {}: {e}", path.display())))
}

pub fn run(args: &GenArgs) -> CliResult<()> {
    if args.n == 0 {
        return Err(CliError::parse("--n must be at least 1"));
    }
    if args.max_degree == 0 {
        return Err(CliError::parse("--max-degree must be at least 1"));
    }
    fs::create_dir_all(&args.out)
        .map_err(|e| CliError::parse(format!("cannot create {}: {e}", args.out.display())))?;
    let mut cfg = SpecConfig::new(args.max_degree, args.coeff_bits);
    cfg.complex_roots = args.complex;
    let mut master = ChaCha8Rng::seed_from_u64(args.seed.unwrap_or(0));
    for i in 0..args.n {
        let spec = random_spec_with(master.next_u64(), &cfg);
        let poly = if args.complex {
            cpoly_to_json(&build_cpoly(&spec))
        } else {
            rpoly_to_json(&build_rpoly(&spec)?)
        };
        let stem = format!("poly_{i:04}");
        write(
            &args.out.join(format!("{stem}.json")),
            serde_json::to_string_pretty(&poly).expect("json"),
        )?;
        write(
            &args.out.join(format!("{stem}.spec.json")),
            serde_json::to_string_pretty(&spec).expect("json"),
        )?;
    }
    Ok(())
}
