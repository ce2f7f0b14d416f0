use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use dihedral_mds::example::{corrected_example, original_modulus_diagnostic, Variant, CORRECTED_MODULUS};
use dihedral_mds::{
    analyze, central_primitive_idempotents, construct_code, cyclic_family, sweep, AlgebraElement, CodeFamily, CodeJson,
    DihedralAlgebra, DistanceMethod, FamilyKind, Field, LinearCode, Style, Wedderburn, DEFAULT_CAP,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "dmds",
    version,
    about = "MDS group codes in dihedral group algebras over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a field spec and print its parameters.
    FieldCheck {
        /// e.g. "p=5;mod=[2,0,1]" (coefficients little-endian, monic)
        #[arg(long)]
        field: String,
    },
    /// List the cyclic idempotents e_i and the central primitive idempotents.
    Idempotents {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the Wedderburn map on random pairs.
    Wedderburn {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        /// Number of random pairs.
        #[arg(long, default_value_t = 100)]
        check: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a code from one of the three families and emit it as JSON.
    Construct {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        family: FamilyKind,
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Twist scalar; defaults to the canonical primitive element.
        #[arg(long)]
        beta: Option<String>,
        #[arg(long, default_value = "rref")]
        style: Style,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute length, dimension, minimum distance and the MDS verdict of a code file.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "auto")]
        method: DistanceMethod,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
    /// Every family for every admissible s, with the default beta.
    Sweep {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "dual")]
        method: DistanceMethod,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The GF(25), n = 3 worked example over the modulus y^2+2.
    Example {
        /// I1, I2, or both when omitted.
        #[arg(long)]
        variant: Option<Variant>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => match err.downcast_ref::<dihedral_mds::Error>() {
            Some(e) => {
                eprintln!("error[{}]: {e}", e.code());
                ExitCode::from(2)
            }
            None => {
                eprintln!("error: {err:#}");
                ExitCode::from(1)
            }
        },
    }
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::FieldCheck { field } => field_check(&field),
        Command::Idempotents { field, n, format } => idempotents(&field, n, format),
        Command::Wedderburn { field, n, check, seed } => wedderburn(&field, n, check, seed),
        Command::Construct {
            field,
            n,
            family,
            s,
            beta,
            style,
            out,
        } => {
            let f = Field::from_spec(&field)?;
            let mut fam = CodeFamily::new(family).with_s(s);
            if let Some(b) = beta {
                fam = fam.with_beta(f.parse(&b)?);
            }
            let code = construct_code(&f, n, fam)?;
            let doc = serde_json::to_string_pretty(&code.to_json(style)?)?;
            emit(&doc, out.as_ref())
        }
        Command::Analyze { input, method, cap } => {
            let text = fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let doc: CodeJson = serde_json::from_str(&text).map_err(|e| dihedral_mds::Error::Json(e.to_string()))?;
            let code = LinearCode::from_json(&doc)?;
            println!("{}", serde_json::to_string(&analyze(&code, method, cap)?)?);
            Ok(())
        }
        Command::Sweep {
            field,
            n,
            method,
            cap,
            format,
        } => {
            let f = Field::from_spec(&field)?;
            let rows = sweep(&f, n, method, cap)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
                Format::Text => {
                    println!(
                        "{:<12} {:>3} {:>12} {:>3} {:>3} {:>3} {:>4}",
                        "family", "s", "beta", "len", "k", "d", "mds"
                    );
                    for r in rows {
                        let beta = f.format(f.from_coeffs(&r.beta)?);
                        let mds = if r.mds { "yes" } else { "no" };
                        println!(
                            "{:<12} {:>3} {:>12} {:>3} {:>3} {:>3} {:>4}",
                            r.family, r.s, beta, r.length, r.k, r.d, mds
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Example { variant } => example(variant),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn field_check(spec: &str) -> anyhow::Result<()> {
    let f = Field::from_spec(spec)?;
    let g = f.generator();
    let doc = json!({
        "field": f.spec(),
        "p": f.p(),
        "m": f.m(),
        "q": f.q(),
        "irreducible": true,
        "generator": f.format(g),
        "generator_order": f.order(g)?,
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(())
}

fn idempotents(spec: &str, n: usize, format: Format) -> anyhow::Result<()> {
    let f = Field::from_spec(spec)?;
    let alg = DihedralAlgebra::new(&f, n)?;
    let cyclic = cyclic_family(&alg)?;
    let central = central_primitive_idempotents(&alg)?;
    match format {
        Format::Text => {
            println!("xi = {}", f.format(cyclic.xi));
            for (i, e) in cyclic.members.iter().enumerate() {
                println!("e_{i} = {e}");
            }
            for (i, z) in central.members.iter().enumerate() {
                println!("central_{i} = {z}");
            }
        }
        Format::Json => {
            let list = |m: &[AlgebraElement]| -> Vec<Value> {
                m.iter()
                    .map(|e| json!({ "text": e.to_text(), "element": e.to_json() }))
                    .collect()
            };
            let doc = json!({
                "field": f.spec(),
                "n": n,
                "xi": f.coeffs(cyclic.xi),
                "cyclic": list(&cyclic.members),
                "central": list(&central.members),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(())
}

fn wedderburn(spec: &str, n: usize, check: usize, seed: u64) -> anyhow::Result<()> {
    let f = Field::from_spec(spec)?;
    let alg = DihedralAlgebra::new(&f, n)?;
    let w = Wedderburn::new(&alg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = w.check_homomorphism(check, &mut rng);
    let bijective = w.transform().rank() == alg.dim();
    let doc = json!({
        "field": f.spec(),
        "n": n,
        "xi": f.format(w.xi()),
        "blocks": w.block_count(),
        "bijective": bijective,
        "trials": report.trials,
        "passed": report.passed,
        "failed": report.failed,
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    if report.failed > 0 || !bijective {
        anyhow::bail!(
            "homomorphism check failed on {} of {} pairs",
            report.failed,
            report.trials
        );
    }
    Ok(())
}

fn example(variant: Option<Variant>) -> anyhow::Result<()> {
    let variants = match variant {
        Some(v) => vec![v],
        None => vec![Variant::I1, Variant::I2],
    };
    println!(
        "note: GF(5)[x]/(x^2+1) is not a field: {}",
        original_modulus_diagnostic()
    );
    println!(
        "note: using GF(25) = GF(5)[y]/(y^2+2) (mod={:?}); parameters are comparable, raw matrix entries are not",
        CORRECTED_MODULUS
    );
    for v in variants {
        let (report, _) = corrected_example(v)?;
        println!("{}", serde_json::to_string_pretty(&report)?);
    }
    Ok(())
}
