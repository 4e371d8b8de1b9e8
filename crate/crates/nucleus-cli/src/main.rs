use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nucleus_cli::error::CliError;
use nucleus_cli::fixtures::{self, FixtureKind};
use nucleus_cli::format::{
    chain_from_json, minimalize_output_to_json, model_from_toml_at, module_spec_from_toml,
};
use nucleus_cli::report::{classification_report, Report};
use nucleus_core::arith::Prime;
use nucleus_core::classify::DEFAULT_MAX_DEGREE;
use nucleus_core::ko::{
    bracket_defined, bracket_indeterminacy, generator_coverage_check, ko_group, ko_mul, BracketC,
    KoElement, StableStemTable,
};
use nucleus_core::steenrod::{adem_reduce, SteenrodWord};

#[derive(Parser)]
#[command(
    name = "nucleus",
    version,
    about = "Minimal cell structures and detection criteria for p-local spectra, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a spectrum model file (or every model in a directory).
    Classify(ClassifyArgs),
    /// Replace a chain complex by its minimal model, with a verified witness.
    Minimalize(MinimalizeArgs),
    /// Minimal generator degrees of a presented Steenrod module.
    Ext0(Ext0Args),
    /// Steenrod algebra utilities.
    #[command(subcommand)]
    Steenrod(SteenrodCmd),
    /// Arithmetic in the homotopy of connective real K-theory at 2.
    #[command(subcommand)]
    Ko(KoCmd),
    /// The shipped fixture library.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Path to a model file, a directory of model files, or a fixture name.
    path: String,
    /// Truncation bound for realized cohomology and reported ranges.
    #[arg(long)]
    max_degree: Option<i32>,
    /// Emit the machine-readable report.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MinimalizeArgs {
    /// Path to a chain-complex JSON file (or a chain fixture name).
    path: String,
    /// Write the minimal complex and witness map here (JSON).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Ext0Args {
    /// Path to a module presentation file (or a module fixture name).
    path: String,
    #[arg(long)]
    max_degree: Option<i32>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum SteenrodCmd {
    /// Rewrite a word to its admissible normal form.
    Reduce {
        /// Whitespace-separated word, e.g. "Sq2 Sq2" or "P1 b P1".
        word: String,
        #[arg(long, default_value_t = 2)]
        prime: u64,
    },
}

#[derive(Subcommand)]
enum KoCmd {
    /// The homotopy group in one degree.
    Group { degree: u32 },
    /// Multiply a product expression, e.g. "a*a" or "eta*beta^2".
    Mul { expr: String },
    /// Definedness and indeterminacy of a bracket <a, b, c>.
    Bracket {
        /// Integer first slot.
        a: i64,
        /// Named stem element: iota, eta, eta2, nu, nu2, sigma, ...
        b: String,
        /// Ring element expression; "b0" means the unit.
        c: String,
    },
    /// Check the generator families cover every nonzero degree.
    Coverage {
        #[arg(long, default_value_t = 32)]
        max: u32,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// List the shipped fixtures.
    List,
    /// Print one fixture file.
    Show { name: String },
}

fn default_bound(explicit: Option<i32>) -> i32 {
    explicit
        .or_else(|| {
            std::env::var("NUCLEUS_MAX_DEGREE")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

/// Resolves command input: an existing path wins; otherwise a fixture of the
/// expected kind with that name.
fn load_input(spec: &str, kind: FixtureKind) -> Result<String, CliError> {
    let path = Path::new(spec);
    if path.exists() {
        return Ok(std::fs::read_to_string(path)?);
    }
    match fixtures::find(spec) {
        Some((_, k, text)) if k == kind => Ok(text.to_string()),
        Some((name, k, _)) => Err(CliError::parse(format!(
            "fixture {name} is a {}, not a {}",
            k.describe(),
            kind.describe()
        ))),
        None => Err(CliError::parse(format!("no such file or fixture: {spec}"))),
    }
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", report.render_json());
    } else {
        print!("{}", report.render_text());
    }
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), CliError> {
    let bound = default_bound(args.max_degree);
    let path = Path::new(&args.path);
    if path.is_dir() {
        let mut entries: Vec<PathBuf> = std::fs::read_dir(path)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "toml"))
            .collect();
        entries.sort();
        // batch mode: classify every file carrying a [spectrum] table,
        // ignore other TOML (module specs and the like), fail on real errors
        let mut first = true;
        for file in &entries {
            let text = std::fs::read_to_string(file)?;
            let is_model = toml::from_str::<toml::Value>(&text)
                .map(|v| v.get("spectrum").is_some())
                .unwrap_or(true);
            if !is_model {
                continue;
            }
            if !first && !args.json {
                println!();
            }
            first = false;
            let model = model_from_toml_at(&text, bound, Some(path))?;
            let verdicts = model.classify(bound)?;
            emit(&classification_report(&model, &verdicts, bound), args.json);
        }
        return Ok(());
    }
    let text = load_input(&args.path, FixtureKind::Model)?;
    let base = path.parent().filter(|_| path.exists());
    let model = model_from_toml_at(&text, bound, base)?;
    let verdicts = model.classify(bound)?;
    emit(&classification_report(&model, &verdicts, bound), args.json);
    Ok(())
}

fn cmd_minimalize(args: &MinimalizeArgs) -> Result<(), CliError> {
    let text = load_input(&args.path, FixtureKind::Chain)?;
    let complex = chain_from_json(&text)?;
    let (minimal, witness) = complex.minimalize()?;

    // verification lines: both recomputed from the output, not assumed
    let is_minimal = minimal.is_minimal();
    // on truncated inputs the minimal model's own honesty bound sits one
    // degree lower, so compare over the range both sides know
    let h_min = minimal.homology();
    let h_in = complex.homology();
    let preserved = match h_min.known_through() {
        Some(k) => h_in.truncate_knowledge(k) == h_min,
        None => h_in == h_min,
    };

    let payload = minimalize_output_to_json(&minimal, &witness);
    if let Some(out) = &args.out {
        std::fs::write(out, serde_json::to_string_pretty(&payload)?)?;
    }

    let mut report = Report::new(
        "minimalize",
        Some(format!(
            "minimal model: {} cells (input had {})",
            minimal.total_cells(),
            complex.total_cells()
        )),
    );
    report.push_text(format!("is_minimal: {is_minimal}"));
    report.push_text(format!("homology preserved: {preserved}"));
    if args.out.is_none() && !args.json {
        report.push_text(serde_json::to_string_pretty(&payload)?);
    }
    emit(&report, args.json);
    if !is_minimal || !preserved {
        return Err(CliError::domain("verification failed".to_string()));
    }
    Ok(())
}

fn cmd_ext0(args: &Ext0Args) -> Result<(), CliError> {
    let bound = default_bound(args.max_degree);
    let text = load_input(&args.path, FixtureKind::Module)?;
    let spec = module_spec_from_toml(&text)?;
    let module = spec.realize(bound)?;
    let mg = module.minimal_generators();
    let mut report = Report::new("ext0", None);
    if mg.per_degree.is_empty() {
        report.push_text("generators: none (zero module in range)");
    } else {
        let parts: Vec<String> = mg
            .per_degree
            .iter()
            .map(|(d, k)| format!("degree {d} (dim {k})"))
            .collect();
        report.push_text(format!("generators: {}", parts.join(", ")));
    }
    report.push_text(format!(
        "monogenic: {} (reliable through degree {})",
        if module.is_monogenic() { "yes" } else { "no" },
        mg.reliable_through
    ));
    emit(&report, args.json);
    Ok(())
}

fn cmd_steenrod(cmd: &SteenrodCmd) -> Result<(), CliError> {
    match cmd {
        SteenrodCmd::Reduce { word, prime } => {
            let p = Prime::new(*prime)?;
            let w = SteenrodWord::parse(p, word)?;
            println!("{}", adem_reduce(&w));
            Ok(())
        }
    }
}

fn parse_bracket_c(s: &str) -> Result<BracketC, CliError> {
    if s == "b0" {
        return Ok(BracketC::Ko(KoElement::unit()));
    }
    if let Some(rest) = s.strip_prefix("even@") {
        let degree: u32 = rest
            .parse()
            .map_err(|_| CliError::parse(format!("bad slot degree {rest:?}")))?;
        return Ok(BracketC::FormalEvenSlot { degree });
    }
    Ok(BracketC::Ko(KoElement::parse(s)?))
}

fn cmd_ko(cmd: &KoCmd) -> Result<(), CliError> {
    match cmd {
        KoCmd::Group { degree } => {
            println!("{}", ko_group(*degree));
            Ok(())
        }
        KoCmd::Mul { expr } => {
            let mut factors = expr.split('*').map(str::trim);
            let first = factors
                .next()
                .ok_or_else(|| CliError::parse("empty expression".to_string()))?;
            let mut acc = KoElement::parse(first)?;
            for f in factors {
                acc = ko_mul(&acc, &KoElement::parse(f)?);
            }
            println!("{acc}");
            Ok(())
        }
        KoCmd::Bracket { a, b, c } => {
            let table = StableStemTable::new();
            let c = parse_bracket_c(c)?;
            match bracket_defined(&table, *a, b, &c) {
                Ok(()) => {
                    println!("defined: yes");
                    match &c {
                        BracketC::Ko(_) => {
                            let ind = bracket_indeterminacy(&table, *a, b, &c)
                                .map_err(|e| CliError::domain(e.to_string()))?;
                            println!("degree: {}", ind.degree);
                            println!("indeterminacy: {ind}");
                        }
                        BracketC::FormalEvenSlot { degree } => {
                            let bdeg = table.find(b).map_err(CliError::from)?.degree;
                            println!("degree: {}", bdeg + degree + 1);
                            println!("indeterminacy: formal slot, not computed on the ring side");
                        }
                    }
                    Ok(())
                }
                Err(fail) => {
                    println!("defined: no ({fail})");
                    Ok(())
                }
            }
        }
        KoCmd::Coverage { max } => {
            let report =
                generator_coverage_check(*max).map_err(|e| CliError::domain(e.to_string()))?;
            for (degree, entry) in &report.covered {
                println!("degree {degree}: {entry}");
            }
            if report.complete() {
                println!(
                    "coverage complete through degree {}: no gaps",
                    report.max_degree
                );
            } else {
                println!("gaps at degrees {:?}", report.gaps);
                return Err(CliError::domain("coverage incomplete".to_string()));
            }
            Ok(())
        }
    }
}

fn cmd_fixtures(cmd: &FixturesCmd) -> Result<(), CliError> {
    match cmd {
        FixturesCmd::List => {
            for (name, kind, _) in fixtures::FIXTURES {
                println!("{name:<12} {}", kind.describe());
            }
            Ok(())
        }
        FixturesCmd::Show { name } => match fixtures::find(name) {
            Some((_, _, text)) => {
                print!("{text}");
                Ok(())
            }
            None => Err(CliError::parse(format!("no such fixture: {name}"))),
        },
    }
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Minimalize(args) => cmd_minimalize(args),
        Command::Ext0(args) => cmd_ext0(args),
        Command::Steenrod(cmd) => cmd_steenrod(cmd),
        Command::Ko(cmd) => cmd_ko(cmd),
        Command::Fixtures(cmd) => cmd_fixtures(cmd),
    }
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
