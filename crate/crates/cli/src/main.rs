//! `catpb`: validate, construct and check finite categories from the command line.

mod output;

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use catpb::ccc::{check_hom_iso, check_triangles};
use catpb::construct::{hom_pullback, internal_hom, product_category};
use catpb::dsl::{serialize_category, serialize_functor};
use catpb::functor::{
    cartesian_counterexample, pullback_preservation_counterexample,
    pullback_preservation_counterexample_exhaustive,
};
use catpb::iso::categories_isomorphic;
use catpb::limits::{
    compare_pullbacks, cospan_without_pullback, cospans, pullback_squares_over, pullback_table,
};
use catpb::{Check, Counterexample, Error, FiniteCategory, Library, SizeGuard};

use output::{Report, Verdict, Witness};

#[derive(Parser)]
#[command(name = "catpb", version)]
#[command(
    about = "Finite categories with pullbacks: validation, constructions and closed-structure checks"
)]
struct Cli {
    /// Emit the report as one JSON object on stdout
    #[arg(long, global = true)]
    json: bool,

    /// Largest accepted object count per input category
    #[arg(long, global = true, default_value_t = 10)]
    max_objects: usize,

    /// Largest accepted morphism count per input category
    #[arg(long, global = true, default_value_t = 40)]
    max_morphisms: usize,

    /// Search-node budget for every enumeration
    #[arg(long, global = true, default_value_t = 10_000_000)]
    max_nodes: u64,

    /// Check every pullback square rather than the canonical one
    #[arg(long, global = true)]
    exhaustive: bool,

    /// Output path for constructed categories (`.cat` plus `.tables.json`)
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Inputs {
    /// Source files; categories are taken in order of appearance
    #[arg(required = true)]
    files: Vec<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate every document
    Validate(Inputs),
    /// Decide pullback existence and list canonical pullbacks
    Pullbacks(Inputs),
    /// Build the product of the first two categories
    Product(Inputs),
    /// Build the internal hom from the first category to the second
    Hom(Inputs),
    /// Check functors or natural transformations
    #[command(subcommand)]
    Check(CheckCommand),
    /// Search for an isomorphism between the first two categories
    Iso(Inputs),
    /// Verify the closed structure for A, B and, given C, the currying iso
    Ccc(Inputs),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Validate functors, optionally checking pullback preservation
    Functor {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        preserves_pullbacks: bool,
        /// Check only this functor
        #[arg(long)]
        name: Option<String>,
    },
    /// Validate natural transformations, optionally checking that they are cartesian
    Nattrans {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        cartesian: bool,
        /// Check only this transformation
        #[arg(long)]
        name: Option<String>,
    },
}

/// Everything loaded from the command line's files.
struct Loaded {
    lib: Library,
    /// Categories in order of appearance, repeats included.
    order: Vec<Arc<FiniteCategory>>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Input(m) => f.write_str(m),
            Failure::Engine(e) => write!(f, "{e}"),
        }
    }
}

fn load(files: &[PathBuf], guard: &SizeGuard) -> Result<Loaded, Failure> {
    let mut lib = Library::new();
    let mut order = Vec::new();
    let mut seen: HashMap<PathBuf, Vec<Arc<FiniteCategory>>> = HashMap::new();
    for path in files {
        let key = fs::canonicalize(path).unwrap_or_else(|_| path.clone());
        if let Some(cats) = seen.get(&key) {
            order.extend(cats.iter().cloned());
            continue;
        }
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        let before = lib.categories().len();
        lib.load(&text, guard)
            .map_err(|e| Failure::Input(format!("{}:{}: {}", path.display(), e.line, e.kind)))?;
        let added = lib.categories()[before..].to_vec();
        order.extend(added.iter().cloned());
        seen.insert(key, added);
    }
    Ok(Loaded { lib, order })
}

fn take<const N: usize>(loaded: &Loaded, min: usize) -> Result<Vec<Arc<FiniteCategory>>, Failure> {
    if loaded.order.len() < min || loaded.order.len() > N {
        return Err(Failure::Usage(format!(
            "expected {} categories, found {}",
            if min == N {
                min.to_string()
            } else {
                format!("{min} to {N}")
            },
            loaded.order.len()
        )));
    }
    Ok(loaded.order.clone())
}

fn pullback_check(c: &FiniteCategory) -> Check {
    Check::from_counterexample(
        format!("{} has all pullbacks", c.name()),
        cospan_without_pullback(c).map(|s| Counterexample::cospan(c, s)),
    )
}

/// Records pullback checks; false when some input lacks pullbacks.
fn require_pullbacks(report: &mut Report, cats: &[Arc<FiniteCategory>]) -> bool {
    let mut ok = true;
    for c in cats {
        let check = pullback_check(c);
        ok &= check.passed();
        report.checks.push(check);
    }
    ok
}

fn sidecar_path(path: &Path) -> PathBuf {
    let stem = if path.extension().is_some_and(|e| e == "cat") {
        path.with_extension("")
    } else {
        path.to_path_buf()
    };
    let mut s = stem.into_os_string();
    s.push(".tables.json");
    PathBuf::from(s)
}

fn construction(
    c: &FiniteCategory,
    tables: serde_json::Value,
    output: Option<&Path>,
) -> Result<Witness, Failure> {
    let text = serialize_category(c);
    let mut written = Vec::new();
    if let Some(path) = output {
        let cat_path = if path.extension().is_some_and(|e| e == "cat") {
            path.to_path_buf()
        } else {
            path.with_extension("cat")
        };
        let side = sidecar_path(path);
        let pretty = serde_json::to_string_pretty(&tables).expect("tables serialize") + "\n";
        fs::write(&cat_path, &text)
            .map_err(|e| Failure::Input(format!("{}: {e}", cat_path.display())))?;
        fs::write(&side, pretty).map_err(|e| Failure::Input(format!("{}: {e}", side.display())))?;
        written = vec![cat_path.display().to_string(), side.display().to_string()];
    }
    Ok(Witness::Construction {
        name: c.name().to_string(),
        objects: c.object_count(),
        morphisms: c.morphism_count(),
        text,
        tables,
        written,
    })
}

fn run(cli: &Cli, report: &mut Report) -> Result<(), Failure> {
    let guard = SizeGuard {
        max_objects: cli.max_objects,
        max_morphisms: cli.max_morphisms,
        max_nodes: cli.max_nodes,
    };
    match &cli.command {
        Command::Validate(inputs) => {
            let loaded = load(&inputs.files, &guard)?;
            for c in loaded.lib.categories() {
                report.checks.push(Check::pass(format!(
                    "{} is a category ({} objects, {} morphisms)",
                    c.name(),
                    c.object_count(),
                    c.morphism_count()
                )));
            }
            for (name, f) in loaded.lib.functors() {
                report.checks.push(Check::pass(format!(
                    "{name} is a functor {} -> {}",
                    f.source().name(),
                    f.target().name()
                )));
            }
            for (name, _) in loaded.lib.transformations() {
                report
                    .checks
                    .push(Check::pass(format!("{name} is a natural transformation")));
            }
        }
        Command::Pullbacks(inputs) => {
            let loaded = load(&inputs.files, &guard)?;
            for c in &loaded.lib.categories().to_vec() {
                report.checks.push(pullback_check(c));
                if cli.exhaustive {
                    let mut unique = None;
                    for cospan in cospans(c) {
                        let all = pullback_squares_over(c, cospan);
                        for s in &all {
                            report.witnesses.push(Witness::pullback(c, s));
                        }
                        if unique.is_none() {
                            unique = all
                                .iter()
                                .flat_map(|p| all.iter().map(move |q| (p, q)))
                                .find(|(p, q)| compare_pullbacks(c, p, q).is_none())
                                .map(|(p, _)| Counterexample::square(c, p));
                        }
                    }
                    report.checks.push(Check::from_counterexample(
                        format!("pullbacks in {} are unique up to unique iso", c.name()),
                        unique,
                    ));
                } else {
                    for (_, sq) in pullback_table(c).entries() {
                        if let Some(sq) = sq {
                            report.witnesses.push(Witness::pullback(c, sq));
                        }
                    }
                }
            }
        }
        Command::Product(inputs) => {
            let loaded = load(&inputs.files, &guard)?;
            let cats = take::<2>(&loaded, 2)?;
            let p = product_category(&cats[0], &cats[1], &guard)?;
            report.checks.push(Check::pass(format!(
                "{} is a category",
                p.category().name()
            )));
            for (side, proj) in [("left", p.proj_left()), ("right", p.proj_right())] {
                report.checks.push(Check::from_counterexample(
                    format!("{side} projection preserves pullbacks"),
                    pullback_preservation_counterexample(proj)
                        .map(|s| Counterexample::cospan(p.category(), s)),
                ));
            }
            if cospan_without_pullback(&cats[0]).is_none()
                && cospan_without_pullback(&cats[1]).is_none()
            {
                report.checks.push(pullback_check(p.category()));
            }
            let tables = serde_json::to_value(p.tables()).expect("tables serialize");
            report
                .witnesses
                .push(construction(p.category(), tables, cli.output.as_deref())?);
        }
        Command::Hom(inputs) => {
            let loaded = load(&inputs.files, &guard)?;
            let cats = take::<2>(&loaded, 2)?;
            if !require_pullbacks(report, &cats) {
                return Ok(());
            }
            let h = internal_hom(&cats[0], &cats[1], &guard)?;
            let hc = h.category();
            report.checks.push(Check::from_counterexample(
                format!("objects of {} preserve pullbacks", hc.name()),
                hc.object_ids()
                    .find(|&x| pullback_preservation_counterexample(h.functor(x)).is_some())
                    .map(|x| Counterexample::object(hc, x)),
            ));
            report.checks.push(Check::from_counterexample(
                format!("morphisms of {} are cartesian", hc.name()),
                hc.morphism_ids()
                    .find(|&m| cartesian_counterexample(h.transformation(m)).is_some())
                    .map(|m| Counterexample::morphism(hc, m)),
            ));
            report.checks.push(pullback_check(hc));
            let mut disagreement = None;
            for cospan in cospans(hc) {
                let pointwise = hom_pullback(&h, cospan)?;
                let canonical = catpb::choose_pullback(hc, cospan)?;
                if compare_pullbacks(hc, pointwise.square.square(), canonical.square()).is_none() {
                    disagreement = Some(Counterexample::cospan(hc, cospan));
                    break;
                }
            }
            report.checks.push(Check::from_counterexample(
                "pointwise pullbacks are isomorphic to canonical ones",
                disagreement,
            ));
            let tables = serde_json::to_value(h.tables()).expect("tables serialize");
            report
                .witnesses
                .push(construction(hc, tables, cli.output.as_deref())?);
        }
        Command::Check(CheckCommand::Functor {
            inputs,
            preserves_pullbacks,
            name,
        }) => {
            let loaded = load(&inputs.files, &guard)?;
            let selected: Vec<_> = loaded
                .lib
                .functors()
                .iter()
                .filter(|(n, _)| name.as_ref().is_none_or(|want| want == n))
                .collect();
            if selected.is_empty() {
                return Err(Failure::Usage("no matching functor documents".into()));
            }
            for (n, f) in selected {
                report.checks.push(Check::pass(format!(
                    "{n} is a functor {} -> {}",
                    f.source().name(),
                    f.target().name()
                )));
                if *preserves_pullbacks {
                    let ce = if cli.exhaustive {
                        pullback_preservation_counterexample_exhaustive(f)
                    } else {
                        pullback_preservation_counterexample(f)
                    };
                    report.checks.push(Check::from_counterexample(
                        format!("{n} preserves pullbacks"),
                        ce.map(|s| Counterexample::cospan(f.source(), s)),
                    ));
                }
            }
        }
        Command::Check(CheckCommand::Nattrans {
            inputs,
            cartesian,
            name,
        }) => {
            let loaded = load(&inputs.files, &guard)?;
            let selected: Vec<_> = loaded
                .lib
                .transformations()
                .iter()
                .filter(|(n, _)| name.as_ref().is_none_or(|want| want == n))
                .collect();
            if selected.is_empty() {
                return Err(Failure::Usage("no matching nattrans documents".into()));
            }
            for (n, t) in selected {
                report
                    .checks
                    .push(Check::pass(format!("{n} is a natural transformation")));
                if *cartesian {
                    report.checks.push(Check::from_counterexample(
                        format!("{n} is cartesian"),
                        cartesian_counterexample(t).map(|alpha| {
                            Counterexample::square(t.codomain(), &t.naturality_square(alpha))
                        }),
                    ));
                }
            }
        }
        Command::Iso(inputs) => {
            let loaded = load(&inputs.files, &guard)?;
            let cats = take::<2>(&loaded, 2)?;
            let (c, d) = (&cats[0], &cats[1]);
            let name = format!("{} is isomorphic to {}", c.name(), d.name());
            match categories_isomorphic(c, d, &guard)? {
                Some(iso) => {
                    report.checks.push(Check::from_bool(name, iso.is_inverse_pair()));
                    report.witnesses.push(Witness::Functor {
                        name: "forward".into(),
                        text: serialize_functor("forward", &iso.forward),
                    });
                    report.witnesses.push(Witness::Functor {
                        name: "backward".into(),
                        text: serialize_functor("backward", &iso.backward),
                    });
                }
                None => report.checks.push(Check::fail(
                    name,
                    Some(Counterexample::mismatch(format!(
                        "no isomorphism between {} ({} objects, {} morphisms) and {} ({} objects, {} morphisms)",
                        c.name(),
                        c.object_count(),
                        c.morphism_count(),
                        d.name(),
                        d.object_count(),
                        d.morphism_count()
                    ))),
                )),
            }
        }
        Command::Ccc(inputs) => {
            let loaded = load(&inputs.files, &guard)?;
            let cats = take::<3>(&loaded, 2)?;
            if !require_pullbacks(report, &cats) {
                return Ok(());
            }
            let w = check_triangles(&cats[0], &cats[1], &guard)?;
            report.checks.extend(w.checks);
            if let Some(c) = cats.get(2) {
                let w = check_hom_iso(&cats[0], &cats[1], c, &guard)?;
                report.checks.extend(w.checks);
            }
        }
    }
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate(_) => "validate",
        Command::Pullbacks(_) => "pullbacks",
        Command::Product(_) => "product",
        Command::Hom(_) => "hom",
        Command::Check(CheckCommand::Functor { .. }) => "check functor",
        Command::Check(CheckCommand::Nattrans { .. }) => "check nattrans",
        Command::Iso(_) => "iso",
        Command::Ccc(_) => "ccc",
    }
}

fn input_files(c: &Command) -> &[PathBuf] {
    match c {
        Command::Validate(i)
        | Command::Pullbacks(i)
        | Command::Product(i)
        | Command::Hom(i)
        | Command::Iso(i)
        | Command::Ccc(i) => &i.files,
        Command::Check(
            CheckCommand::Functor { inputs, .. } | CheckCommand::Nattrans { inputs, .. },
        ) => &inputs.files,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let inputs = input_files(&cli.command)
        .iter()
        .map(|p| p.display().to_string())
        .collect();
    let mut report = Report::new(command_name(&cli.command), inputs);
    if let Err(e) = run(&cli, &mut report) {
        report.error = Some(e.to_string());
    }
    report.finish();
    report.timing_ms = start.elapsed().as_millis() as u64;
    if cli.json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    } else {
        print!("{}", report.render_text());
    }
    if report.verdict == Verdict::Error {
        eprintln!("catpb: {}", report.error.as_deref().unwrap_or("error"));
    }
    ExitCode::from(report.verdict.exit_code() as u8)
}
