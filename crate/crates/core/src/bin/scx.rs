use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use scx::generators::{GeneratorSpec, GENERATOR_NAMES};
use scx::graph::{independent_paths, skeleton, vertex_connectivity, ConnectivityCertificate};
use scx::manifold::{
    find_shelling, is_shelling_order, star_seed, z2_betti, z2_relative_betti,
    DEFAULT_SHELLING_BUDGET,
};
use scx::verify::{analyze, default_corpus, report_json, verify_corpus, PropertyId, Verdict};
use scx::{Error, SimplicialComplex};

// A closed pipe (`scx gen ... | head`) is not an error worth a panic.
macro_rules! say {
    ($($t:tt)*) => {{ let _ = writeln!(std::io::stdout(), $($t)*); }};
}

macro_rules! say_raw {
    ($($t:tt)*) => {{ let _ = write!(std::io::stdout(), $($t)*); }};
}

#[derive(Parser)]
#[command(
    name = "scx",
    version,
    about = "Banner complexes and graph connectivity of pseudomanifolds"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of a complex.
    Analyze { file: PathBuf },
    /// Write a generated complex in .scx format.
    Gen {
        /// Generator name, optionally prefixed by cone:, susp: or tilde:. `list` prints all names.
        name: String,
        params: Vec<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check properties over files or the default corpus.
    Verify {
        #[arg(long = "property", value_name = "ID")]
        properties: Vec<String>,
        #[arg(long)]
        corpus: bool,
        files: Vec<PathBuf>,
    },
    /// Reduced GF(2) Betti numbers.
    Homology {
        file: PathBuf,
        /// Relative to a subcomplex, matched by vertex label.
        #[arg(long, value_name = "SUBFILE", conflicts_with = "link")]
        relative: Option<PathBuf>,
        /// Of the link of a face, given as space-separated labels.
        #[arg(long, value_name = "VERTICES")]
        link: Option<String>,
    },
    /// Search for a shelling order.
    Shelling {
        file: PathBuf,
        /// Start with a shelling of the star of this vertex.
        #[arg(long, value_name = "VERTEX")]
        seed_star: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SHELLING_BUDGET)]
        budget: u64,
    },
    /// Vertex connectivity of the 1-skeleton.
    Connectivity {
        file: PathBuf,
        /// List a maximum family of independent paths between two vertices.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        paths: Option<Vec<String>>,
    },
}

/// Exit status 1: a check failed.
const CHECK_FAILED: u8 = 1;
/// Exit status 2: bad input or I/O.
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("scx: {e}");
            return ExitCode::from(USAGE);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("scx: {e}");
            ExitCode::from(USAGE)
        }
    }
}

fn load(path: &Path) -> Result<SimplicialComplex, Error> {
    let c = SimplicialComplex::read_file(path)?;
    if c.absorbed() > 0 {
        eprintln!(
            "scx: {}: {} non-maximal facet(s) absorbed",
            path.display(),
            c.absorbed()
        );
    }
    Ok(c)
}

fn display_name(path: &Path) -> String {
    path.display().to_string()
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Analyze { file } => {
            let c = load(file)?;
            let r = analyze(&display_name(file), &c)?;
            if cli.json {
                say!("{}", report_json(&r));
            } else {
                let opt = |v: Option<bool>| v.map_or("n/a".to_owned(), |b| b.to_string());
                say!("name                 {}", r.name);
                say!("dim                  {}", r.dim);
                say!("f-vector             {:?}", r.f_vector);
                say!("closed pseudomfd     {}", r.closed_pseudomanifold);
                say!("normal               {}", r.normal);
                say!("homology manifold    {}", r.homology_manifold);
                say!("homology sphere      {}", r.homology_sphere);
                say!("flag                 {}", opt(r.flag));
                say!("strongly banner      {}", opt(r.strongly_banner));
                say!("banner               {}", opt(r.banner));
                say!(
                    "banner number        {}",
                    r.banner_number
                        .map_or("undefined".to_owned(), |b| b.to_string())
                );
                say!("connectivity         {}", r.connectivity);
                if let Some(b) = r.bound {
                    say!("2d - b               {b}");
                }
                say!("bound satisfied      {}", opt(r.bound_satisfied));
            }
            Ok(if r.bound_satisfied == Some(false) {
                CHECK_FAILED
            } else {
                0
            })
        }
        Command::Gen {
            name,
            params,
            output,
        } => {
            if name == "list" {
                for n in GENERATOR_NAMES {
                    say!("{n}");
                }
                return Ok(0);
            }
            let spec = GeneratorSpec::parse(name, params)?;
            let c = spec.generate()?;
            match output {
                Some(path) => c.write_file(path)?,
                None => say_raw!("{}", c.to_scx()),
            }
            Ok(0)
        }
        Command::Verify {
            properties,
            corpus,
            files,
        } => {
            let properties = properties
                .iter()
                .map(|p| p.parse::<PropertyId>())
                .collect::<Result<Vec<_>, _>>()?;
            let mut inputs = Vec::new();
            let mut io_errors = Vec::new();
            if *corpus || files.is_empty() {
                inputs.extend(default_corpus());
            }
            for f in files {
                match load(f) {
                    Ok(c) => inputs.push((display_name(f), c)),
                    Err(e) => io_errors.push((display_name(f), e.to_string())),
                }
            }
            let filter = (!properties.is_empty()).then_some(properties.as_slice());
            let mut summary = verify_corpus(&inputs, filter);
            summary.errors.extend(io_errors);
            summary.errors.sort();
            if cli.json {
                let rows: Vec<_> = summary
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "name": r.name,
                            "property": r.result.property,
                            "verdict": r.result.verdict,
                            "reason": r.result.reason,
                            "counterexample": r.result.counterexample,
                        })
                    })
                    .collect();
                let errors: Vec<_> = summary
                    .errors
                    .iter()
                    .map(|(n, m)| json!({"name": n, "error": m}))
                    .collect();
                let out = json!({
                    "pass": summary.count(Verdict::Pass),
                    "fail": summary.count(Verdict::Fail),
                    "skip": summary.count(Verdict::Skip),
                    "results": rows,
                    "errors": errors,
                });
                say!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                for r in &summary.rows {
                    say_raw!(
                        "{:<32} {:<18} {:<4}  {}",
                        r.name,
                        r.result.property,
                        r.result.verdict,
                        r.result.reason
                    );
                    if let Some(ce) = &r.result.counterexample {
                        if !ce.labels.is_empty() {
                            say_raw!(" [{}]", ce.labels.join(" "));
                        }
                    }
                    say!();
                }
                for (name, msg) in &summary.errors {
                    say!("{name:<32} error              {msg}");
                }
                say!(
                    "{} pass, {} fail, {} skip, {} error(s)",
                    summary.count(Verdict::Pass),
                    summary.count(Verdict::Fail),
                    summary.count(Verdict::Skip),
                    summary.errors.len()
                );
            }
            Ok(if summary.count(Verdict::Fail) > 0 {
                CHECK_FAILED
            } else if !summary.errors.is_empty() {
                USAGE
            } else {
                0
            })
        }
        Command::Homology {
            file,
            relative,
            link,
        } => {
            let c = load(file)?;
            let betti = match (relative, link) {
                (Some(sub), _) => z2_relative_betti(&c, Some(&load(sub)?))?,
                (None, Some(face)) => {
                    let labels: Vec<&str> = face.split_whitespace().collect();
                    let tau = c.face_of(&labels)?;
                    z2_betti(&c.link(&tau)?)
                }
                (None, None) => z2_betti(&c),
            };
            if cli.json {
                say!("{}", serde_json::to_string_pretty(&betti).expect("json"));
            } else {
                let values: Vec<String> = betti.values.iter().map(|b| b.to_string()).collect();
                say!("{:?} ({})", betti.kind, values.join(", "));
            }
            Ok(0)
        }
        Command::Shelling {
            file,
            seed_star,
            budget,
        } => {
            let c = load(file)?;
            let seed = match seed_star {
                Some(x) => {
                    let x = c.vertex(x)?;
                    match star_seed(&c, x, *budget)? {
                        Some(s) => Some(s),
                        None => return Err(Error::BadSeed("star is not shellable".into())),
                    }
                }
                None => None,
            };
            let order = find_shelling(&c, seed.as_deref(), *budget)?;
            let labelled: Option<Vec<Vec<String>>> = order
                .as_ref()
                .map(|o| o.facets().iter().map(|f| c.face_labels(f)).collect());
            if cli.json {
                say!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "shelling": labelled })).expect("json")
                );
            } else {
                match &labelled {
                    Some(facets) => facets.iter().for_each(|f| say!("{}", f.join(" "))),
                    None => say!("not shellable"),
                }
            }
            if let Some(o) = &order {
                debug_assert!(is_shelling_order(&c, o.facets()));
            }
            Ok(0)
        }
        Command::Connectivity { file, paths } => {
            let c = load(file)?;
            let g = skeleton(&c);
            let name = |i: usize| c.label(scx::VertexId::from_index(i)).to_owned();
            if let Some(pair) = paths {
                let u = c.vertex(&pair[0])?.index();
                let v = c.vertex(&pair[1])?.index();
                let family = independent_paths(&g, u, v)?;
                let labelled: Vec<Vec<String>> = family
                    .paths
                    .iter()
                    .map(|p| p.iter().map(|&w| name(w)).collect())
                    .collect();
                if cli.json {
                    let out = json!({ "u": pair[0], "v": pair[1], "count": labelled.len(), "paths": labelled });
                    say!("{}", serde_json::to_string_pretty(&out).expect("json"));
                } else {
                    say!("{} independent paths", labelled.len());
                    labelled.iter().for_each(|p| say!("{}", p.join(" ")));
                }
                return Ok(0);
            }
            let k = vertex_connectivity(&g);
            let cut: Option<Vec<String>> = match &k.certificate {
                ConnectivityCertificate::Cut(cut) => {
                    Some(cut.vertices.iter().map(|&w| name(w)).collect())
                }
                _ => None,
            };
            if cli.json {
                let out = json!({ "connectivity": k.kappa, "complete": matches!(k.certificate, ConnectivityCertificate::Complete), "cut": cut });
                say!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                say!("connectivity {}", k.kappa);
                match cut {
                    Some(cut) => say!("minimum cut {}", cut.join(" ")),
                    None if matches!(k.certificate, ConnectivityCertificate::Complete) => {
                        say!("complete graph")
                    }
                    None => {}
                }
            }
            Ok(0)
        }
    }
}
