//! `braidlink` — command-line front end.
//!
//! Exit status: 0 on success, 1 on a domain error (message on stderr), 2 on
//! a usage error (synopsis on stderr).

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braidlink::braid::{conjugate_test, left_normal_form, parse_braid, words_equal, BraidWord, ConjugacyBudget};
use braidlink::census::{essential_witnesses, run_census, CensusConfig, Panel};
use braidlink::closure::{close, close_mixed, is_essential, Ambient};
use braidlink::dynamics::{verify, VerifyConfig};
use braidlink::mixed::MixedBraidWord;
use braidlink::quandle::{coloring_count, named_quandle, FiniteQuandle};
use braidlink::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "braidlink", version, about = "Braids, closed-braid links and their invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AmbientArg {
    Sphere3,
    #[value(name = "solid-torus", alias = "solid_torus")]
    SolidTorus,
}

impl From<AmbientArg> for Ambient {
    fn from(a: AmbientArg) -> Ambient {
        match a {
            AmbientArg::Sphere3 => Ambient::Sphere3,
            AmbientArg::SolidTorus => Ambient::SolidTorus,
        }
    }
}

#[derive(Debug, Args)]
struct Output {
    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Left normal form, printed as a word.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Strand count for words given without a `Bn:` header.
        #[arg(long)]
        strands: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Decide equality of two braids.
    Equal {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        strands: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Decide conjugacy of two braids, with witness or certificate.
    Conj {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        strands: Option<usize>,
        /// Super summit elements explored before answering "undecided".
        #[arg(long, default_value_t = ConjugacyBudget::default().max_nodes)]
        max_nodes: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Components, winding and linking of the closure.
    Close {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: Option<usize>,
        /// In the solid torus the word is a `B1,n:` mixed braid or a braid on
        /// the moving strands.
        #[arg(long, value_enum, default_value_t = AmbientArg::Sphere3)]
        ambient: AmbientArg,
        #[command(flatten)]
        output: Output,
    },
    /// Number of quandle colorings of the closure.
    Color {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        strands: Option<usize>,
        /// Named quandle: d<n>, dihedral<n>, t<n>, trivial<n>.
        #[arg(long, conflicts_with_all = ["quandle_file", "panel"])]
        quandle: Option<String>,
        /// Quandle table file: order on the first line, then one row per element.
        #[arg(long, value_name = "PATH", conflicts_with = "panel")]
        quandle_file: Option<PathBuf>,
        /// Comma-separated named quandles.
        #[arg(long)]
        panel: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate, fingerprint and merge closed braids.
    Census {
        /// key=value configuration file; flags override it.
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
        #[arg(long, value_enum)]
        ambient: Option<AmbientArg>,
        #[arg(long)]
        min_strands: Option<usize>,
        /// Largest strand count (moving strands in the solid torus).
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        panel: Option<String>,
        #[arg(long)]
        max_words: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Solid-torus braids with closures winding 1..=k times.
    Witness {
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Numerical checks of the model flow.
    DynamicsVerify {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        /// Fixed-point residual tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn braid(text: &str, strands: Option<usize>) -> Result<BraidWord, Error> {
    match strands {
        Some(n) if !text.trim_start().starts_with('B') => parse_braid(text, n),
        _ => text.parse(),
    }
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Normalize { word, strands, output } => {
            let w = braid(&word, strands)?;
            let nf = left_normal_form(&w);
            let text = match output.format {
                Format::Text => format!("{}\n", nf.to_word()),
                Format::Records => format!(
                    "word={w}\tnormal_form={}\tinfimum={}\tcanonical_length={}\n",
                    nf.to_word(),
                    nf.infimum(),
                    nf.canonical_length()
                ),
            };
            emit(&output, &text)
        }
        Command::Equal { left, right, strands, output } => {
            let (u, v) = (braid(&left, strands)?, braid(&right, strands)?);
            let eq = words_equal(&u, &v)?;
            let text = match output.format {
                Format::Text => format!("{}\n", if eq { "equal" } else { "not equal" }),
                Format::Records => format!("left={u}\tright={v}\tequal={eq}\n"),
            };
            emit(&output, &text)
        }
        Command::Conj { left, right, strands, max_nodes, output } => {
            let (u, v) = (braid(&left, strands)?, braid(&right, strands)?);
            let verdict = conjugate_test(&u, &v, ConjugacyBudget { max_nodes })?;
            let text = match output.format {
                Format::Text => format!("{verdict}\n"),
                Format::Records => format!("left={u}\tright={v}\tverdict={verdict}\n"),
            };
            emit(&output, &text)
        }
        Command::Close { word, strands, ambient, output } => {
            let link = match Ambient::from(ambient) {
                Ambient::Sphere3 => close(&braid(&word, strands)?),
                Ambient::SolidTorus => {
                    let mixed = if word.contains(',') {
                        word.parse::<MixedBraidWord>()?
                    } else {
                        MixedBraidWord::from_moving(1, &braid(&word, strands)?)
                    };
                    close_mixed(&mixed)?
                }
            };
            let text = match output.format {
                Format::Text => format!("{link}\n"),
                Format::Records => format!("word={}\t{}\n", word.trim(), link.to_string().replace(' ', "\t")),
            };
            emit(&output, &text)
        }
        Command::Color { word, strands, quandle, quandle_file, panel, output } => {
            let w = braid(&word, strands)?;
            let quandles: Vec<(String, FiniteQuandle)> = if let Some(path) = quandle_file {
                let q: FiniteQuandle = fs::read_to_string(&path)?.parse()?;
                vec![(path.display().to_string(), q)]
            } else if let Some(p) = panel {
                let panel: Panel = p.parse()?;
                panel
                    .names()
                    .into_iter()
                    .map(|n| Ok((n.to_string(), named_quandle(n)?)))
                    .collect::<Result<_, Error>>()?
            } else {
                let name = quandle.unwrap_or_else(|| "d3".to_string());
                vec![(name.clone(), named_quandle(&name)?)]
            };
            let mut text = String::new();
            for (name, q) in &quandles {
                let count = coloring_count(&w, q)?;
                text += &match (output.format, quandles.len()) {
                    (Format::Text, 1) => format!("{count}\n"),
                    (Format::Text, _) => format!("{name} {count}\n"),
                    (Format::Records, _) => format!("word={w}\tquandle={name}\tcolorings={count}\n"),
                };
            }
            emit(&output, &text)
        }
        Command::Census {
            config,
            ambient,
            min_strands,
            strands,
            max_length,
            depth,
            panel,
            max_words,
            output,
        } => {
            let mut cfg = match config {
                Some(path) => fs::read_to_string(&path)?.parse()?,
                None => CensusConfig::default(),
            };
            if let Some(a) = ambient {
                cfg.ambient = a.into();
            }
            if let Some(n) = min_strands {
                cfg.min_strands = n;
            }
            if let Some(n) = strands {
                cfg.max_strands = n;
            }
            if let Some(n) = max_length {
                cfg.max_length = n;
            }
            if let Some(n) = depth {
                cfg.depth = n;
            }
            if let Some(p) = panel {
                cfg.panel = p.parse()?;
            }
            if let Some(n) = max_words {
                cfg.max_words = n;
            }
            cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            let report = run_census(&cfg)?;
            let text = match output.format {
                Format::Records => report.to_string(),
                Format::Text => {
                    let mut t = format!(
                        "# census {}\nwords {} of {} ({})\nclasses {}\n",
                        report.config,
                        report.records.len(),
                        report.expected_words,
                        if report.complete { "complete" } else { "incomplete" },
                        report.class_count()
                    );
                    t += &format!("{:<16} {:>6} {:>7}  fingerprint\n", "bucket", "words", "classes");
                    for b in report.buckets() {
                        t += &format!("{:<16} {:>6} {:>7}  {}\n", b.fingerprint.hash(), b.words, b.classes, b.fingerprint);
                    }
                    t
                }
            };
            emit(&output, &text)
        }
        Command::Witness { k, output } => {
            if k == 0 {
                return Err(Failure::Usage("k must be at least 1".into()));
            }
            let mut text = String::new();
            for w in essential_witnesses(k) {
                let link = close_mixed(&w)?;
                let essential = is_essential(&link)?;
                text += &match output.format {
                    Format::Text => format!("{w}  winding={} essential={essential}\n", link.winding()[0]),
                    Format::Records => format!(
                        "word={w}\t{}\tessential={essential}\n",
                        link.to_string().replace(' ', "\t")
                    ),
                };
            }
            emit(&output, &text)
        }
        Command::DynamicsVerify { seed, samples, tol, output } => {
            let mut cfg = VerifyConfig::default();
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(n) = samples {
                cfg.samples = n;
            }
            if let Some(t) = tol {
                if !(t > 0.0) {
                    return Err(Failure::Usage(format!("--tol must be positive, got {t}")));
                }
                cfg.residual_tol = t;
            }
            let report = verify(&cfg);
            let text = match output.format {
                Format::Text => format!("{report}\n"),
                Format::Records => {
                    let rendered = report.to_string();
                    let mut t = format!("{}\n", rendered.lines().next().unwrap_or_default());
                    for c in &report.checks {
                        t += &format!("check={}\tvalue={:e}\tbound={}\tpass={}\n", c.name, c.value, c.bound, c.pass);
                    }
                    t
                }
            };
            emit(&output, &text)?;
            if report.all_pass() {
                Ok(())
            } else {
                Err(Failure::Domain("dynamics verification failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            eprintln!("run `braidlink --help` for the synopsis");
            ExitCode::from(2)
        }
    }
}
