use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use idom::canon::MAX_CEILING;
use idom::classifier::classify_with_i;
use idom::enumerator::{
    campaign_characterization, campaign_conjecture, campaign_fcubic, campaign_half_bound,
    enumerate_connected_cubic_with, enumerate_connected_subcubic_with, CampaignConfig,
    CampaignReport, DEFAULT_CEILING,
};
use idom::halver::{Case, HalverConfig};
use idom::io::{read_graphs, write_graph, Format};
use idom::solver::{min_id_set, oracle_min_id_set};
use idom::{generate, half_bound_id_set, FamilySpec, Graph};

#[derive(Parser, Debug)]
#[command(
    name = "idom",
    version,
    about = "Independent domination in subcubic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    G6,
    El,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::G6 => Format::Graph6,
            FormatArg::El => Format::EdgeList,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CampaignName {
    HalfBound,
    Characterization,
    Conjecture,
    Fcubic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SkipArg {
    LeafOnCycle,
    TwoDegreeTwo,
    TriangleEar,
}

impl From<SkipArg> for Case {
    fn from(s: SkipArg) -> Case {
        match s {
            SkipArg::LeafOnCycle => Case::LeafOnCycle,
            SkipArg::TwoDegreeTwo => Case::TwoDegreeTwo,
            SkipArg::TriangleEar => Case::TriangleEar,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a family member from a spec such as `gcubic:k=2`.
    Gen {
        spec: String,
        #[arg(short, long)]
        output: Option<String>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Print `i=<k>` and a minimum ID-set for each input graph.
    Solve {
        #[arg(default_value = "-")]
        input: String,
        /// Use the exhaustive maximal-independent-set backend.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Build an ID-set within the half bound.
    Halver {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Name the extremal class of each input graph.
    Classify {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Write every connected subcubic (or cubic) graph of order K as graph6.
    Enumerate {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        cubic: bool,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Run an exhaustive verification campaign.
    Campaign {
        #[arg(value_enum)]
        name: CampaignName,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        /// Write the summary and the tab-separated records here.
        #[arg(long)]
        report: Option<String>,
        #[arg(long)]
        workers: Option<usize>,
        /// Run the half-bound campaign with one halver reduction disabled.
        #[arg(long, value_enum)]
        halver_skip: Option<SkipArg>,
    },
}

/// Failure modes of a run, mapped to exit codes.
enum Failure {
    /// Usage or input problem: exit 2.
    Usage(String),
    /// A campaign found violations: exit 1.
    Violations,
}

impl From<idom::Error> for Failure {
    fn from(e: idom::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn ceiling() -> Run<usize> {
    match std::env::var("IDOM_MAX_N") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n <= MAX_CEILING)
            .ok_or_else(|| {
                Failure::Usage(format!(
                    "IDOM_MAX_N={v:?} is not an order between 0 and {MAX_CEILING}"
                ))
            }),
        Err(_) => Ok(DEFAULT_CEILING),
    }
}

fn read_input(input: &str, format: Option<FormatArg>) -> Run<Vec<Graph>> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(input)
            .map_err(|e| Failure::Usage(format!("cannot read {input:?}: {e}")))?
    };
    let format = format
        .map(Format::from)
        .or_else(|| Format::from_extension(input))
        .unwrap_or_else(|| Format::sniff(&text));
    let graphs = read_graphs(&text, format)?;
    if graphs.is_empty() {
        return Err(Failure::Usage(format!("no graph found in {input:?}")));
    }
    Ok(graphs)
}

fn emit(output: Option<&str>, text: &str) -> Run<()> {
    match output {
        Some(path) if path != "-" => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {path:?}: {e}")))
        }
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|e| Failure::Usage(format!("cannot write standard output: {e}")))
        }
    }
}

fn finish_campaign(report: &CampaignReport, path: Option<&str>) -> Run<()> {
    print!("{}", report.render_text());
    if let Some(path) = path {
        let body = format!("{}\n{}", report.render_text(), report.render_records());
        fs::write(path, body).map_err(|e| Failure::Usage(format!("cannot write {path:?}: {e}")))?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Violations)
    }
}

fn run(cli: Cli) -> Run<()> {
    match cli.command {
        Command::Gen {
            spec,
            output,
            format,
        } => {
            let spec: FamilySpec = spec.parse()?;
            let g = generate(&spec)?;
            let format = format
                .map(Format::from)
                .or_else(|| output.as_deref().and_then(Format::from_extension))
                .unwrap_or(Format::Graph6);
            emit(output.as_deref(), &write_graph(&g.graph, format))
        }
        Command::Solve {
            input,
            oracle,
            format,
        } => {
            let mut out = String::new();
            for g in read_input(&input, format)? {
                let cert = if oracle {
                    oracle_min_id_set(&g)?
                } else {
                    min_id_set(&g)?
                };
                out += &format!("i={}\nset={}\n", cert.size, cert.set);
            }
            emit(None, &out)
        }
        Command::Halver { input, format } => {
            let mut out = String::new();
            for g in read_input(&input, format)? {
                let cert = half_bound_id_set(&g)?;
                out += &format!(
                    "set={}\nsize={}\nbudget={}\n",
                    cert.set,
                    cert.size,
                    g.n() / 2
                );
            }
            emit(None, &out)
        }
        Command::Classify { input, format } => {
            let mut out = String::new();
            for g in read_input(&input, format)? {
                let (class, _) = classify_with_i(&g)?;
                out += &format!("{class}\n");
            }
            emit(None, &out)
        }
        Command::Enumerate { n, cubic, output } => {
            let ceiling = ceiling()?;
            if cubic && n % 2 == 1 {
                eprintln!("warning: no cubic graph has odd order {n}");
            }
            let graphs = if cubic {
                enumerate_connected_cubic_with(n, ceiling)?
            } else {
                enumerate_connected_subcubic_with(n, ceiling)?
            };
            let text: String = graphs
                .iter()
                .map(|g| write_graph(g, Format::Graph6))
                .collect();
            emit(output.as_deref(), &text)
        }
        Command::Campaign {
            name,
            max_n,
            min_n,
            report,
            workers,
            halver_skip,
        } => {
            let ceiling = ceiling()?;
            let cfg = CampaignConfig {
                min_n,
                max_n,
                ceiling,
                workers,
                halver: HalverConfig {
                    skip: halver_skip.map(Case::from),
                    exact_base: None,
                },
            };
            let result = match name {
                CampaignName::HalfBound => campaign_half_bound(&cfg)?,
                CampaignName::Characterization => campaign_characterization(&cfg)?,
                CampaignName::Conjecture => campaign_conjecture(&cfg)?,
                CampaignName::Fcubic => {
                    if max_n < 16 {
                        return Err(Failure::Usage(format!(
                            "fcubic members have order 8k with k >= 2; --max-n {max_n} is below 16"
                        )));
                    }
                    campaign_fcubic(max_n / 8)?
                }
            };
            finish_campaign(&result, report.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("idom: {msg}");
            ExitCode::from(2)
        }
    }
}
