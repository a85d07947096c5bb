//! skelkit command line: every analysis as a subcommand, reading graphs
//! from a file or stdin in edge-list or graph6 form, writing human text,
//! JSON, DOT, or CSV. Output is deterministic for a fixed invocation.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skelkit::enumeration::{
    enumerate_graphs_with_threads, enumerate_skeleton_structures, name_of, rank_catalog,
    CatalogEntry,
};
use skelkit::equivalence::{equivalence_classes, Partition};
use skelkit::format::{graph_to_dot, parse_edge_list, parse_graph6, to_graph6};
use skelkit::graph::Graph;
use skelkit::prime_graph::{prime_graph_of_sep, sep_series};
use skelkit::sep_group::{contains, hereditary_witnesses, sep_order, sep_signature, Permutation};
use skelkit::skeleton::complete_skeleton;
use skelkit::spectral::SpectralReport;
use skelkit::Error;

#[derive(Parser)]
#[command(
    name = "skelkit",
    version,
    about = "Structural equivalence, skeletons, and -1 eigenvalue multiplicity for simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural-equivalence classes of the graph
    Classes(GraphArgs),
    /// Order of the group generated by the twin transpositions
    SepOrder(GraphArgs),
    /// Is a permutation (cycle notation) a member of that group?
    SepMember {
        #[command(flatten)]
        graph: GraphArgs,
        /// Permutation in cycle notation, e.g. "(3 4)(1 2)"
        #[arg(long)]
        perm: String,
        /// Also list the sub-permutations the membership implies
        #[arg(long)]
        witnesses: bool,
    },
    /// Complete skeleton: super-nodes with sizes and members
    Skeleton(GraphArgs),
    /// Skeleton structure as a plain graph
    Structure(GraphArgs),
    /// Prime graph of the graph's twin-transposition group
    Primegraph(GraphArgs),
    /// Iterated prime-graph series down to its minimal element
    Series(GraphArgs),
    /// Exact rank of I + A over the rationals
    Rank(GraphArgs),
    /// Multiplicity of the -1 adjacency eigenvalue
    Multiplicity(GraphArgs),
    /// Skeleton correction term lambda
    Lambda(GraphArgs),
    /// All graphs (or skeleton structures) on n vertices up to isomorphism
    Enumerate {
        #[arg(short)]
        n: usize,
        /// Keep only skeleton structures, annotated with rank and lambda
        #[arg(long)]
        skeletons: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Skeleton structures on up to n vertices, grouped by rank
    Catalog {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Input path; stdin when omitted or "-"
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    G6,
}

#[derive(Args)]
#[group(multiple = false)]
struct OutputArgs {
    /// JSON on stdout
    #[arg(long)]
    json: bool,
    /// DOT on stdout
    #[arg(long)]
    dot: bool,
    /// CSV on stdout
    #[arg(long)]
    csv: bool,
}

enum Mode {
    Human,
    Json,
    Dot,
    Csv,
}

impl OutputArgs {
    fn mode(&self) -> Mode {
        if self.json {
            Mode::Json
        } else if self.dot {
            Mode::Dot
        } else if self.csv {
            Mode::Csv
        } else {
            Mode::Human
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Capacity(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_graph(args: &GraphArgs) -> Result<Graph, Error> {
    let text = match &args.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Argument(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    match args.format {
        Format::Edgelist => parse_edge_list(&text),
        Format::G6 => parse_graph6(&text),
    }
}

fn unsupported(mode: &str, command: &str) -> Error {
    Error::Argument(format!("{mode} output is not available for `{command}`"))
}

fn describe_classes(p: &Partition) -> String {
    let mut out = String::new();
    for class in p.classes() {
        let kind = match class.kind() {
            skelkit::equivalence::ClassKind::ConnectedClique => "clique",
            skelkit::equivalence::ClassKind::DisconnectedIndependent => "independent",
            skelkit::equivalence::ClassKind::Singleton => "singleton",
        };
        let members: Vec<String> = class.members().iter().map(ToString::to_string).collect();
        out.push_str(&format!(
            "class of {} ({kind}): {}\n",
            class.size(),
            members.join(" ")
        ));
    }
    out
}

fn threads_from_env() -> usize {
    std::env::var("SKELKIT_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t| t >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map_or(1, usize::from)
                .min(8)
        })
}

fn entry_line(e: &CatalogEntry) -> String {
    match &e.name {
        Some(name) => format!(
            "{}  {}  rank={}  lambda={}",
            e.graph6, name, e.rank, e.lambda
        ),
        None => format!("{}  rank={}  lambda={}", e.graph6, e.rank, e.lambda),
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Classes(args) => {
            let g = read_graph(&args)?;
            let p = equivalence_classes(&g);
            match args.out.mode() {
                Mode::Human => print!("{}", describe_classes(&p)),
                Mode::Json => println!("{}", p.to_json()),
                Mode::Dot => print!("{}", graph_to_dot(&g, Some(&p))),
                Mode::Csv => return Err(unsupported("csv", "classes")),
            }
        }
        Command::SepOrder(args) => {
            let g = read_graph(&args)?;
            let sig = sep_signature(&equivalence_classes(&g));
            let order = sep_order(&sig);
            match args.out.mode() {
                Mode::Human => println!("|SEP| = {order}"),
                Mode::Json => println!(
                    "{}",
                    serde_json::json!({ "sizes": sig.sizes(), "order": order.to_string() })
                ),
                _ => return Err(unsupported("dot/csv", "sep-order")),
            }
        }
        Command::SepMember {
            graph,
            perm,
            witnesses,
        } => {
            let g = read_graph(&graph)?;
            let p = equivalence_classes(&g);
            let sigma = Permutation::parse_cycles(g.n(), &perm)?;
            let member = contains(&p, &sigma)?;
            let witness_list = if witnesses && member {
                hereditary_witnesses(&p, &sigma)?
            } else {
                Vec::new()
            };
            match graph.out.mode() {
                Mode::Human => {
                    println!("member: {member}");
                    for w in &witness_list {
                        println!("  implies {}: {}", w.perm.to_cycle_string(), w.member);
                    }
                }
                Mode::Json => {
                    let ws: Vec<serde_json::Value> = witness_list
                        .iter()
                        .map(|w| {
                            serde_json::json!({
                                "perm": w.perm.to_cycle_string(),
                                "member": w.member,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "perm": sigma.to_cycle_string(),
                            "member": member,
                            "witnesses": ws,
                        })
                    );
                }
                _ => return Err(unsupported("dot/csv", "sep-member")),
            }
        }
        Command::Skeleton(args) => {
            let g = read_graph(&args)?;
            let skel = complete_skeleton(&g);
            match args.out.mode() {
                Mode::Human => {
                    for node in skel.nodes() {
                        let members: Vec<String> =
                            node.members().iter().map(ToString::to_string).collect();
                        println!("K_{}: {}", node.size(), members.join(" "));
                    }
                    for (a, b) in skel.edges() {
                        println!("edge {a} -- {b}");
                    }
                }
                Mode::Json => println!("{}", skel.to_json()),
                Mode::Dot => print!("{}", skel.to_dot()),
                Mode::Csv => return Err(unsupported("csv", "skeleton")),
            }
        }
        Command::Structure(args) => {
            let g = read_graph(&args)?;
            let s = complete_skeleton(&g).structure();
            match args.out.mode() {
                Mode::Human => {
                    println!("n = {}, m = {}, graph6 = {}", s.n(), s.m(), to_graph6(&s)?);
                    for (u, v) in s.edges() {
                        println!("{u} {v}");
                    }
                }
                Mode::Json => println!("{}", serde_json::json!({ "n": s.n(), "edges": s.edges() })),
                Mode::Dot => print!("{}", graph_to_dot(&s, None)),
                Mode::Csv => return Err(unsupported("csv", "structure")),
            }
        }
        Command::Primegraph(args) => {
            let g = read_graph(&args)?;
            let pg = prime_graph_of_sep(&sep_signature(&equivalence_classes(&g)));
            match args.out.mode() {
                Mode::Human => {
                    let vs: Vec<String> = pg.vertices().iter().map(ToString::to_string).collect();
                    println!("vertices: {}", vs.join(" "));
                    for (p, q) in pg.edges() {
                        println!("edge {p} -- {q}");
                    }
                }
                Mode::Json => println!("{}", pg.to_json()),
                Mode::Dot => print!("{}", pg.to_dot()),
                Mode::Csv => return Err(unsupported("csv", "primegraph")),
            }
        }
        Command::Series(args) => {
            let g = read_graph(&args)?;
            let series = sep_series(&g);
            match args.out.mode() {
                Mode::Human => {
                    println!("length = {}", series.length());
                    for (i, step) in series.steps().iter().enumerate() {
                        let vs: Vec<String> =
                            step.vertices().iter().map(ToString::to_string).collect();
                        let es: Vec<String> = step
                            .edges()
                            .iter()
                            .map(|(p, q)| format!("{p}-{q}"))
                            .collect();
                        println!(
                            "step {}: vertices {{{}}} edges {{{}}}",
                            i + 1,
                            vs.join(", "),
                            es.join(", ")
                        );
                    }
                }
                Mode::Json => println!("{}", series.to_json()),
                _ => return Err(unsupported("dot/csv", "series")),
            }
        }
        Command::Rank(args) => {
            let g = read_graph(&args)?;
            let report = SpectralReport::compute(&g);
            match args.out.mode() {
                Mode::Human => println!("rank(I+A) = {}", report.rank_i_plus_a),
                Mode::Json => println!("{}", report.to_json()),
                _ => return Err(unsupported("dot/csv", "rank")),
            }
        }
        Command::Multiplicity(args) => {
            let g = read_graph(&args)?;
            let report = SpectralReport::compute(&g);
            match args.out.mode() {
                Mode::Human => println!(
                    "-1 is an eigenvalue with multiplicity {}",
                    report.minus_one_multiplicity
                ),
                Mode::Json => println!("{}", report.to_json()),
                _ => return Err(unsupported("dot/csv", "multiplicity")),
            }
        }
        Command::Lambda(args) => {
            let g = read_graph(&args)?;
            let report = SpectralReport::compute(&g);
            match args.out.mode() {
                Mode::Human => println!("lambda = {}", report.lambda),
                Mode::Json => println!("{}", report.to_json()),
                _ => return Err(unsupported("dot/csv", "lambda")),
            }
        }
        Command::Enumerate { n, skeletons, out } => {
            if skeletons {
                let entries = enumerate_skeleton_structures(n)?;
                match out.mode() {
                    Mode::Human => {
                        for e in &entries {
                            println!("{}", entry_line(e));
                        }
                    }
                    Mode::Json => println!("{}", serde_json::to_string(&entries).unwrap()),
                    Mode::Csv => {
                        println!("graph6,name,rank,lambda");
                        for e in &entries {
                            println!("{}", e.csv_row());
                        }
                    }
                    Mode::Dot => return Err(unsupported("dot", "enumerate")),
                }
            } else {
                let forms = enumerate_graphs_with_threads(n, threads_from_env())?;
                match out.mode() {
                    Mode::Human => {
                        for form in &forms {
                            match name_of(*form) {
                                Some(name) => println!("{}  {}", form.to_graph6(), name),
                                None => println!("{}", form.to_graph6()),
                            }
                        }
                    }
                    Mode::Json => {
                        let codes: Vec<String> = forms.iter().map(|f| f.to_graph6()).collect();
                        println!("{}", serde_json::to_string(&codes).unwrap());
                    }
                    _ => return Err(unsupported("dot/csv", "enumerate without --skeletons")),
                }
            }
        }
        Command::Catalog { n, out } => {
            let by_rank = rank_catalog(n)?;
            match out.mode() {
                Mode::Human => {
                    for (rank, entries) in &by_rank {
                        let labels: Vec<String> = entries
                            .iter()
                            .map(|e| e.name.clone().unwrap_or_else(|| e.graph6.clone()))
                            .collect();
                        println!("rank {rank}: {}", labels.join(", "));
                    }
                }
                Mode::Json => {
                    let map: serde_json::Map<String, serde_json::Value> = by_rank
                        .iter()
                        .map(|(rank, entries)| {
                            (rank.to_string(), serde_json::to_value(entries).unwrap())
                        })
                        .collect();
                    println!("{}", serde_json::Value::Object(map));
                }
                Mode::Csv => {
                    println!("rank,graph6,name,lambda");
                    for (rank, entries) in &by_rank {
                        for e in entries {
                            println!(
                                "{rank},{},{},{}",
                                e.graph6,
                                e.name.as_deref().unwrap_or(""),
                                e.lambda
                            );
                        }
                    }
                }
                Mode::Dot => return Err(unsupported("dot", "catalog")),
            }
        }
    }
    Ok(())
}
