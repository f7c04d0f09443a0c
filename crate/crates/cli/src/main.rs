//! `graphgroups`: command-line front end.
//!
//! Reports are `key: value` lines on stdout. Exit status: 0 computed,
//! 1 negative answer to a yes/no question, 2 usage or input error,
//! 3 a work budget (Dehn steps, coding size, prime range) ran out,
//! 4 the automorphism checker and its oracle disagree.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use graphgroups::coding::{
    oracle_aut_extends, sigma_ns_nonempty, CodingTable, PartialMap, DEFAULT_MAX_CODE,
};
use graphgroups::graphrel::{
    automorphisms, graph_iso, induced_embeds, is_combinatorial_tree, DEFAULT_MAX_N,
};
use graphgroups::presentation::DEFAULT_DEHN_BUDGET;
use graphgroups::randomgraph::{adjacent, embed_graph};
use graphgroups::williams::{
    aut_canonical_check, default_conjugator_bound, is_homomorphism, iso_search,
};
use graphgroups::{relators_from_graph, Error, GeneratorMap, Graph, Presentation, Word};

#[derive(Parser, Debug)]
#[command(
    name = "graphgroups",
    version,
    about = "Small-cancellation groups built from graphs"
)]
struct Cli {
    /// Coding enumeration bound.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CODE, value_parser = clap::value_parser!(u64).range(1..))]
    max_code: u64,
    /// Conjugator length bound for automorphism searches (default: derived from the input).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    conj_bound: Option<u64>,
    /// Dehn reduction step budget.
    #[arg(long, global = true, default_value_t = DEFAULT_DEHN_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    dehn_budget: u64,
    /// Largest graph accepted by the brute-force commands.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N as u64, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Defining relators of G_T and the size of their symmetrization.
    Relators { graph: PathBuf },
    /// Check the C'(1/6) condition for the symmetrized relators.
    CheckC16 { graph: PathBuf },
    /// Solve the word problem by Dehn's algorithm.
    Wp { graph: PathBuf, word: String },
    /// Order of an element.
    Order { graph: PathBuf, word: String },
    /// Dump the element coding up to --max-code.
    Code { graph: PathBuf },
    /// CSV of the coded operation on codes up to --max-code.
    StarTable { graph: PathBuf },
    /// Decide whether a partial map on codes extends to an automorphism.
    AutExtend {
        graph: PathBuf,
        partial_map: PathBuf,
        /// Cross-check against the brute-force canonical-form oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Least induced embedding of T into S.
    EmbedGraph { t: PathBuf, s: PathBuf },
    /// Isomorphism of T and S, verified on the groups.
    GraphIso { t: PathBuf, s: PathBuf },
    /// Check that generator images (`<i> <word>` lines) define a homomorphism G_T -> G_S.
    HomCheck {
        t: PathBuf,
        s: PathBuf,
        map: PathBuf,
    },
    /// Adjacency in the prime-divisibility random graph.
    RadoAdj { m: u64, n: u64 },
    /// Greedy embedding of a graph into the random graph.
    RadoEmbed { graph: PathBuf },
    /// Whether the graph has no nontrivial automorphism.
    Rigid { graph: PathBuf },
    /// Whether the graph is connected and acyclic.
    Tree { graph: PathBuf },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

struct Report {
    lines: Vec<String>,
    negative: bool,
}

impl Report {
    fn new() -> Report {
        Report {
            lines: Vec::new(),
            negative: false,
        }
    }

    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        self.lines.push(format!("{key}: {value}"));
    }

    fn answer(&mut self, key: &str, yes: bool) {
        self.kv(key, yes);
        self.negative = !yes;
    }
}

struct Config {
    max_code: u64,
    conj_bound: Option<usize>,
    dehn_budget: usize,
    max_n: usize,
}

impl Config {
    fn graph(&self, path: &Path) -> Result<Graph, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let g: Graph = text.parse()?;
        if g.n() > self.max_n {
            return Err(Failure::Usage(format!(
                "{}: {} vertices exceeds --max-n {}",
                path.display(),
                g.n(),
                self.max_n
            )));
        }
        Ok(g)
    }

    fn presentation(&self, g: &Graph) -> Presentation {
        relators_from_graph(g).with_dehn_budget(self.dehn_budget)
    }

    fn table(&self, g: &Graph) -> CodingTable {
        CodingTable::with_presentation(g, self.presentation(g))
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn word_in(p: &Presentation, text: &str) -> Result<Word, Failure> {
    let w: Word = text.parse()?;
    if let Some(i) = w.max_index() {
        if i as usize >= p.alphabet_size() {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                alphabet_size: p.alphabet_size(),
            }
            .into());
        }
    }
    Ok(w)
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let cfg = Config {
        max_code: cli.max_code,
        conj_bound: cli.conj_bound.map(|b| b as usize),
        dehn_budget: cli.dehn_budget as usize,
        max_n: cli.max_n as usize,
    };
    let mut r = Report::new();
    match cli.command {
        Command::Relators { graph } => {
            let p = cfg.presentation(&cfg.graph(&graph)?);
            r.kv("generators", p.alphabet_size());
            for s in p.seeds() {
                r.kv("seed", s);
            }
            r.kv("symmetrized", p.relators().len());
        }
        Command::CheckC16 { graph } => {
            let p = cfg.presentation(&cfg.graph(&graph)?);
            r.kv("relators", p.relators().len());
            r.kv("max-piece", p.relators().max_piece_len());
            r.answer("c16", p.relators().check_c16());
        }
        Command::Wp { graph, word } => {
            let p = cfg.presentation(&cfg.graph(&graph)?);
            let reduced = p.dehn_reduce(&word_in(&p, &word)?)?;
            if reduced.is_identity() {
                r.kv("result", "identity");
            } else {
                r.kv("result", "nontrivial");
                r.kv("normal-form", reduced);
            }
        }
        Command::Order { graph, word } => {
            let p = cfg.presentation(&cfg.graph(&graph)?);
            r.kv("order", p.order(&word_in(&p, &word)?)?);
        }
        Command::Code { graph } => {
            let mut t = cfg.table(&cfg.graph(&graph)?);
            t.extend_to(cfg.max_code)?;
            for c in t.codes().into_iter().filter(|&c| c <= cfg.max_code) {
                r.kv(&c.to_string(), t.registered_word(c).expect("registered"));
            }
            if t.is_exhausted() {
                r.kv("exhausted", format!("the group has {} elements", t.len()));
            }
        }
        Command::StarTable { graph } => {
            let mut t = cfg.table(&cfg.graph(&graph)?);
            let csv = t.star_table_csv(cfg.max_code)?;
            r.lines.extend(csv.lines().map(str::to_string));
        }
        Command::AutExtend {
            graph,
            partial_map,
            oracle,
        } => {
            let g = cfg.graph(&graph)?;
            let s: PartialMap = read(&partial_map)?.parse()?;
            let mut t = cfg.table(&g);
            let d = sigma_ns_nonempty(&mut t, &s, cfg.conj_bound)?;
            r.kv("condition-1", d.condition1);
            if let Some(w) = d.witness.as_ref().filter(|_| d.holds) {
                r.kv("rho", join(&w.rho));
                r.kv("r", join(w.r.iter().map(|(i, v)| format!("{i}->{v}"))));
                r.kv("k", w.k);
                r.kv("k-inverse", w.k_inv);
                r.kv("l", w.l);
                r.kv("t", &w.t);
            }
            r.kv("bound", d.bound);
            r.kv("at-bound", d.at_bound);
            r.kv("subword-closed", d.subword_closed);
            if oracle {
                let o = oracle_aut_extends(&mut t, &s, d.bound)?;
                r.kv("oracle", o.is_some());
                if o.is_some() != d.holds {
                    if d.subword_closed {
                        for line in &r.lines {
                            println!("{line}");
                        }
                        return Err(Failure::Disagreement(format!(
                            "checker says {}, oracle says {}",
                            d.holds,
                            o.is_some()
                        )));
                    }
                    r.kv("note", "domain is not subword-closed, so the checker conditions need not match the oracle");
                }
            }
            r.answer("extends", d.holds);
        }
        Command::EmbedGraph { t, s } => {
            let (t, s) = (cfg.graph(&t)?, cfg.graph(&s)?);
            let f = induced_embeds(&t, &s);
            if let Some(f) = &f {
                r.kv("map", join(f));
            }
            r.answer("embeds", f.is_some());
        }
        Command::GraphIso { t, s } => {
            let (t, s) = (cfg.graph(&t)?, cfg.graph(&s)?);
            let graph_side = graph_iso(&t, &s);
            let group_side = iso_search(&t, &s)?;
            if graph_side.is_some() != group_side.is_some() {
                return Err(Failure::Disagreement(
                    "graph and group isomorphism searches disagree".into(),
                ));
            }
            if let Some((rho, eps)) = &group_side {
                r.kv("map", join(rho));
                r.kv("epsilon", eps);
                r.kv("group-inverse-verified", true);
            }
            r.answer("isomorphic", group_side.is_some());
        }
        Command::HomCheck { t, s, map } => {
            let (tg, sg) = (cfg.graph(&t)?, cfg.graph(&s)?);
            let gm: GeneratorMap = read(&map)?.parse()?;
            let (pt, ps) = (cfg.presentation(&tg), cfg.presentation(&sg));
            if gm.len() != tg.n() {
                return Err(Failure::Usage(format!(
                    "map has {} images for {} generators",
                    gm.len(),
                    tg.n()
                )));
            }
            let hom = is_homomorphism(&pt, &ps, &gm)?;
            if hom && tg == sg {
                let bound = cfg
                    .conj_bound
                    .unwrap_or_else(|| default_conjugator_bound(&gm));
                match aut_canonical_check(&tg, &gm, bound)? {
                    Some(c) => {
                        r.kv("canonical-rho", join(&c.rho));
                        r.kv("canonical-epsilon", c.epsilon);
                        r.kv("canonical-t", &c.t);
                    }
                    None => r.kv(
                        "canonical",
                        format!("none with conjugator length <= {bound}"),
                    ),
                }
            }
            r.answer("homomorphism", hom);
        }
        Command::RadoAdj { m, n } => {
            let adj = adjacent(m, n)?;
            r.kv("result", if adj { "adjacent" } else { "non-adjacent" });
            r.negative = !adj;
        }
        Command::RadoEmbed { graph } => {
            let g = cfg.graph(&graph)?;
            for (v, x) in embed_graph(&g)?.into_iter().enumerate() {
                r.lines.push(format!("{v} {x}"));
            }
        }
        Command::Rigid { graph } => {
            let g = cfg.graph(&graph)?;
            r.kv("automorphisms", automorphisms(&g).len());
            r.answer("rigid", automorphisms(&g).len() == 1);
        }
        Command::Tree { graph } => {
            let g = cfg.graph(&graph)?;
            r.answer("tree", is_combinatorial_tree(&g));
        }
    }
    Ok(r)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            for line in &report.lines {
                println!("{line}");
            }
            ExitCode::from(if report.negative { 1 } else { 0 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 3 } else { 2 })
        }
        Err(Failure::Disagreement(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}
