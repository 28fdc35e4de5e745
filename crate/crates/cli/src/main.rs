use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use linres::analysis::{analyze, AnalysisOptions, AnalysisReport};
use linres::betti::{koszul_betti, powers_linear_report, BettiJson, BettiOptions, PowerVerdict};
use linres::chordal::{is_chordal, Chordality};
use linres::conditions::relabel_by_dirac;
use linres::graph::graph_of_ideal;
use linres::ideal::{squarefree_part, GenDegree};
use linres::io::{GraphFile, NamedIdeal};
use linres::quotients::{construct_lq_order, find_lq_order, has_linear_quotients, GeneratorOrder, DEFAULT_NODE_BUDGET};
use linres::rees::{
    build_omega, enumerate_primitive_even_walks, reduced_groebner, toric_ideal_gens, x_degree_check, BinomialJson,
    TermOrder, DEFAULT_STEP_BUDGET,
};
use linres::{Error, FieldSpec, Graph};

#[derive(Parser)]
#[command(name = "linres", version, about = "Linear resolutions of quadratic monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check on an ideal and cross-validate the verdicts.
    Analyze {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        fields: Fields,
        #[arg(long, default_value_t = 3)]
        max_power: usize,
        /// Walk length bound for the Graver cross-check (default 2|E(Omega)|).
        #[arg(long)]
        walk_bound: Option<usize>,
    },
    /// Graded Betti numbers over each field.
    Betti {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        fields: Fields,
    },
    /// Linearity of the powers I, I^2, ..., I^K.
    Power {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        fields: Fields,
        #[arg(long, default_value_t = 3)]
        max_power: usize,
    },
    /// Chordality of a graph, or of the complement of the graph of an ideal.
    Chordal {
        #[command(flatten)]
        common: Common,
    },
    /// Reduced Groebner basis of the defining ideal of the Rees ring.
    Groebner {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = OrderArg::PaperLex)]
        order: OrderArg,
        /// Shuffle the input generators with this seed before Buchberger.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// An order of the generators with linear quotients.
    Quotients {
        #[command(flatten)]
        common: Common,
    },
    /// Primitive even closed walks of the graph Omega.
    Walks {
        #[command(flatten)]
        common: Common,
        /// Maximal walk length (default 2|E(Omega)|).
        #[arg(long)]
        walk_bound: Option<usize>,
    },
}

#[derive(Args)]
struct Common {
    /// Ideal file (or graph file for `chordal`).
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Fields {
    /// Q or GF:p; repeatable or comma-separated.
    #[arg(long = "field", value_delimiter = ',', default_values_t = vec!["Q".to_string(), "GF:2".to_string()])]
    field: Vec<String>,
}

impl Fields {
    fn parse(&self) -> Result<Vec<FieldSpec>, Error> {
        let mut out: Vec<FieldSpec> = Vec::new();
        for f in &self.field {
            let f: FieldSpec = f.parse()?;
            if !out.contains(&f) {
                out.push(f);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    PaperLex,
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<NamedIdeal, Error> {
    NamedIdeal::from_json(&read(path)?)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Falsification(_) => 3,
                e if e.is_input_error() => 2,
                _ => 1,
            })
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Analyze { common, fields, max_power, walk_bound } => {
            let input = load_ideal(&common.file)?;
            let options = AnalysisOptions {
                fields: fields.parse()?,
                max_power,
                walk_bound,
                ..Default::default()
            };
            let report = analyze(&input, &options)?;
            if common.json {
                print_json(&report);
            } else {
                print_report(&report);
            }
        }
        Command::Betti { common, fields } => {
            let input = load_ideal(&common.file)?;
            let mut tables = Vec::new();
            for field in fields.parse()? {
                tables.push(koszul_betti(&input.ideal, field, &BettiOptions::default())?);
            }
            if common.json {
                print_json(&tables.iter().map(|t| t.to_json()).collect::<Vec<BettiJson>>());
            } else {
                for t in &tables {
                    print!("{}", t.render());
                    println!("linear: {}\n", verdict(t.is_linear()));
                }
            }
        }
        Command::Power { common, fields, max_power } => {
            let input = load_ideal(&common.file)?;
            #[derive(Serialize)]
            struct FieldPowers {
                field: FieldSpec,
                powers: Vec<PowerVerdict>,
            }
            let mut out = Vec::new();
            for field in fields.parse()? {
                let powers = powers_linear_report(&input.ideal, field, max_power, &BettiOptions::default())?;
                out.push(FieldPowers { field, powers });
            }
            if common.json {
                print_json(&out);
            } else {
                for f in &out {
                    for p in &f.powers {
                        println!(
                            "{}: I^{} ({} generators of degree {}): {}, regularity {}",
                            f.field,
                            p.k,
                            p.generators,
                            p.degree,
                            if p.linear { "linear" } else { "not linear" },
                            p.regularity
                        );
                    }
                }
            }
        }
        Command::Chordal { common } => chordal(&common)?,
        Command::Groebner { common, order: OrderArg::PaperLex, seed } => {
            let input = load_ideal(&common.file)?;
            input.ideal.require_quadratic()?;
            let omega = build_omega(&input.ideal)?;
            let mut gens = toric_ideal_gens(&omega, DEFAULT_STEP_BUDGET)?;
            if let Some(seed) = seed {
                gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            }
            let gb = reduced_groebner(&gens, &TermOrder::rees_lex(&omega), DEFAULT_STEP_BUDGET)?;
            if common.json {
                print_json(&gb.iter().map(|g| g.to_json(&omega)).collect::<Vec<BinomialJson>>());
            } else {
                let names = omega.variable_names();
                for g in &gb {
                    println!("{}", g.render(&names));
                }
                let report = x_degree_check(&gb, omega.n());
                println!("{} elements, max deg_x {}", gb.len(), report.max_deg_x);
            }
        }
        Command::Quotients { common } => quotients(&common)?,
        Command::Walks { common, walk_bound } => {
            let input = load_ideal(&common.file)?;
            input.ideal.require_quadratic()?;
            let omega = build_omega(&input.ideal)?;
            let bound = walk_bound.unwrap_or(2 * omega.edges().len()).max(4);
            let found = enumerate_primitive_even_walks(&omega, bound)?;
            #[derive(Serialize)]
            struct WalkJson {
                walk: Vec<usize>,
                binomial: BinomialJson,
            }
            let rows: Vec<WalkJson> = found
                .walks
                .iter()
                .map(|(w, f)| WalkJson {
                    walk: w.vertices.clone(),
                    binomial: f.to_json(&omega),
                })
                .collect();
            if common.json {
                print_json(&rows);
            } else {
                let names = omega.variable_names();
                for (w, f) in &found.walks {
                    println!("{:?}: {}", w.vertices, f.render(&names));
                }
                println!("{} primitive even closed walks of length at most {bound}", rows.len());
            }
        }
    }
    Ok(())
}

fn verdict(v: Result<bool, Error>) -> String {
    match v {
        Ok(true) => "yes".into(),
        Ok(false) => "no".into(),
        Err(e) => e.to_string(),
    }
}

fn chordal(common: &Common) -> Result<(), Error> {
    let text = read(&common.file)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::input(format!("JSON: {e}")))?;
    let (graph, subject) = if value.get("variables").is_some() {
        let input = NamedIdeal::from_json(&text)?;
        let part = squarefree_part(&input.ideal)?.part;
        (graph_of_ideal(&part)?.complement()?, "complement of the graph of the ideal")
    } else {
        let g: Graph = GraphFile::from_json(&text)?.to_graph()?;
        (g, "graph")
    };
    let result = is_chordal(&graph);
    if common.json {
        print_json(&result);
    } else {
        match &result {
            Chordality::Chordal { peo } => println!("{subject}: chordal, elimination order {peo:?}"),
            Chordality::NotChordal { cycle } => {
                println!("{subject}: not chordal, chordless cycle {cycle:?}")
            }
        }
    }
    Ok(())
}

fn quotients(common: &Common) -> Result<(), Error> {
    let input = load_ideal(&common.file)?;
    let ideal = &input.ideal;
    if ideal.is_zero() {
        return Err(Error::input("the zero ideal has no generators to order"));
    }
    let (order, method) = match ideal.degree() {
        GenDegree::Equal(2) => match relabel_by_dirac(ideal) {
            Ok((labeling, relabeled)) => match construct_lq_order(&relabeled) {
                Ok(order) => {
                    let mut old_of_new = vec![0usize; ideal.nvars()];
                    for (old, &new) in labeling.new_of_old.iter().enumerate() {
                        old_of_new[new - 1] = old;
                    }
                    let back: Vec<_> = order
                        .monomials(&relabeled)
                        .into_iter()
                        .map(|m| m.permute(&old_of_new))
                        .collect();
                    (Some(GeneratorOrder::from_monomials(ideal, &back)?), "construction")
                }
                Err(Error::ConditionViolated { .. }) => (None, "construction"),
                Err(e) => return Err(e),
            },
            Err(Error::NotChordal { .. }) => (None, "construction"),
            Err(e) => return Err(e),
        },
        _ => (find_lq_order(ideal, DEFAULT_NODE_BUDGET)?, "search"),
    };
    if let Some(o) = &order {
        if !has_linear_quotients(ideal, o)?.holds {
            return Err(Error::Falsification("produced order has no linear quotients".into()));
        }
    }
    let rendered: Option<Vec<String>> =
        order.map(|o| o.monomials(ideal).into_iter().map(|m| input.render(m)).collect());
    if common.json {
        #[derive(Serialize)]
        struct QuotientsJson {
            method: &'static str,
            order: Option<Vec<String>>,
        }
        print_json(&QuotientsJson { method, order: rendered });
    } else {
        match rendered {
            Some(gens) => println!("linear quotients ({method}): {}", gens.join(" > ")),
            None => println!("no order with linear quotients ({method})"),
        }
    }
    Ok(())
}

fn print_report(r: &AnalysisReport) {
    let degree = r.degree.map_or("mixed degrees".to_string(), |d| format!("degree {d}"));
    println!(
        "{} generators, {degree}, {} variables",
        r.generators,
        r.input.variables.len()
    );
    if let Some(s) = &r.skipped {
        println!("{s}");
    }
    if let Some(q) = &r.quadratic {
        match &q.complement {
            Chordality::Chordal { .. } => println!("complement graph: chordal"),
            Chordality::NotChordal { cycle } => {
                println!("complement graph: not chordal, chordless cycle {cycle:?}")
            }
        }
        if let Some(l) = &q.labeling {
            println!("relabeling: {:?}", l.new_of_old);
        }
        if let (Some(s), Some(ss)) = (&q.star, &q.star_star) {
            println!("(*): {}, (**): {}", holds(s.holds), holds(ss.holds));
        }
        if let Some(f) = &q.free_vertex {
            println!("squares on free vertices: {}", holds(f.holds));
        }
        println!("predicted linear: {}", q.predicted_linear);
        if let Some(o) = &q.linear_quotient_order {
            println!("linear quotients: {}", o.join(" > "));
        }
        if let Some(g) = &q.groebner {
            println!(
                "Groebner basis ({}): {} elements, max deg_x {}, walk cross-check {}",
                g.order,
                g.basis.len(),
                g.x_degree.max_deg_x,
                if g.crosscheck.agrees { "agrees" } else { "disagrees" }
            );
        }
        for note in &q.notes {
            println!("note: {note}");
        }
    }
    for f in &r.linearity {
        let powers: Vec<String> = f
            .powers
            .iter()
            .map(|p| format!("I^{} {}", p.k, if p.linear { "linear" } else { "not linear" }))
            .collect();
        println!(
            "{}: linear {}, regularity {}; {}",
            f.field,
            f.betti.linear.map_or("unknown".into(), |v| v.to_string()),
            f.betti.regularity.map_or("unknown".into(), |v| v.to_string()),
            powers.join(", ")
        );
    }
}

fn holds(v: bool) -> &'static str {
    if v {
        "holds"
    } else {
        "fails"
    }
}
