//! The full pipeline for one ideal, with every consistency requirement of
//! the theory checked along the way.
//!
//! For a quadratic ideal `I = (squares, J)` the combinatorics predicts a
//! linear resolution exactly when the complement of the graph of `J` is
//! chordal and the squares sit on free vertices in distinct facets. The
//! prediction is compared with the Betti tables over every requested field,
//! with the constructed linear-quotient order, with the powers, and with
//! the x-degrees of the Groebner basis of the Rees ideal. Any disagreement
//! is returned as [`Error::Falsification`].

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::betti::{koszul_betti, powers_linear_report, BettiJson, BettiOptions, PowerVerdict};
use crate::chordal::{is_chordal, Chordality};
use crate::conditions::{
    check_free_vertex_squares, check_star, check_star_star, dirac_labeling, ConditionCheck,
    FreeVertexCheck, VertexLabeling,
};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::graph_of_ideal;
use crate::ideal::{polarize, squarefree_part, GenDegree, MonomialIdeal};
use crate::io::{IdealFile, NamedIdeal};
use crate::quotients::{construct_lq_order, has_linear_quotients, GeneratorOrder};
use crate::rees::{
    build_omega, graver_vs_groebner_crosscheck, reduced_groebner, toric_ideal_gens,
    x_degree_check, BinomialJson, CrosscheckReport, TermOrder, XDegreeReport,
    DEFAULT_STEP_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub fields: Vec<FieldSpec>,
    pub max_power: usize,
    /// Walk length bound for the Graver cross-check; `None` uses
    /// `2 |E(Omega)|`.
    pub walk_bound: Option<usize>,
    pub betti: BettiOptions,
    pub step_budget: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            fields: FieldSpec::default_pair().to_vec(),
            max_power: 3,
            walk_bound: None,
            betti: BettiOptions::default(),
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReport {
    pub field: FieldSpec,
    pub betti: BettiJson,
    pub powers: Vec<PowerVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerSummary {
    pub order: String,
    /// Variables of `T` for the relabeled ideal.
    pub variables: Vec<String>,
    pub basis: Vec<BinomialJson>,
    pub x_degree: XDegreeReport,
    pub crosscheck: CrosscheckReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticAnalysis {
    /// Indices `i` with `x_i^2` a generator.
    pub squares: Vec<usize>,
    /// Chordality of the complement of the graph of the squarefree part.
    pub complement: Chordality,
    pub labeling: Option<VertexLabeling>,
    /// The renumbered ideal, in variables `x1..xn`.
    pub relabeled: Option<IdealFile>,
    pub star: Option<ConditionCheck>,
    pub star_star: Option<ConditionCheck>,
    pub free_vertex: Option<FreeVertexCheck>,
    pub predicted_linear: bool,
    /// Generators of the input, largest first.
    pub linear_quotient_order: Option<Vec<String>>,
    pub groebner: Option<GroebnerSummary>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: IdealFile,
    pub generators: usize,
    /// Common generator degree; `None` for mixed degrees.
    pub degree: Option<u32>,
    pub quadratic: Option<QuadraticAnalysis>,
    pub skipped: Option<String>,
    pub linearity: Vec<FieldReport>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl AnalysisReport {
    /// The report with all timing fields zeroed.
    pub fn without_timings(mut self) -> Self {
        self.timings_ms.clear();
        for f in &mut self.linearity {
            for p in &mut f.powers {
                p.millis = 0;
            }
        }
        self
    }
}

fn falsified(msg: String) -> Error {
    Error::Falsification(msg)
}

struct Timer(BTreeMap<String, u64>);

impl Timer {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f();
        self.0.insert(name.to_string(), start.elapsed().as_millis() as u64);
        out
    }
}

pub fn analyze(input: &NamedIdeal, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let ideal = &input.ideal;
    if ideal.is_zero() {
        return Err(Error::input("the zero ideal has no resolution to analyze"));
    }
    if options.fields.is_empty() {
        return Err(Error::input("no field requested"));
    }
    let mut timer = Timer(BTreeMap::new());
    let degree = match ideal.degree() {
        GenDegree::Equal(d) => Some(d),
        _ => None,
    };
    let (quadratic, skipped) = match degree {
        Some(2) => {
            let q = timer.time("combinatorics", || quadratic_pipeline(input, options))?;
            (Some(q), None)
        }
        Some(d) => (
            None,
            Some(format!(
                "generators have degree {d}; the graph, quotient and Rees checks apply to degree 2 only"
            )),
        ),
        None => (
            None,
            Some("generators have mixed degrees; only Betti numbers are computed".to_string()),
        ),
    };
    let mut linearity = Vec::new();
    for &field in &options.fields {
        let report = timer.time(&format!("betti {field}"), || field_report(ideal, field, options))?;
        linearity.push(report);
    }
    if let Some(q) = &quadratic {
        for f in &linearity {
            if f.betti.linear != Some(q.predicted_linear) {
                return Err(falsified(format!(
                    "combinatorics predicts linear = {}, Betti table over {} says {:?}",
                    q.predicted_linear, f.field, f.betti.linear
                )));
            }
            if q.predicted_linear {
                if let Some(p) = f.powers.iter().find(|p| !p.linear) {
                    return Err(falsified(format!(
                        "power {} is not linear over {} although the Groebner basis has x-degree at most 1",
                        p.k, f.field
                    )));
                }
            }
        }
    }
    Ok(AnalysisReport {
        input: input.to_file(),
        generators: ideal.len(),
        degree,
        quadratic,
        skipped,
        linearity,
        timings_ms: timer.0,
    })
}

fn field_report(ideal: &MonomialIdeal, field: FieldSpec, options: &AnalysisOptions) -> Result<FieldReport> {
    let table = koszul_betti(ideal, field, &options.betti)?;
    if ideal.degree() == GenDegree::Equal(2) && !ideal.is_squarefree() {
        let polarized = koszul_betti(&polarize(ideal)?, field, &options.betti)?;
        if !polarized.same_numbers(&table) {
            return Err(falsified(format!("polarization changed the Betti table over {field}")));
        }
    }
    let powers = if table.degree.is_some() && options.max_power > 0 {
        powers_linear_report(ideal, field, options.max_power, &options.betti)?
    } else {
        Vec::new()
    };
    Ok(FieldReport {
        field,
        betti: table.to_json(),
        powers,
    })
}

fn quadratic_pipeline(input: &NamedIdeal, options: &AnalysisOptions) -> Result<QuadraticAnalysis> {
    let ideal = &input.ideal;
    let split = squarefree_part(ideal)?;
    let g = graph_of_ideal(&split.part)?;
    let complement = is_chordal(&g.complement()?);
    let mut q = QuadraticAnalysis {
        squares: split.squares.clone(),
        complement: complement.clone(),
        labeling: None,
        relabeled: None,
        star: None,
        star_star: None,
        free_vertex: None,
        predicted_linear: false,
        linear_quotient_order: None,
        groebner: None,
        notes: Vec::new(),
    };
    if !complement.is_chordal() {
        q.notes.push("complement not chordal: the squarefree part has no linear resolution".into());
        return Ok(q);
    }
    let labeling = dirac_labeling(&g)?;
    let relabeled = labeling.apply(ideal)?;
    let star = check_star(&relabeled)?;
    let star_star = check_star_star(&relabeled)?;
    let free = check_free_vertex_squares(ideal)?;
    if !star.holds {
        return Err(falsified(format!(
            "condition (*) fails after renumbering from a leaf order: {:?}",
            star.witness
        )));
    }
    q.predicted_linear = free.holds;
    if free.holds && !star_star.holds {
        return Err(falsified(format!(
            "squares on distinct free vertices but (**) fails at {:?}",
            star_star.witness
        )));
    }
    for i in split.squares.iter().map(|&v| labeling.new_of_old[v - 1]) {
        let has_partner = (1..i).any(|k| relabeled.contains_product(k, i));
        if !has_partner && i > 1 {
            q.notes.push(format!(
                "x{i}^2 has no partner x_k x{i} with k < {i}; placed above all generators in smaller variables"
            ));
        }
    }
    q.labeling = Some(labeling.clone());
    q.relabeled = Some(NamedIdeal::with_default_names(relabeled.clone()).to_file());
    q.star = Some(star);
    q.star_star = Some(star_star);
    q.free_vertex = Some(free);
    if !q.predicted_linear {
        q.notes.push("a square is not on a free vertex of its own facet".into());
        return Ok(q);
    }

    let order = construct_lq_order(&relabeled)?;
    // back to the input numbering
    let mut old_of_new = vec![0usize; ideal.nvars()];
    for (old, &new) in labeling.new_of_old.iter().enumerate() {
        old_of_new[new - 1] = old;
    }
    let original: Vec<_> = order
        .monomials(&relabeled)
        .into_iter()
        .map(|m| m.permute(&old_of_new))
        .collect();
    let order_in_input = GeneratorOrder::from_monomials(ideal, &original)?;
    if !has_linear_quotients(ideal, &order_in_input)?.holds {
        return Err(falsified("constructed order has no linear quotients".into()));
    }
    q.linear_quotient_order = Some(original.iter().map(|m| input.render(m)).collect());
    q.groebner = Some(groebner_summary(&relabeled, options)?);
    Ok(q)
}

fn groebner_summary(relabeled: &MonomialIdeal, options: &AnalysisOptions) -> Result<GroebnerSummary> {
    let omega = build_omega(relabeled)?;
    let order = TermOrder::rees_lex(&omega);
    let p = toric_ideal_gens(&omega, options.step_budget)?;
    let gb = reduced_groebner(&p, &order, options.step_budget)?;
    let x_degree = x_degree_check(&gb, omega.n());
    if !x_degree.holds {
        let witness = &gb[x_degree.witness.expect("witness")];
        return Err(falsified(format!(
            "reduced Groebner basis element {} has x-degree {} under conditions (*) and (**)",
            witness.render(&omega.variable_names()),
            x_degree.max_deg_x
        )));
    }
    let bound = options.walk_bound.unwrap_or(2 * omega.edges().len());
    let crosscheck = graver_vs_groebner_crosscheck(&omega, &gb, bound);
    if !crosscheck.agrees {
        return Err(falsified("a Groebner basis element is not a primitive walk binomial".into()));
    }
    Ok(GroebnerSummary {
        order: "paper-lex".into(),
        variables: omega.variable_names(),
        basis: gb.iter().map(|g| g.to_json(&omega)).collect(),
        x_degree,
        crosscheck,
    })
}
