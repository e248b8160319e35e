//! Structural predictions about consecutive magic labelings, checked against
//! the search oracle.
//!
//! Every report compares a prediction with what exhaustive search observes;
//! predictions are never taken as ground truth.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::caterpillar_beta_labeling;
use crate::graph::{
    bipartition_of, build_caterpillar, build_complete_bipartite, build_cycle, build_double_star, build_lobster,
    Bipartition, CaterpillarSpec, Graph, Side,
};
use crate::labeling::{classify, is_graceful};
use crate::search::{
    automorphisms, count_orbits, feasible_b_set, find_consecutive, find_edge_magic, find_graceful, SearchQuery,
};
use crate::{Error, Label, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    OutOfBudget,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::OutOfBudget => "out-of-budget",
        })
    }
}

/// Which of the three mutually exclusive situations a connected bipartite
/// graph is in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrichotomyCase {
    /// No consecutive labeling for any `b`.
    NoLabeling,
    /// Only `b = 0` and `b = |V|`.
    ZeroAndFull,
    /// A tree with every `b` in `{0, |X|, |Y|, |V|}`.
    AllFour,
}

/// A prediction or an observation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum Claim {
    /// Exactly this set.
    Set(BTreeSet<Label>),
    /// Some subset of this set.
    SubsetOf(BTreeSet<Label>),
    Nonempty,
    Empty,
    /// `0` is present iff `|V|` is.
    ZeroIffFull,
    /// A free-form statement.
    Holds(String),
    Case(TrichotomyCase),
    /// Any of the three trichotomy cases.
    OneOfThree,
    Count(usize),
    /// The search could not run within budget.
    Unknown,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |s: &BTreeSet<Label>| {
            if s.is_empty() {
                return "∅".to_string();
            }
            let items: Vec<String> = s.iter().map(Label::to_string).collect();
            format!("{{{}}}", items.join(", "))
        };
        match self {
            Claim::Set(s) => write!(f, "{}", set(s)),
            Claim::SubsetOf(s) => write!(f, "⊆ {}", set(s)),
            Claim::Nonempty => f.write_str("nonempty"),
            Claim::Empty => f.write_str("∅"),
            Claim::ZeroIffFull => f.write_str("0 ∈ S ⇔ |V| ∈ S"),
            Claim::Holds(s) => f.write_str(s),
            Claim::Case(c) => write!(f, "{c:?}"),
            Claim::OneOfThree => f.write_str("one of three cases"),
            Claim::Count(n) => write!(f, "{n}"),
            Claim::Unknown => f.write_str("?"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub graph_description: String,
    pub predicted: Claim,
    pub observed: Claim,
    pub verdict: Verdict,
}

impl TheoremReport {
    fn new(id: &str, graph: impl Into<String>, predicted: Claim, observed: Claim, verdict: Verdict) -> Self {
        TheoremReport {
            theorem_id: id.to_string(),
            graph_description: graph.into(),
            predicted,
            observed,
            verdict,
        }
    }

    /// Compares a predicted claim with an observed set of `b` values.
    fn for_set(id: &str, graph: impl Into<String>, g: &Graph, predicted: Claim, observed: &BTreeSet<Label>) -> Self {
        let v = g.vertex_count() as Label;
        let pass = match &predicted {
            Claim::Set(s) => s == observed,
            Claim::SubsetOf(s) => observed.is_subset(s),
            Claim::Nonempty => !observed.is_empty(),
            Claim::Empty => observed.is_empty(),
            Claim::ZeroIffFull => observed.contains(&0) == observed.contains(&v),
            _ => false,
        };
        let verdict = if pass { Verdict::Pass } else { Verdict::Fail };
        TheoremReport::new(id, graph, predicted, Claim::Set(observed.clone()), verdict)
    }

    fn out_of_budget(id: &str, graph: impl Into<String>, predicted: Claim) -> Self {
        TheoremReport::new(id, graph, predicted, Claim::Unknown, Verdict::OutOfBudget)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Runs `f`, turning a budget refusal into `None`.
fn within_budget<T>(f: impl FnOnce() -> Result<T>) -> Result<Option<T>> {
    match f() {
        Ok(t) => Ok(Some(t)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn sizes(bipartition: &Bipartition) -> (Label, Label) {
    (bipartition.len(Side::X) as Label, bipartition.len(Side::Y) as Label)
}

/// The values of `b` a consecutive labeling can possibly have:
/// `{0, |X|, |Y|, |V|}` for bipartite graphs, `{0, |V|}` otherwise.
///
/// A supplied bipartition is used as is; otherwise one is computed.
pub fn predicted_b_candidates(g: &Graph, bipartition: Option<&Bipartition>) -> Result<BTreeSet<Label>> {
    let computed;
    let bipartition = match bipartition {
        Some(b) => Some(b),
        None => {
            computed = bipartition_of(g)?;
            computed.as_ref()
        }
    };
    let v = g.vertex_count() as Label;
    Ok(match bipartition {
        Some(bip) => {
            let (x, y) = sizes(bip);
            BTreeSet::from([0, x, y, v])
        }
        None => {
            if !crate::graph::is_connected(g) {
                return Err(Error::Disconnected);
            }
            BTreeSet::from([0, v])
        }
    })
}

/// `{0, β, α, α + β}` for the caterpillar `spec`.
pub fn caterpillar_b_set(spec: &CaterpillarSpec) -> BTreeSet<Label> {
    let alpha = spec.alpha() as Label;
    let beta = spec.beta() as Label;
    BTreeSet::from([0, beta, alpha, alpha + beta])
}

/// `{0, 2p + 1}` for `p >= 3`. `L_1` and `L_2` are caterpillars and get the
/// caterpillar set `{0, p, p + 1, 2p + 1}`.
pub fn lobster_b_set(p: usize) -> Result<BTreeSet<Label>> {
    if p == 0 {
        return Err(Error::InvalidFamily("lobster needs p >= 1".into()));
    }
    let p = p as Label;
    Ok(if p >= 3 {
        BTreeSet::from([0, 2 * p + 1])
    } else {
        BTreeSet::from([0, p, p + 1, 2 * p + 1])
    })
}

/// `k = d·t + 6` with `d = gcd(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantFormWitness {
    pub m: u64,
    pub n: u64,
    pub d: u64,
    pub k: u64,
    pub t: Option<u64>,
}

impl ConstantFormWitness {
    pub fn holds(&self) -> bool {
        self.t.is_some()
    }
}

pub fn constant_form_check(m: u64, n: u64, k: u64) -> ConstantFormWitness {
    let d = m.gcd(&n);
    let t = match k.checked_sub(6) {
        Some(rest) if d != 0 && rest % d == 0 => Some(rest / d),
        _ => None,
    };
    ConstantFormWitness { m, n, d, k, t }
}

/// Places an exhaustively observed feasible set of a connected bipartite graph
/// into the trichotomy. `None` for `feasible` means the search did not run.
pub fn classify_trichotomy(
    g: &Graph,
    bipartition: &Bipartition,
    description: &str,
    feasible: Option<&BTreeSet<Label>>,
) -> TheoremReport {
    const ID: &str = "bipartite-trichotomy";
    let Some(feasible) = feasible else {
        return TheoremReport::out_of_budget(ID, description, Claim::OneOfThree);
    };
    let v = g.vertex_count() as Label;
    let (x, y) = sizes(bipartition);
    let case = if feasible.is_empty() {
        Some(TrichotomyCase::NoLabeling)
    } else if *feasible == BTreeSet::from([0, v]) {
        Some(TrichotomyCase::ZeroAndFull)
    } else if g.is_tree() && *feasible == BTreeSet::from([0, x, y, v]) {
        Some(TrichotomyCase::AllFour)
    } else {
        None
    };
    match case {
        Some(c) => TheoremReport::new(ID, description, Claim::OneOfThree, Claim::Case(c), Verdict::Pass),
        None => TheoremReport::new(
            ID,
            description,
            Claim::OneOfThree,
            Claim::Set(feasible.clone()),
            Verdict::Fail,
        ),
    }
}

fn feasible_report(
    id: &str,
    description: String,
    g: &Graph,
    predicted: Claim,
) -> Result<(TheoremReport, Option<BTreeSet<Label>>)> {
    Ok(match within_budget(|| feasible_b_set(g))? {
        Some(observed) => (
            TheoremReport::for_set(id, description, g, predicted, &observed),
            Some(observed),
        ),
        None => (TheoremReport::out_of_budget(id, description, predicted), None),
    })
}

/// Odd cycles, stars, other complete bipartite graphs and even cycles.
pub fn closing_claims_suite() -> Result<Vec<TheoremReport>> {
    let mut jobs: Vec<(&str, String, Graph, Claim, Option<Bipartition>)> = Vec::new();
    for l in [3, 5, 7] {
        let c = build_cycle(l)?;
        jobs.push((
            "odd-cycle",
            format!("C_{l}"),
            c.graph,
            Claim::Set(BTreeSet::from([0, l as Label])),
            None,
        ));
    }
    for n in 1..=4 {
        let k = build_complete_bipartite(1, n)?;
        jobs.push((
            "complete-bipartite",
            format!("K_{{1,{n}}}"),
            k.graph,
            Claim::Nonempty,
            None,
        ));
    }
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let k = build_complete_bipartite(m, n)?;
        jobs.push((
            "complete-bipartite",
            format!("K_{{{m},{n}}}"),
            k.graph,
            Claim::Empty,
            k.bipartition,
        ));
    }
    for l in [4, 6] {
        let c = build_cycle(l)?;
        jobs.push((
            "even-cycle-duality",
            format!("C_{l}"),
            c.graph,
            Claim::ZeroIffFull,
            c.bipartition,
        ));
    }
    let results: Vec<Result<Vec<TheoremReport>>> = jobs
        .into_par_iter()
        .map(|(id, description, g, predicted, bipartition)| {
            let (report, observed) = feasible_report(id, description.clone(), &g, predicted)?;
            let mut out = vec![report];
            if let Some(bip) = bipartition {
                out.push(classify_trichotomy(&g, &bip, &description, observed.as_ref()));
            }
            Ok(out)
        })
        .collect();
    flatten(results)
}

fn flatten(results: Vec<Result<Vec<TheoremReport>>>) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// For every caterpillar on `2..=max_vertices` vertices: the explicit
/// `β`-labeling verifies, and the feasible set is exactly `{0, β, α, α + β}`.
pub fn caterpillar_suite(max_vertices: usize) -> Result<Vec<TheoremReport>> {
    let specs: Vec<CaterpillarSpec> = crate::corpus::caterpillar_specs(max_vertices)
        .into_iter()
        .filter(|s| s.vertex_count() >= 2)
        .collect();
    let results: Vec<Result<Vec<TheoremReport>>> = specs
        .par_iter()
        .map(|spec| {
            let handle = build_caterpillar(spec);
            let g = &handle.graph;
            let (alpha, beta) = (spec.alpha() as Label, spec.beta() as Label);
            let c = classify(g, &caterpillar_beta_labeling(spec))?;
            let expected = (Some(2 * alpha + 4 * beta), Some(beta));
            let statement = format!("b = {beta}, k = {}", 2 * alpha + 4 * beta);
            let construction = TheoremReport::new(
                "caterpillar-construction",
                spec.to_string(),
                Claim::Holds(statement.clone()),
                Claim::Holds(format!("b = {:?}, k = {:?}", c.consecutive_index, c.magic_constant)),
                if (c.magic_constant, c.consecutive_index) == expected {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                },
            );
            let (set, _) = feasible_report(
                "caterpillar-b-set",
                spec.to_string(),
                g,
                Claim::Set(caterpillar_b_set(spec)),
            )?;
            Ok(vec![construction, set])
        })
        .collect();
    flatten(results)
}

/// `L_1` through `L_4`: feasible sets and a graceful labeling of `L_4`.
pub fn lobster_suite() -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for p in 1..=4 {
        let g = build_lobster(p)?.graph;
        let (report, _) = feasible_report("lobster-b-set", format!("L_{p}"), &g, Claim::Set(lobster_b_set(p)?))?;
        out.push(report);
    }
    let l4 = build_lobster(4)?.graph;
    let graceful = find_graceful(&l4)?.filter(|phi| is_graceful(&l4, phi));
    out.push(TheoremReport::new(
        "lobster-graceful",
        "L_4",
        Claim::Holds("graceful labeling exists".into()),
        Claim::Holds(match &graceful {
            Some(phi) => format!("{:?}", phi.vertex_labels()),
            None => "none".into(),
        }),
        if graceful.is_some() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
    ));
    Ok(out)
}

/// Orbit count and magic constants of the consecutive labelings of `DS(m, n)`
/// at `b = m + 1` (predicted: two orbits, `k = 4m + 2n + 6`) and at
/// `b = n + 1` (two orbits, `k = 2m + 4n + 6`).
pub fn double_star_report(m: usize, n: usize) -> Result<Vec<TheoremReport>> {
    let g = build_double_star(m, n)?.graph;
    let description = format!("DS({m},{n})");
    let group = automorphisms(&g)?;
    let mut out = Vec::new();
    for (b, k) in [(m + 1, 4 * m + 2 * n + 6), (n + 1, 2 * m + 4 * n + 6)] {
        let b = b as Label;
        let k = k as Label;
        let Some(report) = within_budget(|| find_consecutive(&SearchQuery::consecutive(&g, b)))? else {
            out.push(TheoremReport::out_of_budget(
                "double-star-count",
                description.clone(),
                Claim::Count(2),
            ));
            continue;
        };
        let orbits = count_orbits(&g, &report.labelings, &group);
        out.push(TheoremReport::new(
            "double-star-count",
            format!("{description}, b = {b}, {} labelings", report.labelings.len()),
            Claim::Count(2),
            Claim::Count(orbits),
            if orbits == 2 { Verdict::Pass } else { Verdict::Fail },
        ));
        let constants = report.constants_found;
        out.push(TheoremReport::new(
            "double-star-constant",
            format!("{description}, b = {b}"),
            Claim::Set(BTreeSet::from([k])),
            Claim::Set(constants.clone()),
            if constants == BTreeSet::from([k]) {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
        ));
    }
    Ok(out)
}

/// Every magic constant of `DS(m, n)` has the form `gcd(m, n)·t + 6`.
pub fn constant_form_report(m: usize, n: usize) -> Result<TheoremReport> {
    let g = build_double_star(m, n)?.graph;
    let description = format!("DS({m},{n})");
    let predicted = Claim::Holds(format!("k = {}·t + 6", m.gcd(&n)));
    let query = SearchQuery::new(&g).canonical_only(true);
    let Some(report) = within_budget(|| find_edge_magic(&query))? else {
        return Ok(TheoremReport::out_of_budget("constant-form", description, predicted));
    };
    let bad: Vec<Label> = report
        .constants_found
        .iter()
        .copied()
        .filter(|&k| !constant_form_check(m as u64, n as u64, k as u64).holds())
        .collect();
    let observed: Vec<String> = report.constants_found.iter().map(Label::to_string).collect();
    let verdict = if bad.is_empty() && report.exhausted {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(TheoremReport::new(
        "constant-form",
        description,
        predicted,
        Claim::Holds(format!("k ∈ {{{}}}", observed.join(", "))),
        verdict,
    ))
}

/// Double-star orbit counts and constants, plus the constant form on the
/// listed double stars.
pub fn double_star_suite(form_cases: &[(usize, usize)]) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for (m, n) in [(1, 1), (1, 2), (2, 2), (1, 3)] {
        out.extend(double_star_report(m, n)?);
    }
    for &(m, n) in form_cases {
        out.push(constant_form_report(m, n)?);
    }
    Ok(out)
}

/// Fixed-width text table of reports.
pub fn format_table(reports: &[TheoremReport]) -> String {
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            [
                r.theorem_id.clone(),
                r.graph_description.clone(),
                r.predicted.to_string(),
                r.observed.to_string(),
                r.verdict.to_string(),
            ]
        })
        .collect();
    let header = ["claim", "graph", "predicted", "observed", "verdict"].map(String::from);
    let mut widths = header.clone().map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |row: &[String; 5]| {
        let cells: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        cells.join("  ").trim_end().to_string()
    };
    let mut out = line(&header);
    out.push('\n');
    for row in &rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_path;

    #[test]
    fn candidates() {
        let ds = build_double_star(1, 2).unwrap();
        assert_eq!(
            predicted_b_candidates(&ds.graph, ds.bipartition.as_ref()).unwrap(),
            BTreeSet::from([0, 2, 3, 5])
        );
        let c5 = build_cycle(5).unwrap().graph;
        assert_eq!(predicted_b_candidates(&c5, None).unwrap(), BTreeSet::from([0, 5]));
        let c4 = build_cycle(4).unwrap().graph;
        assert_eq!(predicted_b_candidates(&c4, None).unwrap(), BTreeSet::from([0, 2, 4]));
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(predicted_b_candidates(&two_k2, None).is_err());
    }

    #[test]
    fn caterpillar_sets() {
        for (m, n) in [(1, 1), (1, 2), (2, 5)] {
            let spec = CaterpillarSpec::new(vec![m, n]).unwrap();
            let (m, n) = (m as Label, n as Label);
            assert_eq!(caterpillar_b_set(&spec), BTreeSet::from([0, m + 1, n + 1, m + n + 2]));
        }
        assert_eq!(
            caterpillar_b_set(&"2,1,2".parse().unwrap()),
            BTreeSet::from([0, 3, 5, 8])
        );
        for p in 1..=5 {
            let spec = CaterpillarSpec::new(vec![p]).unwrap();
            let p = p as Label;
            assert_eq!(caterpillar_b_set(&spec), BTreeSet::from([0, 1, p, p + 1]));
        }
    }

    #[test]
    fn lobster_sets() {
        assert_eq!(lobster_b_set(3).unwrap(), BTreeSet::from([0, 7]));
        assert!(lobster_b_set(1).unwrap().contains(&2));
        assert!(lobster_b_set(2).unwrap().contains(&3));
        assert!(lobster_b_set(0).is_err());
    }

    #[test]
    fn constant_forms() {
        assert_eq!(constant_form_check(2, 2, 18).t, Some(6));
        assert_eq!(constant_form_check(3, 6, 7).t, None);
        assert_eq!(constant_form_check(1, 1, 12).t, Some(6));
        assert_eq!(constant_form_check(2, 4, 5).t, None);
        assert_eq!(constant_form_check(2, 4, 6).t, Some(0));
        assert_eq!(constant_form_check(2, 4, 6).d, 2);
    }

    #[test]
    fn trichotomy_cases() {
        let k22 = build_complete_bipartite(2, 2).unwrap();
        let observed = feasible_b_set(&k22.graph).unwrap();
        let report = classify_trichotomy(
            &k22.graph,
            k22.bipartition.as_ref().unwrap(),
            "K_{2,2}",
            Some(&observed),
        );
        assert_eq!(report.observed, Claim::Case(TrichotomyCase::NoLabeling));

        let ds = build_double_star(1, 1).unwrap();
        let observed = feasible_b_set(&ds.graph).unwrap();
        let report = classify_trichotomy(&ds.graph, ds.bipartition.as_ref().unwrap(), "DS(1,1)", Some(&observed));
        assert_eq!(report.observed, Claim::Case(TrichotomyCase::AllFour));

        let report = classify_trichotomy(&ds.graph, ds.bipartition.as_ref().unwrap(), "DS(1,1)", None);
        assert_eq!(report.verdict, Verdict::OutOfBudget);

        let odd = BTreeSet::from([0, 1]);
        let report = classify_trichotomy(&ds.graph, ds.bipartition.as_ref().unwrap(), "DS(1,1)", Some(&odd));
        assert_eq!(report.verdict, Verdict::Fail);
    }

    #[test]
    fn lobster_suite_passes() {
        let reports = lobster_suite().unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(TheoremReport::passed), "{}", format_table(&reports));
    }

    #[test]
    fn small_caterpillar_suite() {
        let reports = caterpillar_suite(6).unwrap();
        assert!(reports.iter().all(TheoremReport::passed), "{}", format_table(&reports));
    }

    #[test]
    fn set_claims() {
        let g = build_path(3).unwrap().graph;
        let s = BTreeSet::from([0, 3]);
        assert!(TheoremReport::for_set("x", "P_3", &g, Claim::ZeroIffFull, &s).passed());
        assert!(!TheoremReport::for_set("x", "P_3", &g, Claim::Empty, &s).passed());
        assert!(TheoremReport::for_set("x", "P_3", &g, Claim::SubsetOf(BTreeSet::from([0, 1, 2, 3])), &s).passed());
    }

    #[test]
    fn table_has_a_row_per_report() {
        let g = build_path(3).unwrap().graph;
        let r = TheoremReport::for_set("x", "P_3", &g, Claim::Nonempty, &BTreeSet::from([0]));
        let table = format_table(&[r.clone(), r]);
        assert_eq!(table.lines().count(), 3);
        assert!(table.lines().nth(1).unwrap().ends_with("pass"));
    }
}
