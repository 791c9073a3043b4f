//! Verification plan and report model behind the `hodgecheck` binary.

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use hodgecheck::higgs::rank_oracle;
use hodgecheck::pvhs::{
    catalog, catalog_exceptional, catalog_n, catalog_pq, family_range, generating_check, golden_tables, lemmas,
    load_golden, strata_closed_form, strata_dimension_type_a, structural_invariants, sym_tangent,
    sym_tangent_via_characters, verify_golden, verify_weight_bound, DomainFamily, DomainParams, DomainSpec,
    GoldenTables,
};
use hodgecheck::{Error, Rational, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    Tables,
    Bound,
    Generating,
    Higgs,
    Strata,
    Lemmas,
    Cross,
    Invariants,
}

impl Group {
    pub const ALL: [Group; 8] = [
        Group::Tables,
        Group::Bound,
        Group::Generating,
        Group::Higgs,
        Group::Strata,
        Group::Lemmas,
        Group::Cross,
        Group::Invariants,
    ];
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Group::Tables => "tables",
            Group::Bound => "bound",
            Group::Generating => "generating",
            Group::Higgs => "higgs",
            Group::Strata => "strata",
            Group::Lemmas => "lemmas",
            Group::Cross => "cross",
            Group::Invariants => "invariants",
        };
        f.write_str(s)
    }
}

/// What `verify` was asked to run. Unset filters mean the default matrix.
#[derive(Clone, Debug)]
pub struct Selection {
    pub groups: Vec<Group>,
    pub family: Option<DomainFamily>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub golden: Option<PathBuf>,
    pub timing: bool,
}

impl Default for Selection {
    fn default() -> Self {
        Selection {
            groups: Group::ALL.to_vec(),
            family: None,
            p: None,
            q: None,
            n: None,
            k: None,
            samples: 1000,
            seed: 7,
            golden: None,
            timing: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub family: String,
    pub params: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub schema: u32,
    pub tool: String,
    pub checks: Vec<CheckRecord>,
    /// Notes that do not fail a check, such as disagreements between the
    /// computed data and a transcribed statement that the checks route around.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<String>,
    pub pass: bool,
}

impl Report {
    pub fn new(checks: Vec<CheckRecord>, findings: Vec<String>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            schema: SCHEMA_VERSION,
            tool: "hodgecheck".to_string(),
            checks,
            findings,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

struct Outcome {
    expected: String,
    computed: String,
    pass: bool,
}

type Job = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

struct Task {
    id: String,
    family: String,
    params: String,
    k: Option<usize>,
    job: Job,
}

impl Task {
    fn new(id: String, family: impl ToString, params: impl ToString, k: Option<usize>, job: Job) -> Self {
        Task { id, family: family.to_string(), params: params.to_string(), k, job }
    }

    fn for_spec(group: Group, spec: &DomainSpec, k: Option<usize>, suffix: &str, job: Job) -> Self {
        let mut id = format!("{group}/{}", spec.name());
        if let Some(k) = k {
            id.push_str(&format!("/k={k}"));
        }
        id.push_str(suffix);
        Task::new(id, spec.family, spec.params, k, job)
    }
}

/// Outcome of a run: the report plus the errors that stopped a check from
/// producing a verdict (guard overruns, unreadable inputs).
pub struct Run {
    pub report: Report,
    pub errors: Vec<(String, Error)>,
}

/// Default upper bound on `n` (or `q` in type I) per group and family.
fn default_max(group: Group, family: DomainFamily) -> usize {
    match (group, family) {
        (_, DomainFamily::I) => 4,
        (Group::Cross, _) => 3,
        (_, DomainFamily::II) => 6,
        (_, DomainFamily::III) => 4,
        (Group::Bound, DomainFamily::IV) => 8,
        (_, DomainFamily::IV) => 7,
        _ => 0,
    }
}

fn group_families(group: Group) -> &'static [DomainFamily] {
    match group {
        Group::Cross => &[DomainFamily::I],
        _ => &DomainFamily::ALL,
    }
}

/// Catalog entries for `group`, honoring the family and parameter filters.
/// Explicit parameters outside the default range are accepted as given.
fn specs_for(group: Group, sel: &Selection) -> Result<Vec<DomainSpec>> {
    let families: Vec<DomainFamily> = match sel.family {
        Some(f) => vec![f],
        None => group_families(group).to_vec(),
    };
    let mut out = Vec::new();
    for family in families {
        let explicit = match family {
            DomainFamily::I => sel.p.zip(sel.q).map(|(p, q)| DomainParams::PQ { p, q }),
            DomainFamily::V | DomainFamily::VI => None,
            _ => sel.n.map(DomainParams::N),
        };
        if let (Some(params), Some(_)) = (explicit, sel.family) {
            out.push(catalog(family, params)?);
            continue;
        }
        for params in family_range(family, default_max(group, family)) {
            let keep = match params {
                DomainParams::PQ { p, q } => sel.p.is_none_or(|x| x == p) && sel.q.is_none_or(|x| x == q),
                DomainParams::N(n) => {
                    sel.n.is_none_or(|x| x == n)
                        && !(group == Group::Lemmas && family == DomainFamily::IV && n < 5)
                }
                DomainParams::None => true,
            };
            if keep {
                out.push(catalog(family, params)?);
            }
        }
    }
    Ok(out)
}

fn degrees(sel: &Selection, range: impl Iterator<Item = usize>) -> Vec<usize> {
    range.filter(|k| sel.k.is_none_or(|x| x == *k)).collect()
}

fn tables_tasks(sel: &Selection) -> Result<Vec<Task>> {
    let tables: GoldenTables = match &sel.golden {
        Some(path) => load_golden(path)?,
        None => golden_tables(),
    };
    let mut tasks = Vec::new();
    for (tag, family, node, size) in [("E6", DomainFamily::V, 1, 27usize), ("E7", DomainFamily::VI, 7, 56)] {
        if sel.family.is_some_and(|f| f != family) {
            continue;
        }
        let tables = tables.clone();
        tasks.push(Task::new(
            format!("tables/{tag}"),
            family,
            format!("ω{node}"),
            None,
            Box::new(move || {
                let r = verify_golden(&tables)?;
                let matched = if tag == "E6" { r.e6_matched } else { r.e7_matched };
                let bad: Vec<&String> = r.mismatches.iter().filter(|m| m.starts_with(tag)).collect();
                let computed = if bad.is_empty() {
                    format!("{matched} tuples matched")
                } else {
                    format!("{matched} matched; {}", bad.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; "))
                };
                Ok(Outcome {
                    expected: format!("{size} weights of multiplicity 1"),
                    pass: bad.is_empty() && matched == size,
                    computed,
                })
            }),
        ));
    }
    Ok(tasks)
}

fn bound_tasks(sel: &Selection) -> Result<Vec<Task>> {
    Ok(specs_for(Group::Bound, sel)?
        .into_iter()
        .map(|spec| {
            let s = spec.clone();
            Task::for_spec(
                Group::Bound,
                &spec,
                None,
                "",
                Box::new(move || {
                    let r = verify_weight_bound(&s)?;
                    Ok(Outcome {
                        expected: "1".into(),
                        computed: format!("{} over {} weights", r.value, r.distinct_weights),
                        pass: r.value == 1.into(),
                    })
                }),
            )
        })
        .collect())
}

fn generating_tasks(sel: &Selection) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    for spec in specs_for(Group::Generating, sel)? {
        for k in degrees(sel, 2..=spec.rank + 1) {
            let s = spec.clone();
            tasks.push(Task::for_spec(
                Group::Generating,
                &spec,
                Some(k),
                "",
                Box::new(move || {
                    let r = generating_check(&s, k)?;
                    let covered = r.i_k.labels().all(|l| r.witnesses.contains_key(l));
                    let mut computed = if r.contained {
                        format!("{} of {} components witnessed", r.witnesses.len(), r.i_k.len())
                    } else {
                        let missing: Vec<String> = r.missing.iter().map(ToString::to_string).collect();
                        format!("missing {}", missing.join(", "))
                    };
                    if !r.rule_misses.is_empty() {
                        let misses: Vec<String> = r.rule_misses.iter().map(ToString::to_string).collect();
                        computed.push_str(&format!("; box rule failed for {}", misses.join(", ")));
                    }
                    Ok(Outcome {
                        expected: format!("I_{k} ⊆ I_2·S^{}(T)", k - 2),
                        pass: r.contained && covered && r.rule_misses.is_empty(),
                        computed,
                    })
                }),
            ));
        }
    }
    Ok(tasks)
}

fn higgs_tasks(sel: &Selection) -> Result<Vec<Task>> {
    let shapes: Vec<(usize, usize)> = match (sel.p, sel.q) {
        (Some(p), Some(q)) => vec![(p, q)],
        _ => vec![(2, 2), (2, 3), (3, 3)],
    };
    let (samples, seed) = (sel.samples, sel.seed);
    Ok(shapes
        .into_iter()
        .map(|(p, q)| {
            Task::new(
                format!("higgs/{p}x{q}"),
                DomainFamily::I,
                format!("p={p},q={q},samples={samples},seed={seed}"),
                None,
                Box::new(move || {
                    let r = rank_oracle::<Rational>(p, q, samples, seed)?;
                    let computed = if r.pass() {
                        format!("{} pairs agree; rank histogram {:?}", r.checked, r.rank_histogram)
                    } else {
                        let (i, k, rank, member) = r.failures[0];
                        format!(
                            "{} disagreements, first: sample {i} rank {rank} k={k} membership={member}",
                            r.failures.len()
                        )
                    };
                    Ok(Outcome { expected: "v^k ∈ I_k ⟺ rank v < k".into(), pass: r.pass(), computed })
                }),
            )
        })
        .collect())
}

fn strata_tasks(sel: &Selection) -> Vec<Task> {
    let ns: Vec<usize> = match sel.n {
        Some(n) => vec![n],
        None => (2..=4).collect(),
    };
    let mut tasks = Vec::new();
    for n in ns {
        for k in degrees(sel, 1..n) {
            tasks.push(Task::new(
                format!("strata/n={n}/k={k}"),
                DomainFamily::I,
                format!("n={n}"),
                Some(k),
                Box::new(move || {
                    let d = strata_dimension_type_a(n, k)?;
                    let e = strata_closed_form(n, k);
                    Ok(Outcome { expected: e.to_string(), computed: d.to_string(), pass: d == e })
                }),
            ));
        }
    }
    tasks
}

fn lemma_tasks(sel: &Selection) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    for spec in specs_for(Group::Lemmas, sel)? {
        match spec.family {
            DomainFamily::I | DomainFamily::II | DomainFamily::III => {
                for k in degrees(sel, 0..=4) {
                    let s = spec.clone();
                    tasks.push(Task::for_spec(
                        Group::Lemmas,
                        &spec,
                        Some(k),
                        "",
                        Box::new(move || {
                            let expected = lemmas::classical_sym_expected(&s, k)?;
                            let computed = sym_tangent(&s, k)?;
                            Ok(Outcome {
                                pass: expected == computed,
                                expected: expected.to_string(),
                                computed: computed.to_string(),
                            })
                        }),
                    ));
                }
            }
            _ => {
                let lines = lemmas::tabulated_lines(&spec)?;
                for (statement, expected) in lines {
                    let s = spec.clone();
                    tasks.push(Task::for_spec(
                        Group::Lemmas,
                        &spec,
                        None,
                        &format!("/{statement}"),
                        Box::new(move || {
                            let line = lemmas::LineCheck {
                                statement,
                                expected: expected.clone(),
                                computed: lemmas::compute_statement(&s, statement)?,
                            };
                            let mut computed = line.computed.to_string();
                            for (label, e, c) in line.discrepancies() {
                                computed.push_str(&format!(" [{label}: expected {e}, computed {c}]"));
                            }
                            Ok(Outcome { pass: line.pass(), expected: line.expected.to_string(), computed })
                        }),
                    ));
                }
            }
        }
    }
    Ok(tasks)
}

fn cross_tasks(sel: &Selection) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    for spec in specs_for(Group::Cross, sel)?.into_iter().filter(|s| s.schur.is_some()) {
        for k in degrees(sel, 1..=3) {
            let s = spec.clone();
            tasks.push(Task::for_spec(
                Group::Cross,
                &spec,
                Some(k),
                "",
                Box::new(move || {
                    let schur = sym_tangent(&s, k)?;
                    let chars = sym_tangent_via_characters(&s, k)?;
                    Ok(Outcome { pass: schur == chars, expected: schur.to_string(), computed: chars.to_string() })
                }),
            ));
        }
    }
    Ok(tasks)
}

fn invariant_tasks(sel: &Selection) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    for spec in specs_for(Group::Invariants, sel)? {
        for k in degrees(sel, 0..=spec.rank + 1) {
            let s = spec.clone();
            tasks.push(Task::for_spec(
                Group::Invariants,
                &spec,
                Some(k),
                "",
                Box::new(move || {
                    let bad = structural_invariants(&s, k)?;
                    Ok(Outcome {
                        expected: "no violations".into(),
                        pass: bad.is_empty(),
                        computed: if bad.is_empty() { "no violations".into() } else { bad.join("; ") },
                    })
                }),
            ));
        }
    }
    Ok(tasks)
}

/// Disagreements with transcribed statements that the checks work around.
fn findings(sel: &Selection) -> Result<Vec<String>> {
    let mut out = Vec::new();
    if !sel.groups.iter().any(|g| matches!(g, Group::Lemmas | Group::Generating)) {
        return Ok(out);
    }
    if sel.family.is_none_or(|f| f == DomainFamily::II) {
        let spec = catalog_n(DomainFamily::II, 6)?;
        for k in 2..=spec.rank {
            let printed = lemmas::stated_image_partition(DomainFamily::II, k);
            let derived = spec.image_partition(k);
            if printed != derived {
                out.push(format!(
                    "type II: the image J_{k} is printed as 𝕊_{} but the Hodge bundles give 𝕊_{}; the derived shape is used",
                    printed.map_or("-".into(), |p| p.to_string()),
                    derived.map_or("-".into(), |p| p.to_string())
                ));
            }
        }
    }
    if sel.family.is_none_or(|f| f == DomainFamily::IV) {
        out.push(
            "type IV: the tabulated lines assume so(n) is simple on the shape 2ε1+ε2; for n = 4 it splits, so the lines are checked from n = 5".into(),
        );
    }
    Ok(out)
}

fn plan(sel: &Selection) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    for group in Group::ALL.into_iter().filter(|g| sel.groups.contains(g)) {
        tasks.extend(match group {
            Group::Tables => tables_tasks(sel)?,
            Group::Bound => bound_tasks(sel)?,
            Group::Generating => generating_tasks(sel)?,
            Group::Higgs => higgs_tasks(sel)?,
            Group::Strata => strata_tasks(sel),
            Group::Lemmas => lemma_tasks(sel)?,
            Group::Cross => cross_tasks(sel)?,
            Group::Invariants => invariant_tasks(sel)?,
        });
    }
    Ok(tasks)
}

/// Builds the plan and runs it in parallel. Records keep plan order whatever
/// order the checks finish in. Errors in building the plan (bad parameters,
/// unreadable golden file) are returned directly.
pub fn run(sel: &Selection) -> Result<Run> {
    let tasks = plan(sel)?;
    let findings = findings(sel)?;
    let results: Vec<(CheckRecord, Option<Error>)> = tasks
        .par_iter()
        .map(|t| {
            let start = Instant::now();
            let outcome = (t.job)();
            let ms = if sel.timing { start.elapsed().as_millis() as u64 } else { 0 };
            let (expected, computed, pass, err) = match outcome {
                Ok(o) => (o.expected, o.computed, o.pass, None),
                Err(e) => (String::new(), format!("error: {e}"), false, Some(e)),
            };
            let record = CheckRecord {
                id: t.id.clone(),
                family: t.family.clone(),
                params: t.params.clone(),
                k: t.k,
                expected,
                computed,
                pass,
                ms,
            };
            (record, err)
        })
        .collect();
    let mut errors = Vec::new();
    let mut checks = Vec::with_capacity(results.len());
    for (record, err) in results {
        if let Some(e) = err {
            errors.push((record.id.clone(), e));
        }
        checks.push(record);
    }
    Ok(Run { report: Report::new(checks, findings), errors })
}

/// The domain selected by `--family` and its parameters, for `decompose`.
pub fn domain(family: DomainFamily, p: Option<usize>, q: Option<usize>, n: Option<usize>) -> Result<DomainSpec> {
    match family {
        DomainFamily::I => match (p, q) {
            (Some(p), Some(q)) => catalog_pq(p, q),
            _ => Err(Error::InvalidDomain("type I needs --p and --q".into())),
        },
        DomainFamily::V | DomainFamily::VI => catalog_exceptional(family),
        _ => match n {
            Some(n) => catalog_n(family, n),
            None => Err(Error::InvalidDomain(format!("type {family} needs --n"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only(group: Group) -> Selection {
        Selection { groups: vec![group], timing: false, ..Selection::default() }
    }

    #[test]
    fn default_matrix_sizes() {
        assert_eq!(plan(&only(Group::Tables)).unwrap().len(), 2);
        // 1 + 2 + 3 strata for n = 2, 3, 4
        assert_eq!(plan(&only(Group::Strata)).unwrap().len(), 6);
        // I: 10 shapes, II: n = 3..6, III: n = 2..4, IV: n = 3..8, V, VI
        assert_eq!(plan(&only(Group::Bound)).unwrap().len(), 10 + 4 + 3 + 6 + 2);
        assert_eq!(plan(&only(Group::Higgs)).unwrap().len(), 3);
        // 5 + 5 + 5 tabulated lines for IV(5..7), 5 for V, 8 for VI
        let lemma_ids: Vec<String> = plan(&only(Group::Lemmas)).unwrap().into_iter().map(|t| t.id).collect();
        assert_eq!(lemma_ids.iter().filter(|id| id.starts_with("lemmas/IV")).count(), 15);
        assert_eq!(lemma_ids.iter().filter(|id| id.starts_with("lemmas/VI")).count(), 8);
    }

    #[test]
    fn filters_narrow_the_plan() {
        let sel = Selection { family: Some(DomainFamily::I), p: Some(2), q: Some(3), ..only(Group::Generating) };
        let ids: Vec<String> = plan(&sel).unwrap().into_iter().map(|t| t.id).collect();
        assert_eq!(ids, vec!["generating/I(2,3)/k=2", "generating/I(2,3)/k=3"]);
        let sel = Selection { family: Some(DomainFamily::III), n: Some(6), k: Some(2), ..only(Group::Invariants) };
        let ids: Vec<String> = plan(&sel).unwrap().into_iter().map(|t| t.id).collect();
        assert_eq!(ids, vec!["invariants/III(6)/k=2"]);
    }

    #[test]
    fn report_round_trips() {
        let sel = Selection { family: Some(DomainFamily::V), ..only(Group::Generating) };
        let r = run(&sel).unwrap().report;
        assert!(r.pass);
        let text = r.to_json();
        assert_eq!(Report::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn bad_parameters_are_plan_errors() {
        let sel = Selection { family: Some(DomainFamily::IV), n: Some(2), ..only(Group::Bound) };
        assert!(run(&sel).is_err());
    }
}
