//! The reproduction table: every published value and bound recomputed with
//! the exact solvers, one row per instance.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdgame_core::enumerate::{
    enumerate_trees, isolate_free_graphs, random_graph, random_isolate_free_graph, random_leaf_support_tree,
};
use tdgame_core::families::disjoint_union;
use tdgame_core::strategies::{DominatorPathPolicy, StallerPartitionPolicy};
use tdgame_core::verify::{check_continuation, describe, ContinuationMode, InvariantProfile};
use tdgame_core::{
    best_response_length, family, gamma_t, grundy_t, gtg, gti, has_perfect_matching, induced_matching_number,
    ooir, upper_gamma_t, FamilySpec, Graph, VertexSet,
};

use crate::format::{parse_graph, serialize_graph, GraphFormat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    AtMost,
    AtLeast,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        }
    }

    fn holds(self, computed: usize, expected: usize) -> bool {
        match self {
            Relation::Eq => computed == expected,
            Relation::AtMost => computed <= expected,
            Relation::AtLeast => computed >= expected,
        }
    }
}

/// `quantity relation value`, e.g. `gti <= 10`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub quantity: &'static str,
    pub relation: Relation,
    pub value: usize,
}

fn eq(quantity: &'static str, value: usize) -> Expectation {
    Expectation { quantity, relation: Relation::Eq, value }
}

fn at_most(quantity: &'static str, value: usize) -> Expectation {
    Expectation { quantity, relation: Relation::AtMost, value }
}

fn at_least(quantity: &'static str, value: usize) -> Expectation {
    Expectation { quantity, relation: Relation::AtLeast, value }
}

/// Computed values, one per expectation, plus an optional remark such as a
/// counterexample.
pub struct Outcome {
    pub values: Vec<usize>,
    pub note: Option<String>,
}

impl From<Vec<usize>> for Outcome {
    fn from(values: Vec<usize>) -> Self {
        Outcome { values, note: None }
    }
}

type Compute = Box<dyn Fn() -> Result<Outcome, String> + Send + Sync>;

/// One row of the table before it runs.
pub struct Claim {
    /// Acceptance criterion number, `1..=15`.
    pub criterion: u8,
    pub id: &'static str,
    pub instance: String,
    pub citation: &'static str,
    pub expected: Vec<Expectation>,
    compute: Compute,
}

impl Claim {
    fn new(
        criterion: u8,
        id: &'static str,
        instance: impl Into<String>,
        citation: &'static str,
        expected: Vec<Expectation>,
        compute: impl Fn() -> Result<Outcome, String> + Send + Sync + 'static,
    ) -> Self {
        Claim { criterion, id, instance: instance.into(), citation, expected, compute: Box::new(compute) }
    }

    pub fn run(&self) -> SuiteRow {
        let start = Instant::now();
        let result = (self.compute)();
        let elapsed = start.elapsed();
        let (computed, note) = match result {
            Ok(o) => (Some(o.values), o.note),
            Err(e) => (None, Some(format!("error: {e}"))),
        };
        let passed = computed.as_ref().is_some_and(|values| {
            values.len() == self.expected.len()
                && self.expected.iter().zip(values).all(|(e, &v)| e.relation.holds(v, e.value))
        });
        SuiteRow {
            criterion: self.criterion,
            id: self.id,
            instance: self.instance.clone(),
            citation: self.citation,
            expected: self.expected.clone(),
            computed,
            note,
            passed,
            elapsed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteRow {
    pub criterion: u8,
    pub id: &'static str,
    pub instance: String,
    pub citation: &'static str,
    pub expected: Vec<Expectation>,
    /// `None` when the computation itself failed.
    pub computed: Option<Vec<usize>>,
    pub note: Option<String>,
    pub passed: bool,
    pub elapsed: Duration,
}

impl SuiteRow {
    pub fn expected_text(&self) -> String {
        join(self.expected.iter().map(|e| format!("{}{}{}", e.quantity, e.relation.symbol(), e.value)))
    }

    pub fn computed_text(&self) -> String {
        match &self.computed {
            Some(values) => {
                join(self.expected.iter().zip(values).map(|(e, v)| format!("{}={v}", e.quantity)))
            }
            None => "-".into(),
        }
    }
}

fn join(parts: impl Iterator<Item = String>) -> String {
    parts.collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteRow> {
        self.rows.iter().filter(|r| !r.passed)
    }

    /// Rows belonging to one acceptance criterion.
    pub fn criterion(&self, c: u8) -> impl Iterator<Item = &SuiteRow> {
        self.rows.iter().filter(move |r| r.criterion == c)
    }

    /// Plain-text table. Without `timing` the output depends only on the
    /// computed values.
    pub fn render(&self, timing: bool, style: Style) -> String {
        let mut out = String::new();
        let mut header = String::from("#  claim            instance                  expected                          computed                          status");
        if timing {
            header.push_str("  time");
        }
        let _ = writeln!(out, "{header}");
        for r in &self.rows {
            let status = style.status(r.passed);
            let _ = write!(
                out,
                "{:<2} {:<16} {:<25} {:<33} {:<33} {status}",
                r.criterion,
                r.id,
                r.instance,
                r.expected_text(),
                r.computed_text()
            );
            if timing {
                let _ = write!(out, "  {:.3}s", r.elapsed.as_secs_f64());
            }
            out.push('\n');
            let _ = writeln!(out, "     [{}]", r.citation);
            if let Some(note) = &r.note {
                let _ = writeln!(out, "     {note}");
            }
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} rows, {} passed, {failed} failed: {}",
            self.rows.len(),
            self.rows.len() - failed,
            style.status(failed == 0)
        );
        out
    }
}

/// Whether to color PASS/FAIL with ANSI escapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Color,
}

impl Style {
    fn status(self, ok: bool) -> String {
        let word = if ok { "PASS" } else { "FAIL" };
        match self {
            Style::Plain => word.into(),
            Style::Color => format!("\x1b[{}m{word}\x1b[0m", if ok { 32 } else { 31 }),
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true, Style::Plain))
    }
}

fn build(spec: &str) -> Result<Graph, String> {
    let spec: FamilySpec = spec.parse().map_err(|e| format!("{e}"))?;
    family(&spec).map_err(|e| format!("{e}"))
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn gti0(g: &Graph) -> Result<usize, String> {
    gti(g, VertexSet::EMPTY).map_err(err)
}

/// Computes the named quantities for a family instance.
fn family_claim(
    criterion: u8,
    id: &'static str,
    spec: String,
    citation: &'static str,
    expected: Vec<Expectation>,
) -> Claim {
    let quantities: Vec<&'static str> = expected.iter().map(|e| e.quantity).collect();
    let instance = spec.clone();
    Claim::new(criterion, id, instance, citation, expected, move || {
        let g = build(&spec)?;
        let values = quantities.iter().map(|q| quantity(&g, q)).collect::<Result<Vec<_>, _>>()?;
        Ok(values.into())
    })
}

fn quantity(g: &Graph, q: &str) -> Result<usize, String> {
    Ok(match q {
        "gt" => gamma_t(g).map_err(err)?.value,
        "ugt" => upper_gamma_t(g).map_err(err)?.value,
        "gti" => gti0(g)?,
        "gtg" => gtg(g).map_err(err)?,
        "grt" => grundy_t(g).map_err(err)?,
        "ooir" => ooir(g).map_err(err)?.value,
        "nui" => induced_matching_number(g).map_err(err)?.value,
        "2nui" => 2 * induced_matching_number(g).map_err(err)?.value,
        _ => return Err(format!("unknown quantity {q}")),
    })
}

const PATHS: &str = "gti(P_n) = Γ_t(P_n) = 2⌊(n+1)/3⌋";
const CYCLE_POWERS: &str = "Γ_t(C_{2k+3}^k) = 2 < 3 = gti(C_{2k+3}^k)";
const GK: &str = "gti(G_k) = 3k, Γ_t(G_k) = 2k, OOIR(G_k) = 2k";
const FK: &str = "gti(F_k) = 4, OOIR(F_k) = k-1, γ_tg(F_k) = 3";
const BK: &str = "gti(B_k) = 2, ν_I(B_k) = k, γ_tg = γ_t = Γ_t = 2";
const JK: &str = "gti(J_k) = k+1, ν_I(J_k) = k";
const SUBSTAR1: &str = "once-subdivided K_{1,k}: gti = Γ_t = 2k, γ_tg = k+1";
const SUBSTAR3: &str = "thrice-subdivided K_{1,k}: gti <= 2k+2 = OOIR, γ_tg >= 5k/2";
const CORONA: &str = "K_k ∘ K_1: gti = γ_t = Γ_t = k, γ_tg = k+1, 2ν_I = 2";
const LEAF_SUPPORT: &str = "every vertex a leaf or support: gti(T) = Γ_t(T) = #supports, or 2 for a star";
const CONTINUATION: &str = "B ⊆ A implies gti(G|A) <= gti(G|B)";
const LATTICE: &str =
    "γ_t <= Γ_t <= gti <= γ_gr^t, Γ_t <= OOIR <= γ_gr^t, γ_t <= γ_tg <= γ_gr^t, 2ν_I <= OOIR (= when bipartite)";
const GRUNDY: &str = "trees: γ_gr^t(T) = n iff T has a perfect matching";
const STRATEGIES: &str = "path strategy <= 2⌊(n+1)/3⌋ <= partition strategy";
const PROPERTIES: &str = "gti additive over components; witnesses revalidate; formats round-trip";

/// Seeds for the randomized rows; fixed so the table is reproducible.
pub const LEAF_SUPPORT_SEED: u64 = 36;
pub const CONTINUATION_SEED: u64 = 21;
pub const PROPERTY_SEED: u64 = 15;

/// The complete table, in criterion order.
pub fn paper_claims() -> Vec<Claim> {
    let mut claims = Vec::new();

    for n in 2..=15 {
        let v = 2 * ((n + 1) / 3);
        claims.push(family_claim(1, "paths", format!("path:{n}"), PATHS, vec![eq("gti", v), eq("ugt", v)]));
    }
    for k in 2..=4 {
        let spec = format!("cyclepower:{},{k}", 2 * k + 3);
        claims.push(family_claim(2, "cycle-powers", spec, CYCLE_POWERS, vec![eq("ugt", 2), eq("gti", 3)]));
    }
    for k in 1..=2 {
        let e = vec![eq("gti", 3 * k), eq("ugt", 2 * k), eq("ooir", 2 * k)];
        claims.push(family_claim(3, "gk", format!("gk:{k}"), GK, e));
    }
    for k in 5..=8 {
        let e = vec![eq("gti", 4), eq("ooir", k - 1), eq("gtg", 3)];
        claims.push(family_claim(4, "fk", format!("fk:{k}"), FK, e));
    }
    for k in 1..=5 {
        let e = vec![eq("gti", 2), eq("nui", k), eq("gtg", 2), eq("gt", 2), eq("ugt", 2)];
        claims.push(family_claim(5, "bk", format!("bk:{k}"), BK, e));
    }
    for k in 1..=5 {
        claims.push(family_claim(6, "jk", format!("jk:{k}"), JK, vec![eq("gti", k + 1), eq("nui", k)]));
    }
    for k in 3..=6 {
        let e = vec![eq("gti", 2 * k), eq("ugt", 2 * k), eq("gtg", k + 1)];
        claims.push(family_claim(7, "substar-1", format!("substar:{k},1"), SUBSTAR1, e));
    }
    {
        let k = 4;
        let e = vec![
            at_most("gti", 2 * k + 2),
            eq("ooir", 2 * k + 2),
            eq("nui", 5),
            at_least("gtg", (5 * k).div_ceil(2)),
        ];
        claims.push(family_claim(8, "substar-3", format!("substar:{k},3"), SUBSTAR3, e));
    }
    for k in 2..=5 {
        let e = vec![eq("gti", k), eq("gt", k), eq("ugt", k), eq("gtg", k + 1), eq("2nui", 2)];
        claims.push(family_claim(9, "corona", format!("corona:complete{k}"), CORONA, e));
    }
    leaf_support_claims(&mut claims);
    continuation_claims(&mut claims);
    for n in 2..=7 {
        claims.push(Claim::new(
            12,
            "lattice",
            format!("all isolate-free n={n}"),
            LATTICE,
            vec![eq("violating graphs", 0)],
            move || {
                let mut bad = 0;
                let mut first = None;
                for g in isolate_free_graphs(n).map_err(err)? {
                    let p = InvariantProfile::compute(&g).map_err(err)?;
                    if !p.violations().is_empty() {
                        bad += 1;
                        first.get_or_insert_with(|| format!("{}: {:?}", describe(&g), p.violations()));
                    }
                }
                Ok(Outcome { values: vec![bad], note: first.map(|f| format!("counterexample: {f}")) })
            },
        ));
    }
    for n in 2..=10 {
        claims.push(Claim::new(
            13,
            "grundy-matching",
            format!("all trees n={n}"),
            GRUNDY,
            vec![eq("mismatches", 0)],
            move || {
                let mut bad = 0;
                for t in enumerate_trees(n).map_err(err)? {
                    let full = grundy_t(&t).map_err(err)? == n;
                    bad += usize::from(full != has_perfect_matching(&t).map_err(err)?.holds());
                }
                Ok(vec![bad].into())
            },
        ));
    }
    for n in 2..=15 {
        let target = 2 * ((n + 1) / 3);
        claims.push(Claim::new(
            14,
            "strategies",
            format!("path:{n}"),
            STRATEGIES,
            vec![at_most("dominator", target), at_least("staller", target)],
            move || {
                let g = build(&format!("path:{n}"))?;
                let dom = DominatorPathPolicy::for_graph(&g).map_err(err)?;
                let st = StallerPartitionPolicy::new(&g).map_err(err)?;
                Ok(vec![
                    best_response_length(&g, VertexSet::EMPTY, &dom).map_err(err)?,
                    best_response_length(&g, VertexSet::EMPTY, &st).map_err(err)?,
                ]
                .into())
            },
        ));
    }
    property_claims(&mut claims);
    claims
}

fn leaf_support_claims(claims: &mut Vec<Claim>) {
    let mut rng = ChaCha8Rng::seed_from_u64(LEAF_SUPPORT_SEED);
    for i in 0..20 {
        let (tree, supports) = random_leaf_support_tree(12, &mut rng).expect("max order 12 is valid");
        let instance = format!("tree#{i} n={} s={supports}", tree.order());
        // A star has one support but still needs two vertices.
        let want = supports.max(2);
        claims.push(Claim::new(
            10,
            "leaf-support",
            instance,
            LEAF_SUPPORT,
            vec![eq("gti", want), eq("ugt", want)],
            move || Ok(vec![gti0(&tree)?, upper_gamma_t(&tree).map_err(err)?.value].into()),
        ));
    }
}

fn continuation_claims(claims: &mut Vec<Claim>) {
    fn note(g: &Graph, v: &tdgame_core::verify::ContinuationViolation) -> String {
        format!(
            "counterexample: {} A={} B={}: gti(G|A)={} > gti(G|B)={}",
            describe(g),
            v.a,
            v.b,
            v.value_a,
            v.value_b
        )
    }
    for n in 2..=5 {
        claims.push(Claim::new(
            11,
            "continuation",
            format!("all isolate-free n={n}, all pairs"),
            CONTINUATION,
            vec![eq("violating pairs", 0)],
            move || {
                let mut count = 0;
                let mut first = None;
                for g in isolate_free_graphs(n).map_err(err)? {
                    let r = check_continuation(&g, ContinuationMode::Exhaustive).map_err(err)?;
                    count += r.violations.len();
                    if let Some(v) = r.violations.first() {
                        first.get_or_insert_with(|| note(&g, v));
                    }
                }
                Ok(Outcome { values: vec![count], note: first })
            },
        ));
    }
    claims.push(Claim::new(
        11,
        "continuation",
        "30 random n<=7, 500 pairs each",
        CONTINUATION,
        vec![eq("violating pairs", 0)],
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(CONTINUATION_SEED);
            let mut count = 0;
            let mut first = None;
            for i in 0..30 {
                let n = rng.gen_range(2..=7);
                let (g, _) = random_isolate_free_graph(n, 0.5, &mut rng, 10_000).map_err(err)?;
                let mode = ContinuationMode::Sampled { count: 500, seed: CONTINUATION_SEED + i };
                let r = check_continuation(&g, mode).map_err(err)?;
                count += r.violations.len();
                if let Some(v) = r.violations.first() {
                    first.get_or_insert_with(|| note(&g, v));
                }
            }
            Ok(Outcome { values: vec![count], note: first })
        },
    ));
}

fn property_claims(claims: &mut Vec<Claim>) {
    claims.push(Claim::new(
        15,
        "additivity",
        "50 seeded unions, n<=10",
        PROPERTIES,
        vec![eq("mismatches", 0)],
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
            let mut bad = 0;
            for _ in 0..50 {
                let n1 = rng.gen_range(2..=5);
                let n2 = rng.gen_range(2..=10 - n1);
                let (g1, _) = random_isolate_free_graph(n1, 0.5, &mut rng, 10_000).map_err(err)?;
                let (g2, _) = random_isolate_free_graph(n2, 0.5, &mut rng, 10_000).map_err(err)?;
                let whole = gti0(&disjoint_union(&g1, &g2).map_err(err)?)?;
                bad += usize::from(whole != gti0(&g1)? + gti0(&g2)?);
            }
            Ok(vec![bad].into())
        },
    ));
    claims.push(Claim::new(
        15,
        "witnesses",
        "100 seeded graphs n<=10",
        PROPERTIES,
        vec![eq("rejected witnesses", 0)],
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED + 1);
            let mut bad = 0;
            for _ in 0..100 {
                let n = rng.gen_range(2..=10);
                let (g, _) = random_isolate_free_graph(n, 0.4, &mut rng, 10_000).map_err(err)?;
                let values = [
                    gamma_t(&g).map_err(err)?,
                    upper_gamma_t(&g).map_err(err)?,
                    ooir(&g).map_err(err)?,
                    induced_matching_number(&g).map_err(err)?,
                    has_perfect_matching(&g).map_err(err)?,
                ];
                bad += values.iter().filter(|v| !v.certifies(&g)).count();
            }
            Ok(vec![bad].into())
        },
    ));
    claims.push(Claim::new(
        15,
        "round-trip",
        "100 seeded graphs, both formats",
        PROPERTIES,
        vec![eq("failures", 0)],
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED + 2);
            let mut bad = 0;
            for _ in 0..100 {
                let n = rng.gen_range(0..=20);
                let p = rng.gen_range(0.0..1.0);
                let g = random_graph(n, p, &mut rng).map_err(err)?;
                for format in [GraphFormat::EdgeList, GraphFormat::Graph6] {
                    let text = serialize_graph(&g, format);
                    let ok = parse_graph(&text).is_ok_and(|h| h == g && serialize_graph(&h, format) == text);
                    bad += usize::from(!ok);
                }
            }
            Ok(vec![bad].into())
        },
    ));
}

pub fn run_claims(claims: &[Claim]) -> SuiteReport {
    SuiteReport { rows: claims.iter().map(Claim::run).collect() }
}

pub fn run_paper_suite() -> SuiteReport {
    run_claims(&paper_claims())
}
