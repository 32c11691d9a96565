//! Embedded fixture checks and parameterized property checks, each producing
//! a [`Check`] line of a machine-readable [`Report`].

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::canonical::{
    a_vector, canonical_basis, canonical_basis_with, verify_theorem41, BasisMatrix, CanonicalSolver,
    IntermediatePath,
};
use crate::crystal::{basic_component, eps, etilde, ftilde, phi};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::fock::{
    apply_cartan_bracket, apply_e, apply_f, apply_f_divided, f_on_basis, normal_order_by, straighten, FockVector,
    WedgeWord,
};
use crate::laurent::LaurentPoly;
use crate::modular::{
    classical_apply, independence_check_theorem61, partition_identity_check, quotient_map, reduce_external_matrix,
    reduced_matrix, reduced_matrix_from_basis, ClassicalGenerator,
};
use crate::partitions::{
    enumerate_dp, enumerate_dp_h, enumerate_dpr_h, hbar_core, ladders, residue_content, shift_by_h_multiple,
    Modulus, Partition,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Reported only; never fails the suite.
    pub informational: bool,
    pub detail: String,
    pub millis: u64,
}

impl Check {
    fn timed(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        Check {
            name: name.to_string(),
            passed,
            informational: false,
            detail,
            millis: start.elapsed().as_millis() as u64,
        }
    }

    fn informational(mut self) -> Check {
        self.informational = true;
        self.passed = true;
        self
    }

    /// `PASS name: detail`.
    pub fn line(&self) -> String {
        let status = match (self.passed, self.informational) {
            (_, true) => "INFO",
            (true, _) => "PASS",
            (false, _) => "FAIL",
        };
        format!("{status} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Paper,
    Properties,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Suite::Paper),
            "properties" => Ok(Suite::Properties),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite {other:?} (expected paper, properties or all)"))),
        }
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Paper => "paper",
            Suite::Properties => "properties",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: Suite, checks: Vec<Check>) -> Report {
        Report { suite: suite.name().to_string(), passed: checks.iter().all(|c| c.passed), checks }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.line());
            out.push('\n');
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

/// Parameters of the property checks.
#[derive(Clone, Debug)]
pub struct PropertyConfig {
    pub max_degree: usize,
    pub words: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for PropertyConfig {
    fn default() -> Self {
        PropertyConfig { max_degree: 9, words: 10_000, samples: 200, seed: 0x5eed }
    }
}

pub fn run(suite: Suite, config: &PropertyConfig) -> Report {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Paper | Suite::All) {
        checks.extend(paper_checks());
    }
    if matches!(suite, Suite::Properties | Suite::All) {
        checks.extend(property_checks(config));
    }
    Report::new(suite, checks)
}

fn modulus(h: usize) -> Modulus {
    Modulus::new(h).expect("odd modulus")
}

fn vector_mismatch(expected: &FockVector, got: &FockVector) -> Option<String> {
    let rows: std::collections::BTreeSet<&Partition> = expected.support().chain(got.support()).collect();
    rows.into_iter().rev().find_map(|row| {
        let (e, g) = (expected.coeff(row), got.coeff(row));
        (e != g).then(|| format!("row {row}: expected {e}, got {g}"))
    })
}

/// Fixture checks against the published displays and tables.
pub fn paper_checks() -> Vec<Check> {
    vec![
        Check::timed("fock-actions", check_fock_actions),
        Check::timed("canonical-m9", check_canonical_m9),
        Check::timed("table1", check_table1),
        Check::timed("p7-m21-columns", check_p7_m21),
        Check::timed("table3-pipeline", check_table3),
        Check::timed("crystal-fixtures", check_crystal_fixtures),
        Check::timed("ladder-monomial", check_ladder_words),
        Check::timed("dpr-count-m10", || {
            let report = partition_identity_check(modulus(3), 10)?;
            let row = &report.rows[10];
            Ok((report.passed() && row.regular == 4, format!("|DPR_3(10)| = {}, series {}", row.regular, row.series)))
        }),
        Check::timed("m11-columns", || {
            let labels: Vec<String> = enumerate_dpr_h(modulus(3), 11).iter().rev().map(|p| p.to_string()).collect();
            let expected = ["3332", "4331", "5321", "542", "641"];
            Ok((labels == expected, labels.join(" ")))
        }),
    ]
}

pub fn check_fock_actions() -> Result<(bool, String)> {
    let mut failures = Vec::new();
    let fixtures = fixtures::fock_actions()?;
    for fx in &fixtures {
        let got = apply_f(fx.h, fx.color, &FockVector::basis(fx.input.clone()))?;
        if let Some(m) = vector_mismatch(&fx.expected, &got) {
            failures.push(format!("{}: {m}", fx.name));
        }
    }
    Ok((failures.is_empty(), if failures.is_empty() { format!("{} actions exact", fixtures.len()) } else { failures.join("; ") }))
}

pub fn check_canonical_m9() -> Result<(bool, String)> {
    let fx = fixtures::canonical_m9()?;
    let basis = canonical_basis(fx.h, fx.m)?;
    let mut failures = Vec::new();
    for (mu, expected) in &fx.a_vectors {
        if let Some(m) = vector_mismatch(expected, &a_vector(fx.h, mu)?) {
            failures.push(format!("A({mu}) {m}"));
        }
    }
    for (mu, expected) in &fx.g_vectors {
        let got = basis.column(mu).cloned().unwrap_or_default();
        if let Some(m) = vector_mismatch(expected, &got) {
            failures.push(format!("G({mu}) {m}"));
        }
    }
    let ok = failures.is_empty();
    Ok((ok, if ok { format!("{} A and {} G vectors exact", fx.a_vectors.len(), fx.g_vectors.len()) } else { failures.join("; ") }))
}

/// The published Table 1 as a basis matrix.
pub fn table1_matrix() -> Result<BasisMatrix> {
    let t = fixtures::table1()?;
    let mut columns: BTreeMap<Partition, FockVector> = t.columns.iter().map(|c| (c.clone(), FockVector::zero())).collect();
    for (row, col, value) in t.cells() {
        columns.get_mut(col).expect("column").add_term(row.clone(), value);
    }
    Ok(BasisMatrix::new(t.h, t.m, columns))
}

pub fn check_table1() -> Result<(bool, String)> {
    let t = fixtures::table1()?;
    let basis = canonical_basis(t.h, t.m)?;
    let mut failures = Vec::new();
    let mut count = 0;
    for (row, col, value) in t.cells() {
        count += 1;
        let got = basis.entry(row, col);
        if &got != value {
            failures.push(format!("d[{row},{col}] expected {value}, got {got}"));
        }
    }
    if basis.labels().len() != t.columns.len() {
        failures.push(format!("{} columns computed, {} published", basis.labels().len(), t.columns.len()));
    }
    if basis.rows().iter().filter(|r| basis.labels().iter().any(|c| !basis.entry(r, c).is_zero())).count()
        > t.rows.len()
    {
        failures.push("nonzero rows outside the published table".into());
    }
    if basis.render_table() != table1_matrix()?.render_table() {
        failures.push("rendered table differs from the fixture rendering".into());
    }
    let ok = failures.is_empty();
    Ok((ok, if ok { format!("{count} entries exact, rendering identical") } else { failures.join("; ") }))
}

pub fn check_p7_m21() -> Result<(bool, String)> {
    let fx = fixtures::p7_m21()?;
    let basis = canonical_basis(fx.h, fx.m)?;
    let mut failures = Vec::new();
    for (mu, expected) in &fx.g_vectors {
        let got = basis.column(mu).cloned().unwrap_or_default();
        if let Some(m) = vector_mismatch(expected, &got) {
            failures.push(format!("G({mu}) {m}"));
        }
        let bottom = got.support().next_back().cloned();
        if bottom != fx.bottom_row {
            failures.push(format!("G({mu}) bottom row {bottom:?}"));
        }
    }
    let ok = failures.is_empty();
    let bottom = fx.bottom_row.map(|b| b.to_string()).unwrap_or_default();
    Ok((ok, if ok { format!("{} columns exact, shared bottom row ({bottom})", fx.g_vectors.len()) } else { failures.join("; ") }))
}

pub fn check_table3() -> Result<(bool, String)> {
    let published = fixtures::table3_matrix()?;
    let computed = reduced_matrix(published.p, published.m)?;
    let external = reduce_external_matrix(published.p, &fixtures::table2()?)?;
    let mut failures = Vec::new();
    if computed != published {
        failures.push("reduced_matrix(3,10) differs from Table 3".to_string());
    }
    if external != published {
        failures.push("reduced Table 2 differs from Table 3".to_string());
    }
    if computed.rows().len() != enumerate_dp(published.m).len() {
        failures.push("row count".into());
    }
    let ok = failures.is_empty();
    Ok((ok, if ok { format!("{} columns x {} rows exact, Table 2 reduces to the same", computed.columns.len(), computed.rows().len()) } else { failures.join("; ") }))
}

pub fn check_crystal_fixtures() -> Result<(bool, String)> {
    let fx = fixtures::crystal()?;
    let h = fx.h;
    let mut failures = Vec::new();
    for s in &fx.strings {
        for w in s.path.windows(2) {
            if ftilde(h, s.color, &w[0])?.as_ref() != Some(&w[1]) {
                failures.push(format!("f~_{} {} != {}", s.color, w[0], w[1]));
            }
            if etilde(h, s.color, &w[1])?.as_ref() != Some(&w[0]) {
                failures.push(format!("e~_{} {} != {}", s.color, w[1], w[0]));
            }
        }
        let last = s.path.last().expect("non-empty string");
        if ftilde(h, s.color, last)?.is_some() {
            failures.push(format!("string of {} continues past {last}", s.path[0]));
        }
    }
    for (color, vertex, value) in &fx.phi {
        let got = phi(h, *color, vertex)?;
        if got != *value {
            failures.push(format!("phi_{color}({vertex}) = {got}"));
        }
    }
    let (m, expected) = &fx.dpr_h;
    let graph = basic_component(h, *m)?;
    let mut layer = graph.vertices_of_degree(*m);
    let mut want = expected.clone();
    layer.sort();
    want.sort();
    if layer != want {
        failures.push(format!("degree {m} layer {layer:?}"));
    }
    let (m, expected) = &fx.dp_h;
    if &enumerate_dp_h(h, *m) != expected {
        failures.push(format!("DP_{h}({m}) enumeration"));
    }
    let ok = failures.is_empty();
    Ok((ok, if ok { format!("{} strings, degree-{} layer and DP_h({}) exact", fx.strings.len(), fx.dpr_h.0, fx.dp_h.0) } else { failures.join("; ") }))
}

pub fn check_ladder_words() -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for fx in fixtures::ladder_words()? {
        let d = ladders(fx.h, &fx.partition)?;
        if d.ladders.len() != fx.ladders || d.monomial_word() != fx.word {
            failures.push(format!("{}: {} ladders, {}", fx.partition, d.ladders.len(), d.monomial_word()));
        }
    }
    Ok((failures.is_empty(), if failures.is_empty() { "ladder words exact".into() } else { failures.join("; ") }))
}

/// Property checks scaled by `config.max_degree`.
pub fn property_checks(config: &PropertyConfig) -> Vec<Check> {
    let d = config.max_degree;
    let mut checks = Vec::new();
    for h in [3, 5, 7] {
        checks.push(Check::timed(&format!("theorem41-h{h}"), || check_theorem41(modulus(h), d)));
    }
    checks.push(Check::timed("shift-equivariance-h3", || check_shift_equivariance(modulus(3), d + 1)));
    checks.push(Check::timed("normal-order-confluence", || check_confluence(config.words, config.seed)));
    checks.push(Check::timed("fast-slow-h3", || check_fast_slow(modulus(3), d + 1)));
    checks.push(Check::timed("a-in-g-h3", || check_a_in_g(modulus(3), d + 1)));
    for h in [3, 5, 7] {
        checks.push(Check::timed(&format!("vacuum-h{h}"), || check_vacuum(modulus(h))));
    }
    for p in [3, 5] {
        checks.push(Check::timed(&format!("intertwiner-p{p}"), || check_intertwiner(modulus(p), d)));
    }
    checks.push(Check::timed("divided-powers", || check_divided_powers(d)));
    checks.push(Check::timed("commutator", || check_commutator(d, config.samples, config.seed)));
    checks.push(Check::timed("theorem61-p3", || check_rank(modulus(3), d + 3)));
    for p in [3, 5, 7] {
        checks.push(Check::timed(&format!("partition-identity-p{p}"), || check_partition_identity(modulus(p), 40)));
    }
    checks.push(Check::timed("string-lengths", || check_string_lengths(d)));
    checks.push(Check::timed("content-core", || check_content_core(d + 3)));
    checks.push(Check::timed("nonnegativity", || nonnegativity_report(d + 1)).informational());
    checks
}

/// Theorem 4.1 assertions on every degree `<= max_m`.
pub fn check_theorem41(h: Modulus, max_m: usize) -> Result<(bool, String)> {
    let mut solver = CanonicalSolver::new(h, IntermediatePath::Fast);
    let (mut columns, mut entries) = (0, 0);
    for m in 0..=max_m {
        let report = verify_theorem41(solver.basis(m)?);
        columns += report.columns_checked;
        entries += report.entries_checked;
        if let Some(v) = report.violations.first() {
            return Ok((false, format!("h={h} m={m}: {:?} in column {} at row {} ({})", v.kind, v.column, v.row, v.entry)));
        }
    }
    Ok((true, format!("h={h}, m<={max_m}: {columns} columns, {entries} entries")))
}

/// `λ ↦ λ + hμ` commutes with `ẽ_i`, `f̃_i` on the basic component.
pub fn check_shift_equivariance(h: Modulus, max_m: usize) -> Result<(bool, String)> {
    let graph = basic_component(h, max_m)?;
    let shifts: Vec<Partition> = (1..=3).flat_map(crate::partitions::enumerate_all).collect();
    let mut tested = 0;
    for nu in &shifts {
        for lambda in &graph.vertices {
            let shifted = shift_by_h_multiple(h, lambda, nu);
            for i in h.colors() {
                tested += 1;
                let f_then = ftilde(h, i, lambda)?.map(|x| shift_by_h_multiple(h, &x, nu));
                let e_then = etilde(h, i, lambda)?.map(|x| shift_by_h_multiple(h, &x, nu));
                if f_then != ftilde(h, i, &shifted)? || e_then != etilde(h, i, &shifted)? {
                    return Ok((false, format!("shift by {h}*{nu} of {lambda}, color {i}")));
                }
            }
        }
    }
    Ok((true, format!("{tested} operator applications, {} vertices", graph.vertices.len())))
}

/// Random word produced by one generator letter acting on a `DP_h` word.
fn random_action_word(rng: &mut StdRng, h: Modulus) -> WedgeWord {
    let m = rng.gen_range(1..=12);
    let pool = enumerate_dp_h(h, m);
    let mut w = pool[rng.gen_range(0..pool.len())].parts().to_vec();
    let k = rng.gen_range(0..=w.len());
    if k == w.len() {
        w.push(1);
    } else if rng.gen_bool(0.5) {
        w[k] += 1;
    } else {
        w[k] -= 1;
    }
    WedgeWord::new(w)
}

/// Straightening with random rule order agrees with leftmost-first order.
pub fn check_confluence(words: usize, seed: u64) -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pick_rng = StdRng::seed_from_u64(seed ^ 0x9e37_79b9);
    for n in 0..words {
        let h = modulus([3, 5, 7][n % 3]);
        let word = random_action_word(&mut rng, h);
        let reference = straighten(h, &word)?;
        let random = normal_order_by(h, &word, |positions| pick_rng.gen_range(0..positions.len()))?;
        if reference != random {
            return Ok((false, format!("h={h} word {:?}: {reference:?} vs {random:?}", word.0)));
        }
    }
    Ok((true, format!("{words} words confluent")))
}

pub fn check_fast_slow(h: Modulus, max_m: usize) -> Result<(bool, String)> {
    let mut columns = 0;
    for m in 0..=max_m {
        let fast = canonical_basis_with(h, m, IntermediatePath::Fast)?;
        let slow = canonical_basis_with(h, m, IntermediatePath::Slow)?;
        columns += fast.len();
        if fast != slow {
            return Ok((false, format!("h={h} m={m} differs")));
        }
    }
    Ok((true, format!("h={h}, m<={max_m}: {columns} columns identical")))
}

/// The `q = 1` quotient intertwines the q-Fock action with the classical one.
pub fn check_intertwiner(p: Modulus, max_m: usize) -> Result<(bool, String)> {
    let mut tested = 0;
    for m in 0..=max_m {
        for lambda in enumerate_dp_h(p, m) {
            let v = FockVector::basis(lambda.clone());
            let image = quotient_map(p, &v);
            for i in p.colors() {
                if m < max_m {
                    tested += 1;
                    let lhs = quotient_map(p, &apply_f(p, i, &v)?);
                    if lhs != classical_apply(p, ClassicalGenerator::F(i), &image) {
                        return Ok((false, format!("f_{i} on |{lambda}>, p={p}")));
                    }
                }
                tested += 1;
                let lhs = quotient_map(p, &apply_e(p, i, &v)?);
                if lhs != classical_apply(p, ClassicalGenerator::E(i), &image) {
                    return Ok((false, format!("e_{i} on |{lambda}>, p={p}")));
                }
            }
        }
    }
    Ok((true, format!("p={p}, m<={max_m}: {tested} generator applications")))
}

/// `f_i^k / [k]_i!` stays integral on every basis vector.
pub fn check_divided_powers(max_m: usize) -> Result<(bool, String)> {
    let mut tested = 0;
    for h in [3, 5, 7].map(modulus) {
        for m in 0..max_m.saturating_sub(1) {
            for lambda in enumerate_dp_h(h, m) {
                let v = FockVector::basis(lambda);
                for i in h.colors() {
                    for k in 2..=(max_m - m).min(4) {
                        tested += 1;
                        apply_f_divided(h, i, k, &v)?;
                    }
                }
            }
        }
    }
    Ok((true, format!("{tested} divided powers exact")))
}

fn random_poly(rng: &mut StdRng) -> LaurentPoly {
    LaurentPoly::from_terms((0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(-4..=4i64), rng.gen_range(-3..=3i64))))
}

/// `[e_i, f_j] = δ_ij (t_i - t_i^{-1}) / (q_i - q_i^{-1})` on random vectors.
pub fn check_commutator(max_m: usize, samples: usize, seed: u64) -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(seed);
    for s in 0..samples {
        let h = modulus([3, 5, 7][s % 3]);
        let m = rng.gen_range(0..=max_m);
        let pool = enumerate_dp_h(h, m);
        let mut v = FockVector::zero();
        for _ in 0..rng.gen_range(1..=4) {
            v.add_term(pool[rng.gen_range(0..pool.len())].clone(), &random_poly(&mut rng));
        }
        for i in h.colors() {
            for j in h.colors() {
                let ef = apply_e(h, i, &apply_f(h, j, &v)?)?;
                let fe = apply_f(h, j, &apply_e(h, i, &v)?)?;
                let expected = if i == j { apply_cartan_bracket(h, i, &v)? } else { FockVector::zero() };
                if ef.sub(&fe) != expected {
                    return Ok((false, format!("h={h} i={i} j={j} on {v:?}")));
                }
            }
        }
    }
    Ok((true, format!("{samples} random vectors, degree <= {max_m}")))
}

pub fn check_rank(p: Modulus, max_m: usize) -> Result<(bool, String)> {
    let mut ranks = Vec::new();
    for m in 0..=max_m {
        let r = independence_check_theorem61(p, m)?;
        if !r.passed() {
            return Ok((false, format!("p={p} m={m}: rank {} < {}", r.rank, r.columns)));
        }
        ranks.push(r.rank.to_string());
    }
    Ok((true, format!("p={p}, m<={max_m}: full ranks {}", ranks.join(","))))
}

pub fn check_partition_identity(p: Modulus, max_m: usize) -> Result<(bool, String)> {
    let report = partition_identity_check(p, max_m)?;
    if let Some(r) = report.rows.iter().find(|r| !(r.regular == r.series && r.series == r.crystal)) {
        return Ok((false, format!("p={p} m={}: regular {}, series {}, crystal {}", r.m, r.regular, r.series, r.crystal)));
    }
    let last = report.rows.last().expect("m = 0 row");
    Ok((true, format!("p={p}, m<={max_m}: all equal ({} at m={})", last.series, last.m)))
}

/// `ε_i`, `φ_i` equal the numbers of `ẽ_i`, `f̃_i` steps to the string ends.
pub fn check_string_lengths(max_m: usize) -> Result<(bool, String)> {
    let mut tested = 0;
    for h in [3, 5].map(modulus) {
        for m in 0..=max_m {
            for lambda in enumerate_dp_h(h, m) {
                for i in h.colors() {
                    tested += 1;
                    let mut steps = 0;
                    let mut cur = lambda.clone();
                    while let Some(next) = etilde(h, i, &cur)? {
                        cur = next;
                        steps += 1;
                    }
                    let mut up = 0;
                    let mut cur = lambda.clone();
                    while let Some(next) = ftilde(h, i, &cur)? {
                        cur = next;
                        up += 1;
                    }
                    if steps != eps(h, i, &lambda)? || up != phi(h, i, &lambda)? {
                        return Ok((false, format!("h={h} color {i} at {lambda}")));
                    }
                }
            }
        }
    }
    Ok((true, format!("{tested} strings")))
}

/// Strict partitions share an `h`-bar core iff they share residue contents.
pub fn check_content_core(max_m: usize) -> Result<(bool, String)> {
    let mut pairs = 0usize;
    for h in [3, 5, 7].map(modulus) {
        for m in 0..=max_m {
            let keyed = enumerate_dp(m)
                .into_iter()
                .map(|l| Ok((hbar_core(h, &l)?, residue_content(h, &l))))
                .collect::<Result<Vec<_>>>()?;
            for (a, ca) in &keyed {
                for (b, cb) in &keyed {
                    pairs += 1;
                    if (a == b) != (ca == cb) {
                        return Ok((false, format!("h={h} m={m}: cores {a}, {b}")));
                    }
                }
            }
        }
    }
    Ok((true, format!("{pairs} pairs")))
}

/// Negative entries of `underline G` for `p ∈ {3, 5, 7}`, `m <= max_m`.
pub fn nonnegativity_report(max_m: usize) -> Result<(bool, String)> {
    let mut negatives = Vec::new();
    let mut columns = 0;
    for p in [3, 5, 7].map(modulus) {
        let mut solver = CanonicalSolver::new(p, IntermediatePath::Fast);
        for m in 0..=max_m {
            let reduced = reduced_matrix_from_basis(solver.basis(m)?)?;
            columns += reduced.columns.len();
            for (mu, lambda, c) in reduced.negative_entries() {
                negatives.push(format!("p={p} ({mu}) at <{lambda}> = {c}"));
            }
        }
    }
    let note = if negatives.is_empty() { "none".to_string() } else { negatives.join("; ") };
    Ok((negatives.is_empty(), format!("{columns} columns, negative entries: {note}")))
}

/// `A(μ) = Σ c_ν G(ν)` with unitriangular bar-invariant coefficients, the
/// basic cross-check between the two bases of one degree.
pub fn check_a_in_g(h: Modulus, m: usize) -> Result<(bool, String)> {
    let basis = canonical_basis(h, m)?;
    for mu in basis.labels() {
        let coefficients = crate::canonical::expand_on_canonical(&a_vector(h, &mu)?, &basis)?;
        if !coefficients.get(&mu).is_some_and(|c| c.is_one()) {
            return Ok((false, format!("A({mu}) has diagonal {:?}", coefficients.get(&mu))));
        }
        if let Some((nu, c)) = coefficients.iter().find(|(nu, c)| *nu < &mu || !c.is_bar_invariant()) {
            return Ok((false, format!("A({mu}) has coefficient {c} on G({nu})")));
        }
    }
    Ok((true, format!("h={h} m={m}: {} columns", basis.len())))
}

/// `f_n |0⟩ = |1⟩` and `f_i |0⟩ = 0` otherwise.
pub fn check_vacuum(h: Modulus) -> Result<(bool, String)> {
    for i in h.colors() {
        let v = f_on_basis(h, i, &Partition::empty())?;
        let expected = if i == h.n() { FockVector::basis(Partition::new(vec![1])?) } else { FockVector::zero() };
        if v != expected {
            return Ok((false, format!("f_{i}|0>")));
        }
    }
    Ok((true, "vacuum rules".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("paper".parse::<Suite>().unwrap(), Suite::Paper);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn paper_suite_passes() {
        let report = run(Suite::Paper, &PropertyConfig::default());
        assert!(report.passed, "{}", report.render_text());
    }
}
