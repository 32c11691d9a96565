//! The specialization `q = 1`, the quotient by the ghost span, and the
//! bookkeeping of self-associate spin characters `⟨λ̂⟩`.
//!
//! A strict `|λ⟩` at `q = 1` is sent to `2^{-a_p(λ)} P_λ`, and
//! `P_λ = 2^{b(λ)} ⟨λ̂⟩`; ghost rows `λ ∈ DP_h - DP` are sent to zero.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{a_vector, canonical_basis, BasisMatrix};
use crate::crystal::basic_component;
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::partitions::{a_h, b_exponent, enumerate_dp, enumerate_dpr_h, Modulus, Partition};

fn int_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

/// Integer combination of `⟨λ̂⟩`, `λ` strict of degree `m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterVector {
    pub m: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl CharacterVector {
    pub fn zero(m: usize) -> Self {
        CharacterVector { m, terms: BTreeMap::new() }
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Result<Self> {
        let mut v = CharacterVector::zero(m);
        for (lambda, c) in terms {
            v.add_term(lambda, c)?;
        }
        Ok(v)
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) -> Result<()> {
        if !lambda.is_strict() || lambda.degree() != self.m {
            return Err(Error::InvalidPartition(format!(
                "{lambda} is not a strict partition of {}",
                self.m
            )));
        }
        let slot = self.terms.entry(lambda).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Entries below zero, in increasing lex order of their rows.
    pub fn negative_entries(&self) -> Vec<(Partition, BigInt)> {
        self.terms.iter().filter(|(_, c)| c.is_negative()).map(|(k, c)| (k.clone(), c.clone())).collect()
    }
}

/// `λ` has an even number of even parts, so `⟨λ̂⟩ = ⟨λ⟩`.
pub fn is_self_associate(lambda: &Partition) -> bool {
    lambda.parts().iter().filter(|&&p| p % 2 == 0).count() % 2 == 0
}

/// `2^{b(λ) - a_p(λ)}`, rejecting negative exponents.
fn two_power(p: Modulus, lambda: &Partition) -> Result<BigInt> {
    let exponent = b_exponent(lambda) as i64 - a_h(p, lambda) as i64;
    if exponent < 0 {
        return Err(Error::NegativeTwoPower { row: lambda.clone(), exponent });
    }
    Ok(BigInt::one() << exponent as usize)
}

/// Image at `q = 1` of a degree-`m` Fock vector on the `⟨λ̂⟩` basis.
pub fn push_to_characters(p: Modulus, m: usize, v: &FockVector) -> Result<CharacterVector> {
    let mut out = CharacterVector::zero(m);
    for (lambda, c) in v.at_one() {
        if !lambda.is_strict() {
            continue;
        }
        let scale = two_power(p, &lambda)?;
        out.add_term(lambda, c * scale)?;
    }
    Ok(out)
}

/// `underline G(μ) = Σ_{λ ∈ DP(m)} 2^{b(λ) - a_p(λ)} d_{λμ}(1) ⟨λ̂⟩`.
pub fn underline_g(p: Modulus, mu: &Partition, column: &FockVector) -> Result<CharacterVector> {
    push_to_characters(p, mu.degree(), column)
}

/// Divides out the largest power of 2 common to all coefficients.
pub fn double_underline(v: &CharacterVector) -> Result<CharacterVector> {
    let k = v.terms.values().filter_map(|c| c.trailing_zeros()).min().ok_or(Error::ZeroVector)?;
    Ok(CharacterVector { m: v.m, terms: v.terms.iter().map(|(l, c)| (l.clone(), c >> k as usize)).collect() })
}

/// Reduced decomposition matrix: rows `DP(m)`, one column per label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedMatrix {
    pub p: Modulus,
    pub m: usize,
    pub columns: BTreeMap<Partition, CharacterVector>,
}

impl ReducedMatrix {
    /// Rows `DP(m)` in increasing lex order.
    pub fn rows(&self) -> Vec<Partition> {
        let mut rows = enumerate_dp(self.m);
        rows.reverse();
        rows
    }

    /// Column labels in increasing lex order.
    pub fn labels(&self) -> Vec<Partition> {
        self.columns.keys().cloned().collect()
    }

    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        self.columns.get(mu).map(|c| c.coeff(lambda)).unwrap_or_default()
    }

    fn grid(&self) -> Vec<Vec<String>> {
        let labels = self.labels();
        self.rows()
            .iter()
            .map(|row| labels.iter().map(|mu| self.entry(row, mu).to_string()).collect())
            .collect()
    }

    /// Aligned text, rows and columns in increasing lex order.
    pub fn render_table(&self) -> String {
        let mut grid = vec![std::iter::once(String::new())
            .chain(self.labels().iter().map(|l| format!("({l})")))
            .collect::<Vec<_>>()];
        for (row, cells) in self.rows().iter().zip(self.grid()) {
            grid.push(std::iter::once(format!("<{row}>")).chain(cells).collect());
        }
        let ncols = grid[0].len();
        let widths: Vec<usize> =
            (0..ncols).map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for line in grid {
            let mut text = String::new();
            for (c, cell) in line.iter().enumerate() {
                let _ = write!(text, "{cell}{}  ", " ".repeat(widths[c] - cell.chars().count()));
            }
            out.push_str(text.trim_end());
            out.push('\n');
        }
        out
    }

    /// CSV with space separated partition labels.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["label".to_string()];
        header.extend(self.labels().iter().map(|l| l.to_spaced_label()));
        w.write_record(&header)?;
        for (row, cells) in self.rows().iter().zip(self.grid()) {
            let mut record = vec![row.to_spaced_label()];
            record.extend(cells);
            w.write_record(&record)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry<'a> {
            row: &'a Partition,
            coeff: serde_json::Value,
        }
        #[derive(Serialize)]
        struct Column<'a> {
            label: &'a Partition,
            entries: Vec<Entry<'a>>,
        }
        let columns: Vec<Column> = self
            .columns
            .iter()
            .rev()
            .map(|(label, v)| Column {
                label,
                entries: v.iter().rev().map(|(row, c)| Entry { row, coeff: int_json(c) }).collect(),
            })
            .collect();
        serde_json::json!({ "p": self.p.h(), "m": self.m, "columns": columns })
    }

    /// Entries below zero, reported per column.
    pub fn negative_entries(&self) -> Vec<(Partition, Partition, BigInt)> {
        self.columns
            .iter()
            .flat_map(|(mu, v)| v.negative_entries().into_iter().map(move |(l, c)| (mu.clone(), l, c)))
            .collect()
    }
}

/// Reduces every column of an already computed canonical basis.
pub fn reduced_matrix_from_basis(basis: &BasisMatrix) -> Result<ReducedMatrix> {
    let p = basis.h;
    let columns = basis
        .columns()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(mu, g)| Ok(((*mu).clone(), double_underline(&underline_g(p, mu, g)?)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(ReducedMatrix { p, m: basis.m, columns })
}

/// `double underline G(μ)` for every `μ ∈ DPR_p(m)`.
pub fn reduced_matrix(p: Modulus, m: usize) -> Result<ReducedMatrix> {
    reduced_matrix_from_basis(&canonical_basis(p, m)?)
}

/// A label `λ` or its associate `λ'`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AssociateLabel {
    pub partition: Partition,
    pub primed: bool,
}

impl AssociateLabel {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        Ok(AssociateLabel { partition: Partition::parse_spaced(body)?, primed })
    }
}

/// A decomposition matrix of spin characters with associate pairs kept
/// apart, as published.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExternalMatrix {
    pub columns: Vec<AssociateLabel>,
    pub rows: Vec<AssociateLabel>,
    pub entries: Vec<Vec<BigInt>>,
}

impl ExternalMatrix {
    /// Header `label,<col>,...`, then one row per character. Labels are
    /// space separated parts with an optional trailing `'`.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(text.as_bytes());
        let columns = reader.headers()?.iter().skip(1).map(AssociateLabel::parse).collect::<Result<Vec<_>>>()?;
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for record in reader.records() {
            let record = record?;
            let mut fields = record.iter();
            let label = fields.next().ok_or_else(|| Error::Parse("empty CSV record".into()))?;
            rows.push(AssociateLabel::parse(label)?);
            let values = fields
                .map(|f| f.parse::<BigInt>().map_err(|e| Error::Parse(format!("{f:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            if values.len() != columns.len() {
                return Err(Error::Parse(format!("row {label} has {} entries, expected {}", values.len(), columns.len())));
            }
            entries.push(values);
        }
        Ok(ExternalMatrix { columns, rows, entries })
    }
}

/// Sums associate columns and merges each row pair `⟨λ⟩, ⟨λ⟩'` onto `⟨λ̂⟩`.
pub fn reduce_external_matrix(p: Modulus, raw: &ExternalMatrix) -> Result<ReducedMatrix> {
    let m = raw
        .rows
        .first()
        .map(|r| r.partition.degree())
        .or_else(|| raw.columns.first().map(|c| c.partition.degree()))
        .unwrap_or(0);
    let mut summed: BTreeMap<Partition, BTreeMap<AssociateLabel, BigInt>> = BTreeMap::new();
    for (c, col) in raw.columns.iter().enumerate() {
        let target = summed.entry(col.partition.clone()).or_default();
        for (r, row) in raw.rows.iter().enumerate() {
            *target.entry(row.clone()).or_default() += &raw.entries[r][c];
        }
    }

    let mut row_kinds: BTreeMap<&Partition, (bool, bool)> = BTreeMap::new();
    for row in &raw.rows {
        let kind = row_kinds.entry(&row.partition).or_default();
        if row.primed {
            kind.1 = true;
        } else {
            kind.0 = true;
        }
    }
    for (lambda, &(plain, primed)) in &row_kinds {
        let paired = plain && primed;
        if !plain {
            return Err(Error::Associates(format!("row {lambda}' has no partner {lambda}")));
        }
        if paired == is_self_associate(lambda) {
            let expected = if paired { "self-associate" } else { "an associate pair" };
            return Err(Error::Associates(format!("row {lambda} should be {expected}")));
        }
    }

    let mut columns = BTreeMap::new();
    for (mu, col) in summed {
        let mut v = CharacterVector::zero(m);
        for (lambda, &(_, primed)) in &row_kinds {
            let plain_value = col.get(&AssociateLabel { partition: (*lambda).clone(), primed: false }).cloned().unwrap_or_default();
            if primed {
                let primed_value = col.get(&AssociateLabel { partition: (*lambda).clone(), primed: true }).cloned().unwrap_or_default();
                if primed_value != plain_value {
                    return Err(Error::Associates(format!(
                        "column {mu}: rows {lambda} and {lambda}' differ ({plain_value} vs {primed_value})"
                    )));
                }
            }
            v.add_term((*lambda).clone(), plain_value)?;
        }
        columns.insert(mu, v);
    }
    Ok(ReducedMatrix { p, m, columns })
}

/// Rational combination of Schur `P_λ`, `λ` strict.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassicalVector {
    terms: BTreeMap<Partition, BigRational>,
}

impl ClassicalVector {
    pub fn zero() -> Self {
        ClassicalVector::default()
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut v = ClassicalVector::zero();
        v.add_term(lambda, BigRational::one());
        v
    }

    /// Terms on non-strict partitions vanish.
    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if !lambda.is_strict() || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Generators of the classical actions on `P_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalGenerator {
    /// Replaces the part `j` by `j + 1` (`j = 0` adds a part 1).
    FInf(usize),
    /// Replaces the part `j + 1` by `j` (`j = 0` removes the part 1).
    EInf(usize),
    /// `f_i = Σ_{j ≡ n ± i} f^∞_j`.
    F(usize),
    /// `e_i = Σ_{j ≡ n ± i} e^∞_j` for `i < n`, and
    /// `e_n = e^∞_0 + 2 Σ_{j > 0, j ≡ 0, -1} e^∞_j`.
    E(usize),
    /// `f = Σ_j f^∞_j`, induction.
    FTotal,
    /// `e = e^∞_0 + 2 Σ_{j > 0} e^∞_j`, restriction.
    ETotal,
}

fn replace_part(lambda: &Partition, from: usize, to: usize) -> Option<Partition> {
    let mut parts = lambda.parts().to_vec();
    if from == 0 {
        parts.push(to);
    } else {
        let k = parts.iter().position(|&x| x == from)?;
        parts[k] = to;
    }
    let out = Partition::from_unsorted(parts);
    out.is_strict().then_some(out)
}

pub fn f_inf(j: usize, lambda: &Partition) -> Option<Partition> {
    replace_part(lambda, j, j + 1)
}

pub fn e_inf(j: usize, lambda: &Partition) -> Option<Partition> {
    replace_part(lambda, j + 1, j)
}

/// The `j` with `j ≡ n ± i mod h` that can act on `λ`, i.e. `j <= max`.
fn congruent_indices(h: Modulus, i: usize, max: usize) -> Vec<usize> {
    let (hh, n) = (h.h(), h.n());
    let r1 = (n + i) % hh;
    let r2 = (n + hh - i) % hh;
    (0..=max).filter(|j| j % hh == r1 || j % hh == r2).collect()
}

/// Applies a classical generator; `h` is needed for `F` and `E`.
pub fn classical_apply(h: Modulus, g: ClassicalGenerator, v: &ClassicalVector) -> ClassicalVector {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut out = ClassicalVector::zero();
    for (lambda, c) in v.iter() {
        let top = lambda.part(0);
        let mut push = |target: Option<Partition>, scale: &BigRational| {
            if let Some(t) = target {
                out.add_term(t, c * scale);
            }
        };
        let one = BigRational::one();
        match g {
            ClassicalGenerator::FInf(j) => push(f_inf(j, lambda), &one),
            ClassicalGenerator::EInf(j) => push(e_inf(j, lambda), &one),
            ClassicalGenerator::FTotal => {
                for j in 0..=top {
                    push(f_inf(j, lambda), &one);
                }
            }
            ClassicalGenerator::ETotal => {
                for j in 0..top {
                    push(e_inf(j, lambda), if j == 0 { &one } else { &two });
                }
            }
            ClassicalGenerator::F(i) => {
                for j in congruent_indices(h, i, top) {
                    push(f_inf(j, lambda), &one);
                }
            }
            ClassicalGenerator::E(i) => {
                for j in congruent_indices(h, i, top) {
                    let scale = if i == h.n() && j > 0 { &two } else { &one };
                    push(e_inf(j, lambda), scale);
                }
            }
        }
    }
    out
}

/// The quotient map at `q = 1`: `|λ⟩ ↦ 2^{-a_h(λ)} P_λ` for strict `λ`,
/// ghosts `↦ 0`.
pub fn quotient_map(h: Modulus, v: &FockVector) -> ClassicalVector {
    let mut out = ClassicalVector::zero();
    for (lambda, c) in v.at_one() {
        if lambda.is_strict() {
            let denom = BigInt::one() << a_h(h, &lambda);
            out.add_term(lambda, BigRational::new(c, denom));
        }
    }
    out
}

/// Rewrites `Σ c_λ P_λ` as `Σ 2^{b(λ)} c_λ ⟨λ̂⟩`, which must be integral.
pub fn classical_to_characters(m: usize, v: &ClassicalVector) -> Result<CharacterVector> {
    let mut out = CharacterVector::zero(m);
    for (lambda, c) in v.iter() {
        let scaled = c * BigRational::from_integer(BigInt::one() << b_exponent(lambda));
        if !scaled.is_integer() {
            return Err(Error::NonDivisible { dividend: scaled.to_string(), divisor: "1".into() });
        }
        out.add_term(lambda.clone(), scaled.to_integer())?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub m: usize,
    pub regular: u64,
    pub series: u64,
    pub crystal: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub p: usize,
    pub rows: Vec<IdentityRow>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.regular == r.series && r.series == r.crystal)
    }
}

/// Coefficients of `∏_{i odd, i ≢ 0 mod p} 1/(1 - t^i)` up to `t^max_m`.
pub fn regular_series(p: Modulus, max_m: usize) -> Vec<u64> {
    let mut c = vec![0u64; max_m + 1];
    c[0] = 1;
    for i in (1..=max_m).step_by(2).filter(|i| i % p.h() != 0) {
        for k in i..=max_m {
            c[k] += c[k - i];
        }
    }
    c
}

/// Compares `|DPR_p(m)|`, the product series and the degree-`m` vertex
/// count of the crystal of the basic module, for every `m <= max_m`.
pub fn partition_identity_check(p: Modulus, max_m: usize) -> Result<IdentityReport> {
    let series = regular_series(p, max_m);
    let counts = basic_component(p, max_m)?.degree_counts();
    let regular: Vec<u64> = (0..=max_m).into_par_iter().map(|m| enumerate_dpr_h(p, m).len() as u64).collect();
    let rows = (0..=max_m)
        .map(|m| IdentityRow {
            m,
            regular: regular[m],
            series: series[m],
            crystal: counts.get(&m).copied().unwrap_or(0) as u64,
        })
        .collect();
    Ok(IdentityReport { p: p.h(), rows })
}

/// Exact rank over `Q` of integer column vectors.
pub fn rank(columns: &[CharacterVector]) -> usize {
    let mut rows: Vec<BTreeMap<Partition, BigRational>> = columns
        .iter()
        .map(|c| c.iter().map(|(k, v)| (k.clone(), BigRational::from_integer(v.clone()))).collect())
        .collect();
    let mut rank = 0;
    let mut remaining: Vec<usize> = (0..rows.len()).collect();
    while let Some(pos) = remaining.iter().position(|&r| !rows[r].is_empty()) {
        let pivot_row = remaining.remove(pos);
        let (pivot_key, pivot_val) = {
            let (k, v) = rows[pivot_row].iter().next_back().expect("non-empty row");
            (k.clone(), v.clone())
        };
        rank += 1;
        let pivot = rows[pivot_row].clone();
        for &r in &remaining {
            let Some(factor) = rows[r].get(&pivot_key).cloned() else { continue };
            let factor = factor / &pivot_val;
            for (k, v) in &pivot {
                let slot = rows[r].entry(k.clone()).or_insert_with(BigRational::zero);
                *slot -= &factor * v;
                if slot.is_zero() {
                    rows[r].remove(k);
                }
            }
        }
    }
    rank
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub p: usize,
    pub m: usize,
    pub columns: usize,
    pub rank: usize,
}

impl RankReport {
    pub fn passed(&self) -> bool {
        self.rank == self.columns
    }
}

/// Rank of the vectors `underline A(μ)`, `μ ∈ DPR_p(m)`.
pub fn independence_check_theorem61(p: Modulus, m: usize) -> Result<RankReport> {
    let labels = enumerate_dpr_h(p, m);
    let vectors = labels
        .par_iter()
        .map(|mu| push_to_characters(p, m, &a_vector(p, mu)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(RankReport { p: p.h(), m, columns: labels.len(), rank: rank(&vectors) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn three() -> Modulus {
        Modulus::new(3).unwrap()
    }

    #[test]
    fn p_actions() {
        let h = three();
        assert_eq!(f_inf(0, &p("32")), Some(p("321")));
        assert_eq!(f_inf(3, &p("32")), Some(p("42")));
        assert_eq!(e_inf(1, &p("32")), Some(p("31")));
        assert_eq!(e_inf(2, &p("32")), None);
        let v = classical_apply(h, ClassicalGenerator::ETotal, &ClassicalVector::basis(p("31")));
        assert_eq!(v.coeff(&p("3")), BigRational::one());
        assert_eq!(v.coeff(&p("21")), BigRational::from_integer(2.into()));
    }

    #[test]
    fn column_3331() {
        // Table 1 column (3331) at q = 1 and the two-power weights.
        let column = FockVector::from_terms(
            [
                ("3331", "1"),
                ("4321", "q-q^5"),
                ("433", "q^2"),
                ("541", "q+q^3"),
                ("631", "2q^2"),
                ("64", "q^4"),
                ("721", "q^3+q^5"),
                ("73", "q^4"),
                ("91", "q^4"),
                ("10,", "q^6"),
            ]
            .map(|(l, c)| (p(l), poly(c))),
        );
        let under = underline_g(three(), &p("3331"), &column).unwrap();
        let expected =
            [("541", 4), ("631", 8), ("64", 4), ("721", 4), ("73", 4), ("91", 4), ("10,", 2)].map(|(l, c)| (p(l), BigInt::from(c)));
        assert_eq!(under.len(), expected.len());
        for (lambda, c) in expected {
            assert_eq!(under.coeff(&lambda), c, "row {lambda}");
        }
        let dd = double_underline(&under).unwrap();
        assert_eq!(dd.coeff(&p("631")), BigInt::from(4));
        assert_eq!(dd.coeff(&p("10,")), BigInt::from(1));
    }

    #[test]
    fn column_532() {
        let column = FockVector::from_terms([(p("532"), poly("1")), (p("82"), poly("q^2"))]);
        let under = underline_g(three(), &p("532"), &column).unwrap();
        assert_eq!(under.coeff(&p("532")), BigInt::from(4));
        assert_eq!(under.coeff(&p("82")), BigInt::from(4));
        let dd = double_underline(&under).unwrap();
        assert_eq!(dd.coeff(&p("82")), BigInt::one());
    }

    #[test]
    fn zero_and_odd_vectors() {
        assert!(matches!(double_underline(&CharacterVector::zero(4)), Err(Error::ZeroVector)));
        let v = CharacterVector::from_terms(3, [(p("3"), BigInt::from(3)), (p("21"), BigInt::from(6))]).unwrap();
        assert_eq!(double_underline(&v).unwrap(), v);
        let under = underline_g(three(), &p("3"), &FockVector::zero()).unwrap();
        assert!(under.is_zero());
    }

    #[test]
    fn associate_classes() {
        assert!(is_self_associate(&p("4321")));
        assert!(is_self_associate(&p("73")));
        assert!(!is_self_associate(&p("541")));
        assert!(!is_self_associate(&p("10,")));
    }

    #[test]
    fn trivial_external_matrix() {
        let raw = ExternalMatrix::from_csv("label,1\n1,1\n").unwrap();
        let reduced = reduce_external_matrix(three(), &raw).unwrap();
        assert_eq!(reduced.entry(&p("1"), &p("1")), BigInt::one());
    }

    #[test]
    fn external_pair_mismatch() {
        let raw = ExternalMatrix::from_csv("label,2 1\n2 1,1\n2 1',0\n").unwrap();
        assert!(matches!(reduce_external_matrix(three(), &raw), Err(Error::Associates(_))));
    }

    #[test]
    fn small_series() {
        let s = regular_series(three(), 10);
        assert_eq!(s[0], 1);
        assert_eq!(s[10], 4);
    }

    #[test]
    fn rank_of_dependent_columns() {
        let a = CharacterVector::from_terms(3, [(p("3"), BigInt::from(1)), (p("21"), BigInt::from(2))]).unwrap();
        let b = CharacterVector::from_terms(3, [(p("3"), BigInt::from(2)), (p("21"), BigInt::from(4))]).unwrap();
        assert_eq!(rank(&[a.clone(), b]), 1);
        assert_eq!(rank(&[a]), 1);
        assert_eq!(rank(&[]), 0);
    }
}
