//! Published examples embedded as data. Partitions are written as space
//! separated parts, polynomials in the `LaurentPoly` text form.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPoly;
use crate::modular::{ExternalMatrix, ReducedMatrix};
use crate::partitions::{Modulus, Partition};

pub const FOCK_ACTIONS: &str = include_str!("../fixtures/fock_actions.json");
pub const CANONICAL_M9: &str = include_str!("../fixtures/canonical_m9.json");
pub const TABLE1: &str = include_str!("../fixtures/table1.json");
pub const P7_M21: &str = include_str!("../fixtures/p7_m21.json");
pub const TABLE2_CSV: &str = include_str!("../fixtures/table2.csv");
pub const TABLE3: &str = include_str!("../fixtures/table3.json");
pub const CRYSTAL: &str = include_str!("../fixtures/crystal.json");
pub const LADDERS: &str = include_str!("../fixtures/ladders.json");

type RawVector = BTreeMap<String, String>;

pub fn label(s: &str) -> Result<Partition> {
    Partition::parse_spaced(s)
}

pub fn poly(s: &str) -> Result<LaurentPoly> {
    s.parse()
}

fn vector(raw: &RawVector) -> Result<FockVector> {
    let terms = raw.iter().map(|(k, v)| Ok((label(k)?, poly(v)?))).collect::<Result<Vec<_>>>()?;
    Ok(FockVector::from_terms(terms))
}

fn vectors(raw: &BTreeMap<String, RawVector>) -> Result<BTreeMap<Partition, FockVector>> {
    raw.iter().map(|(k, v)| Ok((label(k)?, vector(v)?))).collect()
}

#[derive(Deserialize)]
struct RawFockAction {
    name: String,
    h: usize,
    color: usize,
    input: String,
    expected: RawVector,
}

/// `f_color |input⟩ = expected`.
#[derive(Clone, Debug)]
pub struct FockAction {
    pub name: String,
    pub h: Modulus,
    pub color: usize,
    pub input: Partition,
    pub expected: FockVector,
}

pub fn fock_actions() -> Result<Vec<FockAction>> {
    let raw: Vec<RawFockAction> = serde_json::from_str(FOCK_ACTIONS)?;
    raw.into_iter()
        .map(|r| {
            Ok(FockAction {
                name: r.name,
                h: Modulus::new(r.h)?,
                color: r.color,
                input: label(&r.input)?,
                expected: vector(&r.expected)?,
            })
        })
        .collect()
}

#[derive(Deserialize)]
struct RawCanonicalSet {
    h: usize,
    m: usize,
    #[serde(default)]
    a_vectors: BTreeMap<String, RawVector>,
    g_vectors: BTreeMap<String, RawVector>,
    #[serde(default)]
    bottom_row: Option<String>,
}

/// Displayed expansions of `A(μ)` and `G(μ)` in one degree.
#[derive(Clone, Debug)]
pub struct CanonicalSet {
    pub h: Modulus,
    pub m: usize,
    pub a_vectors: BTreeMap<Partition, FockVector>,
    pub g_vectors: BTreeMap<Partition, FockVector>,
    pub bottom_row: Option<Partition>,
}

fn canonical_set(text: &str) -> Result<CanonicalSet> {
    let raw: RawCanonicalSet = serde_json::from_str(text)?;
    Ok(CanonicalSet {
        h: Modulus::new(raw.h)?,
        m: raw.m,
        a_vectors: vectors(&raw.a_vectors)?,
        g_vectors: vectors(&raw.g_vectors)?,
        bottom_row: raw.bottom_row.as_deref().map(label).transpose()?,
    })
}

pub fn canonical_m9() -> Result<CanonicalSet> {
    canonical_set(CANONICAL_M9)
}

pub fn p7_m21() -> Result<CanonicalSet> {
    canonical_set(P7_M21)
}

#[derive(Deserialize)]
struct RawTable<T> {
    #[serde(alias = "p")]
    h: usize,
    m: usize,
    columns: Vec<String>,
    rows: Vec<(String, Vec<T>)>,
}

/// A published matrix: `entries[row][column]`.
#[derive(Clone, Debug)]
pub struct Table<T> {
    pub h: Modulus,
    pub m: usize,
    pub columns: Vec<Partition>,
    pub rows: Vec<Partition>,
    pub entries: Vec<Vec<T>>,
}

impl<T> Table<T> {
    pub fn cells(&self) -> impl Iterator<Item = (&Partition, &Partition, &T)> + '_ {
        self.rows.iter().zip(&self.entries).flat_map(move |(row, line)| {
            self.columns.iter().zip(line).map(move |(col, value)| (row, col, value))
        })
    }
}

fn table<R: for<'de> Deserialize<'de>, T>(text: &str, convert: impl Fn(&R) -> Result<T>) -> Result<Table<T>> {
    let raw: RawTable<R> = serde_json::from_str(text)?;
    let columns = raw.columns.iter().map(|c| label(c)).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (row, line) in &raw.rows {
        if line.len() != columns.len() {
            return Err(Error::Parse(format!("fixture row {row} has {} entries", line.len())));
        }
        rows.push(label(row)?);
        entries.push(line.iter().map(&convert).collect::<Result<Vec<_>>>()?);
    }
    Ok(Table { h: Modulus::new(raw.h)?, m: raw.m, columns, rows, entries })
}

/// The canonical basis for `h = 3`, `m = 10`.
pub fn table1() -> Result<Table<LaurentPoly>> {
    table::<String, _>(TABLE1, |s| poly(s))
}

/// The reduced decomposition matrix for `p = 3`, `m = 10`.
pub fn table3() -> Result<Table<i64>> {
    table::<i64, _>(TABLE3, |&v| Ok(v))
}

/// The unreduced decomposition matrix for `p = 3`, `m = 10`.
pub fn table2() -> Result<ExternalMatrix> {
    ExternalMatrix::from_csv(TABLE2_CSV)
}

/// Table 3 as a [`ReducedMatrix`], for direct comparison.
pub fn table3_matrix() -> Result<ReducedMatrix> {
    let t = table3()?;
    let mut columns = BTreeMap::new();
    for (c, mu) in t.columns.iter().enumerate() {
        let terms = t.rows.iter().zip(&t.entries).map(|(row, line)| (row.clone(), line[c].into()));
        columns.insert(mu.clone(), crate::modular::CharacterVector::from_terms(t.m, terms)?);
    }
    Ok(ReducedMatrix { p: t.h, m: t.m, columns })
}

#[derive(Clone, Debug, Deserialize)]
struct RawString {
    color: usize,
    path: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
struct RawPhi {
    color: usize,
    vertex: String,
    value: usize,
}

#[derive(Clone, Debug, Deserialize)]
struct RawList {
    m: usize,
    partitions: Vec<String>,
}

#[derive(Deserialize)]
struct RawCrystal {
    h: usize,
    strings: Vec<RawString>,
    phi: Vec<RawPhi>,
    dp_h: RawList,
    dpr_h: RawList,
}

#[derive(Clone, Debug)]
pub struct CrystalString {
    pub color: usize,
    pub path: Vec<Partition>,
}

#[derive(Clone, Debug)]
pub struct CrystalFixture {
    pub h: Modulus,
    pub strings: Vec<CrystalString>,
    /// `(color, vertex, φ_color(vertex))`.
    pub phi: Vec<(usize, Partition, usize)>,
    pub dp_h: (usize, Vec<Partition>),
    pub dpr_h: (usize, Vec<Partition>),
}

fn list(raw: &RawList) -> Result<(usize, Vec<Partition>)> {
    Ok((raw.m, raw.partitions.iter().map(|s| label(s)).collect::<Result<_>>()?))
}

pub fn crystal() -> Result<CrystalFixture> {
    let raw: RawCrystal = serde_json::from_str(CRYSTAL)?;
    Ok(CrystalFixture {
        h: Modulus::new(raw.h)?,
        strings: raw
            .strings
            .iter()
            .map(|s| {
                Ok(CrystalString { color: s.color, path: s.path.iter().map(|p| label(p)).collect::<Result<_>>()? })
            })
            .collect::<Result<_>>()?,
        phi: raw.phi.iter().map(|r| Ok((r.color, label(&r.vertex)?, r.value))).collect::<Result<_>>()?,
        dp_h: list(&raw.dp_h)?,
        dpr_h: list(&raw.dpr_h)?,
    })
}

#[derive(Deserialize)]
struct RawLadderWord {
    h: usize,
    partition: String,
    ladders: usize,
    word: String,
}

/// A displayed ladder monomial `A(μ)`.
#[derive(Clone, Debug)]
pub struct LadderWord {
    pub h: Modulus,
    pub partition: Partition,
    pub ladders: usize,
    pub word: String,
}

pub fn ladder_words() -> Result<Vec<LadderWord>> {
    let raw: Vec<RawLadderWord> = serde_json::from_str(LADDERS)?;
    raw.into_iter()
        .map(|r| Ok(LadderWord { h: Modulus::new(r.h)?, partition: label(&r.partition)?, ladders: r.ladders, word: r.word }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load() {
        assert_eq!(fock_actions().unwrap().len(), 2);
        let m9 = canonical_m9().unwrap();
        assert_eq!(m9.g_vectors.len(), 3);
        let t1 = table1().unwrap();
        assert_eq!(t1.cells().count(), 48);
        assert_eq!(t1.rows.last().unwrap(), &Partition::new(vec![10]).unwrap());
        assert_eq!(p7_m21().unwrap().bottom_row, Some(Partition::new(vec![9, 7, 5]).unwrap()));
        let t2 = table2().unwrap();
        assert_eq!((t2.rows.len(), t2.columns.len()), (15, 7));
        assert_eq!(table3().unwrap().cells().count(), 40);
        assert_eq!(crystal().unwrap().strings.len(), 3);
        assert_eq!(ladder_words().unwrap()[0].ladders, 22);
    }
}
