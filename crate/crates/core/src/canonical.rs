//! Canonical basis `G(μ)`, `μ ∈ DPR_h(m)`, of the basic module `V(Λ_n)`
//! inside the q-Fock space.
//!
//! An intermediate bar-invariant basis `A(μ)` is produced by divided powers
//! of the `f_i`, then made congruent to `|μ⟩ mod qL` by subtracting
//! bar-invariant multiples of lex-larger canonical vectors.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{apply_f_divided, FockVector};
use crate::laurent::LaurentPoly;
use crate::partitions::{
    dominance_leq, enumerate_dp_h, enumerate_dpr_h, ladders, residue_content, strip_outer_ladder, Modulus,
    Partition, ResidueContent,
};

/// How the intermediate vectors `A(μ)` are produced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IntermediatePath {
    /// `A(μ) = f_r^(k) G(ν)` with `ν` = `μ` minus its outer ladder.
    #[default]
    Fast,
    /// The full ladder monomial applied to the vacuum.
    Slow,
}

/// `A(μ) = f_{r_s}^(k_s) ... f_{r_1}^(k_1) |0⟩` from the ladders of `μ`.
pub fn a_vector(h: Modulus, mu: &Partition) -> Result<FockVector> {
    let mut v = FockVector::vacuum();
    for (r, k) in ladders(h, mu)?.monomial() {
        v = apply_f_divided(h, r, k, &v)?;
    }
    Ok(v)
}

/// `A(μ) = f_r^(k) G(ν)`, looking `G(ν)` up through `lower`.
pub fn a_vector_fast(
    h: Modulus,
    mu: &Partition,
    lower: impl Fn(&Partition) -> Option<FockVector>,
) -> Result<FockVector> {
    if mu.is_empty() {
        return Ok(FockVector::vacuum());
    }
    let (nu, outer) = strip_outer_ladder(h, mu)?;
    let g_nu = lower(&nu).ok_or(Error::MissingContext(nu))?;
    apply_f_divided(h, outer.residue, outer.cells, &g_nu)
}

/// Canonical vectors of one degree, keyed by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    pub h: Modulus,
    pub m: usize,
    columns: BTreeMap<Partition, FockVector>,
}

impl BasisMatrix {
    pub fn new(h: Modulus, m: usize, columns: BTreeMap<Partition, FockVector>) -> Self {
        BasisMatrix { h, m, columns }
    }

    /// Columns in decreasing lex order of their labels.
    pub fn columns(&self) -> impl Iterator<Item = (&Partition, &FockVector)> + '_ {
        self.columns.iter().rev()
    }

    pub fn column(&self, mu: &Partition) -> Option<&FockVector> {
        self.columns.get(mu)
    }

    pub fn labels(&self) -> Vec<Partition> {
        self.columns.keys().rev().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// `d_{λμ}(q)`.
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> LaurentPoly {
        self.columns.get(mu).map(|c| c.coeff(lambda)).unwrap_or_default()
    }

    /// Rows `DP_h(m)`, decreasing lex.
    pub fn rows(&self) -> Vec<Partition> {
        enumerate_dp_h(self.h, self.m)
    }

    /// Plain-text matrix with rows `DP_h(m)` and columns `DPR_h(m)`, both in
    /// increasing lex order as in the published table.
    pub fn render_table(&self) -> String {
        let mut rows = self.rows();
        rows.reverse();
        let labels: Vec<&Partition> = self.columns.keys().collect();
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(rows.len() + 1);
        let mut header = vec![String::new()];
        header.extend(labels.iter().map(|l| format!("({l})")));
        grid.push(header);
        for row in &rows {
            let mut line = vec![format!("({row})")];
            line.extend(labels.iter().map(|mu| self.entry(row, mu).to_string()));
            grid.push(line);
        }
        let ncols = grid[0].len();
        let widths: Vec<usize> =
            (0..ncols).map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for line in grid {
            let mut text = String::new();
            for (c, cell) in line.iter().enumerate() {
                if c + 1 == ncols {
                    text.push_str(cell);
                } else {
                    let _ = write!(text, "{cell}{}  ", " ".repeat(widths[c] - cell.chars().count()));
                }
            }
            out.push_str(text.trim_end());
            out.push('\n');
        }
        out
    }

    /// CSV with rows and columns in increasing lex order and space separated
    /// partition labels.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let labels: Vec<&Partition> = self.columns.keys().collect();
        let mut header = vec!["label".to_string()];
        header.extend(labels.iter().map(|l| l.to_spaced_label()));
        w.write_record(&header)?;
        for row in self.rows().iter().rev() {
            let mut record = vec![row.to_spaced_label()];
            record.extend(labels.iter().map(|mu| self.entry(row, mu).to_string()));
            w.write_record(&record)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry<'a> {
            row: &'a Partition,
            poly: &'a LaurentPoly,
        }
        #[derive(Serialize)]
        struct Column<'a> {
            label: &'a Partition,
            entries: Vec<Entry<'a>>,
        }
        let columns: Vec<Column> = self
            .columns()
            .map(|(label, v)| Column { label, entries: v.iter().rev().map(|(row, poly)| Entry { row, poly }).collect() })
            .collect();
        serde_json::json!({ "h": self.h.h(), "m": self.m, "columns": columns })
    }
}

/// Makes `a` congruent to `|μ⟩ mod qL` by subtracting `γ_s G(μ^(s))` for the
/// lex-larger labels `μ^(s)` of `known`, in increasing lex order.
pub fn triangular_reduce(
    mu: &Partition,
    a: FockVector,
    known: &BTreeMap<Partition, FockVector>,
) -> Result<FockVector> {
    let mut g = a;
    if !g.coeff(mu).is_one() {
        return Err(Error::Triangularity {
            column: mu.clone(),
            detail: format!("intermediate vector has diagonal coefficient {}", g.coeff(mu)),
        });
    }
    for lambda in g.support() {
        if !dominance_leq(mu, lambda)? {
            return Err(Error::Triangularity {
                column: mu.clone(),
                detail: format!("intermediate vector has row {lambda} not dominating the label"),
            });
        }
    }
    for (label, g_label) in known.range(mu.clone()..).filter(|(l, _)| *l != mu) {
        let gamma = g.coeff(label).symmetrize_tail();
        if !gamma.is_zero() {
            g.add_scaled(g_label, &-gamma);
        }
    }
    Ok(g)
}

/// Computes canonical bases degree by degree, caching every layer.
pub struct CanonicalSolver {
    h: Modulus,
    path: IntermediatePath,
    pool: Option<rayon::ThreadPool>,
    layers: BTreeMap<usize, BasisMatrix>,
}

impl CanonicalSolver {
    pub fn new(h: Modulus, path: IntermediatePath) -> Self {
        CanonicalSolver { h, path, pool: None, layers: BTreeMap::new() }
    }

    /// Limits the worker threads used for independent weight blocks.
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().ok();
        self
    }

    pub fn h(&self) -> Modulus {
        self.h
    }

    /// Canonical vector `G(μ)`, computing its degree if needed.
    pub fn g(&mut self, mu: &Partition) -> Result<FockVector> {
        let layer = self.basis(mu.degree())?;
        layer
            .column(mu)
            .cloned()
            .ok_or_else(|| Error::NotRegular { h: layer.h.h(), partition: mu.clone() })
    }

    pub fn basis(&mut self, m: usize) -> Result<&BasisMatrix> {
        let needed: Vec<usize> = match self.path {
            IntermediatePath::Fast => (0..=m).filter(|d| !self.layers.contains_key(d)).collect(),
            IntermediatePath::Slow => (!self.layers.contains_key(&m)).then_some(m).into_iter().collect(),
        };
        for d in needed {
            let layer = match &self.pool {
                Some(pool) => pool.install(|| self.compute_layer(d)),
                None => self.compute_layer(d),
            }?;
            self.layers.insert(d, layer);
        }
        Ok(&self.layers[&m])
    }

    fn intermediate(&self, mu: &Partition) -> Result<FockVector> {
        match self.path {
            IntermediatePath::Slow => a_vector(self.h, mu),
            IntermediatePath::Fast => a_vector_fast(self.h, mu, |nu| {
                self.layers.get(&nu.degree()).and_then(|l| l.column(nu)).cloned()
            }),
        }
    }

    fn compute_layer(&self, m: usize) -> Result<BasisMatrix> {
        let h = self.h;
        let mut blocks: BTreeMap<ResidueContent, Vec<Partition>> = BTreeMap::new();
        for mu in enumerate_dpr_h(h, m) {
            blocks.entry(residue_content(h, &mu)).or_default().push(mu);
        }
        let solved: Vec<BTreeMap<Partition, FockVector>> = blocks
            .into_par_iter()
            .map(|(_, labels)| {
                let mut known = BTreeMap::new();
                // labels arrive in decreasing lex order
                for mu in labels {
                    let a = self.intermediate(&mu)?;
                    let g = triangular_reduce(&mu, a, &known)?;
                    check_column(h, &mu, &g)?;
                    known.insert(mu, g);
                }
                Ok(known)
            })
            .collect::<Result<_>>()?;
        let columns = solved.into_iter().flatten().collect();
        Ok(BasisMatrix::new(h, m, columns))
    }
}

/// The canonical basis of degree `m` through the fast path.
pub fn canonical_basis(h: Modulus, m: usize) -> Result<BasisMatrix> {
    canonical_basis_with(h, m, IntermediatePath::Fast)
}

pub fn canonical_basis_with(h: Modulus, m: usize, path: IntermediatePath) -> Result<BasisMatrix> {
    let mut solver = CanonicalSolver::new(h, path);
    solver.basis(m)?;
    Ok(solver.layers.remove(&m).expect("layer computed"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// Coefficient outside `Z[q]`.
    NegativeExponent,
    /// Nonzero entry at a row not dominating the label.
    NotDominant,
    /// Diagonal entry other than 1.
    Diagonal,
    /// Off-diagonal entry outside `qZ[q]`.
    NotInQZq,
    /// Row with a residue content different from the label's.
    MixedContent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub column: Partition,
    pub row: Partition,
    pub entry: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Theorem41Report {
    pub columns_checked: usize,
    pub entries_checked: usize,
    pub violations: Vec<Violation>,
}

impl Theorem41Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn column_violations(h: Modulus, mu: &Partition, g: &FockVector) -> Vec<Violation> {
    let mut out = Vec::new();
    let content = residue_content(h, mu);
    let mut push = |kind, row: &Partition, c: &LaurentPoly| {
        out.push(Violation { kind, column: mu.clone(), row: row.clone(), entry: c.to_string() })
    };
    if g.coeff(mu).is_zero() {
        push(ViolationKind::Diagonal, mu, &LaurentPoly::zero());
    }
    for (row, c) in g.iter() {
        if !c.is_polynomial() {
            push(ViolationKind::NegativeExponent, row, c);
        }
        if row == mu {
            if !c.is_one() {
                push(ViolationKind::Diagonal, row, c);
            }
        } else if !c.in_q_zq() {
            push(ViolationKind::NotInQZq, row, c);
        }
        if !matches!(dominance_leq(mu, row), Ok(true)) {
            push(ViolationKind::NotDominant, row, c);
        }
        if residue_content(h, row) != content {
            push(ViolationKind::MixedContent, row, c);
        }
    }
    out
}

fn check_column(h: Modulus, mu: &Partition, g: &FockVector) -> Result<()> {
    match column_violations(h, mu, g).first() {
        None => Ok(()),
        Some(v) => Err(Error::Triangularity {
            column: mu.clone(),
            detail: format!("{:?} at row {} (entry {})", v.kind, v.row, v.entry),
        }),
    }
}

/// Checks integrality, unitriangularity in dominance order, congruence
/// modulo `qL` and constancy of residue content on every column.
pub fn verify_theorem41(matrix: &BasisMatrix) -> Theorem41Report {
    let mut report = Theorem41Report::default();
    for (mu, g) in matrix.columns() {
        report.columns_checked += 1;
        report.entries_checked += g.len();
        report.violations.extend(column_violations(matrix.h, mu, g));
    }
    report
}

/// Expands `a` on the canonical vectors of `basis`: returns `c` with
/// `a = Σ_ν c_ν G(ν)`, or an error if `a` is not in their span.
pub fn expand_on_canonical(a: &FockVector, basis: &BasisMatrix) -> Result<BTreeMap<Partition, LaurentPoly>> {
    let mut residual = a.clone();
    let mut coefficients = BTreeMap::new();
    // G(ν) vanishes at canonical rows lex-below ν, so sweep labels upward
    for (nu, g) in basis.columns.iter() {
        let c = residual.coeff(nu);
        if !c.is_zero() {
            residual.add_scaled(g, &-c.clone());
            coefficients.insert(nu.clone(), c);
        }
    }
    if !residual.is_zero() {
        let (row, _) = residual.iter().next().expect("nonzero");
        return Err(Error::Triangularity {
            column: row.clone(),
            detail: "vector is not in the span of the canonical basis".into(),
        });
    }
    Ok(coefficients)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn h(v: usize) -> Modulus {
        Modulus::new(v).unwrap()
    }

    fn vec_of(terms: &[(&str, &str)]) -> FockVector {
        FockVector::from_terms(terms.iter().map(|(k, c)| (p(k), lp(c))))
    }

    #[test]
    fn a_432() {
        let expected = vec_of(&[("432", "1"), ("531", "q^4"), ("72", "q^2"), ("81", "q^6")]);
        assert_eq!(a_vector(h(3), &p("432")).unwrap(), expected);
    }

    #[test]
    fn degree_zero_and_one() {
        let b0 = canonical_basis(h(3), 0).unwrap();
        assert_eq!(b0.column(&Partition::empty()), Some(&FockVector::vacuum()));
        let b1 = canonical_basis(h(3), 1).unwrap();
        assert_eq!(b1.column(&p("1")), Some(&FockVector::basis(p("1"))));
        let a = a_vector_fast(h(3), &p("1"), |_| Some(FockVector::vacuum())).unwrap();
        assert_eq!(a, FockVector::basis(p("1")));
    }

    #[test]
    fn fast_path_needs_context() {
        let err = a_vector_fast(h(3), &p("432"), |_| None).unwrap_err();
        assert!(matches!(err, Error::MissingContext(_)));
    }

    #[test]
    fn column_532() {
        let b = canonical_basis(h(3), 10).unwrap();
        assert_eq!(b.column(&p("532")), Some(&vec_of(&[("532", "1"), ("82", "q^2")])));
        let report = verify_theorem41(&b);
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.columns_checked, 4);
    }

    #[test]
    fn reduce_rejects_bad_diagonal() {
        let bad = vec_of(&[("432", "q")]);
        assert!(triangular_reduce(&p("432"), bad, &BTreeMap::new()).is_err());
    }

    #[test]
    fn verify_reports_witnesses() {
        let mut cols = BTreeMap::new();
        cols.insert(p("532"), vec_of(&[("532", "1"), ("82", "1+q^-1"), ("541", "q")]));
        let report = verify_theorem41(&BasisMatrix::new(h(3), 10, cols));
        let kinds: Vec<_> = report.violations.iter().map(|v| v.kind.clone()).collect();
        assert!(kinds.contains(&ViolationKind::NegativeExponent));
        assert!(kinds.contains(&ViolationKind::NotInQZq));
        assert!(kinds.contains(&ViolationKind::MixedContent));
    }
}
