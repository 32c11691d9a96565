//! The level-1 q-Fock space of type `A^(2)_{2n}`.
//!
//! Basis vectors `|λ⟩`, `λ ∈ DP_h`, are q-wedges `u_{λ_1} ∧ ... ∧ u_{λ_r} ∧ |0⟩`.
//! Chevalley generators act letter by letter through the coproduct and the
//! resulting words are straightened with the two commutation rules
//! `u_j ∧ u_j = 0` (`j ≢ 0`) and `u_j ∧ u_{j+1} = -q² u_{j+1} ∧ u_j`
//! (`j ≡ 0, -1`), all congruences mod `h`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{q_factorial, q_i_exponent, LaurentPoly};
use crate::partitions::{residue_content, Modulus, Partition, ResidueContent};

/// A finite word of indices standing in front of the vacuum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WedgeWord(pub Vec<usize>);

impl WedgeWord {
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        WedgeWord(entries)
    }
}

/// Outcome of straightening a word: `(-q²)^swaps |λ⟩`, or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Straightened {
    Zero,
    Term { swaps: u32, partition: Partition },
}

impl Straightened {
    pub fn coefficient(swaps: u32) -> LaurentPoly {
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        LaurentPoly::monomial(sign, 2 * swaps as i64)
    }

    pub fn into_vector(self) -> FockVector {
        match self {
            Straightened::Zero => FockVector::zero(),
            Straightened::Term { swaps, partition } => {
                FockVector::from_terms([(partition, Self::coefficient(swaps))])
            }
        }
    }
}

/// Positions `k` with `w[k] <= w[k+1]` that are not allowed repeats.
fn disorder_positions(h: Modulus, w: &[usize]) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&k| w[k] < w[k + 1] || (w[k] == w[k + 1] && w[k] % h.h() != 0))
        .collect()
}

/// Straightens `word`, resolving at each step the disorder chosen by
/// `pick` from the list of current disorder positions.
pub fn normal_order_by(
    h: Modulus,
    word: &WedgeWord,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Result<Straightened> {
    let hh = h.h();
    let mut w = word.0.clone();
    let mut swaps = 0u32;
    loop {
        let positions = disorder_positions(h, &w);
        if positions.is_empty() {
            break;
        }
        let k = positions[pick(&positions) % positions.len()];
        let (a, b) = (w[k], w[k + 1]);
        if a == b {
            return Ok(Straightened::Zero);
        }
        if b == a + 1 && (a % hh == 0 || a % hh == hh - 1) {
            w.swap(k, k + 1);
            swaps += 1;
        } else {
            return Err(Error::UncoveredDisorder { word: word.0.clone(), position: k });
        }
    }
    Ok(Straightened::Term { swaps, partition: Partition::new(w).expect("sorted word") })
}

/// Straightens `word`, always resolving the leftmost disorder first.
pub fn straighten(h: Modulus, word: &WedgeWord) -> Result<Straightened> {
    normal_order_by(h, word, |_| 0)
}

pub fn normal_order(h: Modulus, word: &WedgeWord) -> Result<FockVector> {
    Ok(straighten(h, word)?.into_vector())
}

/// A finitely supported vector `Σ c_λ |λ⟩` with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        Self::from_terms([(lambda, LaurentPoly::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, LaurentPoly)>) -> Self {
        let mut v = FockVector::zero();
        for (lambda, c) in terms {
            v.add_term(lambda, &c);
        }
        v
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
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

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in increasing lex order of the labels.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = &Partition> + '_ {
        self.terms.keys()
    }

    /// The common degree of all keys, if the vector is nonzero and homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|p| p.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (lambda, x) in &other.terms {
            self.add_term(lambda.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> FockVector {
        let mut out = FockVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        out
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        out
    }

    pub fn bar(&self) -> FockVector {
        FockVector { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.bar())).collect() }
    }

    /// Coefficients specialized at `q = 1`, zero entries dropped.
    pub fn at_one(&self) -> BTreeMap<Partition, BigInt> {
        self.terms
            .iter()
            .map(|(k, c)| (k.clone(), c.eval_at_one()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }

    /// Divides every coefficient exactly by `d`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<FockVector> {
        let mut out = FockVector::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &c.exact_div(d)?);
        }
        Ok(out)
    }

    fn merge(parts: Vec<FockVector>) -> FockVector {
        parts.into_iter().fold(FockVector::zero(), |mut acc, v| {
            acc.add_scaled(&v, &LaurentPoly::one());
            acc
        })
    }
}

/// `{"degree": m, "terms": [{"partition": [...], "poly": {...}}]}`, terms in
/// decreasing lex order.
#[derive(Serialize, Deserialize)]
struct FockVectorJson {
    degree: Option<usize>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    poly: LaurentPoly,
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FockVectorJson {
            degree: self.degree(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(k, c)| TermJson { partition: k.clone(), poly: c.clone() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = FockVectorJson::deserialize(deserializer)?;
        Ok(FockVector::from_terms(raw.terms.into_iter().map(|t| (t.partition, t.poly))))
    }
}

/// Exponent of `q` in the eigenvalue of `t_i` on `u_j`.
pub fn t_exponent(h: Modulus, i: usize, j: usize) -> i64 {
    let (hh, n) = (h.h(), h.n());
    let r = j % hh;
    let plus_minus = |base: usize| [(base + i) % hh, (base + hh - i) % hh];
    if i == n {
        if r == hh - 1 {
            2
        } else if r == 1 % hh {
            -2
        } else {
            0
        }
    } else if i == 0 {
        if r == n {
            4
        } else if r == (n + 1) % hh {
            -4
        } else {
            0
        }
    } else if plus_minus(n).contains(&r) {
        2
    } else if plus_minus(n + 1).contains(&r) {
        -2
    } else {
        0
    }
}

/// Exponent of the vacuum eigenvalue of `t_i`: `q^{δ_{in}}`.
pub fn vacuum_t_exponent(h: Modulus, i: usize) -> i64 {
    (i == h.n()) as i64
}

/// Coefficient of `u_{j+1}` in `f_i u_j`.
fn f_letter(h: Modulus, i: usize, j: usize) -> Option<LaurentPoly> {
    let (hh, n) = (h.h(), h.n());
    let r = j % hh;
    if i == n {
        if r == hh - 1 {
            Some(LaurentPoly::one())
        } else if r == 0 {
            Some(LaurentPoly::from_terms([(1, 1), (-1, 1)]))
        } else {
            None
        }
    } else if r == (n + i) % hh || r == (n + hh - i) % hh {
        Some(LaurentPoly::one())
    } else {
        None
    }
}

/// Coefficient of `u_{j-1}` in `e_i u_j` (`j >= 1`).
fn e_letter(h: Modulus, i: usize, j: usize) -> Option<LaurentPoly> {
    if j == 0 {
        return None;
    }
    let (hh, n) = (h.h(), h.n());
    let r = j % hh;
    if i == n {
        if r == 1 {
            Some(LaurentPoly::one())
        } else if r == 0 {
            Some(LaurentPoly::from_terms([(1, 1), (-1, 1)]))
        } else {
            None
        }
    } else if r == (n + 1 + i) % hh || r == (n + 1 + hh - i) % hh {
        Some(LaurentPoly::one())
    } else {
        None
    }
}

fn check_color(h: Modulus, i: usize) {
    assert!(i <= h.n(), "color {i} out of range 0..={}", h.n());
}

fn push_straightened(h: Modulus, word: Vec<usize>, coeff: LaurentPoly, out: &mut FockVector) -> Result<()> {
    if let Straightened::Term { swaps, partition } = straighten(h, &WedgeWord::new(word))? {
        out.add_term(partition, &(&coeff * &Straightened::coefficient(swaps)));
    }
    Ok(())
}

/// `f_i |λ⟩ = Σ_k u_{λ_1} ∧ .. ∧ f_i u_{λ_k} ∧ t_i u_{λ_{k+1}} ∧ .. ∧ t_i|0⟩ + .. ∧ f_i|0⟩`.
pub fn f_on_basis(h: Modulus, i: usize, lambda: &Partition) -> Result<FockVector> {
    check_color(h, i);
    let parts = lambda.parts();
    let r = parts.len();
    // suffix[k] = Σ_{l >= k} t-exponents, including the vacuum
    let mut suffix = vec![vacuum_t_exponent(h, i); r + 1];
    for k in (0..r).rev() {
        suffix[k] = suffix[k + 1] + t_exponent(h, i, parts[k]);
    }
    let mut out = FockVector::zero();
    for k in 0..r {
        if let Some(c) = f_letter(h, i, parts[k]) {
            let mut word = parts.to_vec();
            word[k] += 1;
            push_straightened(h, word, c.shift(suffix[k + 1]), &mut out)?;
        }
    }
    if i == h.n() {
        let mut word = parts.to_vec();
        word.push(1);
        push_straightened(h, word, LaurentPoly::one(), &mut out)?;
    }
    Ok(out)
}

/// `e_i |λ⟩ = Σ_k t_i^{-1}u_{λ_1} ∧ .. ∧ t_i^{-1}u_{λ_{k-1}} ∧ e_i u_{λ_k} ∧ .. ∧ |0⟩`.
pub fn e_on_basis(h: Modulus, i: usize, lambda: &Partition) -> Result<FockVector> {
    check_color(h, i);
    let parts = lambda.parts();
    let mut prefix = 0i64;
    let mut out = FockVector::zero();
    for k in 0..parts.len() {
        if let Some(c) = e_letter(h, i, parts[k]) {
            let mut word = parts.to_vec();
            word[k] -= 1;
            push_straightened(h, word, c.shift(prefix), &mut out)?;
        }
        prefix -= t_exponent(h, i, parts[k]);
    }
    Ok(out)
}

/// Total exponent of the `t_i` eigenvalue on `|λ⟩`.
pub fn t_weight_exponent(h: Modulus, i: usize, lambda: &Partition) -> i64 {
    lambda.parts().iter().map(|&j| t_exponent(h, i, j)).sum::<i64>() + vacuum_t_exponent(h, i)
}

fn apply_linear(
    v: &FockVector,
    op: impl Fn(&Partition) -> Result<FockVector> + Sync,
) -> Result<FockVector> {
    let pieces: Vec<FockVector> = v
        .terms
        .par_iter()
        .map(|(lambda, c)| Ok(op(lambda)?.scale(c)))
        .collect::<Result<_>>()?;
    Ok(FockVector::merge(pieces))
}

pub fn apply_f(h: Modulus, i: usize, v: &FockVector) -> Result<FockVector> {
    apply_linear(v, |lambda| f_on_basis(h, i, lambda))
}

pub fn apply_e(h: Modulus, i: usize, v: &FockVector) -> Result<FockVector> {
    apply_linear(v, |lambda| e_on_basis(h, i, lambda))
}

pub fn apply_t(h: Modulus, i: usize, v: &FockVector) -> FockVector {
    check_color(h, i);
    FockVector {
        terms: v.terms.iter().map(|(k, c)| (k.clone(), c.shift(t_weight_exponent(h, i, k)))).collect(),
    }
}

pub fn apply_t_inv(h: Modulus, i: usize, v: &FockVector) -> FockVector {
    check_color(h, i);
    FockVector {
        terms: v.terms.iter().map(|(k, c)| (k.clone(), c.shift(-t_weight_exponent(h, i, k)))).collect(),
    }
}

/// `f_i^(k) = f_i^k / [k]_i!`. Non-divisibility is an internal error.
pub fn apply_f_divided(h: Modulus, i: usize, k: usize, v: &FockVector) -> Result<FockVector> {
    let mut w = v.clone();
    for _ in 0..k {
        w = apply_f(h, i, &w)?;
    }
    if k <= 1 {
        return Ok(w);
    }
    w.exact_div(&q_factorial(k, i, h.n()))
}

pub fn apply_e_divided(h: Modulus, i: usize, k: usize, v: &FockVector) -> Result<FockVector> {
    let mut w = v.clone();
    for _ in 0..k {
        w = apply_e(h, i, &w)?;
    }
    if k <= 1 {
        return Ok(w);
    }
    w.exact_div(&q_factorial(k, i, h.n()))
}

/// The common residue content of all keys.
pub fn weight(h: Modulus, v: &FockVector) -> Result<ResidueContent> {
    let mut keys = v.support();
    let first = residue_content(h, keys.next().ok_or(Error::ZeroWeight)?);
    for k in keys {
        let c = residue_content(h, k);
        if c != first {
            return Err(Error::MixedWeight { first: first.0, second: c.0 });
        }
    }
    Ok(first)
}

/// `⟨λ|λ⟩ = Π_{k>0} Π_{i=1}^{m_{kh}} (1 - (-q²)^i)`.
pub fn norm_squared(h: Modulus, lambda: &Partition) -> Result<LaurentPoly> {
    if !lambda.in_dp_h(h) {
        return Err(Error::NotInDpH { h: h.h(), partition: lambda.clone() });
    }
    let mut out = LaurentPoly::one();
    let mut values: Vec<usize> = lambda.parts().iter().copied().filter(|p| p % h.h() == 0).collect();
    values.dedup();
    for v in values {
        for i in 1..=lambda.multiplicity(v) {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            out = &out * &LaurentPoly::from_terms([(0, 1), (2 * i as i64, sign)]);
        }
    }
    Ok(out)
}

/// `(t_i - t_i^{-1}) / (q_i - q_i^{-1})` applied to `v`.
pub fn apply_cartan_bracket(h: Modulus, i: usize, v: &FockVector) -> Result<FockVector> {
    let d = q_i_exponent(i, h.n());
    let denom = LaurentPoly::from_terms([(d, 1), (-d, -1)]);
    apply_t(h, i, v).sub(&apply_t_inv(h, i, v)).exact_div(&denom)
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

    #[test]
    fn straighten_examples() {
        let v = normal_order(h(5), &WedgeWord::new(vec![5, 6, 2])).unwrap();
        assert_eq!(v, FockVector::from_terms([(p("652"), lp("-q^2"))]));
        assert_eq!(normal_order(h(3), &WedgeWord::new(vec![3, 1])).unwrap(), FockVector::basis(p("31")));
        assert!(normal_order(h(3), &WedgeWord::new(vec![4, 4])).unwrap().is_zero());
        assert_eq!(normal_order(h(3), &WedgeWord::new(vec![3, 3])).unwrap(), FockVector::basis(p("33")));
        let err = straighten(h(5), &WedgeWord::new(vec![2, 4])).unwrap_err();
        assert!(matches!(err, Error::UncoveredDisorder { position: 0, .. }));
    }

    #[test]
    fn f2_on_542() {
        let v = f_on_basis(h(5), 2, &p("542")).unwrap();
        let expected =
            FockVector::from_terms([(p("642"), lp("q^4+q^2")), (p("552"), lp("q")), (p("5421"), lp("1"))]);
        assert_eq!(v, expected);
    }

    #[test]
    fn f2_on_552() {
        let v = f_on_basis(h(5), 2, &p("552")).unwrap();
        let expected = FockVector::from_terms([(p("652"), lp("1-q^4")), (p("5521"), lp("1"))]);
        assert_eq!(v, expected);
    }

    #[test]
    fn vacuum_rules() {
        for n in 1..4 {
            let hh = Modulus::from_rank(n).unwrap();
            let vac = FockVector::vacuum();
            for i in 0..=n {
                let f = apply_f(hh, i, &vac).unwrap();
                if i == n {
                    assert_eq!(f, FockVector::basis(p("1")));
                } else {
                    assert!(f.is_zero());
                }
                assert!(apply_e(hh, i, &vac).unwrap().is_zero());
                let expected = if i == n { lp("q") } else { lp("1") };
                assert_eq!(apply_t(hh, i, &vac), vac.scale(&expected));
            }
        }
    }

    #[test]
    fn divided_square() {
        // n = 1: f_1 u_1 = 0, so f_1^2|0⟩ vanishes; f_0 f_1|0⟩ = |2⟩ and
        // f_1^2|2⟩ = (q + q^-1)(q^2|4⟩ + |31⟩) by hand.
        let hh = h(3);
        let vac = FockVector::vacuum();
        assert!(apply_f_divided(hh, 1, 2, &vac).unwrap().is_zero());
        let two = apply_f(hh, 0, &apply_f(hh, 1, &vac).unwrap()).unwrap();
        assert_eq!(two, FockVector::basis(p("2")));
        let sq = apply_f(hh, 1, &apply_f(hh, 1, &two).unwrap()).unwrap();
        assert_eq!(sq, FockVector::from_terms([(p("4"), lp("q^3+q")), (p("31"), lp("q+q^-1"))]));
        let div = apply_f_divided(hh, 1, 2, &two).unwrap();
        assert_eq!(div, FockVector::from_terms([(p("4"), lp("q^2")), (p("31"), lp("1"))]));
        assert_eq!(apply_f_divided(hh, 1, 1, &two).unwrap(), apply_f(hh, 1, &two).unwrap());
    }

    #[test]
    fn weights() {
        let hh = h(3);
        assert_eq!(weight(hh, &FockVector::vacuum()).unwrap().0, vec![0, 0]);
        let v = FockVector::from_terms([(p("21"), lp("1")), (p("3"), lp("q"))]);
        assert_eq!(weight(hh, &v).unwrap().0, vec![1, 2]);
        let mixed = FockVector::from_terms([(p("21"), lp("1")), (p("111"), lp("1"))]);
        assert!(matches!(weight(hh, &mixed), Err(Error::MixedWeight { .. })));
        assert!(matches!(weight(hh, &FockVector::zero()), Err(Error::ZeroWeight)));
    }

    #[test]
    fn norms() {
        let hh = h(3);
        assert_eq!(norm_squared(hh, &p("3")).unwrap(), lp("1+q^2"));
        assert_eq!(norm_squared(hh, &p("33")).unwrap(), &lp("1+q^2") * &lp("1-q^4"));
        assert_eq!(norm_squared(hh, &p("421")).unwrap(), lp("1"));
        assert_eq!(norm_squared(hh, &p("63")).unwrap(), lp("1+2q^2+q^4"));
    }

    #[test]
    fn json_round_trip() {
        let v = FockVector::from_terms([(p("652"), lp("1-q^4")), (p("5521"), lp("1"))]);
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.starts_with("{\"degree\":13,\"terms\":[{\"partition\":[6,5,2]"));
        let back: FockVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
