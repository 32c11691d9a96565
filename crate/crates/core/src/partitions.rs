//! Partition combinatorics for the odd modulus `h = 2n + 1`: the index sets
//! `DP`, `DP_h` and `DPR_h`, column residues, ladders, bar-cores and the
//! orders used by the triangular solver.
//!
//! Columns of a Young diagram are 0-indexed, rows are 1-indexed from the
//! longest part.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd modulus `h = 2n + 1 >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Modulus(usize);

impl Modulus {
    pub fn new(h: usize) -> Result<Self> {
        if h < 3 || h % 2 == 0 {
            return Err(Error::InvalidModulus(h));
        }
        Ok(Modulus(h))
    }

    /// The modulus of `A^(2)_{2n}`, i.e. `2n + 1`.
    pub fn from_rank(n: usize) -> Result<Self> {
        Self::new(2 * n + 1)
    }

    pub fn h(self) -> usize {
        self.0
    }

    /// The rank `n`; colors run over `0..=n`.
    pub fn n(self) -> usize {
        self.0 / 2
    }

    pub fn colors(self) -> std::ops::RangeInclusive<usize> {
        0..=self.n()
    }

    /// `j mod h` for a possibly negative index.
    pub fn reduce(self, j: i64) -> usize {
        j.rem_euclid(self.0 as i64) as usize
    }
}

impl TryFrom<usize> for Modulus {
    type Error = Error;
    fn try_from(h: usize) -> Result<Self> {
        Modulus::new(h)
    }
}

impl From<Modulus> for usize {
    fn from(h: Modulus) -> usize {
        h.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A weakly decreasing sequence of positive integers.
///
/// The derived order is lexicographic on parts, which for partitions agrees
/// with comparing the zero-padded sequences.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Parts must be weakly
    /// decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts first; zeros are discarded.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: usize) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Repeated parts only among multiples of `h`.
    pub fn in_dp_h(&self, h: Modulus) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1] || w[0] % h.h() == 0)
    }

    /// Consecutive gaps (with a trailing zero part) are at most `h`, and
    /// strictly less than `h` below a multiple of `h`; repeats only at
    /// multiples of `h`.
    pub fn is_regular(&self, h: Modulus) -> bool {
        let h = h.h();
        (0..self.len()).all(|i| {
            let (a, b) = (self.part(i), self.part(i + 1));
            let gap = a - b;
            if a % h == 0 {
                gap < h
            } else {
                gap > 0 && gap <= h
            }
        })
    }

    /// The number of cells in column `c` (0-indexed), i.e. the conjugate part.
    pub fn column_height(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&p| p > c).count()
    }

    /// Cells `(row, column)` with 1-indexed rows and 0-indexed columns.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, &len)| (0..len).map(move |c| (k + 1, c)))
    }

    /// Parses `"11,7,7,4"` (comma separated) or `"3321"` (one digit per part).
    /// A separator-free string containing the digit 0 is one part (`"10"`);
    /// other single parts of two or more digits need a trailing comma (`"11,"`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = if s.contains(',') || s.contains(' ') || s.contains('0') {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("unexpected character {ch:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Partition::new(parts)
    }

    /// Parts joined by commas, e.g. `11,7,7,4`; empty string for `()`. A
    /// single part of two or more digits gets a trailing comma (`11,`) so the
    /// label parses back unambiguously.
    pub fn to_csv_label(&self) -> String {
        let joined = self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        if self.0.len() == 1 && self.0[0] >= 10 {
            joined + ","
        } else {
            joined
        }
    }

    /// Parts joined by single spaces, e.g. `9 7 5`. Used in fixture files and
    /// CSV cells, where a bare `10` must mean the one-part partition.
    pub fn to_spaced_label(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
    }

    /// Inverse of [`Partition::to_spaced_label`]: every whitespace separated
    /// token is one part.
    pub fn parse_spaced(s: &str) -> Result<Self> {
        let parts = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

/// Compact label: digits run together when every part is below 10
/// (`3321`), comma separated otherwise (`11,7,7,4`), `∅` when empty.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        if self.0.iter().all(|&p| p < 10) {
            for p in &self.0 {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.to_spaced_label().replace(' ', ","))
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

fn enumerate_with(m: usize, allow_repeat: &dyn Fn(usize) -> bool) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max: usize,
        last: Option<usize>,
        prefix: &mut Vec<usize>,
        allow_repeat: &dyn Fn(usize) -> bool,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            if last == Some(part) && !allow_repeat(part) {
                continue;
            }
            prefix.push(part);
            go(remaining - part, part, Some(part), prefix, allow_repeat, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, None, &mut Vec::new(), allow_repeat, &mut out);
    out
}

/// Every partition of `m`, decreasing lex.
pub fn enumerate_all(m: usize) -> Vec<Partition> {
    enumerate_with(m, &|_| true)
}

/// Strict partitions of `m` in decreasing lexicographic order.
pub fn enumerate_dp(m: usize) -> Vec<Partition> {
    enumerate_with(m, &|_| false)
}

/// `DP_h(m)`: repeated parts only among multiples of `h`; decreasing lex.
pub fn enumerate_dp_h(h: Modulus, m: usize) -> Vec<Partition> {
    enumerate_with(m, &|p| p % h.h() == 0)
}

/// `DPR_h(m)`, the `h`-regular partitions of `m`; decreasing lex.
pub fn enumerate_dpr_h(h: Modulus, m: usize) -> Vec<Partition> {
    enumerate_dp_h(h, m).into_iter().filter(|p| p.is_regular(h)).collect()
}

/// Residue of the 0-indexed column `c`: the `i` in `0..=n` with
/// `c = n ± i (mod h)`.
pub fn residue(h: Modulus, column: usize) -> usize {
    let r = (column % h.h()) as i64;
    (r - h.n() as i64).unsigned_abs() as usize
}

/// Index of the ladder containing cell `(row, column)` (row 1-indexed,
/// column 0-indexed).
pub fn ladder_index(h: Modulus, row: usize, column: usize) -> usize {
    let g = column - column / h.h();
    g + (row - 1) * (h.h() - 1) + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ladder {
    pub index: usize,
    pub residue: usize,
    pub cells: usize,
}

/// Occupied ladders of a partition, in increasing index (peeling) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderDecomposition {
    pub ladders: Vec<Ladder>,
}

impl LadderDecomposition {
    /// `(residue, cell count)` pairs in application order: the first ladder
    /// is applied to the vacuum first.
    pub fn monomial(&self) -> Vec<(usize, usize)> {
        self.ladders.iter().map(|l| (l.residue, l.cells)).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.ladders.iter().map(|l| l.cells).sum()
    }

    /// The monomial written with the last-applied operator leftmost, e.g.
    /// `f_0 f_1^(2) f_1`.
    pub fn monomial_word(&self) -> String {
        if self.ladders.is_empty() {
            return "1".to_string();
        }
        self.ladders
            .iter()
            .rev()
            .map(|l| {
                if l.cells == 1 {
                    format!("f_{}", l.residue)
                } else {
                    format!("f_{}^({})", l.residue, l.cells)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn ladders(h: Modulus, lambda: &Partition) -> Result<LadderDecomposition> {
    if !lambda.in_dp_h(h) {
        return Err(Error::NotInDpH { h: h.h(), partition: lambda.clone() });
    }
    let mut by_index: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
    for (row, col) in lambda.cells() {
        let entry = by_index.entry(ladder_index(h, row, col)).or_insert((residue(h, col), 0));
        debug_assert_eq!(entry.0, residue(h, col));
        entry.1 += 1;
    }
    Ok(LadderDecomposition {
        ladders: by_index
            .into_iter()
            .map(|(index, (residue, cells))| Ladder { index, residue, cells })
            .collect(),
    })
}

/// Removes the cells of the highest occupied ladder. Returns the stripped
/// partition together with that ladder.
pub fn strip_outer_ladder(h: Modulus, lambda: &Partition) -> Result<(Partition, Ladder)> {
    let decomposition = ladders(h, lambda)?;
    let outer = match decomposition.ladders.last() {
        Some(l) => l.clone(),
        None => return Err(Error::InvalidPartition("empty partition has no ladder".into())),
    };
    let mut parts = lambda.parts().to_vec();
    for (row, len) in lambda.parts().iter().enumerate() {
        let keep = (0..*len).filter(|&c| ladder_index(h, row + 1, c) != outer.index).count();
        if (keep..*len).any(|c| ladder_index(h, row + 1, c) != outer.index) {
            return Err(Error::InvalidPartition(format!(
                "outer ladder of {lambda} is not removable from row {}",
                row + 1
            )));
        }
        parts[row] = keep;
    }
    let stripped = Partition::new(parts)
        .map_err(|_| Error::InvalidPartition(format!("removing the outer ladder of {lambda} breaks the shape")))?;
    Ok((stripped, outer))
}

/// `a_h(λ) = Σ floor((λ_i - 1) / h)`.
pub fn a_h(h: Modulus, lambda: &Partition) -> usize {
    lambda.parts().iter().map(|&p| (p - 1) / h.h()).sum()
}

/// `b(λ) = floor((m - ℓ(λ)) / 2)` with `m = |λ|`.
pub fn b_exponent(lambda: &Partition) -> usize {
    (lambda.degree() - lambda.len()) / 2
}

/// Number of cells of each residue `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ResidueContent(pub Vec<usize>);

impl ResidueContent {
    pub fn zero(h: Modulus) -> Self {
        ResidueContent(vec![0; h.n() + 1])
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }
}

pub fn residue_content(h: Modulus, lambda: &Partition) -> ResidueContent {
    let mut counts = vec![0; h.n() + 1];
    for &len in lambda.parts() {
        for c in 0..len {
            counts[residue(h, c)] += 1;
        }
    }
    ResidueContent(counts)
}

/// All results of a single bar removal on a strict set of parts: decrease a
/// part by `h` when the result is zero or absent, or delete two parts
/// summing to `h`.
pub fn bar_removals(h: Modulus, parts: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let h = h.h();
    let mut out = Vec::new();
    for &x in parts {
        if x == h {
            let mut next = parts.clone();
            next.remove(&x);
            out.push(next);
        } else if x > h && !parts.contains(&(x - h)) {
            let mut next = parts.clone();
            next.remove(&x);
            next.insert(x - h);
            out.push(next);
        }
    }
    for &x in parts {
        let y = h.wrapping_sub(x);
        if x < h && x > y && y > 0 && parts.contains(&y) {
            let mut next = parts.clone();
            next.remove(&x);
            next.remove(&y);
            out.push(next);
        }
    }
    out
}

/// The bar-core, using `pick(k)` to choose among the `k` available removals
/// at each step.
pub fn hbar_core_by(h: Modulus, lambda: &Partition, mut pick: impl FnMut(usize) -> usize) -> Result<Partition> {
    if !lambda.in_dp_h(h) {
        return Err(Error::NotInDpH { h: h.h(), partition: lambda.clone() });
    }
    let mut parts: BTreeSet<usize> =
        lambda.parts().iter().copied().filter(|&p| lambda.multiplicity(p) == 1).collect();
    loop {
        let mut options = bar_removals(h, &parts);
        if options.is_empty() {
            break;
        }
        let k = pick(options.len()) % options.len();
        parts = options.swap_remove(k);
    }
    Ok(Partition(parts.into_iter().rev().collect()))
}

/// The `h̄`-core. Repeated part values are removed entirely before bar
/// removal starts.
pub fn hbar_core(h: Modulus, lambda: &Partition) -> Result<Partition> {
    hbar_core_by(h, lambda, |_| 0)
}

/// `λ ⊴ μ` in dominance order; partitions must have the same degree.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.degree() != mu.degree() {
        return Err(Error::DegreeMismatch { left: lambda.degree(), right: mu.degree() });
    }
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0, 0);
    for i in 0..len {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl > sm {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn lex_cmp(lambda: &Partition, mu: &Partition) -> Ordering {
    lambda.cmp(mu)
}

/// `λ + hμ` componentwise.
pub fn shift_by_h_multiple(h: Modulus, lambda: &Partition, mu: &Partition) -> Partition {
    let len = lambda.len().max(mu.len());
    Partition((0..len).map(|i| lambda.part(i) + h.h() * mu.part(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn h(v: usize) -> Modulus {
        Modulus::new(v).unwrap()
    }

    #[test]
    fn modulus_rejects_even_and_small() {
        assert!(Modulus::new(1).is_err());
        assert!(Modulus::new(4).is_err());
        assert_eq!(Modulus::from_rank(3).unwrap().h(), 7);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p("31"));
        assert_eq!(p("11,7,7,4").parts(), &[11, 7, 7, 4]);
        assert_eq!(p("10,").parts(), &[10]);
        assert_eq!(p("").len(), 0);
        assert_eq!(p("11,7,7,4").to_string(), "11,7,7,4");
        assert_eq!(p("3321").to_string(), "3321");
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_dp(0), vec![Partition::empty()]);
        assert_eq!(enumerate_dp_h(h(3), 1), vec![p("1")]);
        assert_eq!(enumerate_dp(10).len(), 10);
        assert_eq!(enumerate_dp_h(h(3), 10).len(), 12);
    }

    #[test]
    fn dp3_of_7() {
        let expected: Vec<_> = ["7", "61", "52", "43", "421", "331"].iter().map(|s| p(s)).collect();
        assert_eq!(enumerate_dp_h(h(3), 7), expected);
        let strict: Vec<_> = expected.iter().filter(|x| x.is_strict()).cloned().collect();
        assert_eq!(enumerate_dp(7), strict);
    }

    #[test]
    fn dpr3_small() {
        assert_eq!(
            enumerate_dpr_h(h(3), 10),
            vec![p("541"), p("532"), p("4321"), p("3331")]
        );
        assert_eq!(
            enumerate_dpr_h(h(3), 11),
            vec![p("641"), p("542"), p("5321"), p("4331"), p("3332")]
        );
        let dpr7 = enumerate_dpr_h(h(7), 21);
        assert!(dpr7.contains(&p("75432")));
        assert!(dpr7.contains(&p("654321")));
    }

    #[test]
    fn residues() {
        let got: Vec<_> = (0..11).map(|c| residue(h(7), c)).collect();
        assert_eq!(got, vec![3, 2, 1, 0, 1, 2, 3, 3, 2, 1, 0]);
        assert_eq!(residue(h(3), 0), 1);
        assert_eq!(residue(h(7), 7), 3);
    }

    #[test]
    fn ladders_of_11_7_7_4() {
        let d = ladders(h(7), &p("11,7,7,4")).unwrap();
        assert_eq!(d.ladders.len(), 22);
        assert_eq!(d.ladders[6], Ladder { index: 7, residue: 3, cells: 3 });
        let expected = [
            (3, 1), (2, 1), (1, 1), (0, 1), (1, 1), (2, 1), (3, 3), (2, 2), (1, 2), (0, 2), (1, 1),
            (2, 1), (3, 2), (2, 1), (1, 1), (0, 1), (1, 1), (2, 1), (3, 2), (2, 1), (1, 1), (0, 1),
        ];
        assert_eq!(d.monomial(), expected.to_vec());
        assert_eq!(
            d.monomial_word(),
            "f_0 f_1 f_2 f_3^(2) f_2 f_1 f_0 f_1 f_2 f_3^(2) f_2 f_1 f_0^(2) f_1^(2) f_2^(2) f_3^(3) f_2 f_1 f_0 f_1 f_2 f_3"
        );
    }

    #[test]
    fn ladder_of_single_cell() {
        let d = ladders(h(3), &p("1")).unwrap();
        assert_eq!(d.ladders, vec![Ladder { index: 1, residue: 1, cells: 1 }]);
        assert!(ladders(h(3), &p("221")).is_err());
    }

    #[test]
    fn outer_ladder_strip() {
        let (nu, outer) = strip_outer_ladder(h(3), &p("3331")).unwrap();
        assert_eq!(nu, p("332"));
        assert_eq!(outer.cells, 2);
        assert_eq!(outer.residue, 1);
    }

    #[test]
    fn exponents() {
        assert_eq!((a_h(h(3), &p("541")), b_exponent(&p("541"))), (2, 3));
        assert_eq!((a_h(h(3), &p("10,")), b_exponent(&p("10,"))), (3, 4));
        assert_eq!(a_h(h(7), &p("11,7,7,4")), 1);
    }

    #[test]
    fn residue_contents() {
        assert_eq!(residue_content(h(3), &Partition::empty()).0, vec![0, 0]);
        assert_eq!(residue_content(h(3), &p("21")).0, vec![1, 2]);
    }

    #[test]
    fn cores() {
        assert_eq!(hbar_core(h(3), &p("3331")).unwrap(), p("1"));
        assert_eq!(hbar_core(h(3), &p("532")).unwrap(), p("52"));
        assert_eq!(hbar_core(h(3), &Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(hbar_core(h(3), &p("82")).unwrap(), p("52"));
        assert!(hbar_core(h(3), &p("22")).is_err());
    }

    #[test]
    fn orders() {
        assert!(dominance_leq(&p("3331"), &p("4321")).unwrap());
        assert!(dominance_leq(&p("4321"), &p("532")).unwrap());
        assert!(dominance_leq(&p("532"), &p("541")).unwrap());
        assert!(!dominance_leq(&p("541"), &p("532")).unwrap());
        assert!(dominance_leq(&p("541"), &p("541")).unwrap());
        assert!(dominance_leq(&p("54"), &p("541")).is_err());
        assert_eq!(lex_cmp(&p("541"), &p("532")), Ordering::Greater);
        assert_eq!(lex_cmp(&p("3331"), &p("4321")), Ordering::Less);
    }

    #[test]
    fn shifts() {
        assert_eq!(shift_by_h_multiple(h(3), &Partition::empty(), &p("1")), p("3"));
        assert_eq!(shift_by_h_multiple(h(3), &p("21"), &p("11")), p("54"));
    }
}
