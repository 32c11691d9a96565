//! Kashiwara operators on `DP_h` and the crystal graph of the q-Fock space.
//!
//! A vertex `λ = (λ_1, λ*)` is treated as a two-factor tensor product of the
//! head letter `λ_1` (a vertex of the crystal of `V_aff`) and the tail `λ*`,
//! with `f̃_i` acting on the head iff `ε_i(λ_1) >= φ_i(λ*)`. The empty tail
//! is the vacuum with `φ_i = δ_{in}` and `ε_i = 0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_all, Modulus, Partition};

/// Whether `V_aff` has an `i`-arrow `j -> j+1`.
pub fn aff_arrow(h: Modulus, i: usize, j: i64) -> bool {
    let r = h.reduce(j);
    let (hh, n) = (h.h(), h.n());
    if i == n {
        r == hh - 1 || r == 0
    } else {
        r == (n + i) % hh || r == (n + hh - i) % hh
    }
}

/// Distance from `j` to the start of its `i`-string in `Γ(V_aff)`.
pub fn eps_aff(h: Modulus, i: usize, j: i64) -> usize {
    let mut k = 0;
    while aff_arrow(h, i, j - k as i64 - 1) {
        k += 1;
    }
    k
}

/// Distance from `j` to the end of its `i`-string in `Γ(V_aff)`.
pub fn phi_aff(h: Modulus, i: usize, j: i64) -> usize {
    let mut k = 0;
    while aff_arrow(h, i, j + k as i64) {
        k += 1;
    }
    k
}

fn check(h: Modulus, lambda: &Partition) -> Result<()> {
    if lambda.in_dp_h(h) {
        Ok(())
    } else {
        Err(Error::NotInDpH { h: h.h(), partition: lambda.clone() })
    }
}

/// `(ε_i, φ_i)` of every suffix `(λ_k, λ_{k+1}, ...)`, index `r` being the vacuum.
fn suffix_stats(h: Modulus, i: usize, parts: &[usize]) -> Vec<(usize, usize)> {
    let r = parts.len();
    let mut stats = vec![(0, (i == h.n()) as usize); r + 1];
    for k in (0..r).rev() {
        let (tail_eps, tail_phi) = stats[k + 1];
        let j = parts[k] as i64;
        let (head_eps, head_phi) = (eps_aff(h, i, j), phi_aff(h, i, j));
        let phi = head_phi + tail_phi.saturating_sub(head_eps);
        let eps = tail_eps + head_eps.saturating_sub(tail_phi);
        stats[k] = (eps, phi);
    }
    stats
}

pub fn eps(h: Modulus, i: usize, lambda: &Partition) -> Result<usize> {
    check(h, lambda)?;
    Ok(suffix_stats(h, i, lambda.parts())[0].0)
}

pub fn phi(h: Modulus, i: usize, lambda: &Partition) -> Result<usize> {
    check(h, lambda)?;
    Ok(suffix_stats(h, i, lambda.parts())[0].1)
}

/// `f̃_i λ`, or `None` when `λ` is the end of its `i`-string.
pub fn ftilde(h: Modulus, i: usize, lambda: &Partition) -> Result<Option<Partition>> {
    check(h, lambda)?;
    let parts = lambda.parts();
    let stats = suffix_stats(h, i, parts);
    let mut out = parts.to_vec();
    for k in 0..parts.len() {
        let j = parts[k] as i64;
        if eps_aff(h, i, j) >= stats[k + 1].1 {
            if phi_aff(h, i, j) == 0 {
                return Ok(None);
            }
            out[k] += 1;
            return Ok(Some(validated(h, out)?));
        }
    }
    if i == h.n() {
        out.push(1);
        return Ok(Some(validated(h, out)?));
    }
    Ok(None)
}

/// `ẽ_i λ`, or `None` when `λ` is the start of its `i`-string.
pub fn etilde(h: Modulus, i: usize, lambda: &Partition) -> Result<Option<Partition>> {
    check(h, lambda)?;
    let parts = lambda.parts();
    let stats = suffix_stats(h, i, parts);
    let mut out = parts.to_vec();
    for k in 0..parts.len() {
        let j = parts[k] as i64;
        if stats[k + 1].1 < eps_aff(h, i, j) {
            out[k] -= 1;
            return Ok(Some(validated(h, out)?));
        }
    }
    Ok(None)
}

fn validated(h: Modulus, parts: Vec<usize>) -> Result<Partition> {
    let p = Partition::new(parts)?;
    check(h, &p)?;
    Ok(p)
}

/// Vertices killed by every `ẽ_i`.
pub fn is_highest_weight(h: Modulus, lambda: &Partition) -> Result<bool> {
    for i in h.colors() {
        if etilde(h, i, lambda)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partitions of degree `<= max_m` with every part divisible by `h`,
/// ordered by degree then decreasing lex.
pub fn highest_weight_vertices(h: Modulus, max_m: usize) -> Vec<Partition> {
    (0..=max_m / h.h())
        .flat_map(|k| enumerate_all(k))
        .map(|p| Partition::new(p.parts().iter().map(|x| x * h.h()).collect()).expect("scaled partition"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub from: Partition,
    pub color: usize,
    pub to: Partition,
}

/// A connected piece of `Γ(F_q)` generated by `f̃_i` from one start vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub h: Modulus,
    pub max_degree: usize,
    pub vertices: BTreeSet<Partition>,
    pub edges: BTreeSet<Edge>,
}

fn degree_lex(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.cmp(b))
}

impl CrystalGraph {
    /// Vertices sorted by degree, then lex.
    pub fn sorted_vertices(&self) -> Vec<&Partition> {
        let mut v: Vec<_> = self.vertices.iter().collect();
        v.sort_by(|a, b| degree_lex(a, b));
        v
    }

    pub fn sorted_edges(&self) -> Vec<&Edge> {
        let mut e: Vec<_> = self.edges.iter().collect();
        e.sort_by(|a, b| degree_lex(&a.from, &b.from).then(a.color.cmp(&b.color)));
        e
    }

    /// Vertex counts by degree.
    pub fn degree_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for v in &self.vertices {
            *out.entry(v.degree()).or_insert(0) += 1;
        }
        out
    }

    pub fn vertices_of_degree(&self, m: usize) -> Vec<Partition> {
        self.vertices.iter().filter(|v| v.degree() == m).cloned().rev().collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph crystal {{");
        let _ = writeln!(s, "  // h = {}", self.h);
        for v in self.sorted_vertices() {
            let _ = writeln!(s, "  \"{0}\" [label=\"{0}\"];", v.to_csv_label());
        }
        for e in self.sorted_edges() {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                e.from.to_csv_label(),
                e.to.to_csv_label(),
                e.color
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "h": self.h.h(),
            "vertices": self.sorted_vertices(),
            "edges": self.sorted_edges(),
        })
    }
}

/// All vertices reachable from `start` by the `f̃_i`, up to `max_degree`.
/// Layers are expanded in parallel.
pub fn component(h: Modulus, start: &Partition, max_degree: usize) -> Result<CrystalGraph> {
    check(h, start)?;
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    if start.degree() > max_degree {
        return Ok(CrystalGraph { h, max_degree, vertices, edges });
    }
    vertices.insert(start.clone());
    let mut layer = vec![start.clone()];
    for _ in start.degree()..max_degree {
        let found: Vec<Vec<Edge>> = layer
            .par_iter()
            .map(|v| {
                let mut out = Vec::new();
                for i in h.colors() {
                    if let Some(to) = ftilde(h, i, v)? {
                        out.push(Edge { from: v.clone(), color: i, to });
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut next = BTreeSet::new();
        for e in found.into_iter().flatten() {
            if vertices.insert(e.to.clone()) {
                next.insert(e.to.clone());
            }
            edges.insert(e);
        }
        layer = next.into_iter().collect();
    }
    Ok(CrystalGraph { h, max_degree, vertices, edges })
}

/// `Γ(Λ_n)`, the component of the empty partition.
pub fn basic_component(h: Modulus, max_degree: usize) -> Result<CrystalGraph> {
    component(h, &Partition::empty(), max_degree)
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
    fn affine_strings() {
        let hh = h(5);
        assert_eq!((eps_aff(hh, 2, 0), phi_aff(hh, 2, 0)), (1, 1));
        assert_eq!((eps_aff(hh, 2, -1), phi_aff(hh, 2, -1)), (0, 2));
        for hv in [3, 5, 7] {
            let hh = h(hv);
            for i in 0..hh.n() {
                for j in 0..hv as i64 {
                    assert!(eps_aff(hh, i, j) <= 1 && phi_aff(hh, i, j) <= 1);
                }
            }
        }
        for k in 0..5 {
            assert_eq!(phi_aff(h(3), 1, 3 * k), 1);
        }
    }

    #[test]
    fn one_strings() {
        let hh = h(3);
        let mut cur = p("2");
        for next in ["21", "31", "41"] {
            cur = ftilde(hh, 1, &cur).unwrap().unwrap();
            assert_eq!(cur, p(next));
        }
        assert_eq!(ftilde(hh, 1, &cur).unwrap(), None);
        assert_eq!(ftilde(hh, 1, &p("331")).unwrap(), Some(p("431")));
        assert_eq!(phi(hh, 1, &p("331")).unwrap(), 1);
        assert_eq!(ftilde(hh, 1, &p("321")).unwrap(), Some(p("331")));
        assert_eq!(ftilde(hh, 1, &Partition::empty()).unwrap(), Some(p("1")));
        assert_eq!(ftilde(hh, 0, &Partition::empty()).unwrap(), None);
    }

    #[test]
    fn rejects_non_dp_h() {
        assert!(ftilde(h(3), 1, &p("22")).is_err());
    }

    #[test]
    fn degree_ten_layer() {
        let g = basic_component(h(3), 10).unwrap();
        assert_eq!(g.vertices_of_degree(10), vec![p("541"), p("532"), p("4321"), p("3331")]);
    }

    #[test]
    fn highest_weights() {
        let hw = highest_weight_vertices(h(3), 7);
        assert_eq!(hw, vec![Partition::empty(), p("3"), p("6"), p("33")]);
        for v in &hw {
            assert!(is_highest_weight(h(3), v).unwrap());
        }
    }

    #[test]
    fn dot_output() {
        let g = basic_component(h(5), 0).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert!(g.to_dot().contains("\"\" [label=\"\"]"));
    }
}
