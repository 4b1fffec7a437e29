//! The free distributive lattice on the generators `01`, `02`, `12`.

use std::fmt;

use serde::Serialize;

/// Generator names, indexed by bit position.
pub const GENERATORS: [&str; 3] = ["01", "02", "12"];

/// A join of meets in normal form: an antichain of nonempty generator sets,
/// each stored as a 3-bit mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticeTerm {
    meets: Vec<u8>,
}

fn minimal(mut masks: Vec<u8>) -> Vec<u8> {
    masks.sort_unstable();
    masks.dedup();
    let keep: Vec<u8> = masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&o| o != m && o & m == o))
        .collect();
    keep
}

impl LatticeTerm {
    /// Normalizes a list of meets; panics on an empty meet or an empty list.
    pub fn from_meets(masks: &[u8]) -> LatticeTerm {
        assert!(!masks.is_empty(), "the empty join is the bottom constant");
        assert!(masks.iter().all(|&m| m > 0 && m < 8), "meets are nonempty subsets of three generators");
        LatticeTerm { meets: minimal(masks.to_vec()) }
    }

    pub fn generator(i: usize) -> LatticeTerm {
        LatticeTerm::from_meets(&[1 << i])
    }

    pub fn meets(&self) -> &[u8] {
        &self.meets
    }

    pub fn join(&self, o: &LatticeTerm) -> LatticeTerm {
        LatticeTerm { meets: minimal(self.meets.iter().chain(&o.meets).copied().collect()) }
    }

    pub fn meet(&self, o: &LatticeTerm) -> LatticeTerm {
        let all = self.meets.iter().flat_map(|&a| o.meets.iter().map(move |&b| a | b)).collect();
        LatticeTerm { meets: minimal(all) }
    }

    pub fn le(&self, o: &LatticeTerm) -> bool {
        self.meet(o) == *self
    }

    /// Value under a truth assignment given as a mask of true generators.
    pub fn eval_bool(&self, truth: u8) -> bool {
        self.meets.iter().any(|&m| m & truth == m)
    }
}

impl fmt::Display for LatticeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .meets
            .iter()
            .map(|&m| {
                let names: Vec<&str> = (0..3).filter(|i| m & (1 << i) != 0).map(|i| GENERATORS[i]).collect();
                format!("({})", names.join("∧"))
            })
            .collect();
        write!(f, "{}", parts.join("∨"))
    }
}

/// Every element: the nonempty antichains of nonempty subsets.
pub fn enumerate_free_lattice() -> Vec<LatticeTerm> {
    let mut out: Vec<LatticeTerm> = (1u32..(1 << 7))
        .filter_map(|family| {
            let masks: Vec<u8> = (1u8..8).filter(|m| family & (1 << (m - 1)) != 0).collect();
            let norm = minimal(masks.clone());
            (norm == masks).then(|| LatticeTerm { meets: norm })
        })
        .collect();
    out.sort();
    out
}

/// Covering pairs `(lower, upper)` as indices into `elements`.
pub fn hasse_edges(elements: &[LatticeTerm]) -> Vec<(usize, usize)> {
    let n = elements.len();
    let lt = |a: usize, b: usize| a != b && elements[a].le(&elements[b]);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// The Hasse diagram in DOT, upper elements drawn above.
pub fn hasse_dot(elements: &[LatticeTerm]) -> String {
    let mut s = String::from("digraph lattice {\n  rankdir=BT;\n");
    for (i, e) in elements.iter().enumerate() {
        s.push_str(&format!("  n{i} [label=\"{e}\"];\n"));
    }
    for (a, b) in hasse_edges(elements) {
        s.push_str(&format!("  n{a} -> n{b};\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Monotone Boolean functions on three variables, by brute force over truth tables.
    fn monotone_functions() -> usize {
        (0u32..256)
            .filter(|table| {
                (0u8..8).all(|x| (0u8..8).all(|y| x & y != x || table >> x & 1 <= table >> y & 1))
            })
            .count()
    }

    #[test]
    fn eighteen_elements_and_dedekind() {
        let all = enumerate_free_lattice();
        assert_eq!(all.len(), 18);
        assert_eq!(monotone_functions(), 20);
        // distinct truth tables, none constant
        let tables: std::collections::BTreeSet<u8> =
            all.iter().map(|t| (0..8).fold(0u8, |acc, x| acc | (t.eval_bool(x) as u8) << x)).collect();
        assert_eq!(tables.len(), 18);
        assert!(!tables.contains(&0) && !tables.contains(&255));
    }

    #[test]
    fn normal_forms() {
        let x = LatticeTerm::generator(0);
        let y = LatticeTerm::generator(1);
        let z = LatticeTerm::generator(2);
        assert_eq!(x.join(&x), x);
        assert_eq!(x.meet(&y.join(&z)), x.meet(&y).join(&x.meet(&z)));
        let j = x.join(&y.meet(&z));
        assert_eq!(j.meets(), &[1, 6]);
        assert_eq!(j.to_string(), "(01)∨(02∧12)");
        assert_eq!(x.meet(&y).join(&z).to_string(), "(01∧02)∨(12)");
    }

    #[test]
    fn operations_agree_with_every_boolean_model() {
        let all = enumerate_free_lattice();
        for a in &all {
            for b in &all {
                for truth in 0..8 {
                    assert_eq!(a.meet(b).eval_bool(truth), a.eval_bool(truth) && b.eval_bool(truth));
                    assert_eq!(a.join(b).eval_bool(truth), a.eval_bool(truth) || b.eval_bool(truth));
                }
            }
        }
    }

    #[test]
    fn bounds_and_covers() {
        let all = enumerate_free_lattice();
        let top = LatticeTerm::from_meets(&[1, 2, 4]);
        let bottom = LatticeTerm::from_meets(&[7]);
        assert!(all.iter().all(|t| t.le(&top) && bottom.le(t)));
        let edges = hasse_edges(&all);
        let idx = |t: &LatticeTerm| all.iter().position(|e| e == t).unwrap();
        // 01 covers (01∧02)∨(01∧12)
        let below = LatticeTerm::from_meets(&[3, 5]);
        assert!(edges.contains(&(idx(&below), idx(&LatticeTerm::generator(0)))));
        assert!(hasse_dot(&all).starts_with("digraph"));
    }
}
