//! Finite root systems: Cartan matrices with the standard (Bourbaki /
//! Humphreys) node numbering, Weyl groups as integer matrix groups,
//! parabolic longest elements and Dynkin subdiagrams.
//!
//! Conventions: `a_ij = ⟨α_i, α_j⟩ = ⟨α_i, α_j^∨⟩`, so that
//! `s_j(α_i) = α_i − a_ij α_j` and `α_i = Σ_j a_ij ϖ_j`.

mod matrix;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num::rational::Ratio;
use num::{Signed, Zero};

pub use matrix::IMatrix;

/// Default cap on the number of Weyl group elements enumerated.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("invalid Cartan type {0}")]
    InvalidType(String),
    #[error("Weyl group of {kind} exceeds the enumeration budget of {budget} elements")]
    BudgetExceeded { kind: String, budget: usize },
    #[error("simple root index {index} out of range for rank {rank}")]
    BadIndex { index: usize, rank: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            _ => return None,
        })
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B => rank >= 2,
            CartanType::C => rank >= 3,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }
}

/// Cartan matrix of a finite type together with its name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    kind: CartanType,
    rank: usize,
    matrix: IMatrix,
    positive_roots: Vec<Vec<i64>>,
}

fn standard_matrix(kind: CartanType, n: usize) -> IMatrix {
    let mut m = IMatrix::identity(n);
    for i in 0..n {
        m.set(i, i, 2);
    }
    let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
        m.set(i - 1, j - 1, aij);
        m.set(j - 1, i - 1, aji);
    };
    match kind {
        CartanType::A => (1..n).for_each(|i| bond(i, i + 1, -1, -1)),
        CartanType::B => {
            (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(n - 1, n, -2, -1);
        }
        CartanType::C => {
            (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(n - 1, n, -1, -2);
        }
        CartanType::D => {
            (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(n - 2, n, -1, -1);
        }
        CartanType::E => {
            bond(1, 3, -1, -1);
            bond(2, 4, -1, -1);
            (3..n).for_each(|i| bond(i, i + 1, -1, -1));
        }
        CartanType::F => {
            bond(1, 2, -1, -1);
            bond(2, 3, -2, -1);
            bond(3, 4, -1, -1);
        }
        CartanType::G => bond(1, 2, -1, -3),
    }
    m
}

impl CartanDatum {
    pub fn build(kind: CartanType, rank: usize) -> Result<Arc<Self>, RootError> {
        if !kind.is_valid_rank(rank) {
            return Err(RootError::InvalidType(format!("{}{}", kind.letter(), rank)));
        }
        let matrix = standard_matrix(kind, rank);
        let positive_roots = positive_roots(&matrix);
        Ok(Arc::new(CartanDatum { kind, rank, matrix, positive_roots }))
    }

    /// Type A with `rank = n − 1`, the root system of `S_n`.
    pub fn type_a(n: usize) -> Arc<Self> {
        Self::build(CartanType::A, n - 1).expect("n >= 2")
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }

    pub fn matrix(&self) -> &IMatrix {
        &self.matrix
    }

    /// `⟨α_i, α_j⟩` for 1-based `i, j`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.matrix.get(i - 1, j - 1)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.a(i, j) != 0
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn identity(self: &Arc<Self>) -> WeylElement {
        WeylElement::identity(self.clone())
    }

    pub fn simple_reflection(self: &Arc<Self>, i: usize) -> Result<WeylElement, RootError> {
        self.check_index(i)?;
        Ok(self.identity().mul_simple_right(i))
    }

    fn check_index(&self, i: usize) -> Result<(), RootError> {
        if i == 0 || i > self.rank {
            Err(RootError::BadIndex { index: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    /// `s_{b_1} ⋯ s_{b_ℓ}`; the word need not be reduced.
    pub fn element_from_word(self: &Arc<Self>, b: &[usize]) -> Result<WeylElement, RootError> {
        let mut w = self.identity();
        for &i in b {
            self.check_index(i)?;
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    /// Like [`element_from_word`](Self::element_from_word) but rejects
    /// non-reduced words.
    pub fn element_from_reduced_word(self: &Arc<Self>, b: &[usize]) -> Result<WeylElement, RootError> {
        let w = self.element_from_word(b)?;
        if w.length() != b.len() {
            return Err(RootError::NotReduced(b.to_vec()));
        }
        Ok(w)
    }

    /// Breadth-first enumeration of `W`, each element with its length.
    pub fn weyl_enumerate(self: &Arc<Self>, budget: usize) -> Result<Vec<(WeylElement, usize)>, RootError> {
        let mut seen: HashMap<IMatrix, ()> = HashMap::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        let e = self.identity();
        seen.insert(e.weight.clone(), ());
        queue.push_back((e, 0usize));
        while let Some((w, l)) = queue.pop_front() {
            for i in 1..=self.rank {
                let u = w.mul_simple_right(i);
                if !seen.contains_key(&u.weight) {
                    seen.insert(u.weight.clone(), ());
                    queue.push_back((u, l + 1));
                }
            }
            out.push((w, l));
            if seen.len() > budget {
                return Err(RootError::BudgetExceeded { kind: self.name(), budget });
            }
        }
        Ok(out)
    }

    /// Longest element of the parabolic subgroup `W_K`.
    pub fn longest_parabolic(self: &Arc<Self>, k: &[usize]) -> Result<WeylElement, RootError> {
        for &i in k {
            self.check_index(i)?;
        }
        let mut w = self.identity();
        while let Some(&i) = k.iter().find(|&&i| !w.is_right_descent(i)) {
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    pub fn longest(self: &Arc<Self>) -> WeylElement {
        let all: Vec<usize> = (1..=self.rank).collect();
        self.longest_parabolic(&all).expect("valid indices")
    }

    /// Maximal connected subsets of `K`, ordered by smallest node, each
    /// with its type and the lexicographically smallest embedding of the
    /// standard diagram of that type.
    pub fn connected_components(&self, k: &[usize]) -> Vec<Component> {
        let mut nodes: Vec<usize> = k.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        let mut assigned = vec![false; nodes.len()];
        let mut out = Vec::new();
        for start in 0..nodes.len() {
            if assigned[start] {
                continue;
            }
            let mut comp = vec![nodes[start]];
            assigned[start] = true;
            let mut frontier = vec![nodes[start]];
            while let Some(x) = frontier.pop() {
                for (idx, &y) in nodes.iter().enumerate() {
                    if !assigned[idx] && self.adjacent(x, y) {
                        assigned[idx] = true;
                        comp.push(y);
                        frontier.push(y);
                    }
                }
            }
            comp.sort_unstable();
            let (kind, embeddings) = self.identify(&comp);
            out.push(Component { nodes: comp, kind, embedding: embeddings[0].clone() });
        }
        out
    }

    /// All embeddings of the standard diagram onto a connected node set,
    /// in lexicographic order, together with the identified type.
    pub fn embeddings(&self, nodes: &[usize]) -> (CartanType, Vec<Vec<usize>>) {
        self.identify(nodes)
    }

    fn identify(&self, nodes: &[usize]) -> (CartanType, Vec<Vec<usize>>) {
        use CartanType::*;
        let k = nodes.len();
        for kind in [A, B, C, D, E, F, G] {
            if !kind.is_valid_rank(k) {
                continue;
            }
            let std = standard_matrix(kind, k);
            let mut found = Vec::new();
            let mut emb = Vec::with_capacity(k);
            self.embed_rec(&std, nodes, &mut emb, &mut found);
            if !found.is_empty() {
                return (kind, found);
            }
        }
        unreachable!("every connected subdiagram of a finite type is of finite type")
    }

    fn embed_rec(&self, std: &IMatrix, nodes: &[usize], emb: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
        let p = emb.len();
        if p == nodes.len() {
            found.push(emb.clone());
            return;
        }
        for &x in nodes {
            if emb.contains(&x) {
                continue;
            }
            let ok = emb.iter().enumerate().all(|(q, &y)| {
                std.get(p, q) == self.a(x, y) && std.get(q, p) == self.a(y, x)
            });
            if ok {
                emb.push(x);
                self.embed_rec(std, nodes, emb, found);
                emb.pop();
            }
        }
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn roots_to_weights(&self, r: &[i64]) -> Vec<i64> {
        self.matrix.transpose().mul_vec(r)
    }

    /// Converts fundamental-weight coordinates to simple-root coordinates
    /// (exact; entries may be fractional).
    pub fn weights_to_roots(&self, c: &[i64]) -> Vec<Ratio<i64>> {
        // solve Aᵀ r = c by Gauss–Jordan elimination
        let n = self.rank;
        let at = self.matrix.transpose();
        let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = (0..n).map(|j| Ratio::from_integer(at.get(i, j))).collect();
                row.push(Ratio::from_integer(c[i]));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= inv;
            }
            let pivot = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col];
                    for (x, v) in row.iter_mut().zip(&pivot) {
                        *x -= f * v;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n]).collect()
    }
}

impl FromStr for CartanDatum {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, RootError> {
        parse_cartan(s).map(|d| (*d).clone())
    }
}

/// Parses `"A3"`, `"B2"`, `"G2"`, `"F4"` and so on.
pub fn parse_cartan(s: &str) -> Result<Arc<CartanDatum>, RootError> {
    let s = s.trim();
    let bad = || RootError::InvalidType(s.to_string());
    let mut chars = s.chars();
    let kind = chars.next().and_then(CartanType::from_letter).ok_or_else(bad)?;
    let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
    CartanDatum::build(kind, rank)
}

fn positive_roots(a: &IMatrix) -> Vec<Vec<i64>> {
    let n = a.size();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut stack: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    for r in &stack {
        seen.insert(r.clone(), ());
    }
    while let Some(r) = stack.pop() {
        for j in 0..n {
            // s_j(β) = β − ⟨β, α_j^∨⟩ α_j
            let pairing: i64 = (0..n).map(|i| r[i] * a.get(i, j)).sum();
            let mut s = r.clone();
            s[j] -= pairing;
            if s.iter().all(|&x| x >= 0) && !seen.contains_key(&s) {
                seen.insert(s.clone(), ());
                stack.push(s);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_keys().collect();
    roots.sort_by(|x, y| x.iter().sum::<i64>().cmp(&y.iter().sum::<i64>()).then_with(|| y.cmp(x)));
    roots
}

/// A connected piece of a subset of simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Nodes in increasing order.
    pub nodes: Vec<usize>,
    pub kind: CartanType,
    /// `embedding[p]` is the node playing the role of node `p+1` of the
    /// standard diagram.
    pub embedding: Vec<usize>,
}

impl Component {
    pub fn type_name(&self) -> String {
        format!("{}{}", self.kind.letter(), self.nodes.len())
    }
}

/// An element of the Weyl group, identified by its matrix on the
/// fundamental-weight basis. Root-basis matrices and the canonical
/// reduced word are cached.
#[derive(Clone)]
pub struct WeylElement {
    datum: Arc<CartanDatum>,
    weight: IMatrix,
    root: IMatrix,
    root_inv: IMatrix,
    word: OnceLock<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.weight == other.weight
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.weight.hash(state);
    }
}

impl WeylElement {
    fn identity(datum: Arc<CartanDatum>) -> Self {
        let n = datum.rank;
        WeylElement {
            datum,
            weight: IMatrix::identity(n),
            root: IMatrix::identity(n),
            root_inv: IMatrix::identity(n),
            word: OnceLock::new(),
        }
    }

    pub fn datum(&self) -> &Arc<CartanDatum> {
        &self.datum
    }

    /// Matrix on fundamental-weight coordinates (columns are images of
    /// the `ϖ_j`).
    pub fn weight_matrix(&self) -> &IMatrix {
        &self.weight
    }

    /// Matrix on simple-root coordinates (columns are images of the `α_j`).
    pub fn root_matrix(&self) -> &IMatrix {
        &self.root
    }

    fn reflection_root(&self, i: usize) -> IMatrix {
        let n = self.datum.rank;
        let mut m = IMatrix::identity(n);
        for k in 0..n {
            // s_i(α_k) = α_k − a_{ki} α_i
            m.set(i - 1, k, m.get(i - 1, k) - self.datum.matrix.get(k, i - 1));
        }
        m
    }

    fn reflection_weight(&self, i: usize) -> IMatrix {
        let n = self.datum.rank;
        let mut m = IMatrix::identity(n);
        for j in 0..n {
            // s_i(ϖ_i) = ϖ_i − α_i = ϖ_i − Σ_j a_ij ϖ_j
            m.set(j, i - 1, m.get(j, i - 1) - self.datum.matrix.get(i - 1, j));
        }
        m
    }

    /// `w · s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let sr = self.reflection_root(i);
        WeylElement {
            datum: self.datum.clone(),
            weight: self.weight.mul(&self.reflection_weight(i)),
            root: self.root.mul(&sr),
            root_inv: sr.mul(&self.root_inv),
            word: OnceLock::new(),
        }
    }

    /// `s_i · w`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let sr = self.reflection_root(i);
        WeylElement {
            datum: self.datum.clone(),
            weight: self.reflection_weight(i).mul(&self.weight),
            root: sr.mul(&self.root),
            root_inv: self.root_inv.mul(&sr),
            word: OnceLock::new(),
        }
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        WeylElement {
            datum: self.datum.clone(),
            weight: self.weight.mul(&other.weight),
            root: self.root.mul(&other.root),
            root_inv: other.root_inv.mul(&self.root_inv),
            word: OnceLock::new(),
        }
    }

    pub fn inverse(&self) -> Self {
        let word: Vec<usize> = self.reduced_word().iter().rev().copied().collect();
        self.datum.element_from_word(&word).expect("valid indices")
    }

    pub fn is_identity(&self) -> bool {
        self.weight == IMatrix::identity(self.datum.rank)
    }

    /// `w(α_i) < 0`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        (0..self.datum.rank).any(|k| self.root.get(k, i - 1) < 0)
    }

    /// `w⁻¹(α_i) < 0`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        (0..self.datum.rank).any(|k| self.root_inv.get(k, i - 1) < 0)
    }

    /// Image of a vector in simple-root coordinates.
    pub fn act_on_root(&self, r: &[i64]) -> Vec<i64> {
        self.root.mul_vec(r)
    }

    /// Image of a vector in fundamental-weight coordinates.
    pub fn act_on_weight(&self, c: &[i64]) -> Vec<i64> {
        self.weight.mul_vec(c)
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> &[usize] {
        self.word.get_or_init(|| {
            let n = self.datum.rank;
            let mut inv = self.root_inv.clone();
            let mut out = Vec::new();
            while let Some(i) = (1..=n).find(|&i| (0..n).any(|k| inv.get(k, i - 1) < 0)) {
                out.push(i);
                inv = inv.mul(&self.reflection_root(i));
            }
            out
        })
    }

    pub fn length(&self) -> usize {
        self.reduced_word().len()
    }

    /// Number of positive roots sent to negative roots (equals the length).
    pub fn inversion_count(&self) -> usize {
        self.datum
            .positive_roots()
            .iter()
            .filter(|r| self.act_on_root(r).iter().any(|x| x.is_negative()))
            .count()
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({} {:?})", self.datum.name(), self.reduced_word())
    }
}

/// Number of reduced words of `w`, by recursion over right descents.
pub fn count_reduced_words(w: &WeylElement) -> u128 {
    fn rec(w: &WeylElement, memo: &mut HashMap<IMatrix, u128>) -> u128 {
        if w.is_identity() {
            return 1;
        }
        if let Some(&c) = memo.get(&w.weight) {
            return c;
        }
        let n = w.datum.rank;
        let total = (1..=n)
            .filter(|&i| w.is_right_descent(i))
            .map(|i| rec(&w.mul_simple_right(i), memo))
            .sum();
        memo.insert(w.weight.clone(), total);
        total
    }
    rec(w, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_examples() {
        let a2 = parse_cartan("A2").unwrap();
        assert_eq!(a2.matrix().rows(), vec![vec![2, -1], vec![-1, 2]]);
        let g2 = parse_cartan("G2").unwrap();
        let mut pair = [g2.a(1, 2), g2.a(2, 1)];
        pair.sort();
        assert_eq!(pair, [-3, -1]);
        let b2 = parse_cartan("B2").unwrap();
        let mut pair = [b2.a(1, 2), b2.a(2, 1)];
        pair.sort();
        assert_eq!(pair, [-2, -1]);
        assert!(parse_cartan("C2").is_err());
        assert!(parse_cartan("E9").is_err());
        assert!(parse_cartan("X3").is_err());
        assert!(parse_cartan("A").is_err());
    }

    #[test]
    fn e_type_branch_node() {
        let e7 = parse_cartan("E7").unwrap();
        let nbrs: Vec<usize> = (1..=7).filter(|&j| e7.adjacent(4, j)).collect();
        assert_eq!(nbrs, vec![2, 3, 5]);
    }

    #[test]
    fn enumeration_examples() {
        let a2 = parse_cartan("A2").unwrap();
        let mut ls: Vec<usize> = a2.weyl_enumerate(100).unwrap().into_iter().map(|(_, l)| l).collect();
        ls.sort();
        assert_eq!(ls, vec![0, 1, 1, 2, 2, 3]);
        let g2 = parse_cartan("G2").unwrap();
        let w = g2.weyl_enumerate(100).unwrap();
        assert_eq!(w.len(), 12);
        assert_eq!(w.iter().map(|(_, l)| *l).max(), Some(6));
        let b2 = parse_cartan("B2").unwrap();
        let w = b2.weyl_enumerate(100).unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(w.iter().map(|(_, l)| *l).max(), Some(4));
        let e6 = parse_cartan("E6").unwrap();
        assert!(matches!(e6.weyl_enumerate(DEFAULT_ENUMERATION_BUDGET), Err(RootError::BudgetExceeded { .. })));
    }

    #[test]
    fn parabolic_examples() {
        let a2 = parse_cartan("A2").unwrap();
        assert!(a2.longest_parabolic(&[]).unwrap().is_identity());
        let w = a2.longest_parabolic(&[1, 2]).unwrap();
        assert_eq!(w.length(), 3);
        assert_eq!(w, a2.element_from_word(&[1, 2, 1]).unwrap());
        assert_eq!(a2.longest_parabolic(&[2]).unwrap(), a2.simple_reflection(2).unwrap());
    }

    #[test]
    fn component_examples() {
        let e7 = parse_cartan("E7").unwrap();
        let c = e7.connected_components(&[2, 4, 5, 6, 7]);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].type_name(), "A5");
        assert_eq!(c[0].embedding, vec![2, 4, 5, 6, 7]);
        let c = e7.connected_components(&[2, 3, 4, 5]);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].type_name(), "D4");
        assert_eq!(c[0].embedding, vec![2, 4, 3, 5]);
        assert!(e7.connected_components(&[]).is_empty());
        let (_, all) = e7.embeddings(&[2, 3, 4, 5]);
        assert!(all.contains(&vec![5, 4, 2, 3]));
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn b2_inside_c3_is_identified() {
        let c3 = parse_cartan("C3").unwrap();
        let comp = c3.connected_components(&[2, 3]);
        assert_eq!(comp[0].type_name(), "B2");
        assert_eq!(comp[0].embedding, vec![3, 2]);
    }
}
