//! Finite groups as explicit multiplication tables, and their Cayley graphs.

use std::collections::BTreeSet;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::distance::two_distance_graph;
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cyclic group needs m >= 1")]
    DegenerateCyclic,
    #[error("dihedral group needs m >= 3, got {0}")]
    DegenerateDihedral(usize),
    #[error("group order {0} exceeds the supported {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("table is not square or has an entry out of range")]
    MalformedTable,
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("connection set is not closed under inverses: {0} lacks its inverse")]
    NotInverseClosed(usize),
    #[error("element {0} is not in the group")]
    UnknownElement(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Cyclic,
    Dihedral,
}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl GroupTable {
    /// Validates a row-major table: `table[x * order + y] = x·y`.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<GroupTable, GroupError> {
        if order > MAX_VERTICES {
            return Err(GroupError::TooLarge(order));
        }
        if order == 0 || table.len() != order * order || table.iter().any(|&x| x >= order) {
            return Err(GroupError::MalformedTable);
        }
        let m = |x: usize, y: usize| table[x * order + y];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| m(x, y) == identity && m(y, x) == identity)
                .ok_or(GroupError::NoInverse(x))?;
            inv.push(y);
        }
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(GroupError::NotAssociative(x, y, z));
                    }
                }
            }
        }
        Ok(GroupTable { order, mul: table, identity, inv })
    }

    /// `Z_m` with element `i` the residue `i`.
    pub fn cyclic(m: usize) -> Result<GroupTable, GroupError> {
        if m == 0 {
            return Err(GroupError::DegenerateCyclic);
        }
        let table = (0..m * m).map(|k| (k / m + k % m) % m).collect();
        GroupTable::from_table(m, table)
    }

    /// Dihedral group of order `2m`. Element `i + m·j` is `r^i s^j`, where
    /// `r^m = s^2 = 1` and `s r = r^{-1} s`.
    pub fn dihedral(m: usize) -> Result<GroupTable, GroupError> {
        if m < 3 {
            return Err(GroupError::DegenerateDihedral(m));
        }
        let order = 2 * m;
        let mut table = vec![0; order * order];
        for x in 0..order {
            let (i, a) = (x % m, x / m);
            for y in 0..order {
                let (k, b) = (y % m, y / m);
                // r^i s^a r^k s^b = r^(i ± k) s^(a+b)
                let rot = if a == 0 { (i + k) % m } else { (i + m - k) % m };
                table[x * order + y] = rot + m * ((a + b) % 2);
            }
        }
        GroupTable::from_table(order, table)
    }

    pub fn build(kind: GroupKind, m: usize) -> Result<GroupTable, GroupError> {
        match kind {
            GroupKind::Cyclic => GroupTable::cyclic(m),
            GroupKind::Dihedral => GroupTable::dihedral(m),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// Every automorphism of the group, as element maps. Brute force over
    /// images of a generating set; intended for small orders.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let elem_order = |x: usize| {
            let mut y = x;
            let mut k = 1;
            while y != self.identity {
                y = self.mul(y, x);
                k += 1;
            }
            k
        };
        let mut out = Vec::new();
        let mut images = Vec::new();
        self.extend_images(&gens, &mut images, &elem_order, &mut out);
        out
    }

    fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for x in 0..self.order {
            if !span.contains(&x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut span = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if span.insert(y) {
                    frontier.push(y);
                }
            }
        }
        span
    }

    fn extend_images(
        &self,
        gens: &[usize],
        images: &mut Vec<usize>,
        elem_order: &dyn Fn(usize) -> usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if images.len() == gens.len() {
            if let Some(map) = self.homomorphism(gens, images) {
                out.push(map);
            }
            return;
        }
        let g = gens[images.len()];
        for y in 0..self.order {
            if elem_order(y) == elem_order(g) {
                images.push(y);
                self.extend_images(gens, images, elem_order, out);
                images.pop();
            }
        }
    }

    /// Extends `gens[i] -> images[i]` along words; `None` unless the result is
    /// a well-defined bijective homomorphism.
    fn homomorphism(&self, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order];
        map[self.identity] = self.identity;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for (&g, &h) in gens.iter().zip(images) {
                let (y, fy) = (self.mul(x, g), self.mul(map[x], h));
                if map[y] == usize::MAX {
                    map[y] = fy;
                    frontier.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let distinct: BTreeSet<_> = map.iter().copied().collect();
        if distinct.len() != self.order {
            return None;
        }
        let hom = (0..self.order).all(|x| (0..self.order).all(|y| map[self.mul(x, y)] == self.mul(map[x], map[y])));
        hom.then_some(map)
    }
}

/// Inverse-closed set of non-identity elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionSet {
    elements: BTreeSet<usize>,
}

impl ConnectionSet {
    pub fn new(group: &GroupTable, elements: impl IntoIterator<Item = usize>) -> Result<ConnectionSet, GroupError> {
        let elements: BTreeSet<usize> = elements.into_iter().collect();
        for &x in &elements {
            if x >= group.order() {
                return Err(GroupError::UnknownElement(x));
            }
            if x == group.identity() {
                return Err(GroupError::ContainsIdentity);
            }
            if !elements.contains(&group.inv(x)) {
                return Err(GroupError::NotInverseClosed(x));
            }
        }
        Ok(ConnectionSet { elements })
    }

    pub fn elements(&self) -> &BTreeSet<usize> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A connection set drawn from `seed`: each inverse pair `{x, x⁻¹}` of
/// non-identity elements is included with probability one half.
pub fn random_connection_set(group: &GroupTable, seed: u64) -> ConnectionSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut elements = BTreeSet::new();
    for x in 0..group.order() {
        let y = group.inv(x);
        if x == group.identity() || y < x {
            continue;
        }
        if rng.next_u32() & 1 == 1 {
            elements.insert(x);
            elements.insert(y);
        }
    }
    ConnectionSet { elements }
}

/// `Cay(G, S)`: `x ~ y` exactly when `x⁻¹y ∈ S`.
pub fn cayley_graph(group: &GroupTable, s: &ConnectionSet) -> Graph {
    let n = group.order();
    let adj = (0..n)
        .map(|x| {
            s.elements()
                .iter()
                .fold(0u64, |acc, &t| acc | 1u64 << group.mul(x, t))
        })
        .collect();
    Graph::from_adjacency_unchecked(adj)
}

/// All products of exactly `n` elements of `s`, with repetition.
pub fn product_set(group: &GroupTable, s: &ConnectionSet, n: usize) -> BTreeSet<usize> {
    let mut current: BTreeSet<usize> = BTreeSet::from([group.identity()]);
    for _ in 0..n {
        current = current
            .iter()
            .flat_map(|&x| s.elements().iter().map(move |&t| group.mul(x, t)))
            .collect();
    }
    current
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceIdentityReport {
    /// Whether the 2-distance graph of `Cay(G, S)` equals
    /// `Cay(G, S² \ (S ∪ {1}))` as labeled graphs.
    pub holds: bool,
    pub connection_set_used: Vec<usize>,
    /// `S² \ S` without removing the identity; shown for comparison.
    pub literal_difference: Vec<usize>,
}

pub fn distance_identity_check(group: &GroupTable, s: &ConnectionSet) -> DistanceIdentityReport {
    let square = product_set(group, s, 2);
    let literal: BTreeSet<usize> = square.difference(s.elements()).copied().collect();
    let mut used = literal.clone();
    used.remove(&group.identity());
    let used_set = ConnectionSet::new(group, used.iter().copied())
        .expect("S² \\ (S ∪ {1}) is inverse-closed and identity-free");
    let holds = two_distance_graph(&cayley_graph(group, s)) == cayley_graph(group, &used_set);
    DistanceIdentityReport {
        holds,
        connection_set_used: used.into_iter().collect(),
        literal_difference: literal.into_iter().collect(),
    }
}

/// A group automorphism carrying `S` onto `S² \ (S ∪ {1})`, if one exists.
pub fn conjugating_automorphism(group: &GroupTable, s: &ConnectionSet) -> Option<Vec<usize>> {
    let target: BTreeSet<usize> = distance_identity_check(group, s).connection_set_used.into_iter().collect();
    group
        .automorphisms()
        .into_iter()
        .find(|a| s.elements().iter().map(|&x| a[x]).collect::<BTreeSet<_>>() == target)
}
