//! Finite group construction and the subgroup/element machinery the
//! multiplier computations run over.
//!
//! Groups are immutable once built: a dense multiplication table with the
//! identity at index 0 and the remaining elements in breadth-first
//! discovery order from the generating set, so constructions are
//! deterministic across runs.

mod catalog;
mod coset;
mod parse;
mod perm;

pub use catalog::{catalog_group, catalog_names, catalog_presentation, presentation_catalog_names};
pub use coset::enumerate_cosets;
pub use parse::{element_from_word, parse_permutation_file, parse_presentation};
pub use perm::Perm;

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Dense-table regime bound. Every target this crate is sized for (orders
/// up to 64, square covers up to ~2048) fits comfortably.
pub const DENSE_LIMIT: usize = 4096;

/// Default coset cap for presentations; enumeration past this is reported
/// as a resource error, never as a claim of infiniteness.
pub const DEFAULT_COSET_LIMIT: usize = 1 << 20;

/// A finite group as a dense multiplication table.
///
/// Element 0 is the identity. `labels` are display words in the named
/// generators; `named` lists label -> element bindings used when parsing
/// element words from the CLI.
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    generators: Vec<usize>,
    named: Vec<(String, usize)>,
}

impl FiniteGroup {
    /// Build from a raw table, verifying the group axioms.
    ///
    /// Associativity is checked exhaustively up to order 64 and on 10^4
    /// deterministic pseudo-random triples above that.
    pub fn from_table(
        mul: Vec<u16>,
        labels: Vec<String>,
        generators: Vec<usize>,
        named: Vec<(String, usize)>,
    ) -> Result<Arc<FiniteGroup>> {
        let order = labels.len();
        if order == 0 || mul.len() != order * order {
            return Err(Error::invariant("malformed multiplication table"));
        }
        if order > DENSE_LIMIT {
            return Err(Error::Resource {
                what: "group order beyond dense-table regime".into(),
                limit: DENSE_LIMIT,
            });
        }
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::invariant("identity is not two-sided"));
            }
        }
        let mut inv = vec![u16::MAX; order];
        for a in 0..order {
            let mut found = None;
            for b in 0..order {
                if at(a, b) == 0 {
                    found = Some(b);
                    break;
                }
            }
            let b = found.ok_or_else(|| Error::invariant("element with no inverse"))?;
            if at(b, a) != 0 {
                return Err(Error::invariant("inverse is not two-sided"));
            }
            inv[a] = b as u16;
        }
        let check = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
        if order <= 64 {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !check(a, b, c) {
                            return Err(Error::invariant("associativity fails"));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x5bd1e995u64 ^ order as u64;
            for _ in 0..10_000 {
                let a = (splitmix(&mut state) % order as u64) as usize;
                let b = (splitmix(&mut state) % order as u64) as usize;
                let c = (splitmix(&mut state) % order as u64) as usize;
                if !check(a, b, c) {
                    return Err(Error::invariant("associativity fails"));
                }
            }
        }
        Ok(Arc::new(FiniteGroup {
            order,
            mul,
            inv,
            labels,
            generators,
            named,
        }))
    }

    /// Closure of a permutation generating set, elements in BFS discovery
    /// order. Empty generating set gives the trivial group.
    pub fn from_permutations(
        gens: &[Perm],
        gen_names: &[String],
        limit: usize,
    ) -> Result<Arc<FiniteGroup>> {
        let degree = gens.iter().map(|p| p.degree()).max().unwrap_or(1);
        let gens: Vec<Perm> = gens.iter().map(|p| p.padded(degree)).collect();
        let id = Perm::identity(degree);
        let mut index: HashMap<Perm, usize> = HashMap::new();
        let mut elems: Vec<Perm> = vec![id.clone()];
        index.insert(id, 0);
        let mut head = 0;
        while head < elems.len() {
            for g in &gens {
                let p = elems[head].then(g);
                if !index.contains_key(&p) {
                    if elems.len() >= limit {
                        return Err(Error::Resource {
                            what: "permutation closure".into(),
                            limit,
                        });
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            head += 1;
        }
        let order = elems.len();
        let mut mul = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                mul[i * order + j] = index[&elems[i].then(&elems[j])] as u16;
            }
        }
        let gen_indices: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        let words = bfs_words(order, |e, k| mul[e * order + gen_indices[k]] as usize, gens.len());
        let labels = words
            .iter()
            .map(|w| format_word(w, gen_names))
            .collect::<Vec<_>>();
        let named: Vec<(String, usize)> = gen_names
            .iter()
            .cloned()
            .zip(gen_indices.iter().copied())
            .collect();
        FiniteGroup::from_table(mul, labels, dedup_generators(&gen_indices), named)
    }

    /// Quotient of the free group on the presentation's generators,
    /// enumerated by cosets of the trivial subgroup. Returns the group and
    /// the generator images (the word-evaluation map).
    pub fn from_presentation(
        pres: &Presentation,
        coset_limit: usize,
    ) -> Result<(Arc<FiniteGroup>, Vec<usize>)> {
        let table = enumerate_cosets(pres.ngens, &pres.relators, coset_limit)?;
        let order = table.len();
        if order > DENSE_LIMIT {
            return Err(Error::Resource {
                what: format!("presented group of order {order} beyond dense-table regime"),
                limit: DENSE_LIMIT,
            });
        }
        // Coset 0 is the identity; cosets are already in BFS order over
        // positive generator columns (enumerate_cosets canonicalizes).
        let words = bfs_words(order, |c, k| table[c][k], pres.ngens);
        let trace = |start: usize, w: &[usize]| w.iter().fold(start, |c, &k| table[c][k]);
        let mut mul = vec![0u16; order * order];
        for i in 0..order {
            for (j, w) in words.iter().enumerate() {
                mul[i * order + j] = trace(i, w) as u16;
            }
        }
        let labels = words
            .iter()
            .map(|w| format_word(w, &pres.gen_names))
            .collect::<Vec<_>>();
        let gen_images: Vec<usize> = (0..pres.ngens).map(|k| table[0][k]).collect();
        let named: Vec<(String, usize)> = pres
            .gen_names
            .iter()
            .cloned()
            .zip(gen_images.iter().copied())
            .collect();
        let group = FiniteGroup::from_table(mul, labels, dedup_generators(&gen_images), named)?;
        Ok((group, gen_images))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Conjugate x^by = by . x . by^-1; superscripts always denote this
    /// left conjugation.
    #[inline]
    pub fn conj(&self, x: usize, by: usize) -> usize {
        self.mul(self.mul(by, x), self.inv(by))
    }

    /// Commutator [x, y] = x y x^-1 y^-1.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    /// Unoriented commutator {x, y} = x y x^-1 y.
    pub fn uncommutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), y))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut n = 1;
        while acc != 0 {
            acc = self.mul(acc, g);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn named_elements(&self) -> &[(String, usize)] {
        &self.named
    }

    /// Elements z with z^2 = 1, z != 1, in ascending index order.
    pub fn involutions(&self) -> Vec<usize> {
        (1..self.order).filter(|&z| self.mul(z, z) == 0).collect()
    }

    /// Ordered pairs (x, y) with [x, y] = 1.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.order {
            for y in 0..self.order {
                if self.mul(x, y) == self.mul(y, x) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Ordered pairs (x, y) with {x, y} = x y x^-1 y = 1.
    pub fn klein_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.order {
            for y in 0..self.order {
                if self.uncommutator(x, y) == 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Evaluate a signed-token relator word given generator images.
    pub fn eval_tokens(&self, gen_images: &[usize], tokens: &[i32]) -> usize {
        tokens.iter().fold(0, |acc, &t| {
            let g = gen_images[t.unsigned_abs() as usize - 1];
            let g = if t < 0 { self.inv(g) } else { g };
            self.mul(acc, g)
        })
    }

    /// Subgroup generated by `elems`, with its inclusion map. Elements of
    /// the subgroup are re-indexed canonically (identity first, BFS from
    /// the given generators).
    pub fn subgroup(self: &Arc<Self>, elems: &[usize]) -> Subgroup {
        let mut inclusion = vec![0usize];
        let mut index: HashMap<usize, usize> = HashMap::new();
        index.insert(0, 0);
        let mut head = 0;
        while head < inclusion.len() {
            for &g in elems {
                let p = self.mul(inclusion[head], g);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(p) {
                    e.insert(inclusion.len());
                    inclusion.push(p);
                }
            }
            head += 1;
        }
        let order = inclusion.len();
        let mut mul = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                mul[i * order + j] = index[&self.mul(inclusion[i], inclusion[j])] as u16;
            }
        }
        let labels = inclusion.iter().map(|&g| self.labels[g].clone()).collect();
        let gens_sub: Vec<usize> = elems
            .iter()
            .filter_map(|g| index.get(g).copied())
            .collect();
        let group = FiniteGroup::from_table(mul, labels, dedup_generators(&gens_sub), Vec::new())
            .expect("subgroup table is a group");
        Subgroup { group, inclusion }
    }

    /// The squares subgroup S(G) = <x^2 : x in G>, with a witness for each
    /// element: a list of group elements whose squares multiply to it.
    pub fn squares_subgroup(self: &Arc<Self>) -> SquaresSubgroup {
        let square_gens: Vec<usize> = (0..self.order).map(|g| self.mul(g, g)).collect();
        let mut elements = vec![0usize];
        let mut witness: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index: HashMap<usize, usize> = HashMap::new();
        index.insert(0, 0);
        let mut head = 0;
        while head < elements.len() {
            for (g, &sq) in square_gens.iter().enumerate() {
                let p = self.mul(elements[head], sq);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(p) {
                    e.insert(elements.len());
                    let mut w = witness[head].clone();
                    w.push(g);
                    elements.push(p);
                    witness.push(w);
                }
            }
            head += 1;
        }
        let subgroup = self.subgroup(&dedup_sorted(square_gens));
        SquaresSubgroup {
            subgroup,
            witness_index: index,
            witnesses: witness,
            elements,
        }
    }

    /// F2-dimension of G / [G,G] G^2.
    pub fn abelianization_mod2(self: &Arc<Self>) -> usize {
        let mut gens: Vec<usize> = Vec::new();
        for x in 0..self.order {
            gens.push(self.mul(x, x));
            for y in 0..self.order {
                gens.push(self.commutator(x, y));
            }
        }
        let h = self.subgroup(&dedup_sorted(gens));
        let quotient = self.order / h.group.order();
        debug_assert!(quotient.is_power_of_two());
        quotient.trailing_zeros() as usize
    }

    /// Quotient by a normal subgroup given as an element set; returns the
    /// quotient and the projection. Errors if the set is not normal.
    pub fn quotient(self: &Arc<Self>, normal: &[usize]) -> Result<(Arc<FiniteGroup>, GroupHom)> {
        let nset: Vec<bool> = {
            let mut v = vec![false; self.order];
            for &n in normal {
                v[n] = true;
            }
            v
        };
        if !nset[0] {
            return Err(Error::invariant("normal subgroup must contain identity"));
        }
        for &n in normal {
            for g in 0..self.order {
                if !nset[self.conj(n, g)] {
                    return Err(Error::invariant("subgroup is not normal"));
                }
            }
        }
        // Coset representative: minimum element index in the coset.
        let mut coset_rep = vec![usize::MAX; self.order];
        for g in 0..self.order {
            if coset_rep[g] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = normal.iter().map(|&n| self.mul(g, n)).collect();
            members.sort_unstable();
            members.dedup();
            let rep = members[0];
            for m in members {
                coset_rep[m] = rep;
            }
        }
        // Canonical order: identity coset, then BFS over generator images.
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut reps = vec![0usize];
        index.insert(0, 0);
        let mut head = 0;
        while head < reps.len() {
            for &g in &self.generators {
                let r = coset_rep[self.mul(reps[head], g)];
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(r) {
                    e.insert(reps.len());
                    reps.push(r);
                }
            }
            head += 1;
        }
        let q_order = reps.len();
        let mut mul = vec![0u16; q_order * q_order];
        for i in 0..q_order {
            for j in 0..q_order {
                mul[i * q_order + j] = index[&coset_rep[self.mul(reps[i], reps[j])]] as u16;
            }
        }
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let q_gens: Vec<usize> = self
            .generators
            .iter()
            .map(|&g| index[&coset_rep[g]])
            .collect();
        let quotient = FiniteGroup::from_table(mul, labels, dedup_generators(&q_gens), Vec::new())?;
        let map: Vec<u16> = (0..self.order)
            .map(|g| index[&coset_rep[g]] as u16)
            .collect();
        let hom = GroupHom::new(Arc::clone(self), Arc::clone(&quotient), map)?;
        Ok((quotient, hom))
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

/// Result of [`FiniteGroup::subgroup`].
pub struct Subgroup {
    pub group: Arc<FiniteGroup>,
    /// Subgroup index -> ambient index.
    pub inclusion: Vec<usize>,
}

impl Subgroup {
    pub fn inclusion_hom(&self, ambient: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom::new(
            Arc::clone(&self.group),
            Arc::clone(ambient),
            self.inclusion.iter().map(|&g| g as u16).collect(),
        )
        .expect("inclusion is a homomorphism")
    }
}

/// The squares subgroup with product-of-squares witnesses.
pub struct SquaresSubgroup {
    pub subgroup: Subgroup,
    witness_index: HashMap<usize, usize>,
    witnesses: Vec<Vec<usize>>,
    pub elements: Vec<usize>,
}

impl SquaresSubgroup {
    pub fn contains(&self, g: usize) -> bool {
        self.witness_index.contains_key(&g)
    }

    /// Elements of G whose squares multiply (left to right) to `g`.
    pub fn witness(&self, g: usize) -> Option<&[usize]> {
        self.witness_index.get(&g).map(|&i| self.witnesses[i].as_slice())
    }
}

/// A total homomorphism between dense-table groups.
pub struct GroupHom {
    pub source: Arc<FiniteGroup>,
    pub target: Arc<FiniteGroup>,
    map: Vec<u16>,
}

impl GroupHom {
    /// Verifies multiplicativity on construction.
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        map: Vec<u16>,
    ) -> Result<GroupHom> {
        if map.len() != source.order() {
            return Err(Error::invariant("hom map length mismatch"));
        }
        if map[0] != 0 {
            return Err(Error::invariant("hom does not preserve identity"));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                let lhs = target.mul(map[a] as usize, map[b] as usize);
                if lhs != map[source.mul(a, b)] as usize {
                    return Err(Error::invariant("map is not a homomorphism"));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            map,
        })
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g] as usize
    }

    pub fn kernel_elements(&self) -> Vec<usize> {
        (0..self.source.order())
            .filter(|&g| self.map[g] == 0)
            .collect()
    }

    pub fn kernel(&self) -> Subgroup {
        self.source.subgroup(&self.kernel_elements())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &m in &self.map {
            if seen[m as usize] {
                return false;
            }
            seen[m as usize] = true;
        }
        true
    }
}

/// A finite presentation: relators are words of signed generator tokens,
/// token +-(k+1) standing for generator k or its inverse.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub ngens: usize,
    pub gen_names: Vec<String>,
    pub relators: Vec<Vec<i32>>,
}

impl Presentation {
    pub fn new(gen_names: Vec<String>, relators: Vec<Vec<i32>>) -> Result<Presentation> {
        let ngens = gen_names.len();
        for rel in &relators {
            for &t in rel {
                if t == 0 || t.unsigned_abs() as usize > ngens {
                    return Err(Error::invariant(format!("relator token {t} out of range")));
                }
            }
        }
        Ok(Presentation {
            ngens,
            gen_names,
            relators,
        })
    }
}

/// Breadth-first representative words: `step(e, k)` is the action of
/// generator k. Element 0 must be the start point; every element must be
/// reachable. Returns one generator word per element.
fn bfs_words(order: usize, step: impl Fn(usize, usize) -> usize, ngens: usize) -> Vec<Vec<usize>> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; order];
    words[0] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for k in 0..ngens {
            let t = step(e, k);
            if words[t].is_none() {
                let mut w = words[e].clone().expect("visited");
                w.push(k);
                words[t] = Some(w);
                queue.push_back(t);
            }
        }
    }
    words
        .into_iter()
        .map(|w| w.expect("element unreachable from generators"))
        .collect()
}

/// Display form of a generator word with run-length powers: aab -> a^2b.
fn format_word(word: &[usize], names: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let single = names.iter().all(|n| n.chars().count() == 1);
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        if !out.is_empty() && !single {
            out.push('*');
        }
        out.push_str(&names[word[i]]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

fn dedup_generators(gens: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &g in gens {
        if g != 0 && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

fn dedup_sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Deterministic 64-bit mixer for sampled verification; stable across
/// platforms and toolchains.
pub fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_from_no_generators() {
        let g = FiniteGroup::from_permutations(&[], &[], 64).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn single_transposition_gives_order_two() {
        let p = Perm::from_cycles(2, &[vec![0, 1]]).unwrap();
        let g = FiniteGroup::from_permutations(&[p], &["t".into()], 64).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.involutions(), vec![1]);
    }

    /// Brute-force closure oracle, independent of the BFS path: repeatedly
    /// multiply the known set by itself until fixpoint.
    fn closure_oracle(gens: &[Perm], degree: usize) -> usize {
        let mut set: std::collections::HashSet<Perm> = std::collections::HashSet::new();
        set.insert(Perm::identity(degree));
        for g in gens {
            set.insert(g.padded(degree));
        }
        loop {
            let mut next = set.clone();
            for a in &set {
                for b in &set {
                    next.insert(a.then(b));
                }
            }
            if next.len() == set.len() {
                return set.len();
            }
            set = next;
        }
    }

    #[test]
    fn s3_closure_matches_bruteforce() {
        let t = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let c = Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(closure_oracle(&[t.clone(), c.clone()], 3), 6);
        let g =
            FiniteGroup::from_permutations(&[t, c], &["t".into(), "c".into()], 64).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn closure_limit_is_resource_error() {
        let c = Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let err = FiniteGroup::from_permutations(&[c], &["c".into()], 3).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
    }

    #[test]
    fn klein_and_commuting_pairs_intersection() {
        // {x,y} = [x,y] y^2, so the intersection of the two pair lists is
        // exactly the commuting pairs whose second slot is an involution
        // or the identity.
        let g = catalog_group("symmetric:3").unwrap();
        let commuting: std::collections::HashSet<_> =
            g.commuting_pairs().into_iter().collect();
        let klein: std::collections::HashSet<_> = g.klein_pairs().into_iter().collect();
        for x in 0..g.order() {
            for y in 0..g.order() {
                let both = commuting.contains(&(x, y)) && klein.contains(&(x, y));
                let expected = g.mul(x, y) == g.mul(y, x) && g.mul(y, y) == 0;
                assert_eq!(both, expected, "x={x} y={y}");
            }
        }
    }

    #[test]
    fn s3_klein_pair_example() {
        // (12)(123)(12)(123) = 1: the transposition inverts the 3-cycle,
        // so ((12),(123)) is a Klein pair in S3. The reversed order is
        // not: {(123),(12)} is a nontrivial 3-cycle.
        let g = catalog_group("symmetric:3").unwrap();
        let t = element_from_word(&g, "s1").unwrap();
        let c = element_from_word(&g, "s1s2").unwrap();
        assert_eq!(g.element_order(c), 3);
        assert!(g.klein_pairs().contains(&(t, c)));
        assert!(!g.klein_pairs().contains(&(c, t)));
    }

    #[test]
    fn squares_of_z4() {
        let g = catalog_group("cyclic:4").unwrap();
        let s = g.squares_subgroup();
        assert_eq!(s.subgroup.group.order(), 2);
        let x = element_from_word(&g, "x").unwrap();
        let x2 = g.mul(x, x);
        assert!(s.contains(x2));
        assert!(!s.contains(x));
    }

    #[test]
    fn odd_order_group_squares_are_everything() {
        for name in ["cyclic:5", "cyclic:7", "cyclic:9", "abelian:3x3"] {
            let g = catalog_group(name).unwrap();
            assert!(g.involutions().is_empty(), "{name}");
            assert_eq!(g.squares_subgroup().subgroup.group.order(), g.order(), "{name}");
        }
    }

    #[test]
    fn squares_witnesses_multiply_back() {
        let g = catalog_group("dihedral:4").unwrap();
        let s = g.squares_subgroup();
        for &e in &s.elements {
            let w = s.witness(e).unwrap();
            let prod = w.iter().fold(0, |acc, &x| g.mul(acc, g.mul(x, x)));
            assert_eq!(prod, e);
        }
    }

    #[test]
    fn d8_squares_subgroup_is_generated_by_c_squared() {
        // Dihedral of order 8: squares are {1, c^2}.
        let g = catalog_group("dihedral:4").unwrap();
        let s = g.squares_subgroup();
        assert_eq!(s.subgroup.group.order(), 2);
        let c = element_from_word(&g, "c").unwrap();
        assert!(s.contains(g.mul(c, c)));
    }

    #[test]
    fn kernel_of_d8_onto_z2() {
        let g = catalog_group("dihedral:4").unwrap();
        let c = element_from_word(&g, "c").unwrap();
        let csub = g.subgroup(&[c]);
        assert_eq!(csub.group.order(), 4);
        let (_q, proj) = g.quotient(&csub.inclusion).unwrap();
        let ker = proj.kernel();
        assert_eq!(ker.group.order(), 4);
        let mut expected = csub.inclusion.clone();
        expected.sort_unstable();
        let mut got = ker.inclusion.clone();
        got.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn abelianization_mod2_values() {
        assert_eq!(catalog_group("cyclic:7").unwrap().abelianization_mod2(), 0);
        assert_eq!(catalog_group("cyclic:12").unwrap().abelianization_mod2(), 1);
        assert_eq!(catalog_group("klein4").unwrap().abelianization_mod2(), 2);
        assert_eq!(catalog_group("symmetric:4").unwrap().abelianization_mod2(), 1);
        assert_eq!(catalog_group("quaternion:8").unwrap().abelianization_mod2(), 2);
    }

    #[test]
    fn presentation_roundtrip_preserves_order() {
        // Enumerate a presented group, re-derive a presentation from its
        // multiplication table (one generator per element, one relator
        // per table entry), and re-enumerate: same order.
        let pres = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![vec![1, 1], vec![2, 2], vec![1, 2, 1, 2, 1, 2]],
        )
        .unwrap();
        let (g, _) = FiniteGroup::from_presentation(&pres, 1 << 16).unwrap();
        assert_eq!(g.order(), 6);

        let n = g.order();
        let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let mut relators = Vec::new();
        // x_0 is the identity.
        relators.push(vec![1]);
        for i in 0..n {
            for j in 0..n {
                relators.push(vec![
                    i as i32 + 1,
                    j as i32 + 1,
                    -(g.mul(i, j) as i32 + 1),
                ]);
            }
        }
        let table_pres = Presentation::new(names, relators).unwrap();
        let (g2, _) = FiniteGroup::from_presentation(&table_pres, 1 << 16).unwrap();
        assert_eq!(g2.order(), g.order());
    }
}
