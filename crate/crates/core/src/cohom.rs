//! Normalized 2-cocycles and coboundaries over F2, H^2 bases, restriction
//! maps, and evaluation of classes on surface cycles built from relator
//! words.
//!
//! Cochains are indexed on ordered pairs of non-identity elements; the
//! normalization w(1,.) = w(.,1) = 0 is structural. The pair (g, h) sits
//! at bit (idx(g)-1)*(n-1) + (idx(h)-1).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f2la::{intersect, BitVec, RowBasis};
use crate::grp::FiniteGroup;

/// A normalized F2-valued 2-cochain on G x G.
#[derive(Clone)]
pub struct Cochain2 {
    group: Arc<FiniteGroup>,
    bits: BitVec,
}

impl Cochain2 {
    pub fn zero(group: &Arc<FiniteGroup>) -> Cochain2 {
        let n = group.order();
        Cochain2 {
            group: Arc::clone(group),
            bits: BitVec::zeros((n - 1) * (n - 1)),
        }
    }

    pub fn from_bits(group: &Arc<FiniteGroup>, bits: BitVec) -> Cochain2 {
        let n = group.order();
        assert_eq!(bits.len(), (n - 1) * (n - 1), "cochain width mismatch");
        Cochain2 {
            group: Arc::clone(group),
            bits,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    /// w(g, h); zero whenever either argument is the identity.
    #[inline]
    pub fn value(&self, g: usize, h: usize) -> bool {
        if g == 0 || h == 0 {
            false
        } else {
            self.bits.get(pair_index(self.group.order(), g, h))
        }
    }

    /// Set w(g, h) for non-identity g, h.
    pub fn set_value(&mut self, g: usize, h: usize, v: bool) {
        self.bits.set(pair_index(self.group.order(), g, h), v);
    }

    pub fn bits_mut(&mut self) -> &mut BitVec {
        &mut self.bits
    }

    pub fn add_assign(&mut self, other: &Cochain2) {
        assert!(Arc::ptr_eq(&self.group, &other.group), "cochain group mismatch");
        self.bits.xor_assign(&other.bits);
    }

    /// Does this cochain satisfy the cocycle identity at (g, h, k)?
    pub fn cocycle_condition(&self, g: usize, h: usize, k: usize) -> bool {
        let gr = &self.group;
        !(self.value(g, h)
            ^ self.value(gr.mul(g, h), k)
            ^ self.value(g, gr.mul(h, k))
            ^ self.value(h, k))
    }
}

#[inline]
fn pair_index(order: usize, g: usize, h: usize) -> usize {
    debug_assert!(g >= 1 && h >= 1);
    (g - 1) * (order - 1) + (h - 1)
}

fn cochain_width(order: usize) -> usize {
    (order - 1) * (order - 1)
}

/// Append the (<= 4) pair positions of the cocycle constraint at (g, h, k),
/// cancelling repeats mod 2. Empty output means the constraint is vacuous.
fn constraint_positions(group: &FiniteGroup, g: usize, h: usize, k: usize, out: &mut Vec<usize>) {
    out.clear();
    let n = group.order();
    let mut push = |a: usize, b: usize| {
        if a != 0 && b != 0 {
            let p = pair_index(n, a, b);
            if let Some(i) = out.iter().position(|&q| q == p) {
                out.swap_remove(i);
            } else {
                out.push(p);
            }
        }
    };
    push(g, h);
    push(group.mul(g, h), k);
    push(g, group.mul(h, k));
    push(h, k);
}

/// Row space of the cocycle constraint system, streaming one sparse
/// constraint at a time. `firsts` is the set of first arguments to range
/// over; h and k always range over all non-identity elements.
fn constraint_row_space(group: &FiniteGroup, firsts: &[usize]) -> RowBasis {
    let n = group.order();
    let mut basis = RowBasis::new(cochain_width(n));
    let mut positions = Vec::with_capacity(4);
    for &g in firsts {
        for h in 1..n {
            for k in 1..n {
                constraint_positions(group, g, h, k, &mut positions);
                if !positions.is_empty() {
                    basis
                        .add_sparse(&positions)
                        .expect("constraint width matches basis");
                }
            }
        }
    }
    basis
}

/// Basis of the normalized 2-cocycles Z^2(G; F2).
///
/// Constraints are streamed for first argument ranging over a generating
/// set only: d(dw) = 0 makes the remaining triples linear consequences,
/// which `cocycle_space_full` cross-checks.
pub fn cocycle_space(group: &Arc<FiniteGroup>) -> RowBasis {
    let firsts: Vec<usize> = if group.generators().is_empty() {
        Vec::new()
    } else {
        group.generators().to_vec()
    };
    let mut z2 = constraint_row_space(group, &firsts).kernel_basis();
    z2.canonicalize();
    z2
}

/// Same space with the full (n-1)^3 constraint stream; the reference
/// route for the generator-indexed one.
pub fn cocycle_space_full(group: &Arc<FiniteGroup>) -> RowBasis {
    let firsts: Vec<usize> = (1..group.order()).collect();
    let mut z2 = constraint_row_space(group, &firsts).kernel_basis();
    z2.canonicalize();
    z2
}

/// Basis of the coboundaries B^2(G; F2): the span of d(phi) over the n-1
/// indicator 1-cochains.
pub fn coboundary_space(group: &Arc<FiniteGroup>) -> RowBasis {
    let n = group.order();
    let mut basis = RowBasis::new(cochain_width(n));
    for row in coboundary_generators(group) {
        basis.add_row(row).expect("coboundary width");
    }
    basis.canonicalize();
    basis
}

/// The generator rows d(phi_e) for each non-identity e, before reduction.
/// d(phi)(g,h) = phi(g) + phi(h) + phi(gh).
pub fn coboundary_generators(group: &Arc<FiniteGroup>) -> Vec<BitVec> {
    let n = group.order();
    let mut rows = Vec::with_capacity(n.saturating_sub(1));
    for e in 1..n {
        let mut row = BitVec::zeros(cochain_width(n));
        for h in 1..n {
            row.toggle(pair_index(n, e, h));
        }
        for g in 1..n {
            row.toggle(pair_index(n, g, e));
        }
        for g in 1..n {
            let h = group.mul(group.inv(g), e);
            if h != 0 {
                row.toggle(pair_index(n, g, h));
            }
        }
        rows.push(row);
    }
    rows
}

/// Z^2, B^2 and echelon-reduced H^2 representatives, plus the solver that
/// expresses any cocycle's class in the representative basis.
pub struct CocycleBasis {
    group: Arc<FiniteGroup>,
    pub z2: RowBasis,
    pub b2: RowBasis,
    pub h2_reps: Vec<Cochain2>,
    /// Extended rows [rep | unit] for coordinate extraction.
    solver: RowBasis,
}

impl CocycleBasis {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim_h2(&self) -> usize {
        self.h2_reps.len()
    }

    /// Coordinates of a cocycle's class over the H^2 representatives.
    /// Errors if the input is not a cocycle.
    pub fn class_coordinates(&self, omega: &Cochain2) -> Result<BitVec> {
        if !self.z2.member(omega.bits()) {
            return Err(Error::invariant("cochain is not a cocycle"));
        }
        let d = self.h2_reps.len();
        let w = self.z2.width();
        let mut v = omega.bits.clone();
        self.b2.reduce_fully(&mut v);
        let mut ext = BitVec::zeros(w + d);
        for i in v.iter_ones() {
            ext.set(i, true);
        }
        self.solver.reduce(&mut ext);
        // The cochain part must vanish; what is left is the coordinates.
        let mut coords = BitVec::zeros(d);
        for i in ext.iter_ones() {
            if i < w {
                return Err(Error::invariant(
                    "cocycle failed to reduce against H^2 representatives",
                ));
            }
            coords.set(i - w, true);
        }
        Ok(coords)
    }

    /// The cocycle with the given class coordinates.
    pub fn from_coordinates(&self, coords: &BitVec) -> Cochain2 {
        assert_eq!(coords.len(), self.h2_reps.len());
        let mut acc = Cochain2::zero(&self.group);
        for j in coords.iter_ones() {
            acc.add_assign(&self.h2_reps[j]);
        }
        acc
    }
}

/// Compute Z^2, B^2, and H^2 representatives for a group.
pub fn h2(group: &Arc<FiniteGroup>) -> CocycleBasis {
    let z2 = cocycle_space(group);
    let b2 = coboundary_space(group);
    debug_assert!(z2.rank() >= b2.rank());
    let w = z2.width();
    let mut reps: Vec<Cochain2> = Vec::new();
    let mut quot = RowBasis::new(w);
    let mut z2_rows = z2.clone();
    for row in z2_rows.rows() {
        let mut v = row.clone();
        b2.reduce_fully(&mut v);
        if v.is_zero() {
            continue;
        }
        if let crate::f2la::AddRow::Inserted(_) = quot.add_row(v.clone()).expect("width") {
            reps.push(Cochain2::from_bits(group, v));
        }
    }
    debug_assert_eq!(reps.len(), z2.rank() - b2.rank());
    let d = reps.len();
    let mut solver = RowBasis::new(w + d);
    for (j, rep) in reps.iter().enumerate() {
        let mut ext = BitVec::zeros(w + d);
        for i in rep.bits.iter_ones() {
            ext.set(i, true);
        }
        ext.set(w + j, true);
        solver.add_row(ext).expect("solver width");
    }
    CocycleBasis {
        group: Arc::clone(group),
        z2,
        b2,
        h2_reps: reps,
        solver,
    }
}

/// Pull a cochain back along a subgroup inclusion.
pub fn restrict(omega: &Cochain2, sub: &crate::grp::Subgroup) -> Cochain2 {
    let a = &sub.group;
    let mut out = Cochain2::zero(a);
    let m = a.order();
    for g in 1..m {
        for h in 1..m {
            if omega.value(sub.inclusion[g], sub.inclusion[h]) {
                out.bits.toggle(pair_index(m, g, h));
            }
        }
    }
    out
}

/// Matrix of the restriction map H^2(G) -> H^2(A) over the two bases:
/// row j is the coordinate vector of res(omega_j).
pub fn restriction_matrix(
    basis_g: &CocycleBasis,
    sub: &crate::grp::Subgroup,
    basis_a: &CocycleBasis,
) -> Result<Vec<BitVec>> {
    basis_g
        .h2_reps
        .iter()
        .map(|omega| basis_a.class_coordinates(&restrict(omega, sub)))
        .collect()
}

/// Classes of G whose restriction to the subgroup vanishes, as a subspace
/// of coordinate space F2^dim H^2(G).
pub fn restriction_kernel(
    basis_g: &CocycleBasis,
    sub: &crate::grp::Subgroup,
) -> Result<RowBasis> {
    let basis_a = h2(&sub.group);
    let rows = restriction_matrix(basis_g, sub, &basis_a)?;
    let d = basis_g.dim_h2();
    let da = basis_a.dim_h2();
    // Kernel of the d x da matrix: transpose into constraint rows over
    // F2^d (one per target coordinate).
    let mut constraints = RowBasis::new(d);
    for t in 0..da {
        let mut row = BitVec::zeros(d);
        for (j, r) in rows.iter().enumerate() {
            if r.get(t) {
                row.set(j, true);
            }
        }
        constraints.add_row(row)?;
    }
    Ok(constraints.kernel_basis())
}

/// A mod-2 cycle in the normalized bar complex: a multiset of simplices
/// [g|h] with vanishing boundary.
#[derive(Debug)]
pub struct SurfaceCycle {
    group: Arc<FiniteGroup>,
    simplices: Vec<(usize, usize)>,
}

impl SurfaceCycle {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn simplices(&self) -> &[(usize, usize)] {
        &self.simplices
    }
}

/// Fan chain of a relator plus fold simplices: the chain
/// sum_i [p_i | g_{i+1}] (p_i = g_1...g_i) plus one [g | g^-1] per entry
/// of `folds`.
///
/// A fold realizes, at chain level, the identification of an edge labeled
/// g with an edge traversed as g^-1: it is required for every
/// reversed-glued edge pair of the surface polygon, whether or not g is
/// self-inverse. (For self-inverse g the fold [g|g] is itself a cycle --
/// the projective-plane class -- so dropping it would silently change the
/// homology class even though the boundary still closes.)
fn fan_with_folds(
    group: &Arc<FiniteGroup>,
    relator: &[usize],
    folds: &[usize],
) -> Result<SurfaceCycle> {
    let product = relator.iter().fold(0, |acc, &g| group.mul(acc, g));
    if product != 0 {
        return Err(Error::invariant(format!(
            "relator multiplies to {} rather than the identity",
            group.label(product)
        )));
    }
    let mut simplices: std::collections::BTreeMap<(usize, usize), bool> =
        std::collections::BTreeMap::new();
    let mut toggle = |g: usize, h: usize| {
        if g != 0 && h != 0 {
            let e = simplices.entry((g, h)).or_insert(false);
            *e = !*e;
        }
    };
    if !relator.is_empty() {
        let mut p = relator[0];
        for &g in &relator[1..] {
            toggle(p, g);
            p = group.mul(p, g);
        }
    }
    for &g in folds {
        toggle(g, group.inv(g));
    }
    let simplices: Vec<(usize, usize)> = simplices
        .into_iter()
        .filter_map(|(s, odd)| odd.then_some(s))
        .collect();
    let cycle = SurfaceCycle {
        group: Arc::clone(group),
        simplices,
    };
    verify_boundary_zero(&cycle)?;
    Ok(cycle)
}

/// Build the cycle of a closed-surface relator word.
///
/// The word is parsed into canonical glued blocks, left to right:
///
/// - `(z, z)`: a crosscap; glued parallel, no fold;
/// - `(x, y, x^-1, y^-1)`: a handle; both edge pairs reversed, folds x, y;
/// - `(x, y, x^-1, y)`: a Klein block; fold x only;
/// - `(g, g^-1)`: a cancelling bubble; fold g.
///
/// Where a relator matches several readings (an involution makes
/// `(z, z)` also look like a bubble, or a handle like a Klein block) the
/// order above decides; the surface constructors in `cob` always pass
/// unambiguous normal forms.
pub fn surface_cycle(group: &Arc<FiniteGroup>, relator: &[usize]) -> Result<SurfaceCycle> {
    let mut folds = Vec::new();
    let mut i = 0;
    while i < relator.len() {
        let x = relator[i];
        if i + 1 < relator.len() && relator[i + 1] == x {
            i += 2; // crosscap
            continue;
        }
        if i + 3 < relator.len() && relator[i + 2] == group.inv(x) {
            let y = relator[i + 1];
            if relator[i + 3] == group.inv(y) {
                folds.push(x);
                folds.push(y);
                i += 4; // handle
                continue;
            }
            if relator[i + 3] == y {
                folds.push(x);
                i += 4; // Klein block
                continue;
            }
        }
        if i + 1 < relator.len() && relator[i + 1] == group.inv(x) {
            folds.push(x);
            i += 2; // cancelling bubble
            continue;
        }
        return Err(Error::invariant(format!(
            "relator is not a closed-surface word at letter {}",
            group.label(x)
        )));
    }
    fan_with_folds(group, relator, &folds)
}

fn verify_boundary_zero(cycle: &SurfaceCycle) -> Result<()> {
    let group = &cycle.group;
    let mut boundary = vec![false; group.order()];
    let mut toggle = |g: usize| {
        if g != 0 {
            boundary[g] = !boundary[g];
        }
    };
    for &(g, h) in &cycle.simplices {
        toggle(h);
        toggle(group.mul(g, h));
        toggle(g);
    }
    if boundary.iter().any(|&b| b) {
        return Err(Error::invariant("surface cycle has nonzero boundary"));
    }
    Ok(())
}

/// Evaluate a cochain on a cycle: XOR over simplices. Depends only on the
/// cohomology class of the cochain and the homology class of the cycle.
pub fn eval(omega: &Cochain2, cycle: &SurfaceCycle) -> Result<bool> {
    if !Arc::ptr_eq(omega.group(), cycle.group()) {
        return Err(Error::GroupMismatch(
            "cochain and cycle live over different groups".into(),
        ));
    }
    let mut acc = false;
    for &(g, h) in &cycle.simplices {
        acc ^= omega.value(g, h);
    }
    Ok(acc)
}

/// Torus cycle for a commuting pair: relator (x, y, x^-1, y^-1) with both
/// edge pairs folded.
pub fn torus_cycle(group: &Arc<FiniteGroup>, x: usize, y: usize) -> Result<SurfaceCycle> {
    fan_with_folds(group, &[x, y, group.inv(x), group.inv(y)], &[x, y])
}

/// Klein-bottle cycle for a Klein pair: relator (x, y, x^-1, y), only the
/// x edge pair reversed.
pub fn klein_cycle(group: &Arc<FiniteGroup>, x: usize, y: usize) -> Result<SurfaceCycle> {
    fan_with_folds(group, &[x, y, group.inv(x), y], &[x])
}

/// Projective-plane cycle for an involution (or the identity): relator
/// (z, z), parallel-glued. For z = 1 the cycle is empty.
pub fn rp2_cycle(group: &Arc<FiniteGroup>, z: usize) -> Result<SurfaceCycle> {
    fan_with_folds(group, &[z, z], &[])
}

/// Cycle of an orientable genus-g surface with handle monodromies
/// `pairs`: relator prod [x_i, y_i], every edge pair reversed.
pub fn orientable_cycle(
    group: &Arc<FiniteGroup>,
    pairs: &[(usize, usize)],
) -> Result<SurfaceCycle> {
    let mut relator = Vec::with_capacity(4 * pairs.len());
    let mut folds = Vec::with_capacity(2 * pairs.len());
    for &(x, y) in pairs {
        relator.extend_from_slice(&[x, y, group.inv(x), group.inv(y)]);
        folds.push(x);
        folds.push(y);
    }
    fan_with_folds(group, &relator, &folds)
}

/// Cycle of a nonorientable surface in crosscap normal form: relator
/// prod z_i^2, all edges parallel-glued.
pub fn nonorientable_cycle(group: &Arc<FiniteGroup>, zs: &[usize]) -> Result<SurfaceCycle> {
    let mut relator = Vec::with_capacity(2 * zs.len());
    for &z in zs {
        relator.extend_from_slice(&[z, z]);
    }
    fan_with_folds(group, &relator, &[])
}

/// Intersection of restriction kernels over a family of subgroups, inside
/// coordinate space F2^dim H^2(G).
pub fn intersect_restriction_kernels(
    basis_g: &CocycleBasis,
    subs: &[crate::grp::Subgroup],
) -> Result<RowBasis> {
    let d = basis_g.dim_h2();
    if subs.is_empty() {
        // Empty intersection is the whole space.
        let mut all = RowBasis::new(d);
        for j in 0..d {
            all.add_row(BitVec::from_positions(d, &[j]))?;
        }
        return Ok(all);
    }
    let kernels: Vec<RowBasis> = subs
        .iter()
        .map(|s| restriction_kernel(basis_g, s))
        .collect::<Result<_>>()?;
    let refs: Vec<&RowBasis> = kernels.iter().collect();
    intersect(&refs)
}
