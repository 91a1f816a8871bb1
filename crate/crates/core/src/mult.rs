//! Top-level multiplier computations: the unoriented Schur multiplier, the
//! unoriented Bogomolov multiplier by two independent routes, and class
//! coordinates for words and surfaces.
//!
//! B0 is carried as its annihilator subspace inside H^2: the classes
//! orthogonal to every torus, Klein-bottle and projective-plane
//! functional. Over F2 the pairing of the multiplier with H^2 is perfect,
//! so dim B0 = dim H^2 - rank(functionals).

use std::sync::Arc;

use serde::Serialize;

use crate::cohom::{
    self, eval, h2, intersect_restriction_kernels, klein_cycle, rp2_cycle, torus_cycle,
    CocycleBasis, SurfaceCycle,
};
use crate::error::Result;
use crate::f2la::{BitVec, RowBasis};
use crate::grp::FiniteGroup;
use crate::relcalc::UWord;

/// Serializable summary of the multiplier computation for one group.
#[derive(Debug, Clone, Serialize)]
pub struct MultiplierReport {
    pub group: String,
    pub order: usize,
    pub dim_h2: usize,
    pub dim_b0: usize,
    pub functional_rank: usize,
    pub routes_agree: bool,
    /// Coordinate vectors (over the H^2 basis) spanning the annihilator
    /// of the surface functionals.
    pub annihilator_basis: Vec<String>,
}

/// The unoriented Schur multiplier M(G; Z2) = H^2(G; F2).
pub fn schur_unoriented(group: &Arc<FiniteGroup>) -> CocycleBasis {
    h2(group)
}

/// Everything downstream verdicts need: the H^2 basis, the functional
/// row space, and its annihilator.
pub struct B0Context {
    pub basis: CocycleBasis,
    pub functionals: RowBasis,
    pub annihilator: RowBasis,
}

impl B0Context {
    pub fn dim_h2(&self) -> usize {
        self.basis.dim_h2()
    }

    pub fn dim_b0(&self) -> usize {
        self.basis.dim_h2() - self.functionals.rank()
    }

    /// The annihilator-basis cocycles, in row order.
    pub fn annihilator_cocycles(&self) -> Vec<crate::cohom::Cochain2> {
        let mut rows = self.annihilator.clone();
        rows.rows()
            .into_iter()
            .map(|r| self.basis.from_coordinates(&r))
            .collect()
    }

    /// Pair a K' word against the annihilator basis: zero coordinates
    /// mean the class dies in B0.
    pub fn word_class_in_b0(&self, word: &UWord) -> Result<(BitVec, bool)> {
        let cocycles = self.annihilator_cocycles();
        let mut coords = BitVec::zeros(cocycles.len());
        for (i, omega) in cocycles.iter().enumerate() {
            if crate::extensions::cocycle_pairing(word, omega)? {
                coords.set(i, true);
            }
        }
        let trivial = coords.is_zero();
        Ok((coords, trivial))
    }

    /// Pair a surface cycle against the annihilator basis.
    pub fn cycle_class_in_b0(&self, cycle: &SurfaceCycle) -> Result<(BitVec, bool)> {
        let cocycles = self.annihilator_cocycles();
        let mut coords = BitVec::zeros(cocycles.len());
        for (i, omega) in cocycles.iter().enumerate() {
            if eval(omega, cycle)? {
                coords.set(i, true);
            }
        }
        let trivial = coords.is_zero();
        Ok((coords, trivial))
    }
}

/// Row space of the surface-class functionals on H^2: one row per
/// commuting-pair torus, Klein-pair bottle, and nontrivial-involution
/// projective plane.
pub fn functional_rows(group: &Arc<FiniteGroup>, basis: &CocycleBasis) -> Result<RowBasis> {
    let d = basis.dim_h2();
    let mut rows = RowBasis::new(d);
    let mut add_cycle = |cycle: &SurfaceCycle| -> Result<()> {
        let mut row = BitVec::zeros(d);
        for (j, omega) in basis.h2_reps.iter().enumerate() {
            if eval(omega, cycle)? {
                row.set(j, true);
            }
        }
        rows.add_row(row)?;
        Ok(())
    };
    for (x, y) in group.commuting_pairs() {
        add_cycle(&torus_cycle(group, x, y)?)?;
    }
    for (x, y) in group.klein_pairs() {
        add_cycle(&klein_cycle(group, x, y)?)?;
    }
    for z in group.involutions() {
        add_cycle(&rp2_cycle(group, z)?)?;
    }
    Ok(rows)
}

/// The functional route to B0.
pub fn bogomolov_by_functionals(group: &Arc<FiniteGroup>) -> Result<B0Context> {
    let basis = h2(group);
    let functionals = functional_rows(group, &basis)?;
    let annihilator = functionals.kernel_basis();
    Ok(B0Context {
        basis,
        functionals,
        annihilator,
    })
}

/// The restriction route: dim of the intersection of ker(res) over the
/// torsion-two subgroups and the subgroups spanned by commuting and Klein
/// pairs.
pub fn bogomolov_by_restrictions(group: &Arc<FiniteGroup>, basis: &CocycleBasis) -> Result<usize> {
    let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    let mut subs = Vec::new();
    let mut push = |gens: Vec<usize>| {
        let sub = group.subgroup(&gens);
        let mut key = sub.inclusion.clone();
        key.sort_unstable();
        if seen.insert(key) {
            subs.push(sub);
        }
    };
    for z in group.involutions() {
        push(vec![z]);
    }
    for (x, y) in group.commuting_pairs() {
        push(vec![x, y]);
    }
    for (x, y) in group.klein_pairs() {
        push(vec![x, y]);
    }
    let meet = intersect_restriction_kernels(basis, &subs)?;
    Ok(meet.rank())
}

/// Run both routes and assemble the report. `routes_agree` false is a
/// hard failure condition for callers; the report still carries both
/// numbers so the disagreement is visible.
pub fn bogomolov_report(
    group: &Arc<FiniteGroup>,
    name: &str,
) -> Result<(MultiplierReport, B0Context)> {
    let ctx = bogomolov_by_functionals(group)?;
    let by_restrictions = bogomolov_by_restrictions(group, &ctx.basis)?;
    let dim_b0 = ctx.dim_b0();
    let mut annih = ctx.annihilator.clone();
    let report = MultiplierReport {
        group: name.to_string(),
        order: group.order(),
        dim_h2: ctx.dim_h2(),
        dim_b0,
        functional_rank: ctx.functionals.rank(),
        routes_agree: by_restrictions == dim_b0,
        annihilator_basis: annih.rows().iter().map(|r| r.to_bitstring()).collect(),
    };
    Ok((report, ctx))
}

/// Re-verify that every annihilator class kills every surface functional;
/// used by the self-check suites.
pub fn verify_annihilator(group: &Arc<FiniteGroup>, ctx: &B0Context) -> Result<bool> {
    let cocycles = ctx.annihilator_cocycles();
    for (x, y) in group.commuting_pairs() {
        let c = torus_cycle(group, x, y)?;
        for omega in &cocycles {
            if eval(omega, &c)? {
                return Ok(false);
            }
        }
    }
    for (x, y) in group.klein_pairs() {
        let c = klein_cycle(group, x, y)?;
        for omega in &cocycles {
            if eval(omega, &c)? {
                return Ok(false);
            }
        }
    }
    for z in group.involutions() {
        let c = rp2_cycle(group, z)?;
        for omega in &cocycles {
            if eval(omega, &c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Functional rows vanish on coboundaries: the well-definedness check of
/// criterion-style suites, exhaustive over the coboundary generators.
pub fn functionals_vanish_on_coboundaries(group: &Arc<FiniteGroup>) -> Result<bool> {
    let coboundaries: Vec<crate::cohom::Cochain2> = cohom::coboundary_generators(group)
        .into_iter()
        .map(|b| crate::cohom::Cochain2::from_bits(group, b))
        .collect();
    let mut cycles = Vec::new();
    for (x, y) in group.commuting_pairs() {
        cycles.push(torus_cycle(group, x, y)?);
    }
    for (x, y) in group.klein_pairs() {
        cycles.push(klein_cycle(group, x, y)?);
    }
    for z in group.involutions() {
        cycles.push(rp2_cycle(group, z)?);
    }
    for omega in &coboundaries {
        for c in &cycles {
            if eval(omega, c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
