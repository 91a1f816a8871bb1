//! The square-cover route to the unoriented multiplier: for G = F/R the
//! multiplier is S(F) cap R / [F,R] R^2, computed on the finite quotient
//! F^0 = F/[F,R]R^2 as S(F^0) cap R^0.
//!
//! The cover is presented as < x_1..x_n | r_i^2, [x_k, r_i] >: once the
//! relator images are central, [F,R] R^2 is normally generated by those
//! words. This route is independent of the cocycle computation and the
//! dimensions must agree presentation by presentation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grp::{FiniteGroup, GroupHom, Presentation};

/// The central exponent-two cover of a presented group.
pub struct SquareCover {
    pub base: Arc<FiniteGroup>,
    pub cover: Arc<FiniteGroup>,
    pub proj: GroupHom,
    /// Elements of R^0 = ker(proj), as cover indices.
    pub kernel_r0: Vec<usize>,
}

pub fn square_cover(pres: &Presentation, coset_limit: usize) -> Result<SquareCover> {
    let (base, base_gens) = FiniteGroup::from_presentation(pres, coset_limit)?;
    let mut relators = Vec::new();
    for r in &pres.relators {
        // r^2
        let mut sq = r.clone();
        sq.extend_from_slice(r);
        relators.push(sq);
        // [x_k, r] = x_k r x_k^-1 r^-1
        for k in 0..pres.ngens {
            let mut w: Vec<i32> = vec![k as i32 + 1];
            w.extend_from_slice(r);
            w.push(-(k as i32 + 1));
            w.extend(r.iter().rev().map(|&t| -t));
            relators.push(w);
        }
    }
    let cover_pres = Presentation::new(pres.gen_names.clone(), relators)?;
    let (cover, cover_gens) = FiniteGroup::from_presentation(&cover_pres, coset_limit)?;

    // F^0 -> G on generators, extended over BFS words.
    let mut map = vec![u16::MAX; cover.order()];
    map[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for (k, &ck) in cover_gens.iter().enumerate() {
            let t = cover.mul(e, ck);
            if map[t] == u16::MAX {
                map[t] = base.mul(map[e] as usize, base_gens[k]) as u16;
                queue.push_back(t);
            }
        }
    }
    let proj = GroupHom::new(Arc::clone(&cover), Arc::clone(&base), map)?;
    let kernel_r0 = proj.kernel_elements();
    if cover.order() != base.order() * kernel_r0.len() {
        return Err(Error::invariant("cover order is not |G| |R^0|"));
    }
    for &r in &kernel_r0 {
        if cover.mul(r, r) != 0 {
            return Err(Error::invariant("R^0 element of order > 2"));
        }
        for x in 0..cover.order() {
            if cover.mul(r, x) != cover.mul(x, r) {
                return Err(Error::invariant("R^0 is not central in the cover"));
            }
        }
    }
    Ok(SquareCover {
        base,
        cover,
        proj,
        kernel_r0,
    })
}

/// The multiplier by the square-cover formula.
pub struct HopfMultiplier {
    pub cover: SquareCover,
    pub dim: usize,
    /// One generator of S(F^0) cap R^0 per dimension, as words in the
    /// presentation generators (lifted through the cover's labels).
    pub generator_words: Vec<String>,
}

pub fn hopf_multiplier(pres: &Presentation, coset_limit: usize) -> Result<HopfMultiplier> {
    let cover = square_cover(pres, coset_limit)?;
    let f0 = &cover.cover;
    let squares = f0.squares_subgroup();
    let in_r0: Vec<bool> = {
        let mut v = vec![false; f0.order()];
        for &r in &cover.kernel_r0 {
            v[r] = true;
        }
        v
    };
    let intersection: Vec<usize> = squares
        .elements
        .iter()
        .copied()
        .filter(|&e| in_r0[e])
        .collect();
    if !intersection.len().is_power_of_two() {
        return Err(Error::invariant(
            "S(F^0) cap R^0 is not elementary abelian",
        ));
    }
    let dim = intersection.len().trailing_zeros() as usize;
    // Greedy basis: take elements outside the span of those already kept.
    let mut span: std::collections::HashSet<usize> = std::collections::HashSet::new();
    span.insert(0);
    let mut generator_words = Vec::new();
    for &e in &intersection {
        if span.contains(&e) {
            continue;
        }
        generator_words.push(f0.label(e).to_string());
        let snapshot: Vec<usize> = span.iter().copied().collect();
        for s in snapshot {
            span.insert(f0.mul(s, e));
        }
    }
    debug_assert_eq!(generator_words.len(), dim);
    Ok(HopfMultiplier {
        cover,
        dim,
        generator_words,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{catalog_presentation, DEFAULT_COSET_LIMIT};

    fn hopf_for(name: &str) -> HopfMultiplier {
        let pres = catalog_presentation(name).unwrap();
        hopf_multiplier(&pres, DEFAULT_COSET_LIMIT).unwrap()
    }

    #[test]
    fn z2_cover_is_z4() {
        // <a | a^2> covers to <a | a^4, [a, a^2]> = Z4 with R^0 = Z2, and
        // the squares of Z4 meet R^0 in all of it: dim 1.
        let h = hopf_for("cyclic:2");
        assert_eq!(h.cover.base.order(), 2);
        assert_eq!(h.cover.cover.order(), 4);
        assert_eq!(h.cover.kernel_r0.len(), 2);
        assert_eq!(h.dim, 1);
    }

    #[test]
    fn trivial_presented_group_has_trivial_multiplier() {
        // <a | a>: F^0 = <a | a^2> = Z2, R^0 = Z2, but S(F^0) = 1.
        let pres = Presentation::new(vec!["a".into()], vec![vec![1]]).unwrap();
        let h = hopf_multiplier(&pres, 1 << 10).unwrap();
        assert_eq!(h.cover.cover.order(), 2);
        assert_eq!(h.cover.kernel_r0.len(), 2);
        assert_eq!(h.dim, 0);
    }

    #[test]
    fn cyclic_parity() {
        for n in 2..=12 {
            let h = hopf_for(&format!("cyclic:{n}"));
            assert_eq!(h.dim, usize::from(n % 2 == 0), "cyclic:{n}");
        }
    }

    #[test]
    fn klein_four_multiplier_dim_3() {
        let h = hopf_for("klein4");
        assert!(h.cover.kernel_r0.len() <= 8);
        assert_eq!(h.dim, 3);
    }

    #[test]
    fn symmetric_four_multiplier_dim_2() {
        let h = hopf_for("symmetric:4");
        assert_eq!(h.dim, 2);
    }

    #[test]
    fn dims_match_cocycle_route() {
        for name in [
            "cyclic:3",
            "cyclic:8",
            "dihedral:3",
            "dihedral:4",
            "quaternion:8",
            "abelian:2x4",
            "abelian:2x2x2",
        ] {
            let pres = catalog_presentation(name).unwrap();
            let h = hopf_multiplier(&pres, DEFAULT_COSET_LIMIT).unwrap();
            let basis = crate::cohom::h2(&h.cover.base);
            assert_eq!(h.dim, basis.dim_h2(), "{name}");
        }
    }

    #[test]
    fn result_is_presentation_independent() {
        // Z6 presented two ways: <x | x^6> and <a, b | a^2, b^3, [a,b]>.
        let p1 = Presentation::new(vec!["x".into()], vec![vec![1; 6]]).unwrap();
        let p2 = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![vec![1, 1], vec![2, 2, 2], vec![1, 2, -1, -2]],
        )
        .unwrap();
        let h1 = hopf_multiplier(&p1, 1 << 12).unwrap();
        let h2 = hopf_multiplier(&p2, 1 << 12).unwrap();
        assert_eq!(h1.cover.base.order(), 6);
        assert_eq!(h2.cover.base.order(), 6);
        assert_eq!(h1.dim, h2.dim);

        // Dihedral of order 8 as the reflection presentation and as
        // <r, f | r^4, f^2, (rf)^2>.
        let q1 = catalog_presentation("dihedral:4").unwrap();
        let q2 = Presentation::new(
            vec!["r".into(), "f".into()],
            vec![vec![1; 4], vec![2, 2], vec![1, 2, 1, 2]],
        )
        .unwrap();
        let d1 = hopf_multiplier(&q1, 1 << 12).unwrap();
        let d2 = hopf_multiplier(&q2, 1 << 12).unwrap();
        assert_eq!(d1.cover.base.order(), 8);
        assert_eq!(d2.cover.base.order(), 8);
        assert_eq!(d1.dim, d2.dim);
    }

    #[test]
    fn generator_words_map_into_kernel() {
        let h = hopf_for("dihedral:4");
        assert_eq!(h.generator_words.len(), 3);
        // Each generator word names an element of S(F^0) cap R^0; check
        // it projects to the identity of the base.
        for w in &h.generator_words {
            let e = crate::grp::element_from_word(&h.cover.cover, w).unwrap();
            assert_eq!(h.cover.proj.apply(e), 0, "word {w}");
        }
    }
}
