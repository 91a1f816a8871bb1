//! Acceptance suite: one test per pinned criterion, each printing a
//! PASS/FAIL line per clause (run with --nocapture to see them).
//!
//! Criterion 5 asserts the published expectation for the order-64 group
//! that dim B0 >= 1 with the commutator word surviving; three independent
//! routes in this crate compute B0 = 0 there (the Klein-bottle classes
//! span the whole multiplier; see tests/order64.rs for the frozen
//! certificate), so that test fails by design and documents why.

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use uschur::cob::{is_extendable, klein_monodromy, ElementaryCobordism, SurfaceAction, SurfaceShape, Verdict};
use uschur::cohom::{
    coboundary_generators, eval, h2, klein_cycle, rp2_cycle, torus_cycle, CocycleBasis,
};
use uschur::f2la::RowBasis;
use uschur::grp::{
    catalog_group, catalog_presentation, element_from_word, presentation_catalog_names, splitmix,
    FiniteGroup,
};
use uschur::hopf::hopf_multiplier;
use uschur::mult::{
    bogomolov_by_restrictions, bogomolov_report, functionals_vanish_on_coboundaries, B0Context,
    MultiplierReport,
};
use uschur::relcalc::{
    class_coordinates, for_each_instance, is_trivial_in_m, parse_uword, relations,
    verify_relation_pair, InstanceMode, Symbol, UWord,
};

const SEED: u64 = 0;

/// Catalog groups of order <= 16 for the exhaustive sweeps.
const SMALL_CATALOG: &[&str] = &[
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:6",
    "cyclic:8",
    "cyclic:16",
    "klein4",
    "quaternion:8",
    "dihedral:3",
    "dihedral:4",
    "dihedral:6",
    "dihedral:8",
    "abelian:2x4",
    "abelian:2x2x2",
    "abelian:2x2x4",
    "symmetric:3",
];

fn s5_data() -> &'static (Arc<FiniteGroup>, MultiplierReport, B0Context) {
    static DATA: OnceLock<(Arc<FiniteGroup>, MultiplierReport, B0Context)> = OnceLock::new();
    DATA.get_or_init(|| {
        let g = catalog_group("symmetric:5").expect("catalog");
        let (report, ctx) = bogomolov_report(&g, "symmetric:5").expect("report");
        (g, report, ctx)
    })
}

fn basis_for(name: &str) -> (Arc<FiniteGroup>, CocycleBasis) {
    let g = catalog_group(name).expect("catalog");
    let basis = h2(&g);
    (g, basis)
}

#[test]
fn criterion_1_cyclic_multipliers() {
    let start = Instant::now();
    for n in 2..=16usize {
        let (g, basis) = basis_for(&format!("cyclic:{n}"));
        let expected = usize::from(n % 2 == 0);
        assert_eq!(basis.dim_h2(), expected, "dim M(Z{n};Z2)");
        if n % 2 == 0 {
            let x = element_from_word(&g, "x").unwrap();
            let w = UWord::single(Symbol::Sq(g.pow(x, (n / 2) as i64)));
            let (_, trivial) = is_trivial_in_m(&w, &basis).unwrap();
            assert!(!trivial, "S[x^{}] must generate M(Z{n};Z2)", n / 2);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "criterion 1 exceeded 5 s: {elapsed:?}");
    println!("criterion 1 PASS: cyclic multipliers n=2..16 with generator words ({elapsed:?})");
}

#[test]
fn criterion_2_dihedral_h2() {
    let start = Instant::now();
    for n in [3usize, 5, 7] {
        let (g, basis) = basis_for(&format!("dihedral:{n}"));
        assert_eq!(basis.dim_h2(), 1, "dim H^2(D{};Z2)", 2 * n);
        let a = element_from_word(&g, "a").unwrap();
        let (_, trivial) = is_trivial_in_m(&UWord::single(Symbol::Sq(a)), &basis).unwrap();
        assert!(!trivial, "S[a] generates for odd n={n}");
    }
    for n in [2usize, 4, 6, 8] {
        let (g, basis) = basis_for(&format!("dihedral:{n}"));
        assert_eq!(basis.dim_h2(), 3, "dim H^2(D{};Z2)", 2 * n);
        let a = element_from_word(&g, "a").unwrap();
        let c = element_from_word(&g, "c").unwrap();
        let words = [
            UWord::single(Symbol::Sq(g.pow(c, (n / 2) as i64))),
            UWord::single(Symbol::Sq(a)),
            UWord::single(Symbol::Sq(g.mul(a, c))),
        ];
        let mut span = RowBasis::new(3);
        for w in &words {
            let (coords, trivial) = is_trivial_in_m(w, &basis).unwrap();
            assert!(!trivial, "generator word trivial for n={n}");
            span.add_row(coords).unwrap();
        }
        assert_eq!(span.rank(), 3, "the three words span H^2 for n={n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "criterion 2 exceeded 30 s: {elapsed:?}");
    println!("criterion 2 PASS: dihedral H^2 dims and generator words ({elapsed:?})");
}

#[test]
fn criterion_3_symmetric_h2() {
    let start = Instant::now();
    let expected = [0usize, 1, 1, 2];
    for (n, &dim) in (1..=4usize).zip(&expected) {
        let (_, basis) = basis_for(&format!("symmetric:{n}"));
        assert_eq!(basis.dim_h2(), dim, "dim H^2(S{n};Z2)");
    }
    let (_, report, _) = s5_data();
    assert_eq!(report.dim_h2, 2, "dim H^2(S5;Z2)");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 600,
        "criterion 3 exceeded 10 min: {elapsed:?}"
    );
    println!("criterion 3 PASS: symmetric H^2 dims 0,1,1,2,2 ({elapsed:?})");
}

/// All isomorphism types of abelian groups of order <= bound, as catalog
/// specs over prime-power cyclic factors.
fn abelian_types(bound: usize) -> Vec<String> {
    let prime_powers: Vec<usize> = (2..=bound)
        .filter(|&m| {
            let mut m0 = m;
            let mut p = 0;
            for q in 2..=m {
                if m0 % q == 0 {
                    p = q;
                    break;
                }
            }
            while m0 % p == 0 {
                m0 /= p;
            }
            m0 == 1
        })
        .collect();
    let mut out = vec!["abelian:1".to_string()];
    // Multisets of prime powers with product <= bound, nondecreasing.
    fn rec(
        prime_powers: &[usize],
        start: usize,
        product: usize,
        bound: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<String>,
    ) {
        for (i, &q) in prime_powers.iter().enumerate().skip(start) {
            if product * q > bound {
                continue;
            }
            current.push(q);
            let spec = format!(
                "abelian:{}",
                current
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("x")
            );
            out.push(spec);
            rec(prime_powers, i, product * q, bound, current, out);
            current.pop();
        }
    }
    rec(&prime_powers, 0, 1, bound, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_4_triviality_theorem() {
    let start = Instant::now();
    let mut names = abelian_types(32);
    for n in 1..=16usize {
        names.push(format!("dihedral:{n}"));
    }
    for n in 1..=4usize {
        names.push(format!("symmetric:{n}"));
    }
    let mut checked = 0;
    for name in &names {
        let g = catalog_group(name).unwrap();
        let (report, _) = bogomolov_report(&g, name).unwrap();
        assert_eq!(report.dim_b0, 0, "{name}: B0 must be trivial");
        assert!(report.routes_agree, "{name}: routes disagree");
        checked += 1;
    }
    let (_, s5_report, _) = s5_data();
    assert_eq!(s5_report.dim_b0, 0, "symmetric:5: B0 must be trivial");
    assert!(s5_report.routes_agree);
    checked += 1;
    let elapsed = start.elapsed();
    println!(
        "criterion 4 PASS: B0 = 0 on {checked} abelian/dihedral/symmetric groups ({elapsed:?})"
    );
}

#[test]
fn criterion_5_order_64_example() {
    let start = Instant::now();
    let g = catalog_group("smallgroup:64:182").unwrap();
    let (report, ctx) = bogomolov_report(&g, "smallgroup:64:182").unwrap();

    let clause_a = report.dim_h2 == 4;
    println!(
        "criterion 5 clause dim-H2 {}: dim H^2 = {} (expected 4; H1 tensor Z2 = {} plus H2 tensor Z2)",
        if clause_a { "PASS" } else { "FAIL" },
        report.dim_h2,
        g.abelianization_mod2(),
    );

    let clause_b = report.dim_b0 >= 1;
    println!(
        "criterion 5 clause dim-B0 {}: dim B0 = {} (expected >= 1); functional rank {} of {}; routes agree: {}",
        if clause_b { "PASS" } else { "FAIL" },
        report.dim_b0,
        report.functional_rank,
        report.dim_h2,
        report.routes_agree,
    );

    let w = parse_uword(&g, "O[a,c] O[ab,c]").unwrap();
    let m_coords = class_coordinates(&w, &ctx.basis).unwrap();
    let (_, trivial_b0) = ctx.word_class_in_b0(&w).unwrap();
    println!(
        "criterion 5 note: O[a,c] O[ab,c] is {} in M (coordinates {})",
        if m_coords.is_zero() { "trivial" } else { "NONTRIVIAL" },
        m_coords.to_bitstring()
    );
    let clause_c = !trivial_b0;
    println!(
        "criterion 5 clause word-nonzero-in-B0 {}: the class {} in B0",
        if clause_c { "PASS" } else { "FAIL" },
        if trivial_b0 { "dies" } else { "survives" },
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 900, "criterion 5 exceeded 15 min");

    assert!(clause_a, "criterion 5: dim H^2 must be 4");
    // The two clauses below pin the published expectation. Three
    // independent routes (cocycle functionals, restriction kernels, and
    // the square-cover arithmetic) compute dim B0 = 0 here, with an
    // explicit ten-factor Klein-class certificate for this very word
    // (tests/order64.rs), so these assertions fail and are expected to:
    // the suite records the discrepancy rather than repinning the value.
    assert!(
        clause_b,
        "criterion 5: dim B0 = {} but the pinned expectation is >= 1 \
         (Klein-bottle classes span all of H^2 at this group; see \
         tests/order64.rs::klein_certificate_for_example_word)",
        report.dim_b0
    );
    assert!(
        clause_c,
        "criterion 5: the class of O[a,c] O[ab,c] dies in B0 \
         (it is a product of ten Klein classes; see tests/order64.rs)"
    );
}

#[test]
fn criterion_6_route_agreement() {
    let start = Instant::now();
    for name in presentation_catalog_names() {
        let pres = catalog_presentation(&name).unwrap();
        let hopf = hopf_multiplier(&pres, 1 << 20).unwrap();
        let basis = h2(&hopf.cover.base);
        assert_eq!(
            hopf.dim,
            basis.dim_h2(),
            "{name}: square-cover route disagrees with the cocycle route"
        );
        let g = catalog_group(&name).unwrap();
        let ctx = uschur::mult::bogomolov_by_functionals(&g).unwrap();
        let by_restrictions = bogomolov_by_restrictions(&g, &ctx.basis).unwrap();
        assert_eq!(
            ctx.dim_b0(),
            by_restrictions,
            "{name}: Bogomolov routes disagree"
        );
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 6 PASS: hopf = cocycle dim and both B0 routes agree on every catalog presentation ({elapsed:?})"
    );
}

#[test]
fn criterion_7_relation_calculus() {
    let start = Instant::now();
    let mut total_instances = 0usize;
    let mut run = |name: &str, mode: InstanceMode| {
        let g = catalog_group(name).unwrap();
        let basis = h2(&g);
        for rel in relations() {
            let count = for_each_instance(&g, rel, mode, |lhs, rhs| {
                assert!(
                    verify_relation_pair(lhs, rhs, &basis).unwrap(),
                    "{name}: relation {} violated in some square-central extension",
                    rel.name
                );
                Ok(())
            })
            .unwrap_or_else(|e| panic!("{name}: {} canonical-image failure: {e}", rel.name));
            total_instances += count;
        }
    };
    for name in SMALL_CATALOG {
        run(name, InstanceMode::Exhaustive);
    }
    for name in ["symmetric:4", "dihedral:16", "smallgroup:64:182"] {
        run(
            name,
            InstanceMode::Sampled {
                seed: SEED,
                count: 10_000,
            },
        );
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 7 PASS: {total_instances} relation instances, zero canonical or extension failures (seed {SEED}, {elapsed:?})"
    );
}

#[test]
fn criterion_8_well_definedness() {
    let start = Instant::now();
    let mut groups: Vec<&str> = SMALL_CATALOG.to_vec();
    groups.push("symmetric:4");
    groups.push("dihedral:16");
    for name in &groups {
        let g = catalog_group(name).unwrap();
        // Every surface cycle construction verifies zero bar boundary
        // internally; failure would surface as an error here.
        for (x, y) in g.commuting_pairs() {
            torus_cycle(&g, x, y).unwrap();
        }
        for (x, y) in g.klein_pairs() {
            klein_cycle(&g, x, y).unwrap();
        }
        for z in g.involutions() {
            rp2_cycle(&g, z).unwrap();
        }
        assert!(
            functionals_vanish_on_coboundaries(&g).unwrap(),
            "{name}: functional fails on a coboundary generator"
        );
        // eval invariant under omega -> omega + d(phi), 10^3 random phi.
        let basis = h2(&g);
        let coboundaries = coboundary_generators(&g);
        let mut state = SEED ^ 0xa5a5_5a5a;
        if let Some(rep) = basis.h2_reps.first() {
            let (x, y) = g.commuting_pairs()[g.order() / 2];
            let cycle = torus_cycle(&g, x, y).unwrap();
            let base = eval(rep, &cycle).unwrap();
            for _ in 0..1000 {
                let mut omega = rep.clone();
                for cb in &coboundaries {
                    if splitmix(&mut state) & 1 == 1 {
                        omega.bits_mut().xor_assign(cb);
                    }
                }
                assert_eq!(eval(&omega, &cycle).unwrap(), base, "{name}: eval moved");
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 8 PASS: zero-boundary cycles, coboundary-killing functionals, eval class-invariance ({elapsed:?})"
    );
}

#[test]
fn criterion_9_extendability_verdicts() {
    let start = Instant::now();
    // Torus, Klein and nontrivial projective-plane data extend, for every
    // admissible monodromy choice on the small catalog.
    for name in SMALL_CATALOG {
        let g = catalog_group(name).unwrap();
        let ctx = uschur::mult::bogomolov_by_functionals(&g).unwrap();
        for (x, y) in g.commuting_pairs() {
            let s = SurfaceAction::new(&g, SurfaceShape::Orientable { pairs: vec![(x, y)] })
                .unwrap();
            assert_eq!(
                is_extendable(&s, &ctx).unwrap(),
                Verdict::Extendable,
                "{name}: torus ({x},{y})"
            );
        }
        for z1 in 0..g.order() {
            for z2 in 0..g.order() {
                if g.mul(g.mul(z1, z1), g.mul(z2, z2)) != 0 {
                    continue;
                }
                let s = SurfaceAction::new(
                    &g,
                    SurfaceShape::Nonorientable {
                        crosscaps: vec![z1, z2],
                    },
                )
                .unwrap();
                assert_eq!(
                    is_extendable(&s, &ctx).unwrap(),
                    Verdict::Extendable,
                    "{name}: Klein ({z1},{z2})"
                );
            }
        }
        for z in g.involutions() {
            let s = SurfaceAction::new(&g, SurfaceShape::Nonorientable { crosscaps: vec![z] })
                .unwrap();
            assert_eq!(
                is_extendable(&s, &ctx).unwrap(),
                Verdict::Extendable,
                "{name}: RP2 ({z})"
            );
        }
    }
    // Every surface over every abelian group of order <= 32 extends,
    // except the odd-total-Euler-characteristic ones which carry the
    // trivial projective-plane bordism component.
    for name in abelian_types(32) {
        let g = catalog_group(&name).unwrap();
        let ctx = uschur::mult::bogomolov_by_functionals(&g).unwrap();
        let n = g.order();
        for x in 0..n {
            for y in 0..n {
                let s = SurfaceAction::new(&g, SurfaceShape::Orientable { pairs: vec![(x, y)] })
                    .unwrap();
                assert_eq!(is_extendable(&s, &ctx).unwrap(), Verdict::Extendable, "{name}");
            }
        }
        // All crosscap data with k <= 3 (sampled above order 16).
        let mut state = SEED ^ 0x7272;
        let mut check_crosscaps = |zs: Vec<usize>| {
            let sq = zs.iter().fold(0, |acc, &z| g.mul(acc, g.mul(z, z)));
            if sq != 0 {
                return;
            }
            let k = zs.len() as i64;
            let s =
                SurfaceAction::new(&g, SurfaceShape::Nonorientable { crosscaps: zs }).unwrap();
            let verdict = is_extendable(&s, &ctx).unwrap();
            if (n as i64 * (2 - k)).rem_euclid(2) == 1 {
                assert_eq!(verdict, Verdict::TrivialRP2Component, "{name} k={k}");
            } else {
                assert_eq!(verdict, Verdict::Extendable, "{name} k={k}");
            }
        };
        for z1 in 0..n {
            check_crosscaps(vec![z1]);
            for z2 in 0..n {
                check_crosscaps(vec![z1, z2]);
            }
        }
        if n <= 16 {
            for z1 in 0..n {
                for z2 in 0..n {
                    for z3 in 0..n {
                        check_crosscaps(vec![z1, z2, z3]);
                    }
                }
            }
        } else {
            for _ in 0..4096 {
                let z1 = (splitmix(&mut state) % n as u64) as usize;
                let z2 = (splitmix(&mut state) % n as u64) as usize;
                let z3 = (splitmix(&mut state) % n as u64) as usize;
                check_crosscaps(vec![z1, z2, z3]);
            }
        }
    }
    // Trivial projective-plane bundle over odd-order groups is blocked.
    for name in ["cyclic:3", "cyclic:5", "cyclic:7", "abelian:3x3", "cyclic:15"] {
        let g = catalog_group(name).unwrap();
        let ctx = uschur::mult::bogomolov_by_functionals(&g).unwrap();
        let s = SurfaceAction::new(&g, SurfaceShape::Nonorientable { crosscaps: vec![0] })
            .unwrap();
        assert_eq!(
            is_extendable(&s, &ctx).unwrap(),
            Verdict::TrivialRP2Component,
            "{name}"
        );
    }
    // The Klein bottle is two Moebius strips: boundary monodromies agree
    // exhaustively on the small catalog.
    for name in SMALL_CATALOG {
        let g = catalog_group(name).unwrap();
        for x in 0..g.order() {
            for y in 0..g.order() {
                let m1 = ElementaryCobordism::Moebius.compose(&g, &[x]).unwrap();
                let m2 = ElementaryCobordism::Moebius
                    .compose(&g, &[g.mul(g.inv(x), y)])
                    .unwrap();
                let glued = ElementaryCobordism::Pants.compose(&g, &[m1, m2]).unwrap();
                assert_eq!(glued, klein_monodromy(&g, x, y), "{name}");
            }
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 9 PASS: extendability verdicts and the two-Moebius identity ({elapsed:?})");
}
