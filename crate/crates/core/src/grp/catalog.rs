//! The group catalog: the cyclic, dihedral, symmetric, quaternion, abelian
//! and one order-64 target the computations are exercised on, plus finite
//! presentations for the square-cover route.

use std::sync::Arc;

use super::{FiniteGroup, Perm, Presentation, DEFAULT_COSET_LIMIT, DENSE_LIMIT};
use crate::error::{Error, Result};

/// Build a catalog group by name.
///
/// Names: `cyclic:n`, `dihedral:n` (order 2n), `symmetric:n`,
/// `quaternion:8`, `klein4`, `abelian:n1xn2x...`, `smallgroup:64:182`.
pub fn catalog_group(name: &str) -> Result<Arc<FiniteGroup>> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["cyclic", n] => cyclic(parse_n(n, 1)?),
        ["dihedral", n] => dihedral(parse_n(n, 1)?),
        ["symmetric", n] => symmetric(parse_n(n, 1)?),
        ["quaternion", "8"] => quaternion8(),
        ["klein4"] => abelian_named(&[2, 2], &["a", "b"]),
        ["abelian", spec] => {
            let orders = spec
                .split('x')
                .map(|s| parse_n(s, 1))
                .collect::<Result<Vec<_>>>()?;
            abelian(&orders)
        }
        ["smallgroup", "64", "182"] => smallgroup_64_182(),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

/// The catalog presentation for a name, where one is shipped. These stay
/// within the square-cover budget: |G| * 2^(relator count) <= 2048.
pub fn catalog_presentation(name: &str) -> Result<Presentation> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["cyclic", n] => {
            let n = parse_n(n, 1)?;
            Presentation::new(vec!["x".into()], vec![vec![1; n]])
        }
        ["dihedral", n] => {
            let n = parse_n(n, 1)?;
            let mut ab = Vec::new();
            for _ in 0..n {
                ab.push(1);
                ab.push(2);
            }
            Presentation::new(
                vec!["a".into(), "b".into()],
                vec![vec![1, 1], vec![2, 2], ab],
            )
        }
        ["symmetric", n] => {
            let n = parse_n(n, 1)?;
            if n == 1 {
                return Presentation::new(vec!["a".into()], vec![vec![1]]);
            }
            let ngens = n - 1;
            let names = (1..n).map(|i| format!("s{i}")).collect();
            let mut relators = Vec::new();
            for i in 0..ngens {
                relators.push(vec![i as i32 + 1, i as i32 + 1]);
            }
            for i in 0..ngens {
                for j in i + 1..ngens {
                    let reps = if j == i + 1 { 3 } else { 2 };
                    let mut w = Vec::new();
                    for _ in 0..reps {
                        w.push(i as i32 + 1);
                        w.push(j as i32 + 1);
                    }
                    relators.push(w);
                }
            }
            Presentation::new(names, relators)
        }
        ["quaternion", "8"] => Presentation::new(
            vec!["a".into(), "b".into()],
            vec![vec![1, 1, 1, 1], vec![1, 1, -2, -2], vec![-2, 1, 2, 1]],
        ),
        ["klein4"] => Presentation::new(
            vec!["a".into(), "b".into()],
            vec![vec![1, 1], vec![2, 2], vec![1, 2, 1, 2]],
        ),
        ["abelian", spec] => {
            let orders = spec
                .split('x')
                .map(|s| parse_n(s, 1))
                .collect::<Result<Vec<_>>>()?;
            if orders.len() > 3 {
                // Rank 4 and up would push the square cover past the
                // dense-table regime (|R^0| can reach 2^relators).
                return Err(Error::UnknownCatalog(format!(
                    "{name} (no shipped presentation for abelian rank > 3)"
                )));
            }
            let names = (1..=orders.len()).map(|i| format!("g{i}")).collect();
            let mut relators = Vec::new();
            for (i, &ni) in orders.iter().enumerate() {
                relators.push(vec![i as i32 + 1; ni]);
            }
            for i in 0..orders.len() {
                for j in i + 1..orders.len() {
                    relators.push(vec![
                        i as i32 + 1,
                        j as i32 + 1,
                        -(i as i32 + 1),
                        -(j as i32 + 1),
                    ]);
                }
            }
            Presentation::new(names, relators)
        }
        ["smallgroup", "64", "182"] => presentation_64_182(),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "cyclic:n",
        "dihedral:n (order 2n)",
        "symmetric:n",
        "quaternion:8",
        "klein4",
        "abelian:n1xn2x...",
        "smallgroup:64:182",
    ]
}

/// Concrete catalog names with shipped presentations, used by the route
/// cross-check sweeps (orders up to 64).
pub fn presentation_catalog_names() -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for n in 2..=16 {
        names.push(format!("cyclic:{n}"));
    }
    for n in 1..=16 {
        names.push(format!("dihedral:{n}"));
    }
    names.push("symmetric:3".into());
    names.push("symmetric:4".into());
    names.push("klein4".into());
    names.push("quaternion:8".into());
    for spec in ["2x2", "2x4", "4x4", "2x8", "2x2x2", "2x2x4", "3x3", "2x6"] {
        names.push(format!("abelian:{spec}"));
    }
    names.push("smallgroup:64:182".into());
    names
}

fn parse_n(s: &str, min: usize) -> Result<usize> {
    let n: usize = s
        .parse()
        .map_err(|_| Error::UnknownCatalog(format!("bad parameter {s:?}")))?;
    if n < min || n > DENSE_LIMIT {
        return Err(Error::UnknownCatalog(format!("parameter {n} out of range")));
    }
    Ok(n)
}

fn cyclic(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 1 {
        return FiniteGroup::from_permutations(&[], &[], 4);
    }
    let c = Perm::from_cycles(n, &[(0..n).collect()])?;
    FiniteGroup::from_permutations(&[c], &["x".into()], n + 1)
}

fn dihedral(n: usize) -> Result<Arc<FiniteGroup>> {
    let (a, b) = match n {
        1 => (
            Perm::from_cycles(2, &[vec![0, 1]])?,
            Perm::from_cycles(2, &[vec![0, 1]])?,
        ),
        2 => (
            Perm::from_cycles(4, &[vec![0, 1]])?,
            Perm::from_cycles(4, &[vec![2, 3]])?,
        ),
        _ => {
            // a: i -> -i, b: i -> 1-i on the vertices of the n-gon, so the
            // rotation c = ab sends i -> i+1.
            let a = Perm::from_images((0..n).map(|i| ((n - i) % n) as u16).collect())?;
            let b = Perm::from_images((0..n).map(|i| ((n + 1 - i) % n) as u16).collect())?;
            (a, b)
        }
    };
    let g = FiniteGroup::from_permutations(&[a, b], &["a".into(), "b".into()], 2 * n + 1)?;
    debug_assert_eq!(g.order(), 2 * n);
    // Name the rotation c = ab after the usual dihedral convention.
    with_alias(g, "c", |g| {
        let a = g.named_elements()[0].1;
        let b = g.named_elements()[1].1;
        g.mul(a, b)
    })
}

fn symmetric(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 1 {
        return FiniteGroup::from_permutations(&[], &[], 4);
    }
    let gens: Vec<Perm> = (0..n - 1)
        .map(|i| Perm::from_cycles(n, &[vec![i, i + 1]]))
        .collect::<Result<_>>()?;
    let names: Vec<String> = (1..n).map(|i| format!("s{i}")).collect();
    let order: usize = (1..=n).product();
    FiniteGroup::from_permutations(&gens, &names, order + 1)
}

fn quaternion8() -> Result<Arc<FiniteGroup>> {
    let pres = catalog_presentation("quaternion:8")?;
    let (g, _) = FiniteGroup::from_presentation(&pres, 1 << 12)?;
    debug_assert_eq!(g.order(), 8);
    Ok(g)
}

fn abelian(orders: &[usize]) -> Result<Arc<FiniteGroup>> {
    let names: Vec<String> = (1..=orders.len()).map(|i| format!("g{i}")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    abelian_named(orders, &name_refs)
}

fn abelian_named(orders: &[usize], gen_names: &[&str]) -> Result<Arc<FiniteGroup>> {
    if orders.is_empty() {
        return Err(Error::UnknownCatalog("abelian with no factors".into()));
    }
    let degree: usize = orders.iter().sum();
    let mut gens = Vec::new();
    let mut names = Vec::new();
    let mut offset = 0;
    for (i, &ni) in orders.iter().enumerate() {
        if ni > 1 {
            gens.push(Perm::from_cycles(degree, &[(offset..offset + ni).collect()])?);
            names.push(gen_names[i].to_string());
        }
        offset += ni;
    }
    let order: usize = orders.iter().product();
    if order > DENSE_LIMIT {
        return Err(Error::Resource {
            what: "abelian group order".into(),
            limit: DENSE_LIMIT,
        });
    }
    FiniteGroup::from_permutations(&gens, &names, order + 1)
}

fn presentation_64_182() -> Result<Presentation> {
    // Z8 x| Q8: a^2 = b^2, a b a^-1 = b^-1, c^8 = 1, a c a^-1 = c^3,
    // b c b^-1 = c^5.
    Presentation::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![
            vec![1, 1, -2, -2],
            vec![1, 2, -1, 2],
            vec![3; 8],
            vec![1, 3, -1, -3, -3, -3],
            vec![2, 3, -2, -3, -3, -3, -3, -3],
        ],
    )
}

fn smallgroup_64_182() -> Result<Arc<FiniteGroup>> {
    let pres = presentation_64_182()?;
    let (g, _) = FiniteGroup::from_presentation(&pres, DEFAULT_COSET_LIMIT)?;
    if g.order() != 64 {
        return Err(Error::invariant(format!(
            "smallgroup:64:182 presentation enumerated to order {}",
            g.order()
        )));
    }
    Ok(g)
}

/// Rebuild a group with one extra named element.
fn with_alias(
    g: Arc<FiniteGroup>,
    name: &str,
    elem: impl Fn(&FiniteGroup) -> usize,
) -> Result<Arc<FiniteGroup>> {
    let e = elem(&g);
    let mut named: Vec<(String, usize)> = g.named_elements().to_vec();
    named.push((name.to_string(), e));
    let order = g.order();
    let mut mul = vec![0u16; order * order];
    for i in 0..order {
        for j in 0..order {
            mul[i * order + j] = g.mul(i, j) as u16;
        }
    }
    FiniteGroup::from_table(mul, g.labels().to_vec(), g.generators().to_vec(), named)
}
