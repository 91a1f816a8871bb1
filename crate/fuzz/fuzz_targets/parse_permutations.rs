#![no_main]

//! Disjoint-cycle permutation lists: parse, then close under products
//! with a tiny element cap.

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(perms) = uschur::grp::parse_permutation_file(text) else {
        return;
    };
    if perms.iter().any(|p| p.degree() > 16) || perms.len() > 4 {
        return;
    }
    let names: Vec<String> = (1..=perms.len()).map(|i| format!("g{i}")).collect();
    let _ = uschur::grp::FiniteGroup::from_permutations(&perms, &names, 64);
});
