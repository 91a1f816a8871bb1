#![no_main]

//! Relation-word syntax O[x,y] U[x,y] S[z] with ^k: parsing must never
//! panic, and parsed words must display/reparse to the same word.

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;

fn group() -> &'static std::sync::Arc<uschur::grp::FiniteGroup> {
    static G: OnceLock<std::sync::Arc<uschur::grp::FiniteGroup>> = OnceLock::new();
    G.get_or_init(|| uschur::grp::catalog_group("dihedral:4").expect("catalog"))
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let g = group();
    let Ok(word) = uschur::relcalc::parse_uword(g, text) else {
        return;
    };
    let shown = word.display(g);
    let again = uschur::relcalc::parse_uword(g, &shown).expect("display output reparses");
    assert_eq!(word, again, "display/reparse must round-trip");
    let _ = word.canonical_image(g);
});
