#![no_main]

//! Element words over named generators (the payload syntax inside word
//! and surface specs).

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;

fn group() -> &'static std::sync::Arc<uschur::grp::FiniteGroup> {
    static G: OnceLock<std::sync::Arc<uschur::grp::FiniteGroup>> = OnceLock::new();
    G.get_or_init(|| uschur::grp::catalog_group("smallgroup:64:182").expect("catalog"))
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 64 {
        return;
    }
    let g = group();
    if let Ok(e) = uschur::grp::element_from_word(g, text) {
        assert!(e < g.order());
    }
});
