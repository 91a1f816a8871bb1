#![no_main]

//! Surface specs: parsing must never panic; valid surfaces must produce a
//! zero-boundary cycle and a word with trivial canonical image.

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
    if text.len() > 512 {
        return;
    }
    let g = group();
    let Ok(surface) = uschur::cob::parse_surface(g, text) else {
        return;
    };
    let word = surface.to_word();
    assert_eq!(word.canonical_image(g), g.identity());
    surface.to_cycle().expect("valid surfaces have cycles");
});
