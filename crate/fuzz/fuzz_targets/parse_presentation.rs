#![no_main]

//! Presentation text format: parsing must never panic, and anything that
//! parses must survive a capped coset enumeration (resource errors are
//! fine, crashes are not).

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(pres) = uschur::grp::parse_presentation(text) else {
        return;
    };
    // Tiny cap keeps throughput; Resource errors are expected.
    let _ = uschur::grp::FiniteGroup::from_presentation(&pres, 64);
});
