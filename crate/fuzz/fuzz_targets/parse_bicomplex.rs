#![no_main]

use bicx::{format_bicomplex, parse_bicomplex};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(z) = parse_bicomplex(s) else { return };
    let text = format_bicomplex(&z);
    let back = parse_bicomplex(&text).expect("canonical form must parse");
    // negative zero prints as 0, so compare by value
    let parts = |z: &bicx::Bicomplex| [z.z1.re, z.z1.im, z.z2.re, z.z2.im];
    let same = parts(&z)
        .iter()
        .zip(parts(&back))
        .all(|(a, b)| *a == b || (a.is_nan() && b.is_nan()));
    assert!(same, "{s:?} -> {text:?}");
});
