#![no_main]

use bicx::literal::format_complex;
use bicx::parse_complex;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(z) = parse_complex(s) else { return };
    let text = format_complex(z);
    let back = parse_complex(&text).expect("canonical form must parse");
    let same = |a: f64, b: f64| a == b || (a.is_nan() && b.is_nan());
    assert!(
        same(z.re, back.re) && same(z.im, back.im),
        "{s:?} -> {text:?}"
    );
});
