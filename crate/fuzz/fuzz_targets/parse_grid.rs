#![no_main]

use bicx::parse_grid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(points) = parse_grid(s) {
        assert!(!points.is_empty());
        if s.contains(':') {
            assert!(points.iter().all(|x| x.is_finite()), "{s:?}");
        }
    }
});
