#![no_main]

use libfuzzer_sys::fuzz_target;
use perspectra::constructions::{grassmannian, SkewPerspectiveSpec};
use perspectra::realization::{parse_realization, realization_from_json, verify_realization};
use perspectra::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = parse_realization(s);
    let spec = SkewPerspectiveSpec::induced(&Permutation::identity(3), &grassmannian(3).unwrap()).unwrap();
    let c = spec.build();
    if let Ok(pts) = realization_from_json(&c, s) {
        let _ = verify_realization(&c, &pts);
    }
});
