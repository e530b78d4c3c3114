#![no_main]

use libfuzzer_sys::fuzz_target;
use perspectra::realization::{parametric_realization, parse_params, ParametricCase};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(p) = parse_params(s) else { return };
    for case in [ParametricCase::C4, ParametricCase::C3PlusFix] {
        // Degenerate values are errors, never panics.
        let _ = parametric_realization(case, &p);
    }
});
