#![no_main]

use libfuzzer_sys::fuzz_target;
use perspectra::Configuration;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(c) = Configuration::from_json(s) else { return };
    // Whatever parses must survive a round trip and the checks downstream.
    assert_eq!(Configuration::from_json(&c.to_json()).unwrap(), c);
    if c.verify().is_ok() && c.num_points() <= 40 {
        let _ = c.collinearity_graph();
        let _ = c.to_dot();
        let _ = perspectra::canon::canonical_search(&c);
    }
});
