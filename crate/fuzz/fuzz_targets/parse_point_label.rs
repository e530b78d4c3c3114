#![no_main]

use libfuzzer_sys::fuzz_target;
use perspectra::PointLabel;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let l: PointLabel = s.parse().unwrap();
    let back: PointLabel = l.to_string().parse().unwrap();
    assert_eq!(back, l);
});
