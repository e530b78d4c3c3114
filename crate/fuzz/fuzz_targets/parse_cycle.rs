#![no_main]

use libfuzzer_sys::fuzz_target;
use perspectra::Permutation;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let n = n as usize % 13;
    if let Ok(p) = Permutation::parse(s, n) {
        assert_eq!(p.n(), n);
        assert_eq!(Permutation::parse(&p.to_string(), n).unwrap(), p);
        assert_eq!(Permutation::parse(&p.to_full_string(), n).unwrap(), p);
    }
});
