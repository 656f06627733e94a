#![no_main]

use beatty::parse::parse_morphism;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(mu) = parse_morphism(s) {
            // accepted morphisms are non-erasing on their whole alphabet
            for letter in mu.alphabet() {
                assert!(!mu.image(letter).unwrap().is_empty());
            }
        }
    }
});
