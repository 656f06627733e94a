#![no_main]

use beatty::parse::parse_word;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(w) = parse_word(s) {
            // accepted words are nonempty digit strings and round-trip
            assert!(!w.is_empty());
            let digits = w.to_digits().expect("digit letters render");
            assert_eq!(parse_word(&digits).unwrap(), w);
        }
    }
});
