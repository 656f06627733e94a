#![no_main]

use beatty::parse::parse_triple;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok((p, q, r, start)) = parse_triple(s) {
            let canonical = format!("{p},{q},{r}#{start}");
            assert_eq!(parse_triple(&canonical).unwrap(), (p, q, r, start));
        }
    }
});
