#![no_main]

use beatty::parse::parse_gbs;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(g) = parse_gbs(s) {
            let again = parse_gbs(&g.to_string()).expect("display form parses");
            assert_eq!(g, again);
        }
    }
});
