#![no_main]

use beatty::parse::parse_alpha;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(alpha) = parse_alpha(s) {
            // accepted values round-trip through their display form
            let again = parse_alpha(&alpha.to_string()).expect("display form parses");
            assert_eq!(alpha, again);
        }
    }
});
