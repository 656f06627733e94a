#![no_main]

use beatty::parse::parse_bfile;
use beatty::report::{emit, Format, Report};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(terms) = parse_bfile(s) {
            // emission of what was parsed must parse back identically
            let rendered = emit(&Report::Terms(terms.clone()), Format::Bfile).unwrap();
            assert_eq!(parse_bfile(&rendered).unwrap(), terms);
        }
    }
});
