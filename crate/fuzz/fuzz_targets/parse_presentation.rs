#![no_main]

use libfuzzer_sys::fuzz_target;
use lindefect::presentation::parse_presentation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_presentation(text) {
        let again = parse_presentation(&p.to_text()).expect("printed presentation parses");
        assert_eq!(again, p);
    }
});
