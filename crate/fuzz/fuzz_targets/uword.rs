#![no_main]

use libfuzzer_sys::fuzz_target;
use qfrob::uq::parse_uword;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(u) = parse_uword(s) {
        assert_eq!(parse_uword(&u.to_string()).expect("rendered word reparses"), u);
    }
});
