#![no_main]

use libfuzzer_sys::fuzz_target;
use qfrob::text::parse_scalar;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = parse_scalar(s) {
        let again = parse_scalar(&x.to_string()).expect("rendered scalar reparses");
        assert_eq!(again, x);
    }
});
