#![no_main]

use libfuzzer_sys::fuzz_target;
use qfrob::bigon::parse_element;
use qfrob::Ring;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let g = Ring::generic();
    if let Ok(x) = parse_element(s, &g) {
        let again = parse_element(&x.to_string(), x.ring()).expect("rendered element reparses");
        assert_eq!(again, x);
    }
});
