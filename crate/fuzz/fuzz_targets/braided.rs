#![no_main]

use libfuzzer_sys::fuzz_target;
use qfrob::braided::parse_braided;
use qfrob::Ring;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let g = Ring::generic();
    if let Ok(p) = parse_braided(s, &g) {
        let again = parse_braided(&p.to_string(), p.ring()).expect("rendered element reparses");
        assert_eq!(again, p);
    }
});
