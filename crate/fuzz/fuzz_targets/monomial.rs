#![no_main]

use libfuzzer_sys::fuzz_target;
use qfrob::bigon::PbwMonomial;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = s.parse::<PbwMonomial>() {
        assert_eq!(m.to_string().parse::<PbwMonomial>().expect("rendered monomial reparses"), m);
    }
});
