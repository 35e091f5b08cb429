#![no_main]

use libfuzzer_sys::fuzz_target;
use qfrob::bigon::parse_word_expression;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = parse_word_expression(s);
});
