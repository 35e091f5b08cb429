#![no_main]

use libfuzzer_sys::fuzz_target;
use qfrob::verify::{parse_config, parse_config_text, SuiteConfig};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(pairs) = parse_config_text(s) {
        let mut cfg = SuiteConfig::default();
        for (k, v) in pairs {
            let _ = cfg.set(&k, &v);
        }
    }
    // --config would read from disk, so only flag-only argument lists go through.
    let args: Vec<&str> = s.split_whitespace().collect();
    if !args.iter().any(|a| a.starts_with("--config")) {
        let _ = parse_config(&args);
    }
});
