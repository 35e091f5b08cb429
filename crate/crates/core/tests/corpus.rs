//! Replays the fuzz corpus through the parsers on stable, with the same
//! round-trip checks the fuzz targets make.

use std::fs;
use std::path::PathBuf;

use qfrob::bigon::{parse_element, parse_word_expression, PbwMonomial};
use qfrob::braided::parse_braided;
use qfrob::text::parse_scalar;
use qfrob::uq::parse_uword;
use qfrob::verify::{parse_config, parse_config_text, SuiteConfig};
use qfrob::Ring;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn scalar_seeds() {
    for (name, s) in seeds("scalar") {
        let x = parse_scalar(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_scalar(&x.to_string()).unwrap(), x, "{name}");
    }
}

#[test]
fn monomial_seeds() {
    for (name, s) in seeds("monomial") {
        let m: PbwMonomial = s.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(m.to_string().parse::<PbwMonomial>().unwrap(), m, "{name}");
    }
}

#[test]
fn bigon_element_seeds() {
    let g = Ring::generic();
    for (name, s) in seeds("bigon_element") {
        let x = parse_element(&s, &g).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_element(&x.to_string(), x.ring()).unwrap(), x, "{name}");
    }
}

#[test]
fn word_expression_seeds() {
    for (name, s) in seeds("word_expression") {
        parse_word_expression(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn uword_seeds() {
    for (name, s) in seeds("uword") {
        let u = parse_uword(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_uword(&u.to_string()).unwrap(), u, "{name}");
    }
}

#[test]
fn braided_seeds() {
    let g = Ring::generic();
    for (name, s) in seeds("braided") {
        let p = parse_braided(&s, &g).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_braided(&p.to_string(), p.ring()).unwrap(), p, "{name}");
    }
}

#[test]
fn config_seeds() {
    for (name, s) in seeds("config") {
        match name.as_str() {
            "file" => {
                let mut cfg = SuiteConfig::default();
                for (k, v) in parse_config_text(&s).unwrap() {
                    cfg.set(&k, &v).unwrap();
                }
                assert_eq!(cfg.seed, 7);
                assert_eq!(cfg.orders.len(), 13);
            }
            "args" => {
                let args: Vec<&str> = s.split_whitespace().collect();
                let cfg = parse_config(&args).unwrap();
                assert_eq!(cfg.orders, vec![3, 5, 12]);
            }
            _ => assert!(parse_config_text(&s).is_err(), "{name}"),
        }
    }
}
