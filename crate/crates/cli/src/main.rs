use std::process::ExitCode;

use qfrob::bigon::{eval_word_expression, parse_element, parse_word_expression, BigonElement, PbwMonomial};
use qfrob::qcomb::{chebyshev_t, qbinom};
use qfrob::uq::{hopf_pair, parse_uword};
use qfrob::verify::{emit, exit_code, parse_config, run_all};
use qfrob::Ring;

/// Largest `n` accepted by `eval qbinom` and `eval chebyshev`.
const MAX_EVAL_N: i64 = 100;

const USAGE: &str = "usage:
  qfrob verify <suite|all>... [--orders LIST|A..B] [--degree-bound N] [--m-max N]
               [--samples N] [--seed S] [--format text|json] [--config PATH]
  qfrob eval nf <word expression>
  qfrob eval pair <monomial or element> <uword>
  qfrob eval qbinom <n> <k>
  qfrob eval chebyshev <n>

suites: qfacts root-identities freshman-dream torus-chebyshev torus-frobenius
        monogon annulus square confluence hopf-axioms cobraiding pairing-tables
        pairing-consistency dual-frobenius phi-homomorphism negative-control braided";

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}\n\n{USAGE}");
    ExitCode::from(2)
}

fn parse_n(s: &str, lo: i64) -> Result<i64, String> {
    match s.parse::<i64>() {
        Ok(v) if (lo..=MAX_EVAL_N).contains(&v) => Ok(v),
        _ => Err(format!("expected an integer in {lo}..={MAX_EVAL_N}, got '{s}'")),
    }
}

fn eval(args: &[String]) -> Result<String, String> {
    match args {
        [cmd, expr] if cmd == "nf" => {
            let terms = parse_word_expression(expr).map_err(|e| e.to_string())?;
            Ok(eval_word_expression(&terms).to_string())
        }
        [cmd, x, u] if cmd == "pair" => {
            let generic = Ring::generic();
            let x = match x.parse::<PbwMonomial>() {
                Ok(m) => BigonElement::monomial(&generic, m, generic.one()),
                Err(_) => parse_element(x, &generic).map_err(|e| e.to_string())?,
            };
            let u = parse_uword(u).map_err(|e| e.to_string())?;
            Ok(hopf_pair(&x, &u).to_string())
        }
        [cmd, n, k] if cmd == "qbinom" => {
            let n = parse_n(n, 0)?;
            let k = parse_n(k, -MAX_EVAL_N)?;
            qbinom(n, k).map(|v| v.to_string()).map_err(|e| e.to_string())
        }
        [cmd, n] if cmd == "chebyshev" => Ok(chebyshev_t(parse_n(n, 0)? as u32).to_string()),
        _ => Err("unrecognized eval command".into()),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first().map(String::as_str) {
        Some("verify") => {
            let cfg = match parse_config(&args[1..]) {
                Ok(cfg) => cfg,
                Err(e) => return usage_error(e),
            };
            let reports = run_all(&cfg);
            print!("{}", emit(&reports, &cfg));
            ExitCode::from(exit_code(&reports) as u8)
        }
        Some("eval") => match eval(&args[1..]) {
            Ok(out) => {
                println!("{out}");
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Some("-h" | "--help" | "help") => {
            println!("{USAGE}");
            ExitCode::SUCCESS
        }
        _ => usage_error("expected 'verify' or 'eval'"),
    }
}
