//! Replays the checked-in fuzz corpus through the parsers on stable.

use std::fs;
use std::path::Path;

use hoeffding::format::{
    parse_channel, parse_channels, parse_classical_pair, parse_state, parse_state_pair,
};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read_to_string(&p).unwrap(),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn state_seeds() {
    for (name, text) in seeds("parse_state") {
        match parse_state(&text) {
            Ok(rho) => assert!((rho.matrix().trace() - 1.0).abs() < 1e-6, "{name}"),
            Err(_) => assert!(name.starts_with("bad"), "{name} should parse"),
        }
    }
}

#[test]
fn state_pair_seeds() {
    for (name, text) in seeds("parse_state_pair") {
        let pair = parse_state_pair(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(hoeffding::phi(&pair, 0.5).is_ok());
    }
}

#[test]
fn channel_seeds() {
    for (name, text) in seeds("parse_channel") {
        let ch = parse_channel(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(ch.completeness_residual() <= 1e-10);
    }
    for (name, text) in seeds("parse_channels") {
        assert!(!parse_channels(&text)
            .unwrap_or_else(|e| panic!("{name}: {e}"))
            .is_empty());
    }
}

#[test]
fn classical_pair_seeds() {
    for (name, text) in seeds("parse_classical_pair") {
        let cp = parse_classical_pair(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(hoeffding::classical_phi(&cp, 0.5).unwrap() <= 1e-9);
    }
}

#[test]
fn garbage_never_panics() {
    let inputs = [
        "",
        "{",
        "[]",
        "null",
        "{\"dim\": -1}",
        "{\"dim\": 2, \"re\": [[1e400, 0], [0, 0]]}",
        "\u{0}",
    ];
    for s in inputs {
        let _ = parse_state(s);
        let _ = parse_state_pair(s);
        let _ = parse_channel(s);
        let _ = parse_channels(s);
        let _ = parse_classical_pair(s);
    }
}
