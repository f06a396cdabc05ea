use std::path::PathBuf;
use std::process::{Command, Output};

use proptest::prelude::*;
use tabcrystal::{apply_word, parse_word, Document};
use tabcrystal_core::binfty::t_infinity;
use tabcrystal_core::cliff::cliff_zero;
use tabcrystal_core::{Direction, Family, TypeSpec};

fn write_input(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tabcrystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tabcrystal")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn top_b3() -> PathBuf {
    let b3 = TypeSpec::new(Family::B, 3).unwrap();
    write_input("top_b3.json", &Document::binfty(&b3, t_infinity(&b3)).to_json())
}

#[test]
fn act_lowers_and_reports_zero() {
    let input = top_b3();
    let input = input.to_str().unwrap();
    let out = run(&["act", "--model", "binfty", "--word", "f3", "--in", input]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"family\":\"B\",\"rank\":3,\"model\":\"binfty\",\"rows\":[[\"1\",\"1\",\"1\",\"1\"],[\"2\",\"2\",\"2\"],[\"3\",\"0\"]]}\n"
    );
    let out = run(&["act", "--model", "binfty", "--word", "e1", "--in", input]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "none\n"));
    let out = run(&["act", "--model", "binfty", "--word", "f1,e1,e1,f2", "--in", input]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "none\n"));
    let out = run(&["act", "--model", "cliff", "--word", "f1", "--in", input]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["act", "--model", "binfty", "--word", "f9", "--in", input]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn cliff_conversion_both_ways() {
    let input = top_b3();
    let out = run(&["act", "--model", "binfty", "--word", "f3", "--in", input.to_str().unwrap()]);
    let lowered = write_input("f3_b3.json", &stdout(&out));
    let out = run(&["cliff", "--dir", "to", "--in", lowered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text, "{\"family\":\"B\",\"rank\":3,\"model\":\"cliff\",\"k\":{\"1\":[0,0,0,0,0],\"2\":[0,0,0],\"3\":[1]}}\n");
    let cliff_doc = write_input("f3_b3_cliff.json", &text);
    let out = run(&["cliff", "--dir", "from", "--in", cliff_doc.to_str().unwrap()]);
    assert_eq!(stdout(&out), std::fs::read_to_string(&lowered).unwrap());
    let out = run(&["cliff", "--dir", "from", "--in", lowered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_inputs_exit_one() {
    let path = write_input("broken.json", "{\"family\":\"B\",\"rank\":3,\"model\":\"binfty\",\"rows\":[[\"1\"]]");
    let out = run(&["act", "--model", "binfty", "--word", "f1", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["act", "--model", "binfty", "--word", "f1", "--in", "/nonexistent/doc.json"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["gen-binfty", "--family", "G", "--rank", "3", "--depth", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_reports() {
    let out = run(&["verify", "--suite", "counts", "--family", "G", "--rank", "2", "--depth", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["suite"], "counts");
    let out = run(&["verify", "--suite", "cliff-morphism", "--family", "G", "--rank", "2", "--depth", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

fn typed_word() -> impl Strategy<Value = (TypeSpec, Vec<usize>)> {
    let types = [(Family::A, 2), (Family::B, 3), (Family::C, 2), (Family::D, 3), (Family::G, 2)];
    (0..types.len(), prop::collection::vec(1usize..=4, 0..=6)).prop_map(move |(k, raw)| {
        let spec = TypeSpec::new(types[k].0, types[k].1).unwrap();
        let word = raw.into_iter().map(|i| (i - 1) % spec.rank() + 1).collect();
        (spec, word)
    })
}

proptest! {
    #[test]
    fn word_then_inverse_word_restores((spec, word) in typed_word()) {
        let mut starts = vec![Document::binfty(&spec, t_infinity(&spec))];
        if spec.family() != Family::G {
            starts.push(Document::cliff(&spec, cliff_zero(&spec).unwrap()));
        }
        let steps: Vec<_> = word.iter().map(|&i| (i, Direction::Lower)).collect();
        let back: Vec<_> = word.iter().rev().map(|&i| (i, Direction::Raise)).collect();
        for start in starts {
            let there = apply_word(&start, &steps).unwrap().unwrap();
            prop_assert_eq!(&Document::from_json(&there.to_json()).unwrap(), &there);
            prop_assert_eq!(apply_word(&there, &back).unwrap(), Some(start));
        }
    }

    #[test]
    fn words_parse_back(word in prop::collection::vec((1usize..=9, any::<bool>()), 0..=8)) {
        let text = word
            .iter()
            .map(|&(i, lower)| format!("{}{i}", if lower { 'f' } else { 'e' }))
            .collect::<Vec<_>>()
            .join(",");
        let parsed = parse_word(&text).unwrap();
        let expected: Vec<_> = word.iter().map(|&(i, lower)| (i, if lower { Direction::Lower } else { Direction::Raise })).collect();
        prop_assert_eq!(parsed, expected);
    }
}
