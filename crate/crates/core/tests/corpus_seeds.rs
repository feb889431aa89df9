//! Replays every checked-in fuzz corpus seed through the parser it targets,
//! with the same invariants the fuzz harnesses assert. This keeps the seeds
//! honest under plain `cargo test`, without a fuzzing toolchain.

use std::path::PathBuf;

use grigsum::grigorchuk::{act_on, is_trivial, Vertex};
use grigsum::sspg::{verify_witness, SspGrigInstance};
use grigsum::words::GrigWord;
use grigsum::zkinf::SspZkInstance;
use grigsum::zoe::ZoeInstance;

/// Returns the seed contents for one fuzz target, failing loudly if the
/// corpus directory is missing or empty.
fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, Vec<u8>)> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("corpus directory {} is readable: {e}", dir.display()))
        .map(|entry| {
            let path = entry.expect("directory entry reads").path();
            let name = path.file_name().expect("seed has a name").to_string_lossy().into_owned();
            (name, std::fs::read(&path).expect("seed file reads"))
        })
        .collect();
    assert!(!out.is_empty(), "corpus for {target} has seeds");
    out.sort();
    out
}

fn utf8(name: &str, data: &[u8]) -> String {
    String::from_utf8(data.to_vec()).unwrap_or_else(|_| panic!("seed {name} is UTF-8"))
}

#[test]
fn word_reduce_seeds_hold_their_invariants() {
    for (name, data) in seeds("fuzz_word_reduce") {
        let text = utf8(&name, &data);
        let word: GrigWord = text.parse().unwrap_or_else(|e| panic!("seed {name} parses: {e}"));
        assert!(word.len() <= text.len(), "seed {name}");
        let reparsed: GrigWord = word.to_string().parse().expect("normal forms re-parse");
        assert_eq!(reparsed, word, "seed {name}");
        assert_eq!(word.invert().invert(), word, "seed {name}");
        assert!(word.concat(&word.invert()).is_empty(), "seed {name}");
    }
}

#[test]
fn vertex_act_seeds_hold_their_invariants() {
    for (name, data) in seeds("fuzz_vertex_act") {
        let text = utf8(&name, &data);
        let (word_text, vertex_text) = text.split_once('\n').unwrap_or((text.as_str(), ""));
        let word: GrigWord = word_text.parse().unwrap_or_else(|e| panic!("seed {name}: {e}"));
        let vertex: Vertex = vertex_text.parse().unwrap_or_else(|e| panic!("seed {name}: {e}"));
        let image = act_on(&word, &vertex);
        assert_eq!(image.level(), vertex.level(), "seed {name}");
        assert_eq!(act_on(&word.invert(), &image), vertex, "seed {name}");
        assert_eq!(
            image.to_string().parse::<Vertex>().expect("vertices re-parse"),
            image,
            "seed {name}"
        );
    }
}

#[test]
fn zoe_json_seeds_round_trip() {
    for (name, data) in seeds("fuzz_zoe_json") {
        let text = utf8(&name, &data);
        let inst = ZoeInstance::from_json(&text).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        let json = inst.to_json();
        let reparsed = ZoeInstance::from_json(&json).expect("serialized instances re-parse");
        assert_eq!(reparsed.to_json(), json, "seed {name}");
        assert_eq!(reparsed.rows(), inst.rows(), "seed {name}");
    }
}

#[test]
fn ssp_zk_json_seeds_round_trip() {
    for (name, data) in seeds("fuzz_ssp_zk_json") {
        let text = utf8(&name, &data);
        let inst = SspZkInstance::from_json(&text).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        let json = inst.to_json();
        let reparsed = SspZkInstance::from_json(&json).expect("serialized instances re-parse");
        assert_eq!(reparsed.to_json(), json, "seed {name}");
        for v in inst.generators().iter().chain([inst.target()]) {
            assert_eq!(v.modulus(), inst.modulus(), "seed {name}");
        }
    }
}

#[test]
fn ssp_grig_json_seeds_round_trip() {
    for (name, data) in seeds("fuzz_ssp_grig_json") {
        let text = utf8(&name, &data);
        let inst =
            SspGrigInstance::from_json(&text).unwrap_or_else(|e| panic!("seed {name}: {e}"));
        let json = inst.to_json();
        let reparsed = SspGrigInstance::from_json(&json).expect("serialized instances re-parse");
        assert_eq!(reparsed.to_json(), json, "seed {name}");
        let zeros = vec![0u8; inst.generators().len()];
        let matched = verify_witness(&inst, &zeros).expect("witness length matches");
        assert_eq!(matched, is_trivial(inst.target()), "seed {name}");
    }
}
