//! Fuzzes the vertex parser and the tree action: the first input line is
//! parsed as a word, the second as a binary vertex. Acting must preserve the
//! vertex level, and acting by the inverse must undo the action.

#![no_main]

use grigsum::grigorchuk::{act_on, Vertex};
use grigsum::words::GrigWord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let (word_text, vertex_text) = text.split_once('\n').unwrap_or((text, ""));
    let Ok(word) = word_text.parse::<GrigWord>() else { return };
    let Ok(vertex) = vertex_text.parse::<Vertex>() else { return };
    if word.len() > 4096 || vertex.level() > 256 {
        return;
    }

    let image = act_on(&word, &vertex);
    assert_eq!(image.level(), vertex.level());
    assert_eq!(act_on(&word.invert(), &image), vertex);

    // The printed form of a vertex re-parses to the same vertex.
    assert_eq!(image.to_string().parse::<Vertex>().expect("vertices re-parse"), image);
});
