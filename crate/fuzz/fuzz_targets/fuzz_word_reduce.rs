//! Fuzzes the word parser and the stack reducer: arbitrary bytes, parsed as
//! a word when they are valid UTF-8 over {a,b,c,d}, must reduce to a normal
//! form that is a display/parse fixpoint and a two-sided inverse.

#![no_main]

use grigsum::words::GrigWord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(word) = text.parse::<GrigWord>() else { return };

    // Reduction never grows the input.
    assert!(word.len() <= text.len());

    // The normal form is stable under display followed by re-parsing.
    let reparsed: GrigWord = word.to_string().parse().expect("normal forms re-parse");
    assert_eq!(reparsed, word);

    // Inversion is an involution and cancels the word.
    assert_eq!(word.invert().invert(), word);
    assert!(word.concat(&word.invert()).is_empty());
});
