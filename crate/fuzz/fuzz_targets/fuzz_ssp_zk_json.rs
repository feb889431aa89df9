//! Fuzzes the JSON decoder for subset-sum instances over Z_k^∞: accepted
//! instances must store canonical values and survive a round trip.

#![no_main]

use grigsum::zkinf::SspZkInstance;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(inst) = SspZkInstance::from_json(text) else { return };

    let json = inst.to_json();
    let reparsed = SspZkInstance::from_json(&json).expect("serialized instances re-parse");
    assert_eq!(reparsed.to_json(), json);
    assert_eq!(reparsed.modulus(), inst.modulus());

    // Every stored vector carries the instance modulus.
    for v in inst.generators().iter().chain([inst.target()]) {
        assert_eq!(v.modulus(), inst.modulus());
    }
});
