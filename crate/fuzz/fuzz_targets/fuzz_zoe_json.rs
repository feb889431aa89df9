//! Fuzzes the 0/1-system JSON decoder: anything that parses must survive a
//! serialize/parse round trip unchanged.

#![no_main]

use grigsum::zoe::ZoeInstance;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(inst) = ZoeInstance::from_json(text) else { return };

    let json = inst.to_json();
    let reparsed = ZoeInstance::from_json(&json).expect("serialized instances re-parse");
    assert_eq!(reparsed.to_json(), json);
    assert_eq!(reparsed.n(), inst.n());
    assert_eq!(reparsed.rows(), inst.rows());
});
