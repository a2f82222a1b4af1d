#![no_main]

use defectforms::cli::{parse_scenario, serialize_scenario};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(sc) = parse_scenario(text) {
        let back = parse_scenario(&serialize_scenario(&sc)).expect("serialized scenario reparses");
        assert_eq!(back, sc);
    }
});
