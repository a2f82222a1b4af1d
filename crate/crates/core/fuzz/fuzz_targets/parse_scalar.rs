#![no_main]

use defectforms::field::{parse_param_poly, parse_scalar, Vars};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_scalar(text) {
        let again = parse_scalar(&f.to_string()).expect("display reparses");
        assert_eq!(again, f);
    }
    let _ = parse_param_poly(text, Vars::Curve);
    let _ = parse_param_poly(text, Vars::Patch);
});
