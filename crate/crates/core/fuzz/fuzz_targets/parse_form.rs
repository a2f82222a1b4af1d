#![no_main]

use defectforms::field::parse_form;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_form(text) {
        let again = parse_form(&f.to_string()).expect("display reparses");
        assert_eq!(again, f);
        assert!(f.d().d().is_exact_zero());
    }
});
