#![no_main]

use hoeffding::format::parse_classical_pair;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cp) = parse_classical_pair(text) {
        assert_eq!(cp.p().len(), cp.q().len());
        assert!(hoeffding::classical_phi(&cp, 0.5).unwrap() <= 1e-9);
    }
});
