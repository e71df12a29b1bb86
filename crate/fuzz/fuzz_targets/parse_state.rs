#![no_main]

use hoeffding::format::parse_state;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(rho) = parse_state(text) {
        assert!((rho.matrix().trace() - 1.0).abs() < 1e-6);
        assert!(rho.spectrum().eigenvalues().iter().all(|&l| l > -1e-6));
    }
});
