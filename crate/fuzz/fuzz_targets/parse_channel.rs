#![no_main]

use hoeffding::format::parse_channel;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ch) = parse_channel(text) {
        assert!(ch.completeness_residual() <= 1e-10);
    }
});
