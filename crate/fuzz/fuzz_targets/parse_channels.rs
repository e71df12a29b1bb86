#![no_main]

use hoeffding::format::parse_channels;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(list) = parse_channels(text) {
        assert!(!list.is_empty());
    }
});
