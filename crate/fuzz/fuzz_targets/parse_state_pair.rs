#![no_main]

use hoeffding::format::parse_state_pair;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(pair) = parse_state_pair(text) {
        assert_eq!(pair.rho().dim(), pair.sigma().dim());
        // the overlap functional must be defined on the whole unit interval
        if pair.dim() <= 16 {
            let _ = hoeffding::phi(&pair, 0.5);
        }
    }
});
