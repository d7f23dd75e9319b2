#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = text.parse::<hyperpi_cli::ParamSpec>() {
        if let hyperpi_cli::ParamValues::Range { count, .. } = spec.values {
            // keep expansion bounded
            if count <= 1 << 16 {
                let values = spec.values.expand();
                assert_eq!(values.len(), count);
            }
        }
    }
});
