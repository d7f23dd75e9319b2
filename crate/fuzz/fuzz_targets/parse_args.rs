#![no_main]

use libfuzzer_sys::fuzz_target;

// NUL-separated argv; parsing must never panic.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let argv = std::iter::once("hyperpi").chain(text.split('\0'));
    let _ = hyperpi_cli::parse_args(argv);
});
