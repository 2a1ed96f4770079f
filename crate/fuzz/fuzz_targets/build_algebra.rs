#![no_main]

use std::sync::Arc;

use libfuzzer_sys::fuzz_target;
use lindefect::exact_linalg::PrimeField;
use lindefect::presentation::{build_algebra, parse_presentation, GroebnerLimits};
use lindefect::resolution::{resolve_with, RModule, ResolutionLimits};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = parse_presentation(text) else { return };
    let Ok(field) = PrimeField::new(p.field.characteristic()) else { return };
    let limits = GroebnerLimits { max_pairs: 2_000, max_dim: 32, ..GroebnerLimits::default() };
    let Ok(alg) = build_algebra(&field, &p, &limits) else { return };
    assert_eq!(alg.filtration_dims()[0], alg.dim());
    let alg = Arc::new(alg);
    if let Ok(res) = resolve_with(&RModule::residue_field(&alg), 3, &ResolutionLimits { max_entries: 1_000_000 }) {
        res.verify().expect("resolution verifies");
        assert_eq!(res.betti()[1], alg.embedding_dim());
    }
});
