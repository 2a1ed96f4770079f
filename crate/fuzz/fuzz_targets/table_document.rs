#![no_main]

use libfuzzer_sys::fuzz_target;
use lindefect::exact_linalg::{FieldSpec, PrimeField, Rationals};
use lindefect::presentation::{load_structure_constants, parse_table_document};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse_table_document(text) else { return };
    assert_eq!(parse_table_document(&doc.to_json()).expect("round trip"), doc);
    match doc.field() {
        Ok(FieldSpec::Prime(p)) => {
            let _ = load_structure_constants(&PrimeField::new(p).unwrap(), &doc);
        }
        Ok(FieldSpec::Rationals) => {
            let _ = load_structure_constants(&Rationals, &doc);
        }
        Err(_) => {}
    }
});
