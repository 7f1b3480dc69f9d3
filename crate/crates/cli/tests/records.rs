use proptest::prelude::*;
use rodrigues_cli::{OutputRecord, RecordsDoc};
use rodrigues_core::exact::rat;
use rodrigues_core::families::{cp_all, FamilySpec, Route};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn records_round_trip(n in 1i64..40, d in 1i64..7, l in 0u32..4) {
        let spec = FamilySpec::pre_laguerre(rat(n, d), l).unwrap();
        let records: Vec<OutputRecord> = cp_all(&spec, 3, Route::Explicit)
            .unwrap()
            .iter()
            .enumerate()
            .map(|(nu, p)| OutputRecord::new(&spec, nu as u32, Route::Explicit, p))
            .collect();
        prop_assert!(records.iter().all(|r| r.coeffs.last().is_none_or(|c| c != "0")));
        let doc = RecordsDoc { version: 1, records };
        let text = serde_json::to_string(&doc).unwrap();
        prop_assert_eq!(serde_json::from_str::<RecordsDoc>(&text).unwrap(), doc);
    }
}
