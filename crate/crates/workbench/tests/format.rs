use bihom_core::omega_algebra::validate_algebra;
use bihom_core::omega_bimodule::validate_bimodule;
use bihom_workbench::format::{self, WorkbenchFile};
use bihom_workbench::random::{random_instance, rng};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_instances_round_trip(seed in any::<u64>()) {
        let inst = random_instance(&mut rng(seed), 3, 2, 3).unwrap();
        prop_assert_eq!(validate_algebra(&inst.algebra), Ok(()));
        prop_assert_eq!(validate_bimodule(&inst.module), Ok(()));
        let mut file = WorkbenchFile::new(inst.algebra.clone());
        file.bimodule = Some(inst.module.clone());
        let text = format::serialize(&file);
        let back = format::parse(&text).unwrap();
        prop_assert_eq!(format::serialize(&back), text);
        prop_assert_eq!(back, file);
    }

    #[test]
    fn generation_is_seeded(seed in any::<u64>()) {
        let a = random_instance(&mut rng(seed), 3, 2, 3).unwrap();
        let b = random_instance(&mut rng(seed), 3, 2, 3).unwrap();
        prop_assert_eq!(a.label, b.label);
        prop_assert_eq!(a.algebra, b.algebra);
        prop_assert_eq!(a.module, b.module);
    }
}

#[test]
fn unknown_sections_and_bad_shapes_are_refused() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/e1.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["algebra"]["dim"] = serde_json::json!(3);
    assert!(format::parse_value(&v).is_err());
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["algebra"]["p"]["0"] = serde_json::json!([["1", "0"]]);
    let err = format::parse_value(&v).unwrap_err().to_string();
    assert!(err.contains("algebra.p"), "{}", err);
}
