#![allow(dead_code)]

use std::path::PathBuf;

use serde_json::Value;

pub fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

/// Panics with every violation if `instance` does not satisfy the named schema.
pub fn assert_schema(name: &str, instance: &Value) {
    let validator = jsonschema::validator_for(&schema(name)).expect("schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{name} schema violations: {errors:#?}");
}
