//! Verification harness: deterministic suites over the shipped constructions,
//! JSON reports, and the library half of the command-line tool.
//!
//! Every suite is seeded and windowed; identical configuration yields a
//! byte-identical report. No check is reported as passing without the
//! underlying exact comparison having succeeded.

mod suites;

pub use suites::{run_suite, SUITE_NAMES};

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::formal::ExponentWindow;
use crate::lie::GeneratorKey;
use crate::modules::{ModuleDescriptor, ModuleVector, TauModule};

/// Configuration of one verification run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub suite: String,
    /// Optional module descriptor for module-dependent suites.
    pub module: Option<ModuleDescriptor>,
    /// Overrides each suite's default window when present.
    pub window: Option<ExponentWindow>,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(suite: &str) -> Self {
        RunConfig { suite: suite.into(), module: None, window: None, seed: 0 }
    }
}

/// One identity checked on one window.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub identity: String,
    pub window: ExponentWindow,
    pub pass: bool,
    pub counterexample: Option<serde_json::Value>,
    /// Number of exact coefficient comparisons baked into this record.
    pub comparisons: u64,
}

impl CheckRecord {
    pub fn pass(identity: impl Into<String>, window: ExponentWindow, comparisons: u64) -> Self {
        CheckRecord {
            identity: identity.into(),
            window,
            pass: true,
            counterexample: None,
            comparisons,
        }
    }

    pub fn fail(
        identity: impl Into<String>,
        window: ExponentWindow,
        comparisons: u64,
        counterexample: serde_json::Value,
    ) -> Self {
        CheckRecord {
            identity: identity.into(),
            window,
            pass: false,
            counterexample: Some(counterexample),
            comparisons,
        }
    }
}

/// Full result of a suite run; serializes deterministically.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub samples: Vec<String>,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs a suite and reports: exit code 0 on pass, 1 on check failure.
pub fn cmd_verify(config: &RunConfig) -> Result<(i32, SuiteReport)> {
    let report = run_suite(config)?;
    let code = if report.pass { 0 } else { 1 };
    Ok((code, report))
}

/// Builds a module from a descriptor and summarizes it.
pub fn cmd_build(descriptor: &ModuleDescriptor) -> Result<serde_json::Value> {
    let module = descriptor.build()?;
    let mut summary = serde_json::json!({
        "rank": module.rank(),
        "dimension": module.dim(),
        "algebra": module.algebra().name(),
    });
    let obj = summary.as_object_mut().expect("object");
    if let ModuleDescriptor::Induced { .. } = descriptor {
        // graded dimensions of the truncation
        if let Some(depth) = module.valid_depth() {
            let mut dims = vec![0usize; (depth + 1) as usize];
            for idx in 0..module.dim() {
                if let Some(d) = module.degree_of(idx) {
                    dims[d as usize] += 1;
                }
            }
            obj.insert("graded_dimensions".into(), serde_json::json!(dims));
        }
    }
    if let Some(roots) = module.x0_annihilator_roots() {
        let poly = crate::modules::poly_from_roots(&roots);
        obj.insert("x0_annihilator".into(), poly.to_json());
        obj.insert(
            "x0_multiplicity_free".into(),
            serde_json::json!(poly.nonzero_roots_multiplicity_free()?),
        );
    }
    if let Some(per_var) = module.xi_annihilator_roots() {
        let polys: Vec<serde_json::Value> = per_var
            .iter()
            .map(|roots| crate::modules::poly_from_roots(roots).to_json())
            .collect();
        let mult_free: Result<Vec<bool>> = per_var
            .iter()
            .map(|roots| {
                crate::modules::poly_from_roots(roots).nonzero_roots_multiplicity_free()
            })
            .collect();
        obj.insert("xi_annihilators".into(), serde_json::json!(polys));
        obj.insert("xi_multiplicity_free".into(), serde_json::json!(mult_free?));
    }
    let sample: Vec<String> = (0..module.dim().min(8)).map(|i| module.basis_label(i)).collect();
    obj.insert("basis_sample".into(), serde_json::json!(sample));
    Ok(summary)
}

/// Key descriptor accepted by `apply`: one of
/// `{"g":"e","n0":1,"n":[1]}`, `{"k0":[3]}`, `{"ki":1}`.
#[derive(Deserialize)]
struct KeySpec {
    #[serde(default)]
    g: Option<String>,
    #[serde(default)]
    n0: Option<i64>,
    #[serde(default)]
    n: Option<Vec<i64>>,
    #[serde(default)]
    k0: Option<Vec<i64>>,
    #[serde(default)]
    ki: Option<usize>,
}

pub fn parse_key(module: &Arc<dyn TauModule>, text: &str) -> Result<GeneratorKey> {
    let spec: KeySpec =
        serde_json::from_str(text).map_err(|e| Error::InvalidDescriptor(format!("key: {e}")))?;
    let key = if let Some(label) = spec.g {
        let idx = module
            .algebra()
            .basis_index(&label)
            .ok_or_else(|| Error::InvalidDescriptor(format!("unknown basis label `{label}`")))?;
        GeneratorKey::g(
            idx,
            spec.n0.ok_or_else(|| Error::InvalidDescriptor("g key needs n0".into()))?,
            spec.n.unwrap_or_default(),
        )
    } else if let Some(n) = spec.k0 {
        GeneratorKey::k0(n)
    } else if let Some(i) = spec.ki {
        GeneratorKey::ki(i)
    } else {
        return Err(Error::InvalidDescriptor("key needs one of g/k0/ki".into()));
    };
    key.check(module.algebra(), module.rank())?;
    Ok(key)
}

/// Vector argument: either a basis label or a JSON map {label: "scalar"}.
pub fn parse_vector(module: &Arc<dyn TauModule>, text: &str) -> Result<ModuleVector> {
    let label_index = |label: &str| -> Result<usize> {
        (0..module.dim())
            .find(|&i| module.basis_label(i) == label)
            .ok_or_else(|| Error::InvalidDescriptor(format!("unknown basis label `{label}`")))
    };
    if let Ok(map) = serde_json::from_str::<std::collections::BTreeMap<String, String>>(text) {
        let mut v = ModuleVector::zero();
        for (label, coeff) in map {
            let c: Scalar = coeff.parse()?;
            v.add_term(label_index(&label)?, c);
        }
        return Ok(v);
    }
    Ok(ModuleVector::unit(label_index(text.trim())?))
}

/// Applies a generator to a vector and returns the sparse label map.
pub fn cmd_apply(
    descriptor: &ModuleDescriptor,
    key_text: &str,
    vector_text: &str,
) -> Result<serde_json::Value> {
    let module = descriptor.build()?;
    let key = parse_key(&module, key_text)?;
    let vector = parse_vector(&module, vector_text)?;
    let out = module.apply(&key, &vector)?;
    Ok(out.to_json(module.as_ref()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval_descriptor() -> ModuleDescriptor {
        ModuleDescriptor::from_json_str(
            r#"{"type":"eval","factors":[{"g":"sl2","m":1,"z":["2","3"]}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn apply_matches_module_example() {
        // e(1,(1)) on v1 -> {"v0": "6"}
        let out = cmd_apply(&eval_descriptor(), r#"{"g":"e","n0":1,"n":[1]}"#, "v1").unwrap();
        assert_eq!(out, serde_json::json!({"v0": "6"}));
        // center on an evaluation module -> {}
        let out = cmd_apply(&eval_descriptor(), r#"{"ki":1}"#, "v1").unwrap();
        assert_eq!(out, serde_json::json!({}));
    }

    #[test]
    fn apply_on_induced_vacuum() {
        let d = ModuleDescriptor::from_json_str(
            r#"{"type":"induced","g":"sl2","m":0,"level":"1","depth":2}"#,
        )
        .unwrap();
        let out = cmd_apply(&d, r#"{"g":"e","n0":1,"n":[]}"#, "f(-1)·vac").unwrap();
        assert_eq!(out, serde_json::json!({"vac": "1"}));
    }

    #[test]
    fn build_summarizes_graded_dimensions() {
        let d = ModuleDescriptor::from_json_str(
            r#"{"type":"induced","g":"sl2","m":0,"level":"1","depth":2}"#,
        )
        .unwrap();
        let summary = cmd_build(&d).unwrap();
        assert_eq!(summary["graded_dimensions"], serde_json::json!([1, 3, 9]));
        // eval build prints the witness polynomials
        let summary = cmd_build(&eval_descriptor()).unwrap();
        assert_eq!(summary["dimension"], serde_json::json!(2));
        assert_eq!(summary["x0_multiplicity_free"], serde_json::json!(true));
    }

    #[test]
    fn restricted_eval_two_points_witness() {
        let d = ModuleDescriptor::from_json_str(
            r#"{"type":"restricted_eval","factors":[
                {"module":{"type":"induced","g":"sl2","m":0,"level":"1","depth":1},"z":["2"]},
                {"module":{"type":"induced","g":"sl2","m":0,"level":"1","depth":1},"z":["3"]}
            ]}"#,
        )
        .unwrap();
        let summary = cmd_build(&d).unwrap();
        // p1 = (x-2)(x-3) = 6 - 5x + x^2, multiplicity-free
        assert_eq!(
            summary["xi_annihilators"][0],
            serde_json::json!({"0": "6", "1": "-5", "2": "1"})
        );
        assert_eq!(summary["xi_multiplicity_free"], serde_json::json!([true]));
    }

    #[test]
    fn bad_key_is_config_error() {
        assert!(matches!(
            cmd_apply(&eval_descriptor(), r#"{"n0":1}"#, "v1"),
            Err(Error::InvalidDescriptor(_))
        ));
        assert!(matches!(
            cmd_apply(&eval_descriptor(), r#"{"g":"q","n0":1,"n":[1]}"#, "v1"),
            Err(Error::InvalidDescriptor(_))
        ));
    }
}
