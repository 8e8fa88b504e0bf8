//! JSON module descriptors, the file format consumed by the command-line
//! tool and the verification harness.
//!
//! ```json
//! {"type": "eval", "factors": [{"g": "sl2", "m": 1, "z": ["2", "3"]}]}
//! {"type": "induced", "g": "sl2", "m": 0, "level": "1", "depth": 4}
//! {"type": "restricted_eval", "factors": [{"module": {…induced…}, "z": ["2"]}]}
//! {"type": "tensor", "parts": [ … ]}
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::modules::{
    EvalModule, EvalPoint, FiniteIrrep, InducedModule, RestrictedEvalModule, RestrictedEvalPoint,
    TauModule, TensorModule,
};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ModuleDescriptor {
    Eval {
        factors: Vec<EvalFactor>,
    },
    Induced {
        g: String,
        m: u32,
        level: String,
        depth: i64,
    },
    RestrictedEval {
        factors: Vec<RestrictedEvalFactor>,
    },
    Tensor {
        parts: Vec<ModuleDescriptor>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EvalFactor {
    pub g: String,
    pub m: u32,
    pub z: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RestrictedEvalFactor {
    pub module: Box<ModuleDescriptor>,
    pub z: Vec<String>,
}

fn parse_scalars(strings: &[String]) -> Result<Vec<Scalar>> {
    strings.iter().map(|s| s.parse()).collect()
}

fn require_sl2(g: &str) -> Result<()> {
    if g != "sl2" {
        return Err(Error::InvalidDescriptor(format!(
            "finite irreducible modules ship for sl2 only, got `{g}`"
        )));
    }
    Ok(())
}

impl ModuleDescriptor {
    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidDescriptor(e.to_string()))
    }

    /// Builds the module. Descriptors must be internally rank-consistent.
    pub fn build(&self) -> Result<Arc<dyn TauModule>> {
        match self {
            ModuleDescriptor::Eval { factors } => {
                let mut mods = Vec::new();
                let mut points = Vec::new();
                for f in factors {
                    require_sl2(&f.g)?;
                    mods.push(FiniteIrrep::new(f.m).into_g_module());
                    points.push(EvalPoint::new(parse_scalars(&f.z)?)?);
                }
                Ok(Arc::new(EvalModule::new(mods, points)?))
            }
            ModuleDescriptor::Induced { g, m, level, depth } => {
                require_sl2(g)?;
                let level: Scalar = level.parse()?;
                Ok(InducedModule::new(FiniteIrrep::new(*m).into_g_module(), level, *depth)?)
            }
            ModuleDescriptor::RestrictedEval { factors } => {
                let mut mods: Vec<Arc<dyn TauModule>> = Vec::new();
                let mut points = Vec::new();
                for f in factors {
                    let inner = f.module.build()?;
                    if inner.rank() != 0 {
                        return Err(Error::InvalidDescriptor(
                            "restricted_eval factors must be rank-0 (induced) modules".into(),
                        ));
                    }
                    mods.push(inner);
                    points.push(RestrictedEvalPoint::new(parse_scalars(&f.z)?)?);
                }
                Ok(Arc::new(RestrictedEvalModule::new(mods, points)?))
            }
            ModuleDescriptor::Tensor { parts } => {
                let built: Result<Vec<Arc<dyn TauModule>>> = parts.iter().map(|p| p.build()).collect();
                Ok(Arc::new(TensorModule::new(built?)?))
            }
        }
    }
}
