//! JSON key files: two orbit parameter sets, the seed modulus, and an
//! optional permutation plan. Reals are written with 17 significant digits
//! so every 64-bit float round-trips exactly.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use henox_core::chaos::{CipherKey, HenonParams, Modulus};
use henox_core::permute::PermutationPlan;
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum KeyError {
    #[error("malformed key file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("seed modulus must be 255 or 256, got {0}")]
    Modulus(u32),
    #[error("{0}")]
    Plan(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Deserialize)]
struct OrbitDoc {
    a: f64,
    b: f64,
    x0: f64,
    y0: f64,
    burn_in: u32,
}

#[derive(Deserialize)]
struct KeyDoc {
    seed_orbit: OrbitDoc,
    select_orbit: OrbitDoc,
    modulus: u32,
    #[serde(default)]
    plan: Option<String>,
    #[serde(default)]
    flip: Option<bool>,
}

/// A parsed key file: the key itself plus the permutation plan it carries
/// (or the default plan when it carries none).
#[derive(Clone, Debug, PartialEq)]
pub struct KeyConfig {
    pub key: CipherKey,
    pub plan: PermutationPlan,
}

pub fn parse(json: &str) -> Result<KeyConfig, KeyError> {
    let doc: KeyDoc = serde_json::from_str(json)?;
    let modulus =
        Modulus::try_from(doc.modulus).map_err(|_| KeyError::Modulus(doc.modulus))?;
    let mut plan = match &doc.plan {
        Some(codes) => codes
            .parse::<PermutationPlan>()
            .map_err(|e| KeyError::Plan(e.to_string()))?,
        None => PermutationPlan::default(),
    };
    if let Some(flip) = doc.flip {
        plan = plan.with_flip(flip);
    }
    Ok(KeyConfig {
        key: CipherKey {
            seed_orbit: orbit(&doc.seed_orbit),
            select_orbit: orbit(&doc.select_orbit),
            modulus,
        },
        plan,
    })
}

fn orbit(doc: &OrbitDoc) -> HenonParams {
    HenonParams {
        a: doc.a,
        b: doc.b,
        x0: doc.x0,
        y0: doc.y0,
        burn_in: doc.burn_in,
    }
}

/// Renders a key and plan as JSON text.
pub fn render(key: &CipherKey, plan: &PermutationPlan) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    render_orbit(&mut out, "seed_orbit", &key.seed_orbit);
    render_orbit(&mut out, "select_orbit", &key.select_orbit);
    let _ = writeln!(out, "  \"modulus\": {},", key.modulus.value());
    let _ = writeln!(out, "  \"plan\": \"{plan}\",");
    let _ = writeln!(out, "  \"flip\": {}", plan.flip());
    out.push('}');
    out.push('\n');
    out
}

fn render_orbit(out: &mut String, name: &str, orbit: &HenonParams) {
    let _ = writeln!(out, "  \"{name}\": {{");
    let _ = writeln!(out, "    \"a\": {},", real(orbit.a));
    let _ = writeln!(out, "    \"b\": {},", real(orbit.b));
    let _ = writeln!(out, "    \"x0\": {},", real(orbit.x0));
    let _ = writeln!(out, "    \"y0\": {},", real(orbit.y0));
    let _ = writeln!(out, "    \"burn_in\": {}", orbit.burn_in);
    let _ = writeln!(out, "  }},");
}

/// 17 significant digits: enough to reproduce any f64 bit pattern.
fn real(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn load(path: &Path) -> Result<KeyConfig, KeyError> {
    parse(&fs::read_to_string(path)?)
}

pub fn save(path: &Path, key: &CipherKey, plan: &PermutationPlan) -> Result<(), KeyError> {
    fs::write(path, render(key, plan))?;
    Ok(())
}
