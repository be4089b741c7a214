use std::fs;
use std::io::Write;

use serde_json::Value;

use hopf_qexp::presets::scalar_to_json;
use hopf_qexp::{Cyclotomic, Hopf};

use crate::{Failure, Format, OutputArgs};

/// Write the report in the requested format.
pub fn emit(out: &OutputArgs, text: &str, json: &Value) -> Result<(), Failure> {
    let body = match out.format {
        Format::Text => text.to_string(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(json).expect("JSON values serialize");
            s.push('\n');
            s
        }
    };
    match &out.out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| Failure::Input(format!("stdout: {e}")))
        }
    }
}

/// `c₁·label₁ + c₂·label₂ + …`, dropping zero coefficients.
pub fn element_text(h: &Hopf, v: &[Cyclotomic]) -> String {
    use num_traits::{One, Zero};
    let labels = h.basis_labels();
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            if c.is_one() {
                labels[i].clone()
            } else if (-c.clone()).is_one() {
                format!("-{}", labels[i])
            } else {
                format!("({c})·{}", labels[i])
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn element_json(v: &[Cyclotomic], conductor: u32) -> Value {
    Value::Array(v.iter().map(|c| scalar_to_json(c, conductor)).collect())
}
