//! WebAssembly bindings for the browser demo in `www/`.

use secantlab::polyring::{Field, IdealFile};
use secantlab::projsec::{choose_center, classify_quadric, secant_locus_incidence, CenterSpec};
use secantlab::stratify::{stratification_survey, SurveyConfig};
use secantlab::varieties::parse_variety_spec;
use secantlab::{graded_betti, Ideal};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn js(e: secantlab::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// Betti table of `R/I` for an ideal in the text file format.
#[wasm_bindgen]
pub fn betti_table(ideal_text: &str) -> Result<String, JsError> {
    betti_json(ideal_text).map_err(js)
}

fn betti_json(text: &str) -> secantlab::Result<String> {
    let file = IdealFile::parse(text)?;
    let ideal = Ideal::new(&file.ring, file.polys)?;
    let table = graded_betti(&ideal, None)?;
    let out = json!({
        "grid": table.to_grid(),
        "table": table.to_json(),
        "regularity": table.regularity(),
        "projective_dimension": table.projective_dimension(),
    });
    Ok(out.to_string())
}

/// Secant locus of a corpus variety from a center spec.
#[wasm_bindgen]
pub fn secant_locus(variety: &str, center: &str, seed: u64) -> Result<String, JsError> {
    secant_json(variety, center, seed).map_err(js)
}

fn secant_json(variety: &str, center: &str, seed: u64) -> secantlab::Result<String> {
    let x = parse_variety_spec(variety, seed)?;
    let spec: CenterSpec = center.parse()?;
    let q = choose_center(&x, &spec, seed)?;
    let sigma = secant_locus_incidence(&x, &q)?;
    let quadric = if sigma.s >= 0 { Some(classify_quadric(&sigma.ideal)?) } else { None };
    let out = json!({
        "variety": x.name(),
        "center": q.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "s": sigma.s,
        "ideal": IdealFile::format(sigma.ideal.ring(), sigma.ideal.gens(), None),
        "quadric": quadric,
    });
    Ok(out.to_string())
}

/// Stratification survey over `GF(32003)`.
#[wasm_bindgen]
pub fn stratify(variety: &str, trials: usize, on_secant: usize, seed: u64) -> Result<String, JsError> {
    let run = || -> secantlab::Result<String> {
        let x = parse_variety_spec(variety, seed)?;
        let config = SurveyConfig {
            trials,
            on_secant,
            seed,
            field: Field::Prime(32003),
            ..SurveyConfig::default()
        };
        Ok(stratification_survey(&x, &config)?.to_json())
    };
    run().map_err(js)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn betti_of_twisted_cubic() {
        let out = betti_json("ring: x0..x3\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n").unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["regularity"], 2);
    }

    #[test]
    fn conic_secant_locus() {
        let out = secant_json("veronese:2,2", "on-secant", 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["s"], 1);
        assert_eq!(v["quadric"]["rank"], 3);
    }
}
