//! Browser bindings. Every entry point takes a scenario config as JSON text
//! (the page edits a preset through its sliders) and returns JSON text.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use polariton_core::scenario::run::{run_dispersion, run_spectra, Series, SpectrumSummary, Table};
use polariton_core::scenario::{preset, Scenario};
use polariton_core::spectra::SpectralResponse;
use polariton_core::{Error, Result};

#[derive(Serialize)]
struct Curves<'a> {
    columns: &'a [&'static str],
    rows: &'a [Vec<f64>],
    splitting_k0: f64,
}

#[derive(Serialize)]
struct Spectrum<'a> {
    response: &'a SpectralResponse,
    summary: &'a SpectrumSummary,
}

fn table_json(sc: &Scenario, table: &Table) -> Result<String> {
    let p = sc.model().at(0.0)?;
    let doc = Curves {
        columns: &table.columns,
        rows: &table.rows,
        splitting_k0: p.upper.omega - p.lower.omega,
    };
    Ok(serde_json::to_string(&doc)?)
}

pub fn preset_text(name: &str) -> Result<String> {
    preset(name)
        .map(str::to_string)
        .ok_or_else(|| Error::Config(format!("unknown preset `{name}`")))
}

/// Polariton, photon and exciton branches along the k sweep.
pub fn dispersion_json(config: &str) -> Result<String> {
    let sc = Scenario::from_json(config, None)?;
    table_json(&sc, &run_dispersion(&sc, Series::Polariton)?)
}

/// Hopfield weights along the k sweep.
pub fn hopfield_json(config: &str) -> Result<String> {
    let sc = Scenario::from_json(config, None)?;
    table_json(&sc, &run_dispersion(&sc, Series::Hopfield)?)
}

/// T, R, A at one in-plane wavevector, with its peak summary.
pub fn spectrum_json(config: &str, k: f64) -> Result<String> {
    let sc = Scenario::from_json(config, None)?;
    let run = run_spectra(&sc, Some(&[k]))?;
    let doc = Spectrum {
        response: &run.responses[0],
        summary: &run.summaries[0],
    };
    Ok(serde_json::to_string(&doc)?)
}

fn js(r: Result<String>) -> std::result::Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen(js_name = presetConfig)]
pub fn preset_config(name: &str) -> std::result::Result<String, JsValue> {
    js(preset_text(name))
}

#[wasm_bindgen]
pub fn dispersion(config: &str) -> std::result::Result<String, JsValue> {
    js(dispersion_json(config))
}

#[wasm_bindgen]
pub fn hopfield(config: &str) -> std::result::Result<String, JsValue> {
    js(hopfield_json(config))
}

#[wasm_bindgen]
pub fn spectrum(config: &str, k: f64) -> std::result::Result<String, JsValue> {
    js(spectrum_json(config, k))
}
