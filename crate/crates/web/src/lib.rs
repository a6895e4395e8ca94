//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Everything crosses the boundary as JSON strings; errors come back as plain
//! messages.

use atilde_core::classify::ClassifyReport;
use atilde_core::counting::{a_tilde, derived_class_count, symmetric_count, table_row};
use atilde_core::verify::census;
use atilde_core::{classify, seed_cycle, ExchangeQuiver};
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest class the page will enumerate; bigger ones stall the tab.
pub const MAX_VERTICES: u32 = 9;

/// Rows `n = 2..=n_max` of the count table as `[{n, counts: [...]}, ...]`.
#[wasm_bindgen]
pub fn count_table(n_max: u32) -> Result<String, String> {
    if !(2..=60).contains(&n_max) {
        return Err("n_max must be between 2 and 60".into());
    }
    let mut rows = Vec::new();
    for n in 2..=n_max as u64 {
        let counts: Vec<String> = table_row(n).map_err(|e| e.to_string())?.iter().map(ToString::to_string).collect();
        rows.push(json!({ "n": n, "counts": counts }));
    }
    Ok(serde_json::Value::Array(rows).to_string())
}

/// Enumerates the class of the `(r, s)` cycle and tallies its members by
/// parameters, next to the closed-form predictions.
#[wasm_bindgen]
pub fn class_summary(r: u32, s: u32) -> Result<String, String> {
    if r == 0 || s == 0 || r + s > MAX_VERTICES {
        return Err(format!("need r, s >= 1 and r + s <= {MAX_VERTICES}"));
    }
    let (r, s) = (r.max(s) as u64, r.min(s) as u64);
    let c = census(r, s, 2)?;
    let mut splits = Vec::new();
    for (p, found) in &c.by_params {
        let predicted = derived_class_count(p.r1 as u64, p.r2 as u64, p.s1 as u64, p.s2 as u64)
            .map_err(|e| e.to_string())?;
        splits.push(json!({
            "r1": p.r1, "r2": p.r2, "s1": p.s1, "s2": p.s2,
            "found": found,
            "predicted": predicted.to_string(),
        }));
    }
    let symmetric_predicted = if r == s { symmetric_count(r).map_err(|e| e.to_string())? } else { 0.into() };
    Ok(json!({
        "r": r,
        "s": s,
        "size": c.size,
        "predicted": a_tilde(r, s).map_err(|e| e.to_string())?.to_string(),
        "symmetric": c.symmetric,
        "symmetric_predicted": symmetric_predicted.to_string(),
        "splits": splits,
    })
    .to_string())
}

/// A quiver the page mutates vertex by vertex.
#[wasm_bindgen]
pub struct QuiverExplorer {
    quiver: ExchangeQuiver,
    history: Vec<usize>,
}

#[wasm_bindgen]
impl QuiverExplorer {
    /// Starts from the cycle with `r` arrows one way and `s` the other.
    #[wasm_bindgen(constructor)]
    pub fn new(r: u32, s: u32) -> Result<QuiverExplorer, String> {
        if r + s > 16 {
            return Err("at most 16 vertices".into());
        }
        let quiver = seed_cycle(r as usize, s as usize).map_err(|e| e.to_string())?;
        Ok(QuiverExplorer { quiver, history: Vec::new() })
    }

    /// Starts from a quiver in the text format (`n`, then `i j m` lines).
    pub fn from_text(text: &str) -> Result<QuiverExplorer, String> {
        let quiver = ExchangeQuiver::parse_text(text).map_err(|e| e.to_string())?;
        Ok(QuiverExplorer { quiver, history: Vec::new() })
    }

    pub fn vertices(&self) -> u32 {
        self.quiver.n() as u32
    }

    pub fn mutate(&mut self, k: u32) -> Result<(), String> {
        self.quiver = self.quiver.mutate(k as usize).map_err(|e| e.to_string())?;
        self.history.push(k as usize);
        Ok(())
    }

    /// Mutating twice at the same vertex is the identity, so undo is a mutation.
    pub fn undo(&mut self) -> bool {
        match self.history.pop() {
            Some(k) => {
                self.quiver = self.quiver.mutate(k).expect("vertex came from history");
                true
            }
            None => false,
        }
    }

    /// `[[tail, head, multiplicity], ...]`.
    pub fn arrows_json(&self) -> String {
        serde_json::to_string(&self.quiver.arrow_list()).expect("arrows serialise")
    }

    pub fn classify_json(&self) -> String {
        let report = ClassifyReport::from(&classify(&self.quiver));
        serde_json::to_string(&report).expect("report serialises")
    }

    pub fn history_json(&self) -> String {
        serde_json::to_string(&self.history).expect("history serialises")
    }

    pub fn to_text(&self) -> String {
        self.quiver.to_text()
    }
}
