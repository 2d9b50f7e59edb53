//! WebAssembly bindings for the static page in `www/`.

pub mod model;

use wasm_bindgen::prelude::*;

fn js_err(e: cpbounds::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub fn bound_row(d: usize) -> Result<Vec<f64>, JsError> {
    model::bound_row(d).map_err(js_err)
}

#[wasm_bindgen]
pub fn weighted_bound(d: usize, a: f64, b: f64, gamma: f64) -> Option<f64> {
    model::weighted_bound(d, a, b, gamma)
}

#[wasm_bindgen]
pub fn l_value(a: f64, b: f64, gamma: f64) -> f64 {
    cpbounds::bounds::l_value(a, b, gamma).unwrap_or(f64::NAN)
}

#[wasm_bindgen]
pub fn null_vector_summary(d: usize, lambda: f64, a: f64, b: f64, radius: usize) -> Result<Vec<f64>, JsError> {
    model::null_vector_summary(d, lambda, a, b, radius).map_err(js_err)
}

#[wasm_bindgen]
pub fn origin_curve(
    d: usize,
    lambda: f64,
    a: f64,
    b: f64,
    radius: usize,
    t_max: f64,
    samples: usize,
) -> Result<Vec<f64>, JsError> {
    model::origin_curve(d, lambda, a, b, radius, t_max, samples).map_err(js_err)
}

#[wasm_bindgen]
pub struct PlanarDemo {
    inner: model::Planar,
}

#[wasm_bindgen]
impl PlanarDemo {
    #[wasm_bindgen(constructor)]
    pub fn new(side: usize, lambda: f64, a: f64, b: f64, seed: u32) -> Result<PlanarDemo, JsError> {
        model::Planar::new(side, lambda, a, b, seed as u64)
            .map(|inner| PlanarDemo { inner })
            .map_err(js_err)
    }

    pub fn advance(&mut self, dt: f64) -> Result<(), JsError> {
        self.inner.advance(dt).map_err(js_err)
    }

    pub fn time(&self) -> f64 {
        self.inner.time()
    }

    pub fn occupied(&self) -> Vec<u8> {
        self.inner.occupied()
    }

    pub fn log_xi(&self) -> Vec<f32> {
        self.inner.log_xi()
    }

    pub fn density(&self) -> f64 {
        self.inner.density()
    }

    pub fn mean_xi(&self) -> f64 {
        self.inner.mean_xi()
    }

    pub fn coupling_holds(&self) -> bool {
        self.inner.coupling_holds()
    }
}
