use serde::Serialize;

use crate::dsl::DEFAULT_ORDER;

pub const ORDER_ENV: &str = "FRONT_ATLAS_ORDER";

/// Numerical policy. Every "≠ 0" decision is relative to a local scale.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Relative zero test for classification witnesses.
    pub classify: f64,
    /// `divide_out_v`: constant-in-v part allowed, relative to max |coeff|.
    pub divide: f64,
    /// Ridge test on `Vᵐκ`.
    pub ridge: f64,
    /// Curve tracing residual.
    pub trace: f64,
    /// Smallest singular value of d(f, ν) for frontness.
    pub front: f64,
    /// Λ − κκ̂ consistency.
    pub identifier: f64,
    /// Raw versus closed-form Δ_φ.
    pub closed_form: f64,
    /// Offset for the numeric branch check, relative to the domain scale.
    pub branch_offset: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            classify: 1e-8,
            divide: 1e-12,
            ridge: 1e-8,
            trace: 1e-10,
            front: 1e-9,
            identifier: 1e-7,
            closed_form: 1e-7,
            branch_offset: 1e-3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Config {
    pub order: usize,
    pub max_ridge: usize,
    pub max_contact: usize,
    pub seed: u64,
    pub tol: Tolerances,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order: DEFAULT_ORDER,
            max_ridge: 3,
            max_contact: 3,
            seed: 0,
            tol: Tolerances::default(),
        }
    }
}

impl Config {
    /// Defaults, with the jet order taken from the environment when set.
    pub fn from_env() -> Self {
        let mut c = Config::default();
        if let Some(n) = std::env::var(ORDER_ENV).ok().and_then(|s| s.parse().ok()) {
            c.order = n;
        }
        c
    }
}
