//! Truncated Taylor jets in one and two variables.

mod jet1;
mod jet2;
mod vec3;

pub use jet1::Jet1;
pub use jet2::Jet2;
pub use vec3::JetVec3;

/// Taylor coefficients of elementary functions at a point `a`.
pub(crate) mod series {
    pub fn recip(a: f64, n: usize) -> Vec<f64> {
        let mut c = Vec::with_capacity(n + 1);
        let mut t = 1.0 / a;
        for _ in 0..=n {
            c.push(t);
            t *= -1.0 / a;
        }
        c
    }

    /// `(a + x)^p = a^p Σ binom(p, k) (x/a)^k`.
    pub fn power(a: f64, p: f64, n: usize) -> Vec<f64> {
        let mut c = Vec::with_capacity(n + 1);
        let mut t = a.powf(p);
        for k in 0..=n {
            c.push(t);
            t *= (p - k as f64) / ((k + 1) as f64 * a);
        }
        c
    }

    pub fn exp(a: f64, n: usize) -> Vec<f64> {
        let e = a.exp();
        let mut f = 1.0;
        (0..=n)
            .map(|k| {
                if k > 0 {
                    f *= k as f64;
                }
                e / f
            })
            .collect()
    }

    fn cyclic(d: [f64; 4], start: usize, n: usize) -> Vec<f64> {
        let mut f = 1.0;
        (0..=n)
            .map(|k| {
                if k > 0 {
                    f *= k as f64;
                }
                d[(start + k) % 4] / f
            })
            .collect()
    }

    pub fn sin(a: f64, n: usize) -> Vec<f64> {
        let (s, c) = a.sin_cos();
        cyclic([s, c, -s, -c], 0, n)
    }

    pub fn cos(a: f64, n: usize) -> Vec<f64> {
        let (s, c) = a.sin_cos();
        cyclic([s, c, -s, -c], 1, n)
    }
}
