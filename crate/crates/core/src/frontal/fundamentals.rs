use serde::Serialize;

use super::frame::{Chart, FrameData};
use crate::error::{Error, Result};
use crate::jet::Jet2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FundVariant {
    /// Ẽ..Ñ in the frame `{f_u, h}`.
    FirstKind,
    /// Ê..N̂ in the frame `{h, f_v}`.
    SecondKind,
    /// Classical E..N at a regular point.
    Regular,
}

/// Six fundamental jets in the frame of the chart.
#[derive(Clone, Debug)]
pub struct Fundamentals {
    pub variant: FundVariant,
    pub e: Jet2,
    pub f: Jet2,
    pub g: Jet2,
    pub l: Jet2,
    pub m: Jet2,
    pub n: Jet2,
}

impl Fundamentals {
    /// `EG − F²`.
    pub fn det(&self) -> Jet2 {
        &(&self.e * &self.g) - &(&self.f * &self.f)
    }

    pub fn values(&self) -> [f64; 6] {
        [
            self.e.value(),
            self.f.value(),
            self.g.value(),
            self.l.value(),
            self.m.value(),
            self.n.value(),
        ]
    }
}

pub fn fundamentals(fr: &FrameData) -> Result<Fundamentals> {
    let (e1, e2) = (fr.e1(), fr.e2());
    let nu_u = fr.nu.d_u();
    let nu_v = fr.nu.d_v();
    let (variant, l, m, n) = match fr.chart {
        Chart::FirstKind => (
            FundVariant::FirstKind,
            -e1.dot(&nu_u),
            -e2.dot(&nu_u),
            -e2.dot(&nu_v),
        ),
        Chart::SecondKind => (
            FundVariant::SecondKind,
            -e1.dot(&nu_u),
            -e1.dot(&nu_v),
            -e2.dot(&nu_v),
        ),
        Chart::Plain => (
            FundVariant::Regular,
            -e1.dot(&nu_u),
            -e1.dot(&nu_v),
            -e2.dot(&nu_v),
        ),
    };
    let fund = Fundamentals {
        variant,
        e: e1.norm_sq(),
        f: e1.dot(e2),
        g: e2.norm_sq(),
        l,
        m,
        n,
    };
    let d = fund.det().value();
    if !(d > 1e-14 * fund.e.value() * fund.g.value()) {
        return Err(Error::DegenerateFrame(format!("EG − F² = {d:e} at the base point")));
    }
    Ok(fund)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Tolerances;
    use crate::dsl::parse_surface;
    use crate::frontal::build_frame;

    fn fund_at(src: &str) -> [f64; 6] {
        let d = parse_surface(src).unwrap();
        let fr = build_frame(&d, [0.0, 0.0], 6, &Tolerances::default()).unwrap();
        fundamentals(&fr).unwrap().values()
    }

    fn close(a: [f64; 6], b: [f64; 6]) -> bool {
        a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn model_values() {
        assert!(close(fund_at("f = (u, v^2, v^3)"), [1.0, 0.0, 4.0, 0.0, 0.0, 3.0]));
        assert!(close(
            fund_at("f = (u, u^2/2 + v^2/2, v^3/3 + u^4)"),
            [1.0, 0.0, 1.0, 0.0, 0.0, 1.0]
        ));
        assert!(close(fund_at("f = (u, v^2/2, 0)"), [1.0, 0.0, 1.0, 0.0, 0.0, 0.0]));
        assert!(close(
            fund_at("kind = second\nf = (v - 6*u^2, u^2*v - 3*u^4, 2*u*v - 8*u^3)"),
            [4.0, 0.0, 1.0, 2.0, 0.0, 0.0]
        ));
    }
}
