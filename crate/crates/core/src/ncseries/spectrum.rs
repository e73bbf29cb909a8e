//! Numerical evaluation of the inverse map on momentum eigenvalues. This is
//! the only floating-point code in the crate.

use serde::Serialize;

use super::NcError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumClass {
    /// `1 + ωΠ₊ > 0`
    Regular,
    /// `1 + ωΠ₊ = 0` exactly
    Singular,
    /// `1 + ωΠ₊ < 0`: `P₊` picks up `iπ/ω`
    Complex,
}

impl SpectrumClass {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Regular => "regular",
            Self::Singular => "singular",
            Self::Complex => "complex",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumPoint {
    pub input_pi_plus: f64,
    pub class: SpectrumClass,
    /// `None` at the singular point.
    pub re_p_plus: Option<f64>,
    pub im_p_plus: Option<f64>,
    pub p_minus: Option<f64>,
    pub p_zero: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumScan {
    pub omega: f64,
    pub pi_minus: f64,
    pub pi_zero: f64,
    pub points: Vec<SpectrumPoint>,
    /// Grid point with the smallest `|1 + ωΠ₊|`, reported when no point hits
    /// the singularity exactly.
    pub nearest_approach: Option<NearestApproach>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NearestApproach {
    pub input_pi_plus: f64,
    pub distance: f64,
}

/// Evaluates `P₊ = ln(1+ωΠ₊)/ω`, `P₋ = Π₋ + (ω/4)Π₀²/(1+ωΠ₊)`,
/// `P₀ = Π₀/(1+ωΠ₊)` at each grid value of `Π₊`.
pub fn momentum_spectrum(omega: f64, grid: &[f64], pi_minus: f64, pi_zero: f64) -> Result<SpectrumScan, NcError> {
    if omega == 0.0 {
        return Err(NcError::ZeroOmega);
    }
    let points: Vec<SpectrumPoint> = grid
        .iter()
        .map(|&pi| {
            let x = 1.0 + omega * pi;
            if x == 0.0 {
                return SpectrumPoint {
                    input_pi_plus: pi,
                    class: SpectrumClass::Singular,
                    re_p_plus: None,
                    im_p_plus: None,
                    p_minus: None,
                    p_zero: None,
                };
            }
            let (class, im) = if x > 0.0 {
                (SpectrumClass::Regular, 0.0)
            } else {
                (SpectrumClass::Complex, std::f64::consts::PI / omega)
            };
            SpectrumPoint {
                input_pi_plus: pi,
                class,
                re_p_plus: Some(x.abs().ln() / omega),
                im_p_plus: Some(im),
                p_minus: Some(pi_minus + omega / 4.0 * pi_zero * pi_zero / x),
                p_zero: Some(pi_zero / x),
            }
        })
        .collect();
    let hit = points.iter().any(|p| p.class == SpectrumClass::Singular);
    let nearest_approach = if hit {
        None
    } else {
        grid.iter()
            .map(|&pi| NearestApproach {
                input_pi_plus: pi,
                distance: (1.0 + omega * pi).abs(),
            })
            .min_by(|a, b| a.distance.total_cmp(&b.distance))
    };
    Ok(SpectrumScan {
        omega,
        pi_minus,
        pi_zero,
        points,
        nearest_approach,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("grid must look like a:b:step with step > 0 and a <= b, got {0:?}")]
pub struct GridError(pub String);

/// Parses `a:b:step` into `a, a+step, …` up to `b` (inclusive, with a
/// half-step tolerance against rounding). Points are computed as
/// `a + i·step`, so exactly representable grids stay exact.
pub fn parse_grid(text: &str) -> Result<Vec<f64>, GridError> {
    let err = || GridError(text.to_string());
    let parts: Vec<f64> = text
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| err()))
        .collect::<Result<_, _>>()?;
    let [a, b, step] = parts[..] else { return Err(err()) };
    if step.is_nan() || step <= 0.0 || !a.is_finite() || !b.is_finite() || a > b {
        return Err(err());
    }
    let count = ((b - a) / step + 0.5).floor() as usize;
    Ok((0..=count).map(|i| a + i as f64 * step).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        let s = momentum_spectrum(1.0, &[-2.0, -1.0, 0.0], 1.0, 1.0).unwrap();
        let classes: Vec<_> = s.points.iter().map(|p| p.class).collect();
        assert_eq!(classes, [SpectrumClass::Complex, SpectrumClass::Singular, SpectrumClass::Regular]);
        let z = &s.points[2];
        assert_eq!(z.re_p_plus, Some(0.0));
        assert_eq!(z.p_minus, Some(1.25));
        assert_eq!(z.p_zero, Some(1.0));
        assert_eq!(s.points[0].im_p_plus, Some(std::f64::consts::PI));
        assert!(s.nearest_approach.is_none());
    }

    #[test]
    fn zero_omega() {
        assert_eq!(momentum_spectrum(0.0, &[1.0], 1.0, 1.0), Err(NcError::ZeroOmega));
    }

    #[test]
    fn nearest_approach_without_exact_hit() {
        let s = momentum_spectrum(1.0, &[-1.1, -0.95, 0.0], 1.0, 1.0).unwrap();
        let n = s.nearest_approach.unwrap();
        assert_eq!(n.input_pi_plus, -0.95);
    }

    #[test]
    fn grids() {
        let g = parse_grid("-3:3:0.5").unwrap();
        assert_eq!(g.len(), 13);
        assert_eq!(g[4], -1.0);
        assert_eq!(*g.last().unwrap(), 3.0);
        for bad in ["1:0:1", "0:1:0", "0:1", "a:b:c"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }
}
