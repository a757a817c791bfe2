//! The fixed Meijer-G family needed by the asymptotic air-to-ground
//! error bound, evaluated by Mellin-Barnes contour integration.
//!
//! For integer severities m_g, m_h >= 1 the required value is
//! G^{2,2}_{2,2}(1 | 1-m_h, 1-m_g ; m_h-1, m_g-1). On the vertical line
//! Re s = 1/2 every Gamma argument has positive real part and the
//! integrand collapses to |Gamma(m_h - 1/2 + it)|^2 |Gamma(m_g - 1/2 +
//! it)|^2, which is positive, even in t, and decays like
//! t^(2 m_g + 2 m_h - 4) e^(-2 pi t). No general Meijer-G machinery is
//! needed.

use crate::error::{Error, Result};
use crate::specfun::gamma::{ln_gamma, ln_gamma_complex_re};
use crate::specfun::gauss::integrate_adaptive;

/// G^{2,2}_{2,2}(1 | 1-m_h, 1-m_g ; m_h-1, m_g-1) for integer m_g, m_h >= 1.
pub fn meijer_g_factor(m_g: u32, m_h: u32) -> Result<f64> {
    if m_g < 1 || m_h < 1 {
        return Err(Error::domain(
            "meijer_g_factor requires positive integer severities",
        ));
    }
    let xg = m_g as f64 - 0.5;
    let xh = m_h as f64 - 0.5;
    // peak (t = 0) magnitude, used to normalize the truncation
    let ln_peak = 2.0 * ln_gamma(xg) + 2.0 * ln_gamma(xh);
    let integrand = |t: f64| -> f64 {
        let e = 2.0 * ln_gamma_complex_re(xh, t) + 2.0 * ln_gamma_complex_re(xg, t) - ln_peak;
        if e < -720.0 {
            0.0
        } else {
            e.exp()
        }
    };
    // e^(-2 pi T) poly(T) < 1e-18 comfortably within this horizon
    let t_max = 9.0 + 0.8 * (m_g + m_h) as f64;
    let edges = [0.0, 0.5, 1.0, 2.0, 4.0, t_max];
    let val = integrate_adaptive(integrand, &edges, 1e-13, 0.0)?;
    Ok(val * (ln_peak.exp() / std::f64::consts::PI))
}

/// zeta = m_g m_h / (Gamma(m_g)^2 Gamma(m_h)^2) * G^{2,2}_{2,2}(...).
pub fn meijer_g_zeta(m_g: u32, m_h: u32) -> Result<f64> {
    let g = meijer_g_factor(m_g, m_h)?;
    let ln_norm = -2.0 * ln_gamma(m_g as f64) - 2.0 * ln_gamma(m_h as f64);
    Ok((m_g * m_h) as f64 * ln_norm.exp() * g)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent closed form from Barnes' first lemma:
    /// G = Gamma(2 m_h - 1) Gamma(m_g + m_h - 1)^2 Gamma(2 m_g - 1)
    ///     / Gamma(2 m_g + 2 m_h - 2).
    fn barnes_reference(m_g: u32, m_h: u32) -> f64 {
        let (mg, mh) = (m_g as f64, m_h as f64);
        (ln_gamma(2.0 * mh - 1.0) + 2.0 * ln_gamma(mg + mh - 1.0) + ln_gamma(2.0 * mg - 1.0)
            - ln_gamma(2.0 * mg + 2.0 * mh - 2.0))
            .exp()
    }

    #[test]
    fn hand_derived_anchor_values() {
        // contour integral of pi^2 sech^2(pi t)/pi = 1
        assert!((meijer_g_factor(1, 1).unwrap() - 1.0).abs() < 1e-9);
        // s(1-s) pi^2/sin^2(pi s) integrates to 1/3
        assert!((meijer_g_factor(1, 2).unwrap() - 1.0 / 3.0).abs() < 1e-9);
        assert!((meijer_g_zeta(1, 1).unwrap() - 1.0).abs() < 1e-8);
        assert!((meijer_g_zeta(1, 2).unwrap() - 2.0 / 3.0).abs() < 1e-8);
    }

    #[test]
    fn symmetric_under_severity_swap() {
        for (a, b) in [(1, 2), (1, 6), (2, 6), (4, 2), (3, 5)] {
            let x = meijer_g_zeta(a, b).unwrap();
            let y = meijer_g_zeta(b, a).unwrap();
            assert!((x - y).abs() < 1e-13, "zeta({a},{b}) {x} vs {y}");
        }
    }

    #[test]
    fn agrees_with_barnes_lemma() {
        for mg in 1..=6u32 {
            for mh in 1..=6u32 {
                let got = meijer_g_factor(mg, mh).unwrap();
                let want = barnes_reference(mg, mh);
                assert!(
                    ((got - want) / want).abs() < 1e-9,
                    "G({mg},{mh}) = {got}, want {want}"
                );
            }
        }
    }

    #[test]
    fn known_rational_zetas() {
        // exact values implied by the Barnes closed form
        assert!((meijer_g_zeta(2, 2).unwrap() - 8.0 / 15.0).abs() < 1e-9);
        assert!((meijer_g_zeta(1, 6).unwrap() - 6.0 / 11.0).abs() < 1e-9);
        assert!((meijer_g_zeta(4, 2).unwrap() - 32.0 / 63.0).abs() < 1e-9);
        assert!((meijer_g_zeta(6, 6).unwrap() - 0.5892312022342982095).abs() < 1e-9);
    }

    #[test]
    fn rejects_zero_severity() {
        assert!(meijer_g_factor(0, 1).is_err());
    }
}
