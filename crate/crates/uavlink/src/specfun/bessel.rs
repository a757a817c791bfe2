//! Modified Bessel function of the second kind.
//!
//! Two implementations that cross-check each other in the tests:
//! - [`bessel_k`]: real order on `f64` (Temme's series below the
//!   crossover, Steed/Thompson-Barnett continued fraction above, upward
//!   recurrence in the order);
//! - [`bessel_k_int_seq`]: integer orders `0..=n_max` on any [`Real`],
//!   used by the closed-form CDF evaluation which also runs at extended
//!   precision.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::gamma::temme_gammas;


const TEMME_XMIN: f64 = 2.0;

/// K_nu(x) and K_{nu+1}(x) for |mu| <= 1/2 via Temme's series (x <= 2).
fn temme_k_pair(mu: f64, x: f64) -> (f64, f64) {
    debug_assert!(x <= TEMME_XMIN && mu.abs() <= 0.5);
    let eps = f64::EPSILON;
    let x1 = 0.5 * x;
    let pimu = std::f64::consts::PI * mu;
    let fact = if pimu.abs() < 1e-30 {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let d = -x1.ln();
    let e = mu * d;
    let fact2 = if e.abs() < 1e-30 { 1.0 } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    let e_exp = e.exp();
    let mut p = 0.5 * e_exp / gampl;
    let mut q = 0.5 / (e_exp * gammi);
    let mut c = 1.0;
    let d2 = x1 * x1;
    let mut sum1 = p;
    for i in 1..=1000 {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu * mu);
        c *= d2 / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        let del1 = c * (p - fi * ff);
        sum1 += del1;
        if del.abs() < sum.abs() * eps {
            break;
        }
    }
    (sum, sum1 * (2.0 / x))
}

/// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2 via the CF2 continued
/// fraction (x > 2).
fn cf2_k_pair(mu: f64, x: f64) -> Result<(f64, f64)> {
    debug_assert!(x >= TEMME_XMIN && mu.abs() <= 0.5);
    let eps = f64::EPSILON;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = delh;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu * mu;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    let mut converged = false;
    for i in 2..=10000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < eps {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::convergence("bessel_k continued fraction"));
    }
    let h = a1 * h;
    let k_mu = (std::f64::consts::FRAC_PI_2 / x).sqrt() * (-x).exp() / s;
    let k_mu1 = k_mu * (mu + x + 0.5 - h) / x;
    Ok((k_mu, k_mu1))
}

/// Modified Bessel function of the second kind, real order, f64.
///
/// `K_{-nu} = K_nu`; the result saturates to `+inf` when the true value
/// exceeds the f64 range (small `x` with large order).
pub fn bessel_k(order: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "bessel_k requires x > 0, got {x}"
        )));
    }
    if !order.is_finite() {
        return Err(Error::domain("bessel_k order must be finite"));
    }
    let nu = order.abs();
    let n = (nu + 0.5).floor();
    let mu = nu - n;
    let (mut k0, mut k1) = if x < TEMME_XMIN {
        temme_k_pair(mu, x)
    } else {
        cf2_k_pair(mu, x)?
    };
    let mut m = mu;
    for _ in 0..(n as u64) {
        let k2 = k0 + (2.0 * (m + 1.0) / x) * k1;
        k0 = k1;
        k1 = k2;
        m += 1.0;
        if !k0.is_finite() {
            return Ok(f64::INFINITY);
        }
    }
    Ok(k0)
}

/// K_0(x) and K_1(x) on any scalar.
///
/// Ascending series with harmonic-number coefficients for x <= 6,
/// continued fraction above. Both run at the scalar's native precision,
/// so the double-double instantiation is accurate to ~1e-29 relative
/// (the series loses a few digits to the log-term cancellation near the
/// crossover).
pub fn bessel_k01<R: Real>(x: R) -> Result<(R, R)> {
    if !(x > R::zero()) {
        return Err(Error::domain("bessel_k01 requires x > 0"));
    }
    let one = R::one();
    let half = R::of(0.5);
    if x <= R::of(6.0) {
        let x1 = x * half;
        let x2 = x1 * x1;
        let minus_log_term = -(x1.ln() + R::euler_gamma());
        // I0, I1 and the psi-weighted sums, all in one pass
        let mut tk = one; // (x^2/4)^k / (k!)^2
        let mut hk = R::zero(); // harmonic number H_k
        let mut k0 = minus_log_term; // k = 0 contributions
        let mut uk = half; // (x/2)^{2k}/(k!(k+1)!) scaled below
        let mut k1_sum = (minus_log_term + half) * half; // k = 0 of the K1 series
        let mut k = 1.0f64;
        loop {
            let kf = R::of(k);
            tk = tk * x2 / (kf * kf);
            hk = hk + one / kf;
            let add0 = tk * (minus_log_term + hk);
            k0 = k0 + add0;
            // K1 series term: coefficient (H_k + H_{k+1})/2 with the
            // log factored the same way as for K0
            uk = uk * x2 / (kf * (kf + one));
            let hk1 = hk + one / (kf + one);
            let add1 = uk * (minus_log_term + (hk + hk1) * half);
            k1_sum = k1_sum + add1;
            if add0.abs() <= k0.abs() * R::epsilon()
                && add1.abs() <= k1_sum.abs() * R::epsilon()
                && k > 3.0
            {
                break;
            }
            k += 1.0;
            if k > 400.0 {
                return Err(Error::convergence("bessel_k01 series"));
            }
        }
        // K1 = 1/x + (x/2) * [series with sign conventions folded in]
        let k1 = one / x - x * k1_sum;
        Ok((k0, k1))
    } else {
        // CF2, same scheme as the f64 path but at R's precision
        let eps = R::epsilon();
        let mut b = R::of(2.0) * (one + x);
        let mut d = one / b;
        let mut delh = d;
        let mut h = delh;
        let mut q1 = R::zero();
        let mut q2 = one;
        let a1 = R::of(0.25);
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = one + q * delh;
        let mut converged = false;
        for i in 2..=100000u64 {
            let fi = R::of(i as f64);
            a = a - R::of(2.0) * (fi - one);
            c = -a * c / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q = q + c * qnew;
            b = b + R::of(2.0);
            d = one / (b + a * d);
            delh = (b * d - one) * delh;
            h = h + delh;
            let dels = q * delh;
            s = s + dels;
            if (dels / s).abs() < eps {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::convergence("bessel_k01 continued fraction"));
        }
        let h = a1 * h;
        let k0 = (R::half_pi() / x).sqrt() * (-x).exp() / s;
        let k1 = k0 * (x + half - h) / x;
        Ok((k0, k1))
    }
}

/// K_n(x) for all integer orders n = 0..=n_max, upward recurrence.
///
/// Entries saturate to `+inf` once the recurrence overflows.
pub fn bessel_k_int_seq<R: Real>(n_max: usize, x: R) -> Result<Vec<R>> {
    let (k0, k1) = bessel_k01(x)?;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(k0);
    if n_max >= 1 {
        out.push(k1);
    }
    for n in 1..n_max {
        let prev = out[n - 1];
        let cur = out[n];
        let next = prev + R::of(2.0 * n as f64) / x * cur;
        out.push(if next.is_finite() { next } else { R::infinity() });
    }
    Ok(out)
}
