//! Gauss-Legendre rules and a global-adaptive panel integrator.

use crate::error::{Error, Result};
use crate::real::Real;

/// Gauss-Legendre quadrature rule on (-1, 1).
///
/// Nodes are strictly increasing and symmetric about zero; weights sum
/// to 2.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
}

impl QuadratureRule {
    /// Integrate `f` over `[a, b]` with this rule.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let c = 0.5 * (b - a);
        let m = 0.5 * (a + b);
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(m + c * x);
        }
        c * acc
    }
}

/// Gauss-Legendre nodes and weights of the given order, any scalar.
///
/// Newton iteration on the Legendre recurrence from the Chebyshev-like
/// initial guess; nodes are exactly antisymmetric by construction.
pub fn gauss_legendre_r<R: Real>(order: usize) -> (Vec<R>, Vec<R>) {
    assert!(order >= 1, "quadrature order must be >= 1");
    let n = order;
    let mut nodes = vec![R::zero(); n];
    let mut weights = vec![R::zero(); n];
    let half = (n + 1) / 2;
    for i in 0..half {
        // initial guess in f64
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = R::of(guess);
        let mut dp = R::one();
        for _ in 0..60 {
            // Legendre P_n(x) and P_n'(x) by recurrence
            let mut p0 = R::one();
            let mut p1 = x;
            for k in 2..=n {
                let kf = R::of_usize(k);
                let p2 = ((R::of(2.0) * kf - R::one()) * x * p1 - (kf - R::one()) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
            dp = R::of_usize(n) * (x * p1 - p0) / (x * x - R::one());
            let dx = p1 / dp;
            x = x - dx;
            if dx.abs() <= x.abs() * R::epsilon() * R::of(4.0) {
                break;
            }
        }
        let w = R::of(2.0) / ((R::one() - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = R::zero();
    }
    (nodes, weights)
}

/// Gauss-Legendre rule of the given order (f64).
pub fn gauss_legendre(order: usize) -> QuadratureRule {
    assert!(order >= 2, "gauss_legendre requires order >= 2");
    let (nodes, weights) = gauss_legendre_r::<f64>(order);
    QuadratureRule {
        nodes,
        weights,
        order,
    }
}

struct Panel<R> {
    a: R,
    b: R,
    value: R,
    err: R,
}

fn eval_panel<R: Real, F: Fn(R) -> R>(
    f: &F,
    a: R,
    b: R,
    lo: &(Vec<R>, Vec<R>),
    hi: &(Vec<R>, Vec<R>),
) -> Panel<R> {
    let c = (b - a) * R::of(0.5);
    let m = (a + b) * R::of(0.5);
    let mut v_lo = R::zero();
    for (&x, &w) in lo.0.iter().zip(&lo.1) {
        v_lo = v_lo + w * f(m + c * x);
    }
    let mut v_hi = R::zero();
    for (&x, &w) in hi.0.iter().zip(&hi.1) {
        v_hi = v_hi + w * f(m + c * x);
    }
    Panel {
        a,
        b,
        value: c * v_hi,
        err: (c * (v_hi - v_lo)).abs(),
    }
}

/// Global-adaptive Gauss-Legendre integration over a finite interval.
///
/// Panel error is estimated by comparing two rule orders; the panel with
/// the largest error is bisected until the summed error estimate is below
/// `rel_tol * |integral| + abs_floor`.
pub fn integrate_adaptive<R: Real, F: Fn(R) -> R>(
    f: F,
    breakpoints: &[R],
    rel_tol: R,
    abs_floor: R,
) -> Result<R> {
    assert!(breakpoints.len() >= 2);
    let lo = gauss_legendre_r::<R>(15);
    let hi = gauss_legendre_r::<R>(31);
    let mut panels: Vec<Panel<R>> = Vec::new();
    for w in breakpoints.windows(2) {
        if w[1] > w[0] {
            panels.push(eval_panel(&f, w[0], w[1], &lo, &hi));
        }
    }
    if panels.is_empty() {
        return Ok(R::zero());
    }
    for _ in 0..4000 {
        let mut total = R::zero();
        let mut err = R::zero();
        for p in &panels {
            total = total + p.value;
            err = err + p.err;
        }
        if err <= rel_tol * total.abs() + abs_floor {
            return Ok(total);
        }
        // split the worst panel
        let mut worst = 0;
        for (i, p) in panels.iter().enumerate() {
            if p.err > panels[worst].err {
                worst = i;
            }
        }
        let Panel { a, b, .. } = panels[worst];
        let m = (a + b) * R::of(0.5);
        if m <= a || m >= b {
            // interval no longer splittable at this precision
            panels[worst].err = R::zero();
            continue;
        }
        panels[worst] = eval_panel(&f, a, m, &lo, &hi);
        panels.push(eval_panel(&f, m, b, &lo, &hi));
    }
    Err(Error::convergence(
        "adaptive quadrature failed to reach tolerance",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::{DoubleDouble as Dd, Real as _};
    use num_traits::Float;

    #[test]
    fn two_point_rule_is_textbook() {
        let r = gauss_legendre(2);
        let s = 1.0 / 3f64.sqrt();
        assert!((r.nodes[0] + s).abs() < 1e-15);
        assert!((r.nodes[1] - s).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-15);
        assert!((r.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn order3_exact_for_degree5() {
        let r = gauss_legendre(3);
        let v = r.integrate(-1.0, 1.0, |x| x.powi(4));
        assert!((v - 0.4).abs() < 1e-12, "{v}");
    }

    #[test]
    fn weights_and_symmetry_invariants() {
        for order in [2, 5, 20, 64] {
            let r = gauss_legendre(order);
            let sum: f64 = r.weights.iter().sum();
            assert!((sum - 2.0).abs() < 1e-12, "order {order}: {sum}");
            for i in 0..order {
                assert!((r.nodes[i] + r.nodes[order - 1 - i]).abs() < 1e-12);
                if i > 0 {
                    assert!(r.nodes[i] > r.nodes[i - 1]);
                }
            }
        }
    }

    #[test]
    fn mapped_sin_squared() {
        let r = gauss_legendre(20);
        let v = r.integrate(0.0, std::f64::consts::FRAC_PI_2, |x| x.sin().powi(2));
        assert!((v - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn adaptive_matches_analytic() {
        let v = integrate_adaptive(|x: f64| (-x).exp(), &[0.0, 5.0, 40.0], 1e-13, 0.0).unwrap();
        assert!((v - 1.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn adaptive_dd_precision() {
        // integral of exp(-x^2) on [0,8] = sqrt(pi)/2 to ~1e-29
        let v = integrate_adaptive(
            |x: Dd| (-(x * x)).exp(),
            &[Dd::from_f64(0.0), Dd::from_f64(2.0), Dd::from_f64(8.0)],
            Dd::from_f64(1e-28),
            Dd::from_f64(0.0),
        )
        .unwrap();
        let reference = <Dd as crate::real::Real>::sqrt_pi() * Dd::from_f64(0.5);
        assert!(((v - reference) / reference).as_f64().abs() < 1e-27);
    }

    #[test]
    fn dd_rule_nodes_have_extended_precision() {
        let (n64, _) = gauss_legendre_r::<f64>(12);
        let (ndd, wdd) = gauss_legendre_r::<Dd>(12);
        for (a, b) in n64.iter().zip(&ndd) {
            assert!((a - b.as_f64()).abs() < 1e-14);
        }
        let sum = wdd.iter().fold(Dd::from_f64(0.0), |acc, w| acc + *w);
        assert!((sum - Dd::from_f64(2.0)).as_f64().abs() < 1e-30);
    }
}
