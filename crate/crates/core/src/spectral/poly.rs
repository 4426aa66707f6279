//! Real polynomials, the quartic `P_α(x)` attached to the spider trees and
//! its signless-Laplacian cubic, and a bracketed largest-root finder.

use serde::Serialize;

use crate::scalar::Scalar;

use super::{Result, SpectralError, Tolerances};

/// Real polynomial with coefficients listed from the leading term down.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PolyCoeffs<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> PolyCoeffs<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        match coeffs.first() {
            Some(&c) if c != T::zero() => Ok(PolyCoeffs { coeffs }),
            _ => Err(SpectralError::DegeneratePolynomial),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn eval(&self, x: T) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> PolyCoeffs<T> {
        let d = self.degree();
        if d == 0 {
            return PolyCoeffs {
                coeffs: vec![T::zero()],
            };
        }
        PolyCoeffs {
            coeffs: self.coeffs[..d]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * T::from_usize_lossy(d - i))
                .collect(),
        }
    }
}

/// Coefficients of the quartic `P_α(x)` whose largest root is `λ_α(S†_{n,τ})`.
pub fn p_alpha_coeffs<T: Scalar>(n: usize, tau: usize, alpha: T) -> PolyCoeffs<T> {
    let a = alpha;
    let n = T::from_usize_lossy(n);
    let t = T::from_usize_lossy(tau);
    let c = |v: f64| T::lit(v);
    let a2 = a * a;
    let a3 = a2 * a;
    let c3 = a * (n - c(2.0) * t - c(6.0));
    let c2 = c(8.0) * a2 * t - c(4.0) * a2 * n + c(4.0) * a * t - c(2.0) * a * n - c(2.0) * t + n
        + c(9.0) * a2
        + c(6.0) * a
        - c(3.0);
    let c1 = a
        * (c(16.0) * a * n - a2 * n - c(8.0) * n - c(28.0) * a * t + c(14.0) * t - c(20.0) * a
            + c(10.0));
    let c0 = c(2.0) * a3 * n - c(17.0) * a2 * n + c(16.0) * a * n - c(4.0) * n
        + c(24.0) * a2 * t
        - c(24.0) * a * t
        + c(6.0) * t
        - c(2.0) * a3
        + c(17.0) * a2
        - c(16.0) * a
        + c(4.0);
    PolyCoeffs {
        coeffs: vec![T::one(), c3, c2, c1, c0],
    }
}

/// `x³ + (n − 2τ − 6)x² + (8τ − 4n + 9)x − n`, whose largest root is the
/// signless Laplacian index of `S†_{n,τ}`.
pub fn signless_cubic_coeffs<T: Scalar>(n: usize, tau: usize) -> PolyCoeffs<T> {
    let n = n as f64;
    let t = tau as f64;
    PolyCoeffs {
        coeffs: vec![
            T::one(),
            T::lit(n - 2.0 * t - 6.0),
            T::lit(8.0 * t - 4.0 * n + 9.0),
            T::lit(-n),
        ],
    }
}

/// Largest real root in `[−bracket_hi, bracket_hi]` with default tolerances.
pub fn largest_real_root<T: Scalar>(p: &PolyCoeffs<T>, bracket_hi: T) -> Result<T> {
    largest_real_root_with(p, bracket_hi, &Tolerances::default())
}

/// Scans downward from `bracket_hi` for the first sign change of `p`, or a
/// critical point where `p` vanishes (a root of even multiplicity), and
/// polishes it with safeguarded Newton steps.
pub fn largest_real_root_with<T: Scalar>(
    p: &PolyCoeffs<T>,
    bracket_hi: T,
    tol: &Tolerances,
) -> Result<T> {
    let hi0 = bracket_hi.abs().max(T::lit(1e-3));
    let lo0 = -hi0;
    let no_change = || SpectralError::NoSignChange {
        lo: lo0.to_f64_lossy(),
        hi: hi0.to_f64_lossy(),
    };
    if p.degree() == 0 {
        return Err(no_change());
    }
    let dp = p.derivative();
    let eps = T::tolerance(tol.root_tol, 8.0);
    let steps = 4096 * p.degree();
    let h = (hi0 - lo0) / T::from_usize_lossy(steps);
    let mut hi = hi0;
    let mut f_hi = p.eval(hi);
    let mut d_hi = dp.eval(hi);
    if f_hi == T::zero() {
        return Ok(hi);
    }
    for k in 1..=steps {
        let x = hi0 - h * T::from_usize_lossy(k);
        let fx = p.eval(x);
        if fx == T::zero() {
            return Ok(x);
        }
        if fx.signum() != f_hi.signum() {
            return Ok(polish(p, &dp, x, hi, f_hi, eps));
        }
        let dx = dp.eval(x);
        if dx.signum() != d_hi.signum() && dp.degree() > 0 {
            let c = polish(&dp, &dp.derivative(), x, hi, d_hi, eps);
            if p.eval(c).abs() <= tangency_tol(p, c) {
                return Ok(c);
            }
        }
        hi = x;
        f_hi = fx;
        d_hi = dx;
    }
    Err(no_change())
}

/// Threshold below which `|p(c)|` at a critical point counts as a root.
fn tangency_tol<T: Scalar>(p: &PolyCoeffs<T>, c: T) -> T {
    let scale = c.abs().max(T::one());
    let size = p
        .coeffs()
        .iter()
        .fold(T::zero(), |acc, &a| acc * scale + a.abs());
    size * T::tolerance(1e-12, 64.0)
}

/// Root of `p` in `[lo, hi]` where `p(hi) = f_hi` has the opposite sign to
/// `p(lo)`.
fn polish<T: Scalar>(p: &PolyCoeffs<T>, dp: &PolyCoeffs<T>, mut lo: T, mut hi: T, f_hi: T, eps: T) -> T {
    let mut x = (lo + hi) / T::lit(2.0);
    for _ in 0..400 {
        let fx = p.eval(x);
        if fx == T::zero() {
            return x;
        }
        if fx.signum() == f_hi.signum() {
            hi = x;
        } else {
            lo = x;
        }
        let d = dp.eval(x);
        let newton = x - fx / d;
        let next = if d != T::zero() && newton > lo && newton < hi {
            newton
        } else {
            (lo + hi) / T::lit(2.0)
        };
        if (next - x).abs() <= eps * x.abs().max(T::one()) || hi - lo <= eps {
            return next;
        }
        x = next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_at_alpha_zero() {
        let p = p_alpha_coeffs(8, 6, 0.0f64);
        assert_eq!(p.coeffs(), &[1.0, 0.0, -7.0, 0.0, 8.0]);
        let r = largest_real_root(&p, 5.0).unwrap();
        let oracle = ((7.0 + 17f64.sqrt()) / 2.0).sqrt();
        assert!((r - oracle).abs() < 1e-12);
        assert!((r - 2.358294).abs() < 1e-6);
    }

    #[test]
    fn cubic_example() {
        let p = signless_cubic_coeffs::<f64>(8, 6);
        assert_eq!(p.coeffs(), &[1.0, -10.0, 25.0, -8.0]);
        let r = largest_real_root(&p, 20.0).unwrap();
        assert!(p.eval(r).abs() < 1e-10);
        assert!((r - 6.141336).abs() < 1e-6);
    }

    #[test]
    fn quartic_at_half_factors_through_cubic() {
        // 16·P_{1/2}(q/2) = q·cubic(q).
        for (n, tau) in [(8, 6), (10, 7), (11, 8), (14, 10)] {
            let quartic = p_alpha_coeffs(n, tau, 0.5f64);
            let cubic = signless_cubic_coeffs::<f64>(n, tau);
            for q in [-1.3, 0.0, 0.7, 2.5, 6.1, 11.0] {
                let lhs = 16.0 * quartic.eval(q / 2.0);
                let rhs = q * cubic.eval(q);
                assert!((lhs - rhs).abs() < 1e-8 * (1.0 + rhs.abs()));
            }
        }
    }

    #[test]
    fn linear_and_errors() {
        let p = PolyCoeffs::new(vec![1.0, -2.5f64]).unwrap();
        assert!((largest_real_root(&p, 4.0).unwrap() - 2.5).abs() < 1e-12);
        let q = PolyCoeffs::new(vec![1.0, 0.0, 1.0f64]).unwrap();
        assert!(matches!(
            largest_real_root(&q, 4.0),
            Err(SpectralError::NoSignChange { .. })
        ));
        assert!(PolyCoeffs::new(vec![0.0f64, 1.0]).is_err());
        assert!(PolyCoeffs::<f64>::new(vec![]).is_err());
    }

    #[test]
    fn double_root_is_found() {
        // (x^2 - 2)^2 touches zero without changing sign.
        let p = p_alpha_coeffs(3, 2, 0.0f64);
        assert_eq!(p.coeffs(), &[1.0, 0.0, -4.0, 0.0, 4.0]);
        let r = largest_real_root(&p, 3.0).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-12);
        let q = PolyCoeffs::new(vec![1.0, -2.0, 1.0, 0.0f64]).unwrap();
        assert!((largest_real_root(&q, 5.0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn derivative_of_cubic() {
        let p = PolyCoeffs::new(vec![2.0, 0.0, -3.0, 1.0f64]).unwrap();
        assert_eq!(p.derivative().coeffs(), &[6.0, 0.0, -3.0]);
    }
}
