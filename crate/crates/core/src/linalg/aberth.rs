//! Aberth–Ehrlich simultaneous root iteration for float-mode eigenvalue
//! computation. Deterministic start configuration, residual-checked exit.

use crate::scalar::C64;
use num_complex::Complex;

pub struct AberthResult {
    pub roots: Vec<C64>,
    pub iterations: usize,
    /// max |p(root)| / coefficient scale
    pub residual: f64,
}

fn eval(coeffs: &[f64], z: C64) -> (C64, C64) {
    // returns (p(z), p'(z))
    let mut p = Complex::new(0.0, 0.0);
    let mut dp = Complex::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Finds all complex roots of the polynomial with the given ascending real
/// coefficients. Returns an error message with the residual when the
/// iteration fails to converge.
pub fn aberth_roots(coeffs: &[f64]) -> Result<AberthResult, String> {
    let mut c = coeffs.to_vec();
    while c.last() == Some(&0.0) {
        c.pop();
    }
    if c.len() <= 1 {
        return Ok(AberthResult {
            roots: vec![],
            iterations: 0,
            residual: 0.0,
        });
    }
    let n = c.len() - 1;
    let lead = *c.last().unwrap();
    let scale = c.iter().map(|x| x.abs()).fold(0.0, f64::max);
    let bound = 1.0 + c[..n].iter().map(|x| (x / lead).abs()).fold(0.0, f64::max);
    // deterministic starting points on a circle, slight spiral to break ties
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            let r = bound * (0.5 + 0.3 * (k as f64 + 1.0) / n as f64);
            Complex::from_polar(r, theta)
        })
        .collect();
    let max_iter = 400;
    let tol = 1e-13 * scale.max(1.0);
    for iter in 0..max_iter {
        let mut shift_max = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(&c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                Complex::new(1e-8, 1e-8)
            } else {
                p / dp
            };
            let mut s = Complex::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 1e-300 {
                        s += Complex::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = Complex::new(1.0, 0.0) - newton * s;
            let w = if denom.norm() < 1e-300 { newton } else { newton / denom };
            z[i] -= w;
            shift_max = shift_max.max(w.norm());
        }
        if shift_max < 1e-14 * bound.max(1.0) {
            let residual = z
                .iter()
                .map(|&zi| eval(&c, zi).0.norm())
                .fold(0.0, f64::max)
                / scale.max(1.0);
            if residual < 1e-8 {
                let mut roots = z;
                roots.sort_by(|a, b| {
                    (a.re, a.im)
                        .partial_cmp(&(b.re, b.im))
                        .unwrap_or(std::cmp::Ordering::Equal)
                });
                return Ok(AberthResult {
                    roots,
                    iterations: iter + 1,
                    residual,
                });
            }
        }
    }
    let residual = z.iter().map(|&zi| eval(&c, zi).0.norm()).fold(0.0, f64::max) / scale.max(1.0);
    Err(format!(
        "root iteration did not converge after {max_iter} iterations (residual {residual:.3e})"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_pair() {
        // s^2 + 4 → ±2i
        let r = aberth_roots(&[4.0, 0.0, 1.0]).unwrap();
        let mut ims: Vec<f64> = r.roots.iter().map(|z| z.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((ims[0] + 2.0).abs() < 1e-9 && (ims[1] - 2.0).abs() < 1e-9);
        assert!(r.roots.iter().all(|z| z.re.abs() < 1e-9));
    }

    #[test]
    fn real_cluster() {
        // (x-1)(x-2)(x-3)
        let r = aberth_roots(&[-6.0, 11.0, -6.0, 1.0]).unwrap();
        let mut res: Vec<f64> = r.roots.iter().map(|z| z.re).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in res.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-8);
        }
    }
}
