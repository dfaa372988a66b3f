//! Real spherical harmonics, used to synthesize smooth band-limited scalar
//! fields on the sphere (displacement "wrinkles" for synthetic scenes and
//! training data).

use crate::Vec3;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Associated Legendre P_l^m(x) with Condon-Shortley phase, standard
/// three-term recurrence.
fn legendre(l: usize, m: usize, x: f64) -> f64 {
    let mut pmm = 1.0;
    if m > 0 {
        let somx2 = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
        let mut fact = 1.0;
        for _ in 0..m {
            pmm *= -fact * somx2;
            fact += 2.0;
        }
    }
    if l == m {
        return pmm;
    }
    let mut pmmp1 = x * (2.0 * m as f64 + 1.0) * pmm;
    if l == m + 1 {
        return pmmp1;
    }
    let mut pll = 0.0;
    for ll in (m + 2)..=l {
        let llf = ll as f64;
        let mf = m as f64;
        pll = ((2.0 * llf - 1.0) * x * pmmp1 - (llf + mf - 1.0) * pmm) / (llf - mf);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    pll
}

fn factorial_ratio(l: usize, m: usize) -> f64 {
    // (l - m)! / (l + m)!
    let mut r = 1.0;
    for k in (l - m + 1)..=(l + m) {
        r /= k as f64;
    }
    r
}

/// Real spherical harmonic y_l^m evaluated at a unit direction.
pub fn real_sh(l: usize, m: i64, dir: &Vec3) -> f64 {
    use std::f64::consts::PI;
    let cos_theta = dir.z.clamp(-1.0, 1.0);
    let phi = dir.y.atan2(dir.x);
    let ma = m.unsigned_abs() as usize;
    let k = ((2.0 * l as f64 + 1.0) / (4.0 * PI) * factorial_ratio(l, ma)).sqrt();
    let p = legendre(l, ma, cos_theta);
    if m == 0 {
        k * p
    } else if m > 0 {
        std::f64::consts::SQRT_2 * k * (ma as f64 * phi).cos() * p
    } else {
        std::f64::consts::SQRT_2 * k * (ma as f64 * phi).sin() * p
    }
}

/// Band-limited scalar field on the unit sphere: a random linear combination
/// of real spherical harmonics up to `max_degree`.
#[derive(Debug, Clone)]
pub struct ShField {
    max_degree: usize,
    coeffs: Vec<f64>,
}

impl ShField {
    /// Number of basis functions through degree `max_degree`.
    pub fn basis_size(max_degree: usize) -> usize {
        (max_degree + 1) * (max_degree + 1)
    }

    pub fn from_coeffs(max_degree: usize, coeffs: Vec<f64>) -> Self {
        assert_eq!(coeffs.len(), Self::basis_size(max_degree));
        ShField { max_degree, coeffs }
    }

    /// Random coefficients with a 1/(1+l)^2 spectral rolloff, scaled so the
    /// field's RMS over the sphere is roughly `amplitude`.
    pub fn random(max_degree: usize, amplitude: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut coeffs = Vec::with_capacity(Self::basis_size(max_degree));
        let mut sum_sq = 0.0;
        for l in 0..=max_degree {
            let rolloff = 1.0 / ((1 + l) * (1 + l)) as f64;
            for _m in -(l as i64)..=(l as i64) {
                let c = (rng.random::<f64>() * 2.0 - 1.0) * rolloff;
                sum_sq += c * c;
                coeffs.push(c);
            }
        }
        // Orthonormal basis: RMS over the sphere is sqrt(sum c^2 / 4pi).
        let rms = (sum_sq / (4.0 * std::f64::consts::PI)).sqrt();
        let scale = if rms > 0.0 { amplitude / rms } else { 0.0 };
        for c in &mut coeffs {
            *c *= scale;
        }
        ShField { max_degree, coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, dir: &Vec3) -> f64 {
        let dir = dir.normalize();
        let mut acc = 0.0;
        let mut idx = 0;
        for l in 0..=self.max_degree {
            for m in -(l as i64)..=(l as i64) {
                acc += self.coeffs[idx] * real_sh(l, m, &dir);
                idx += 1;
            }
        }
        acc
    }
}
