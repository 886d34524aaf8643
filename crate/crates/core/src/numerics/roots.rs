use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;

use super::cpoly::CPoly;
use crate::error::{Error, Result};

/// Relative distance below which two computed roots are the same root.
pub const ROOT_CLUSTER_REL: f64 = 1e-7;
/// Relative Aberth step at which a root estimate is considered converged.
pub const ABERTH_STEP_REL: f64 = 1e-13;
const ABERTH_MAX_ITER: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
}

/// Clustered roots of a polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Root>,
    /// Absolute radius used to merge simple roots.
    pub cluster_radius: f64,
}

impl RootSet {
    pub fn values(&self) -> Vec<Complex64> {
        self.roots.iter().map(|r| r.value).collect()
    }

    pub fn distinct_count(&self) -> usize {
        self.roots.len()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn all_simple(&self) -> bool {
        self.roots.iter().all(|r| r.multiplicity == 1)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| !r.value.is_zero())
    }
}

/// All roots of `p` with multiplicities.
pub fn poly_roots(p: &CPoly) -> Result<RootSet> {
    poly_roots_with(p, ROOT_CLUSTER_REL)
}

/// As [`poly_roots`] with an explicit relative cluster radius.
pub fn poly_roots_with(p: &CPoly, cluster_rel: f64) -> Result<RootSet> {
    if !p.is_finite() {
        return Err(Error::NonFinite("polynomial coefficients"));
    }
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let coeffs = p.coeffs();
    let zero_mult = coeffs.iter().take_while(|c| c.is_zero()).count();
    let q = CPoly::new(coeffs[zero_mult..].to_vec());

    let mut found = match q.degree() {
        0 => vec![],
        1 => vec![-q.coeffs()[0] / q.coeffs()[1]],
        _ => aberth(&q)?,
    };
    found.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let scale = found.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let mut roots = cluster(&q, &found, scale, cluster_rel);
    for r in roots.iter_mut() {
        // a k-fold root of q is a simple root of its (k-1)-th derivative
        let target = nth_derivative(&q, r.multiplicity - 1);
        r.value = polish(&target, r.value);
    }
    if zero_mult > 0 {
        roots.push(Root {
            value: Complex64::zero(),
            multiplicity: zero_mult,
        });
    }
    Ok(RootSet {
        roots,
        cluster_radius: cluster_rel * scale,
    })
}

fn aberth(p: &CPoly) -> Result<Vec<Complex64>> {
    let n = p.degree();
    let lead = p.leading();
    let monic = p.scale(lead.inv());
    let dp = monic.derivative();
    let c0 = monic.coeffs()[0].norm();
    let radius = c0.powf(1.0 / n as f64).max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();
    // every estimate keeps moving until one full sweep makes only tiny steps;
    // freezing single estimates early stalls them near multiple roots
    for _ in 0..ABERTH_MAX_ITER {
        let mut all_small = true;
        for i in 0..n {
            let zi = z[i];
            let pv = monic.eval(zi);
            if pv.is_zero() {
                continue;
            }
            let dv = dp.eval(zi);
            let ratio = if dv.is_zero() {
                // stationary point: nudge off it
                Complex64::new(1e-3 * (1.0 + zi.norm()), 1e-3)
            } else {
                pv / dv
            };
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = zi - z[j];
                    if d.is_zero() {
                        Complex64::zero()
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let denom = Complex64::new(1.0, 0.0) - ratio * s;
            let w = if denom.is_zero() {
                ratio
            } else {
                ratio / denom
            };
            if !w.is_finite() {
                return Err(Error::NoConvergence);
            }
            z[i] = zi - w;
            if w.norm() > ABERTH_STEP_REL * z[i].norm().max(f64::MIN_POSITIVE) {
                all_small = false;
            }
        }
        if all_small {
            break;
        }
    }
    if z.iter().any(|v| !v.is_finite()) {
        return Err(Error::NoConvergence);
    }
    Ok(z)
}

/// Attainable accuracy of a `k`-fold root of `p` at `c`: a relative
/// coefficient perturbation `ε` moves it by about `(k! ε Σ|a_i||c|^i / |p⁽ᵏ⁾(c)|)^(1/k)`.
fn multiple_root_noise(p: &CPoly, c: Complex64, k: usize) -> f64 {
    let (_, s) = p.eval_scaled(c);
    let dk = nth_derivative(p, k).eval(c).norm();
    if dk == 0.0 {
        return f64::INFINITY;
    }
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    (fact * f64::EPSILON * s / dk).powf(1.0 / k as f64)
}

fn nth_derivative(p: &CPoly, k: usize) -> CPoly {
    (0..k).fold(p.clone(), |d, _| d.derivative())
}

/// Length of the Newton step on `p⁽ᵏ⁻¹⁾` from `c`; small when `c` sits on a `k`-fold root.
fn derivative_newton_step(p: &CPoly, c: Complex64, k: usize) -> f64 {
    let d = nth_derivative(p, k - 1);
    let dd = d.derivative().eval(c).norm();
    if dd == 0.0 {
        f64::INFINITY
    } else {
        d.eval(c).norm() / dd
    }
}

/// Groups the largest clusters first: for each size `k`, a point and its
/// `k − 1` nearest unassigned neighbours form a cluster when their diameter
/// fits in `2ρ` and the centroid is within `ρ` of a root of `p⁽ᵏ⁻¹⁾`, with `ρ` the larger of the relative radius and a safety
/// multiple of the attainable accuracy of a `k`-fold root at their centroid,
/// capped at `scale · rel^(1/k)`.
fn cluster(p: &CPoly, points: &[Complex64], scale: f64, rel: f64) -> Vec<Root> {
    const NOISE_SAFETY: f64 = 16.0;
    let n = points.len();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for k in (2..=n).rev() {
        for i in 0..n {
            if assigned[i] {
                continue;
            }
            let mut near: Vec<(f64, usize)> = (0..n)
                .filter(|&j| j != i && !assigned[j])
                .map(|j| ((points[j] - points[i]).norm(), j))
                .collect();
            if near.len() < k - 1 {
                continue;
            }
            near.sort_by(|a, b| a.0.total_cmp(&b.0));
            let mut members: Vec<usize> = near[..k - 1].iter().map(|&(_, j)| j).collect();
            members.push(i);
            let centroid = members.iter().map(|&j| points[j]).sum::<Complex64>() / k as f64;
            let noise = (NOISE_SAFETY * multiple_root_noise(p, centroid, k))
                .min(scale * rel.powf(1.0 / k as f64));
            let radius = (rel * scale).max(noise);
            if diameter(points, &members) <= 2.0 * radius
                && derivative_newton_step(p, centroid, k) <= radius
            {
                for &j in &members {
                    assigned[j] = true;
                }
                out.push(Root {
                    value: centroid,
                    multiplicity: k,
                });
            }
        }
    }
    for i in (0..n).filter(|&i| !assigned[i]) {
        out.push(Root {
            value: points[i],
            multiplicity: 1,
        });
    }
    out
}

fn diameter(points: &[Complex64], idx: &[usize]) -> f64 {
    let mut d: f64 = 0.0;
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            d = d.max((points[i] - points[j]).norm());
        }
    }
    d
}

/// A few Newton steps, kept only while the residual improves.
fn polish(p: &CPoly, mut z: Complex64) -> Complex64 {
    let dp = p.derivative();
    let mut res = p.eval(z).norm();
    for _ in 0..4 {
        let d = dp.eval(z);
        if d.is_zero() || res == 0.0 {
            break;
        }
        let next = z - p.eval(z) / d;
        let r = p.eval(next).norm();
        if r < res {
            z = next;
            res = r;
        } else {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Root>) -> Vec<Root> {
        v.sort_by(|a, b| a.value.re.total_cmp(&b.value.re));
        v
    }

    #[test]
    fn factored_quadratic() {
        let rs = poly_roots(&CPoly::from_real(&[0.0, -2.0, 1.0])).unwrap();
        let r = sorted(rs.roots);
        assert_eq!(r.len(), 2);
        assert!(r[0].value.norm() < 1e-15 && r[0].multiplicity == 1);
        assert!((r[1].value - Complex64::new(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn golden_ratio_roots() {
        let rs = poly_roots(&CPoly::from_real(&[-1.0, -1.0, 1.0])).unwrap();
        let r = sorted(rs.roots);
        let s5 = 5f64.sqrt();
        assert!((r[0].value.re - (1.0 - s5) / 2.0).abs() < 1e-14);
        assert!((r[1].value.re - (1.0 + s5) / 2.0).abs() < 1e-14);
        assert!(r
            .iter()
            .all(|x| x.multiplicity == 1 && x.value.im.abs() < 1e-14));
    }

    #[test]
    fn perfect_cube() {
        let rs = poly_roots(&CPoly::from_real(&[-1.0, 3.0, -3.0, 1.0])).unwrap();
        assert_eq!(rs.roots.len(), 1);
        assert_eq!(rs.roots[0].multiplicity, 3);
        assert!((rs.roots[0].value - Complex64::new(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn errors() {
        assert_eq!(
            poly_roots(&CPoly::from_real(&[3.0])),
            Err(Error::ConstantPolynomial)
        );
        assert!(matches!(
            poly_roots(&CPoly::from_real(&[f64::NAN, 1.0])),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn roots_of_unity_are_separated() {
        // x^12 - 1
        let mut c = vec![0.0; 13];
        c[0] = -1.0;
        c[12] = 1.0;
        let rs = poly_roots(&CPoly::from_real(&c)).unwrap();
        assert_eq!(rs.distinct_count(), 12);
        for r in &rs.roots {
            assert!((r.value.norm() - 1.0).abs() < 1e-13);
        }
    }
}
