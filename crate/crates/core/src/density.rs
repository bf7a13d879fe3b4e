//! Densities, autocorrelation, and pure point diffraction.
//!
//! A [`Density`] is a complex weight per group point, read against normalised
//! Haar measure: it pairs with a function `F` as `(1/|G|) sum_x w_x F(x)`.
//! Its autocorrelation is `gamma = rho * involute(rho)` and its diffraction is
//! the nonnegative dual weight `omega(k) = |c(k)|^2`, where
//!
//! `c(k) = (1/|G|) sum_x pairing(k, x) rho(x)`
//!
//! is the *phase coefficient*. Note the plus sign in the pairing: every
//! phase-bearing quantity in this crate (extraction, reconstruction, process
//! eigenfunctions) uses `c`, which relates to the transform of the `abelian`
//! module by `c(k) = dft(rho)(-k)`. The two agree on `omega` because the
//! diffraction of a real density is centrally symmetric.

use crate::abelian::{Element, Group, GroupFunction};
use crate::error::{Error, Result};
use crate::{C64, DEFAULT_REL_TOL};

/// A complex density on a finite abelian group.
#[derive(Clone, Debug, PartialEq)]
pub struct Density {
    group: Group,
    weights: Vec<C64>,
}

impl Density {
    pub fn new(group: &Group, weights: Vec<C64>) -> Result<Density> {
        if weights.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                got: weights.len(),
            });
        }
        Ok(Density {
            group: group.clone(),
            weights,
        })
    }

    pub fn from_real(group: &Group, weights: &[f64]) -> Result<Density> {
        Density::new(group, weights.iter().map(|&w| C64::new(w, 0.0)).collect())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn weights(&self) -> &[C64] {
        &self.weights
    }

    pub fn weight(&self, x: &Element) -> C64 {
        self.weights[self.group.index_of(x)]
    }

    pub fn max_abs(&self) -> f64 {
        self.weights.iter().map(|w| w.norm()).fold(0.0, f64::max)
    }

    /// Largest imaginary part in absolute value.
    pub fn max_imag(&self) -> f64 {
        self.weights.iter().map(|w| w.im.abs()).fold(0.0, f64::max)
    }

    /// True when every weight is real within `tol * max_abs`.
    pub fn is_real(&self, rel_tol: f64) -> bool {
        self.max_imag() <= rel_tol * self.max_abs().max(f64::MIN_POSITIVE)
    }

    /// The density as a plain function (same values).
    pub fn as_function(&self) -> GroupFunction {
        GroupFunction::new(&self.group, self.weights.clone()).expect("length matches group")
    }

    /// Forward translate: mass of `x` moves to `x + t`.
    pub fn translate(&self, t: &Element) -> Density {
        let f = self.as_function().translate(t);
        Density {
            group: self.group.clone(),
            weights: f.values().to_vec(),
        }
    }

    pub fn negate(&self) -> Density {
        Density {
            group: self.group.clone(),
            weights: self.weights.iter().map(|w| -w).collect(),
        }
    }
}

/// Phase coefficient `c(k) = (1/|G|) sum_x pairing(k, x) rho(x)`.
pub fn phase_coefficient(rho: &Density, k: &Element) -> C64 {
    let g = rho.group();
    let mut acc = C64::new(0.0, 0.0);
    for (i, x) in g.elements().enumerate() {
        acc += g.pairing(k, &x) * rho.weights()[i];
    }
    acc / g.order() as f64
}

/// All phase coefficients as a function on the dual.
pub fn phase_coefficients(rho: &Density) -> GroupFunction {
    let g = rho.group();
    GroupFunction::from_fn(g, |k| phase_coefficient(rho, k))
}

/// Autocorrelation `gamma = rho * involute(rho)`.
///
/// `gamma(-x) = conj(gamma(x))` always; for a real density `gamma` is real
/// and even. Its pairing with a window is [`gamma_pairing`].
pub fn autocorrelation(rho: &Density) -> GroupFunction {
    let f = rho.as_function();
    f.convolve(&f.involute()).expect("same group")
}

/// Measure pairing `gamma(F) = (1/|G|) sum_x gamma(x) F(x)`.
pub fn gamma_pairing(gamma: &GroupFunction, f: &GroupFunction) -> Result<C64> {
    if gamma.group() != f.group() {
        return Err(Error::GroupMismatch {
            left: gamma.group().describe(),
            right: f.group().describe(),
        });
    }
    let acc: C64 = gamma
        .values()
        .iter()
        .zip(f.values())
        .map(|(a, b)| a * b)
        .sum();
    Ok(acc / gamma.group().order() as f64)
}

/// Nonnegative weights on the dual group, with the relative extinction
/// threshold that delimits the support.
#[derive(Clone, Debug, PartialEq)]
pub struct PointMeasure {
    group: Group,
    weights: Vec<f64>,
    rel_tol: f64,
}

impl PointMeasure {
    /// Validates nonnegativity: entries below `-rel_tol * max` are refused,
    /// tiny negative round-off is clamped to zero.
    pub fn new(group: &Group, weights: Vec<f64>, rel_tol: f64) -> Result<PointMeasure> {
        if weights.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                got: weights.len(),
            });
        }
        let max = weights.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
        let floor = -rel_tol * max.max(f64::MIN_POSITIVE);
        let mut clamped = Vec::with_capacity(weights.len());
        for (i, &w) in weights.iter().enumerate() {
            if w < floor {
                return Err(Error::NegativeWeight {
                    point: group.element_at(i).to_string(),
                    value: w,
                });
            }
            clamped.push(if w < 0.0 { 0.0 } else { w });
        }
        Ok(PointMeasure {
            group: group.clone(),
            weights: clamped,
            rel_tol,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, k: &Element) -> f64 {
        self.weights[self.group.index_of(k)]
    }

    /// Stored relative extinction threshold.
    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_weight(&self) -> f64 {
        self.weights.iter().cloned().fold(0.0, f64::max)
    }

    /// Absolute threshold below which a weight counts as extinct.
    pub fn threshold(&self) -> f64 {
        self.rel_tol * self.max_weight()
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }
}

/// Support of a diffraction: the dual points carrying weight above threshold,
/// sorted by element index. Central symmetry is enforced at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct BraggSpectrum {
    group: Group,
    points: Vec<usize>,
    members: Vec<bool>,
    zero_in: bool,
}

impl BraggSpectrum {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, k: &Element) -> bool {
        self.members[self.group.index_of(k)]
    }

    /// True when the zero character carries weight.
    pub fn zero_in(&self) -> bool {
        self.zero_in
    }

    /// Points in increasing element-index order.
    pub fn points(&self) -> impl Iterator<Item = Element> + '_ {
        self.points.iter().map(|&i| self.group.element_at(i))
    }

    pub fn point_indices(&self) -> &[usize] {
        &self.points
    }

    /// Construct from an explicit point list (used by basis round-trips).
    pub fn from_points(group: &Group, pts: &[Element]) -> Result<BraggSpectrum> {
        let mut members = vec![false; group.order()];
        for p in pts {
            members[group.index_of(p)] = true;
        }
        let points: Vec<usize> = (0..group.order()).filter(|&i| members[i]).collect();
        if points.is_empty() {
            return Err(Error::EmptySupport);
        }
        for &i in &points {
            let k = group.element_at(i);
            if !members[group.index_of(&group.neg(&k))] {
                return Err(Error::AsymmetricSupport(k.to_string()));
            }
        }
        let zero_in = members[0];
        Ok(BraggSpectrum {
            group: group.clone(),
            points,
            members,
            zero_in,
        })
    }
}

/// Support of `omega` at its stored threshold.
///
/// An asymmetric support signals a non-real origin and is refused.
pub fn bragg_spectrum(omega: &PointMeasure) -> Result<BraggSpectrum> {
    let thr = omega.threshold();
    let g = omega.group();
    let pts: Vec<Element> = g
        .elements()
        .enumerate()
        .filter(|(i, _)| omega.weights()[*i] > thr)
        .map(|(_, k)| k)
        .collect();
    if pts.is_empty() {
        return Err(Error::EmptySupport);
    }
    BraggSpectrum::from_points(g, &pts)
}

/// Diffraction `omega(k) = |c(k)|^2` with the given relative extinction
/// threshold recorded on the result.
pub fn diffraction(rho: &Density, rel_tol: f64) -> PointMeasure {
    let c = phase_coefficients(rho);
    let weights: Vec<f64> = c.values().iter().map(|v| v.norm_sqr()).collect();
    PointMeasure::new(rho.group(), weights, rel_tol).expect("squares are nonnegative")
}

/// Diffraction at the default threshold.
pub fn diffraction_default(rho: &Density) -> PointMeasure {
    diffraction(rho, DEFAULT_REL_TOL)
}

/// Relative residual of the transform identity
/// `sum_k |dft(F)(k)|^2 omega(k) = (1/|G|) sum_t (F * involute(F))(t) gamma(t)`,
/// which ties diffraction and autocorrelation together for any window `F`.
pub fn transform_identity_check(rho: &Density, f: &GroupFunction) -> Result<f64> {
    if rho.group() != f.group() {
        return Err(Error::GroupMismatch {
            left: rho.group().describe(),
            right: f.group().describe(),
        });
    }
    let omega = diffraction_default(rho);
    let fhat = f.dft();
    let lhs: f64 = fhat
        .values()
        .iter()
        .zip(omega.weights())
        .map(|(v, w)| v.norm_sqr() * w)
        .sum();
    let gamma = autocorrelation(rho);
    let window = f.convolve(&f.involute())?;
    let rhs = gamma_pairing(&gamma, &window)?;
    let scale = lhs.abs().max(rhs.norm()).max(f64::MIN_POSITIVE);
    Ok((C64::new(lhs, 0.0) - rhs).norm() / scale)
}

/// Whether two densities share their diffraction within `rel_tol` of the
/// larger peak.
pub fn homometric(a: &Density, b: &Density, rel_tol: f64) -> Result<bool> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch {
            left: a.group().describe(),
            right: b.group().describe(),
        });
    }
    let wa = diffraction(a, rel_tol);
    let wb = diffraction(b, rel_tol);
    let scale = wa.max_weight().max(wb.max_weight()).max(f64::MIN_POSITIVE);
    Ok(wa
        .weights()
        .iter()
        .zip(wb.weights())
        .all(|(x, y)| (x - y).abs() <= rel_tol * scale))
}
