//! The inverse side: densities from phase data and back.
//!
//! Given a diffraction `omega` with support `S` and an elementary phase form
//! `a`, the density
//!
//! ```text
//! rho_a(x) = sum_{k in S} a(k) omega(k)^(1/2) conj(pairing(k, x))
//! ```
//!
//! has diffraction exactly `omega`, and every real density arises this way up
//! to a global sign. [`solve_family`] packages the full solution set: `p`
//! circle parameters, `q` signs, and the class group counting genuinely
//! different (non-translate) solutions. [`extract_phase_from_density`]
//! inverts the construction. Two applicability checks round things out: the
//! unit-orbit closure test for rational-weight densities on a cyclic group,
//! and the windowed coefficient check for the circle-group family showing
//! that continuum-sized homometry classes exist.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use crate::abelian::Element;
use crate::density::{bragg_spectrum, diffraction, phase_coefficient, Density, PointMeasure};
use crate::error::{Error, Result};
use crate::phaseforms::{
    make_elementary, phase_group_structure, ElementaryPhaseForm, PhaseGroupStructure,
};
use crate::relators::{canonical_basis, relator_lattice, GeneratorBasis, RelatorLattice, SymbolRole};
use crate::turn::Turn;
use crate::C64;

/// Largest denominator recognized by the rational-weight detector.
pub const RATIONAL_MAX_DEN: i64 = 1_000_000;

/// Relative error under which a weight counts as the nearby fraction.
pub const RATIONAL_TOL: f64 = 1e-13;

/// The density with coefficient `a(k) omega(k)^(1/2)` at every support point.
///
/// When the support generates a proper subgroup `E` of the dual, the output
/// is constant on cosets of `E^perp`; the ambient group is kept as given.
pub fn density_from_phase(omega: &PointMeasure, form: &ElementaryPhaseForm) -> Result<Density> {
    let spectrum = bragg_spectrum(omega)?;
    if form.basis().spectrum() != &spectrum {
        return Err(Error::BasisMismatch(
            "phase form support differs from the diffraction support".into(),
        ));
    }
    let g = spectrum.group();
    let mut weights = vec![C64::new(0.0, 0.0); g.order()];
    for k in spectrum.points() {
        let amp = form.evaluate(&k)? * omega.weight(&k).sqrt();
        for (i, x) in g.elements().enumerate() {
            weights[i] += amp * g.pairing(&k, &x).conj();
        }
    }
    Density::new(g, weights)
}

/// Diffraction plus phase form recovered from a real density.
#[derive(Clone, Debug)]
pub struct ExtractedPhase {
    pub omega: PointMeasure,
    pub form: ElementaryPhaseForm,
    /// True when the density was negated to make the mean coefficient
    /// positive; the form describes `-rho`.
    pub negated: bool,
}

/// Recover `(omega, a)` from a real density, normalizing a negative mean
/// away into the `negated` flag. Reconstruction from the result must
/// reproduce the (possibly negated) input to 1e-9 relative, else the
/// support was numerically ambiguous and a contract error is raised.
pub fn extract_phase_from_density(rho: &Density, rel_tol: f64) -> Result<ExtractedPhase> {
    if !rho.is_real(rel_tol) {
        return Err(Error::NotReal(rho.max_imag()));
    }
    let g = rho.group();
    let omega = diffraction(rho, rel_tol);
    let spectrum = bragg_spectrum(&omega)?;
    let basis = canonical_basis(&spectrum);
    let mut negated = false;
    if spectrum.zero_in() {
        let c0 = phase_coefficient(rho, &g.zero());
        if c0.norm_sqr() <= omega.threshold() {
            return Err(Error::Contract(
                "zero is in the support but the mean coefficient vanishes".into(),
            ));
        }
        negated = c0.re < 0.0;
    }
    let work = if negated { rho.negate() } else { rho.clone() };
    let mut free_angles = vec![Turn::ZERO; basis.p()];
    let mut torsion_signs = vec![1i8; basis.q()];
    for k in spectrum.points() {
        let a = phase_coefficient(&work, &k) / omega.weight(&k).sqrt();
        match basis.role(&k)? {
            SymbolRole::Zero => {
                if (a - C64::new(1.0, 0.0)).norm() > 1e-8 {
                    return Err(Error::Contract(format!(
                        "normalized mean coefficient is {a} instead of 1"
                    )));
                }
            }
            SymbolRole::Free { index, sign } => {
                if sign > 0 {
                    free_angles[index] = Turn::real(a.arg() / TAU);
                }
            }
            SymbolRole::Torsion { index } => {
                if a.im.abs() > 1e-8 {
                    return Err(Error::Contract(format!(
                        "phase at order-two point {k} is {a}, not a sign"
                    )));
                }
                torsion_signs[index] = if a.re > 0.0 { 1 } else { -1 };
            }
        }
    }
    let form = make_elementary(&basis, &free_angles, &torsion_signs)?;
    let recon = density_from_phase(&omega, &form)?;
    let scale = work.max_abs().max(1.0);
    let dev = recon
        .weights()
        .iter()
        .zip(work.weights())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    if dev > 1e-9 * scale {
        return Err(Error::Contract(format!(
            "reconstruction misses the density by {dev:.3e} relative to {scale:.3e}; \
             support is numerically ambiguous at this tolerance"
        )));
    }
    Ok(ExtractedPhase {
        omega,
        form,
        negated,
    })
}

/// The complete solution family of an inverse problem.
#[derive(Clone, Debug)]
pub struct FamilyDescription {
    basis: GeneratorBasis,
    lattice: RelatorLattice,
    class_group: PhaseGroupStructure,
    omega: PointMeasure,
}

/// Describe every density with the given diffraction.
pub fn solve_family(omega: &PointMeasure) -> Result<FamilyDescription> {
    let spectrum = bragg_spectrum(omega)?;
    let basis = canonical_basis(&spectrum);
    let lattice = relator_lattice(&basis)?;
    let class_group = phase_group_structure(&lattice)?;
    Ok(FamilyDescription {
        basis,
        lattice,
        class_group,
        omega: omega.clone(),
    })
}

impl FamilyDescription {
    pub fn basis(&self) -> &GeneratorBasis {
        &self.basis
    }

    pub fn lattice(&self) -> &RelatorLattice {
        &self.lattice
    }

    /// Structure of the classes that are genuinely different, i.e. not
    /// related by translation.
    pub fn class_group(&self) -> &PhaseGroupStructure {
        &self.class_group
    }

    pub fn omega(&self) -> &PointMeasure {
        &self.omega
    }

    /// Number of circle parameters.
    pub fn p(&self) -> usize {
        self.basis.p()
    }

    /// Number of sign parameters.
    pub fn q(&self) -> usize {
        self.basis.q()
    }

    /// Whether the support generates the whole dual group; if not, every
    /// solution is periodic under the annihilator of the generated subgroup.
    pub fn generates_full_dual(&self) -> bool {
        self.basis.generated_subgroup().order() == self.basis.group().order()
    }

    /// The phase form at given parameter values.
    pub fn form(&self, free_angles: &[Turn], torsion_signs: &[i8]) -> Result<ElementaryPhaseForm> {
        make_elementary(&self.basis, free_angles, torsion_signs)
    }

    /// The solution density at given parameter values.
    pub fn sample(&self, free_angles: &[Turn], torsion_signs: &[i8]) -> Result<Density> {
        density_from_phase(&self.omega, &self.form(free_angles, torsion_signs)?)
    }
}

/// Outcome of the rational-weight applicability test on a cyclic group.
#[derive(Clone, Debug)]
pub struct RationalDensityReport {
    pub modulus: i64,
    /// Every weight is a fraction with denominator at most
    /// [`RATIONAL_MAX_DEN`].
    pub is_rational: bool,
    pub irrational_points: Vec<Element>,
    /// The support is closed under `k -> j k` for every `j` coprime to the
    /// order of `k`.
    pub closed: bool,
    /// Support points failing closure, each with the first bad multiplier.
    pub violations: Vec<(Element, i64)>,
    /// Moments up to this order decide homometry for rational densities:
    /// 6 when the modulus is even, 4 when odd.
    pub moment_bound: u64,
}

impl RationalDensityReport {
    /// Whether the rational-weight classification applies.
    pub fn passes(&self) -> bool {
        self.is_rational && self.closed
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Best fraction with bounded denominator, if one matches to within
/// `tol * max(1, |x|)`.
fn rational_approx(x: f64, max_den: i64, tol: f64) -> Option<(i64, i64)> {
    if !x.is_finite() {
        return None;
    }
    let bound = tol * x.abs().max(1.0);
    let (mut p0, mut q0) = (1i64, 0i64);
    let (mut p1, mut q1) = (x.floor() as i64, 1i64);
    let mut frac = x - x.floor();
    loop {
        if (p1 as f64 / q1 as f64 - x).abs() <= bound {
            let g = gcd(p1, q1).max(1);
            return Some((p1 / g, q1 / g));
        }
        if frac <= f64::EPSILON {
            return None;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        frac = r - a;
        if a > i64::MAX as f64 {
            return None;
        }
        let a = a as i64;
        let p2 = a.checked_mul(p1).and_then(|v| v.checked_add(p0))?;
        let q2 = a.checked_mul(q1).and_then(|v| v.checked_add(q0))?;
        if q2 > max_den {
            return None;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
}

/// Applicability test for the rational-weight classification: the group must
/// be a single cyclic factor, the weights rational, and the support closed
/// under multiplication by units.
///
/// When it passes, moment tables up to the reported bound decide homometry.
pub fn gm_rational_check(rho: &Density, rel_tol: f64) -> Result<RationalDensityReport> {
    let g = rho.group();
    if g.rank() != 1 {
        return Err(Error::NotCyclic(g.rank()));
    }
    if !rho.is_real(rel_tol) {
        return Err(Error::NotReal(rho.max_imag()));
    }
    let modulus = g.moduli()[0];
    let mut irrational_points = Vec::new();
    for x in g.elements() {
        let w = rho.weight(&x).re;
        if rational_approx(w, RATIONAL_MAX_DEN, RATIONAL_TOL).is_none() {
            irrational_points.push(x);
        }
    }
    let omega = diffraction(rho, rel_tol);
    let spectrum = bragg_spectrum(&omega)?;
    let mut violations = Vec::new();
    for k in spectrum.points() {
        let ord = g.element_order(&k);
        for j in 2..ord {
            if gcd(j, ord) != 1 {
                continue;
            }
            if !spectrum.contains(&g.scale(&k, j)) {
                violations.push((k.clone(), j));
                break;
            }
        }
    }
    Ok(RationalDensityReport {
        modulus,
        is_rational: irrational_points.is_empty(),
        irrational_points,
        closed: violations.is_empty(),
        violations,
        moment_bound: if modulus % 2 == 0 { 6 } else { 4 },
    })
}

/// Windowed coefficient table of the circle-group construction
/// `delta_0 + sum_{k in K} (a(k) - 1) conj(chi_k)`.
#[derive(Clone, Debug)]
pub struct CircleFamilyReport {
    pub window: i64,
    /// Number of plus/minus frequency pairs.
    pub pair_count: usize,
    /// Coefficient at each integer in `[-window, window]`.
    pub coefficients: Vec<(i64, C64)>,
    pub max_unit_deviation: f64,
}

impl CircleFamilyReport {
    /// All windowed coefficients lie on the unit circle to `tol`.
    pub fn passes(&self, tol: f64) -> bool {
        self.max_unit_deviation <= tol
    }
}

/// Check that prescribing unit values on a symmetric frequency set `K`
/// (given as `(k, angle)` pairs covering both signs) leaves every windowed
/// coefficient on the unit circle: the construction changes phases only,
/// so its diffraction stays the unit comb no matter the choice of values.
pub fn circle_family_check(values: &[(i64, Turn)], window: i64) -> Result<CircleFamilyReport> {
    let mut map: BTreeMap<i64, Turn> = BTreeMap::new();
    for &(k, t) in values {
        if k == 0 {
            return Err(Error::Invalid(
                "frequency 0 is fixed at coefficient 1 and cannot carry a value".into(),
            ));
        }
        if map.insert(k, t).is_some() {
            return Err(Error::Invalid(format!("frequency {k} given twice")));
        }
    }
    for (&k, &t) in &map {
        match map.get(&-k) {
            None => return Err(Error::AsymmetricSupport(format!("{k} present without {}", -k))),
            Some(&back) => {
                if !back.phase_close(t.neg(), 1e-12) {
                    return Err(Error::Invalid(format!(
                        "value at {} is not the conjugate of the value at {k}",
                        -k
                    )));
                }
            }
        }
    }
    if window < 0 {
        return Err(Error::Invalid("window must be nonnegative".into()));
    }
    if let Some(&k) = map.keys().max_by_key(|k| k.abs()) {
        if k.abs() > window {
            return Err(Error::Invalid(format!(
                "window {window} does not cover frequency {k}"
            )));
        }
    }
    let mut coefficients = Vec::with_capacity((2 * window + 1) as usize);
    let mut max_dev = 0.0f64;
    for n in -window..=window {
        let c = map
            .get(&n)
            .map(|t| t.to_complex())
            .unwrap_or_else(|| C64::new(1.0, 0.0));
        max_dev = max_dev.max((c.norm() - 1.0).abs());
        coefficients.push((n, c));
    }
    Ok(CircleFamilyReport {
        window,
        pair_count: map.len() / 2,
        coefficients,
        max_unit_deviation: max_dev,
    })
}
