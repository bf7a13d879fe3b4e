//! Stationary models realizing a given diffraction.
//!
//! A point measure `omega` with support `S` generating `E <= G`, together
//! with a phase form `a`, determines a model on the state space `X = G/E^perp`
//! carrying Haar probability measure. Each support point `k` acts as the
//! eigenfunction `f_k(xi) = a(k) omega(k)^(1/2) pairing(k, rep(xi))`, and the
//! covariance operator sends a function `F` on `G` to
//!
//! ```text
//! N(F) = sum_{k in S} c_F(k) f_k,    c_F(k) = (1/|G|) sum_x pairing(k, x) F(x)
//! ```
//!
//! The map `theta: h -> sum h(k) f_k` is an isometry from coefficients
//! weighted by `omega` into `L^2(X)`: this module verifies the isometry, the
//! eigenrelation `T_t f_k = conj(pairing(k, t)) f_k`, the covariance identity
//! `<N(F), N(H)> = <gamma, F * involute(H)>`, the two-point law recovering the
//! autocorrelation, and the shift/twist equivariances. Higher moments of the
//! model reduce to sums over zero-sum support tuples weighted by the phase
//! form, which is why moment tables of phase forms classify these models.
//!
//! States are plain `Vec<C64>` indexed like `state_space().reps()`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abelian::{annihilator, quotient, Element, Group, GroupFunction, Quotient};
use crate::density::{autocorrelation, bragg_spectrum, BraggSpectrum, PointMeasure};
use crate::error::{Error, Result};
use crate::inverse::density_from_phase;
use crate::phaseforms::ElementaryPhaseForm;
use crate::relators::{canonical_basis, GeneratorBasis};
use crate::turn::Turn;
use crate::C64;

/// Largest tuple length accepted by the direct moment average.
pub const MAX_MOMENT_ORDER: u64 = 8;

/// Largest tuple count accepted by the combinatorial moment formula.
pub const MAX_MOMENT_TUPLES: f64 = 1e7;

/// A diffraction measure with a phase form realized on `G/E^perp`.
#[derive(Clone, Debug)]
pub struct ProcessModel {
    group: Group,
    basis: GeneratorBasis,
    omega: PointMeasure,
    form: ElementaryPhaseForm,
    states: Quotient,
    /// Spectrum points in element order.
    points: Vec<Element>,
    /// `a(k) omega(k)^(1/2)` per spectrum point.
    amplitudes: Vec<C64>,
}

/// Build the model for a diffraction and a phase form on its support.
pub fn build_process(omega: &PointMeasure, form: &ElementaryPhaseForm) -> Result<ProcessModel> {
    let spectrum = bragg_spectrum(omega)?;
    if form.basis().spectrum() != &spectrum {
        return Err(Error::BasisMismatch(
            "phase form support differs from the diffraction support".into(),
        ));
    }
    let group = spectrum.group().clone();
    let basis = canonical_basis(&spectrum);
    let generated = basis.generated_subgroup();
    let ann = annihilator(&group, &generated)?;
    let states = quotient(&group, &ann)?;
    if states.len() != generated.order() {
        return Err(Error::Contract(format!(
            "state space has {} cosets but the support generates {} elements",
            states.len(),
            generated.order()
        )));
    }
    let points: Vec<Element> = spectrum.points().collect();
    let amplitudes = points
        .iter()
        .map(|k| Ok(form.evaluate(k)? * omega.weight(k).sqrt()))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProcessModel {
        group,
        basis,
        omega: omega.clone(),
        form: form.clone(),
        states,
        points,
        amplitudes,
    })
}

impl ProcessModel {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn spectrum(&self) -> &BraggSpectrum {
        self.basis.spectrum()
    }

    pub fn basis(&self) -> &GeneratorBasis {
        &self.basis
    }

    pub fn omega(&self) -> &PointMeasure {
        &self.omega
    }

    pub fn form(&self) -> &ElementaryPhaseForm {
        &self.form
    }

    /// The state space `X = G/E^perp`, one coset per generated element.
    pub fn state_space(&self) -> &Quotient {
        &self.states
    }

    /// The density this model realizes.
    pub fn density(&self) -> Result<crate::density::Density> {
        density_from_phase(&self.omega, &self.form)
    }

    fn point_position(&self, k: &Element) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == k)
            .ok_or_else(|| Error::OutsideSpectrum(k.to_string()))
    }

    /// Eigenfunction `f_k` over the state space.
    pub fn eigenfunction(&self, k: &Element) -> Result<Vec<C64>> {
        let j = self.point_position(k)?;
        Ok(self
            .states
            .reps()
            .map(|rep| self.amplitudes[j] * self.group.pairing(k, &rep))
            .collect())
    }

    /// `theta(h) = sum_j h_j f_{k_j}` for coefficients in spectrum order.
    pub fn theta(&self, h: &[C64]) -> Result<Vec<C64>> {
        if h.len() != self.points.len() {
            return Err(Error::LengthMismatch {
                expected: self.points.len(),
                got: h.len(),
            });
        }
        let mut out = vec![C64::new(0.0, 0.0); self.states.len()];
        for (i, rep) in self.states.reps().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for (j, k) in self.points.iter().enumerate() {
                acc += h[j] * self.amplitudes[j] * self.group.pairing(k, &rep);
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Covariance coefficients `c_F(k)` of a function, in spectrum order.
    pub fn coefficients(&self, f: &GroupFunction) -> Result<Vec<C64>> {
        self.group.check_same(f.group())?;
        let hat = f.dft();
        Ok(self
            .points
            .iter()
            .map(|k| hat.value(&self.group.neg(k)))
            .collect())
    }

    /// `N(F)`: the covariance operator applied to a function on `G`.
    pub fn apply_n(&self, f: &GroupFunction) -> Result<Vec<C64>> {
        let c = self.coefficients(f)?;
        self.theta(&c)
    }

    fn check_state(&self, v: &[C64]) -> Result<()> {
        if v.len() != self.states.len() {
            return Err(Error::LengthMismatch {
                expected: self.states.len(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Shift action on states: `(T_t v)(xi) = v(xi - t)`.
    pub fn translate_state(&self, v: &[C64], t: &Element) -> Result<Vec<C64>> {
        self.check_state(v)?;
        Ok(self
            .states
            .reps()
            .map(|rep| v[self.states.coset_of(&self.group.sub(&rep, t))])
            .collect())
    }

    /// Inner product in `L^2(X)` with Haar probability measure.
    pub fn state_inner(&self, u: &[C64], v: &[C64]) -> Result<C64> {
        self.check_state(u)?;
        self.check_state(v)?;
        let dot: C64 = u.iter().zip(v).map(|(a, b)| a * b.conj()).sum();
        Ok(dot / self.states.len() as f64)
    }

    /// Mean of a state over Haar measure.
    pub fn state_mean(&self, v: &[C64]) -> Result<C64> {
        self.check_state(v)?;
        let s: C64 = v.iter().sum();
        Ok(s / self.states.len() as f64)
    }
}

/// A state's decomposition over the eigenfunctions.
#[derive(Clone, Debug)]
pub struct SpectralMeasure {
    /// Mass `|h_k|^2 omega(k)` at each support point, zero elsewhere.
    pub masses: PointMeasure,
    /// Relative size of the component outside the eigenfunction span.
    pub off_span: f64,
}

/// Spectral measure of a state: project onto each eigenfunction and weigh.
pub fn spectral_measure(model: &ProcessModel, v: &[C64]) -> Result<SpectralMeasure> {
    model.check_state(v)?;
    let g = model.group();
    let mut masses = vec![0.0f64; g.order()];
    let mut recon = vec![C64::new(0.0, 0.0); v.len()];
    for k in &model.points {
        let fk = model.eigenfunction(k)?;
        let w = model.omega.weight(k);
        // <f_k, f_k> = omega(k), so the coefficient of f_k is <v, f_k>/omega(k).
        let h = model.state_inner(v, &fk)? / w;
        masses[g.index_of(k)] = h.norm_sqr() * w;
        for (r, f) in recon.iter_mut().zip(&fk) {
            *r += h * f;
        }
    }
    let norm = |u: &[C64]| u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let diff: Vec<C64> = v.iter().zip(&recon).map(|(a, b)| a - b).collect();
    let off_span = norm(&diff) / norm(v).max(1.0);
    Ok(SpectralMeasure {
        masses: PointMeasure::new(g, masses, model.omega.rel_tol())?,
        off_span,
    })
}

/// Relative residual of `<N(F), N(H)> = <gamma, F * involute(H)>`.
pub fn second_moment_check(
    model: &ProcessModel,
    f: &GroupFunction,
    h: &GroupFunction,
) -> Result<f64> {
    let nf = model.apply_n(f)?;
    let nh = model.apply_n(h)?;
    let lhs = model.state_inner(&nf, &nh)?;
    let gamma = autocorrelation(&model.density()?);
    let rhs = crate::density::gamma_pairing(&gamma, &f.convolve(&h.involute())?)?;
    Ok((lhs - rhs).norm() / rhs.norm().max(1.0))
}

/// Two-point function of the model: `t -> |G|^2 E[Np(1_t) Np(1_0)]`.
///
/// This equals the autocorrelation of the realized density.
pub fn two_point_correlation(model: &ProcessModel) -> Result<GroupFunction> {
    let g = model.group();
    let scale = (g.order() * g.order()) as f64;
    let n0 = model.apply_n(&GroupFunction::indicator(g, &g.zero()))?;
    let mut vals = Vec::with_capacity(g.order());
    for t in g.elements() {
        let nt = model.apply_n(&GroupFunction::indicator(g, &t))?;
        // Plain product, no conjugation: the two-point function of a
        // real-valued model.
        let avg: C64 = nt.iter().zip(&n0).map(|(a, b)| a * b).sum::<C64>() / n0.len() as f64;
        vals.push(avg * scale);
    }
    GroupFunction::new(g, vals)
}

/// Recover the phase form from the covariance operator alone.
///
/// Applies `N` to each conjugate character, divides out the eigenfunction
/// shape, and reads `a(k)` at the zero coset; the shape division must be
/// constant across states or the operator is not of covariance type.
pub fn extract_phase_data(model: &ProcessModel) -> Result<ElementaryPhaseForm> {
    let g = model.group();
    let basis = model.basis();
    let mut free_angles = vec![Turn::ZERO; basis.p()];
    let mut torsion_signs = vec![1i8; basis.q()];
    for k in &model.points {
        let probe = GroupFunction::from_fn(g, |x| g.pairing(&g.neg(k), x));
        let fk = model.apply_n(&probe)?;
        let w = model.omega.weight(k).sqrt();
        // f_k(xi) / pairing(k, rep xi) should be the constant a(k) w.
        let flat: Vec<C64> = model
            .states
            .reps()
            .zip(&fk)
            .map(|(rep, v)| v * g.pairing(k, &rep).conj())
            .collect();
        let c = flat[0];
        let dev = flat
            .iter()
            .map(|z| (z - c).norm())
            .fold(0.0f64, f64::max);
        if dev > 1e-8 * w.max(1.0) {
            return Err(Error::Contract(format!(
                "covariance image of the {k} character is not an eigenfunction"
            )));
        }
        let a = c / w;
        if (a.norm() - 1.0).abs() > 1e-8 {
            return Err(Error::Contract(format!(
                "recovered phase at {k} has modulus {}",
                a.norm()
            )));
        }
        match basis.role(k)? {
            crate::relators::SymbolRole::Zero => {
                if (a - C64::new(1.0, 0.0)).norm() > 1e-8 {
                    return Err(Error::Contract(format!(
                        "phase at the zero point is {a} instead of 1"
                    )));
                }
            }
            crate::relators::SymbolRole::Free { index, sign } => {
                if sign > 0 {
                    let turns = a.arg() / std::f64::consts::TAU;
                    free_angles[index] = Turn::real(turns);
                }
            }
            crate::relators::SymbolRole::Torsion { index } => {
                if a.im.abs() > 1e-8 {
                    return Err(Error::Contract(format!(
                        "phase at order-two point {k} is {a}, not a sign"
                    )));
                }
                torsion_signs[index] = if a.re > 0.0 { 1 } else { -1 };
            }
        }
    }
    crate::phaseforms::make_elementary(basis, &free_angles, &torsion_signs)
}

/// Find `u` with `b(k) = pairing(k, u) a(k)` on the whole support, if any.
///
/// Only the coset of `u` modulo `E^perp` matters, so representatives of the
/// state space are scanned; the first match in coset order is returned.
pub fn find_translation(
    a: &ElementaryPhaseForm,
    b: &ElementaryPhaseForm,
) -> Result<Option<Element>> {
    if a.basis().spectrum() != b.basis().spectrum() {
        return Err(Error::BasisMismatch(
            "phase forms live on different supports".into(),
        ));
    }
    let basis = a.basis();
    let g = basis.group();
    let generated = basis.generated_subgroup();
    let ann = annihilator(g, &generated)?;
    let states = quotient(g, &ann)?;
    let points: Vec<Element> = basis.spectrum().points().collect();
    'outer: for u in states.reps() {
        for k in &points {
            let want = g.pairing(k, &u) * a.evaluate(k)?;
            if (want - b.evaluate(k)?).norm() > 1e-9 {
                continue 'outer;
            }
        }
        return Ok(Some(u));
    }
    Ok(None)
}

/// Direct `m`-th moment `E[Np(F_1) ... Np(F_m)]` by state-space average.
pub fn process_moment(model: &ProcessModel, fs: &[GroupFunction]) -> Result<C64> {
    let m = fs.len() as u64;
    if m > MAX_MOMENT_ORDER {
        return Err(Error::CostGuard(format!(
            "moment order {m} exceeds the cap {MAX_MOMENT_ORDER}"
        )));
    }
    let mut prod = vec![C64::new(1.0, 0.0); model.states.len()];
    for f in fs {
        let nf = model.apply_n(f)?;
        for (p, v) in prod.iter_mut().zip(&nf) {
            *p *= v;
        }
    }
    model.state_mean(&prod)
}

/// The same moment as a sum over zero-sum support tuples:
///
/// ```text
/// sum_{k_1 + ... + k_m = 0, k_i in S}  prod_i c_{F_i}(k_i) a(k_i) omega(k_i)^(1/2)
/// ```
pub fn moment_formula(model: &ProcessModel, fs: &[GroupFunction]) -> Result<C64> {
    let m = fs.len();
    let s = model.points.len();
    if (s as f64).powi(m as i32) > MAX_MOMENT_TUPLES {
        return Err(Error::CostGuard(format!(
            "{s}^{m} support tuples exceed the cap {MAX_MOMENT_TUPLES:e}"
        )));
    }
    if m == 0 {
        return Ok(C64::new(1.0, 0.0));
    }
    let g = model.group();
    // coeffs[i][j] = c_{F_i}(k_j) a(k_j) omega(k_j)^(1/2)
    let mut coeffs = Vec::with_capacity(m);
    for f in fs {
        let c = model.coefficients(f)?;
        coeffs.push(
            c.iter()
                .zip(&model.amplitudes)
                .map(|(x, amp)| x * amp)
                .collect::<Vec<C64>>(),
        );
    }
    let mut pos_of = vec![usize::MAX; g.order()];
    for (j, k) in model.points.iter().enumerate() {
        pos_of[g.index_of(k)] = j;
    }
    // Walk tuples depth-first; the last point is forced to close the sum.
    fn rec(
        g: &Group,
        points: &[Element],
        coeffs: &[Vec<C64>],
        pos_of: &[usize],
        depth: usize,
        partial: Element,
        weight: C64,
        acc: &mut C64,
    ) {
        if depth == coeffs.len() - 1 {
            let need = g.neg(&partial);
            let j = pos_of[g.index_of(&need)];
            if j != usize::MAX {
                *acc += weight * coeffs[depth][j];
            }
            return;
        }
        for (j, k) in points.iter().enumerate() {
            rec(
                g,
                points,
                coeffs,
                pos_of,
                depth + 1,
                g.add(&partial, k),
                weight * coeffs[depth][j],
                acc,
            );
        }
    }
    let mut acc = C64::new(0.0, 0.0);
    rec(
        g,
        &model.points,
        &coeffs,
        &pos_of,
        0,
        g.zero(),
        C64::new(1.0, 0.0),
        &mut acc,
    );
    Ok(acc)
}

/// Relative residual between the direct moment and the tuple formula.
pub fn moment_formula_check(model: &ProcessModel, fs: &[GroupFunction]) -> Result<f64> {
    let direct = process_moment(model, fs)?;
    let formula = moment_formula(model, fs)?;
    Ok((direct - formula).norm() / direct.norm().max(1.0))
}

/// Residuals of the defining identities of a model.
#[derive(Clone, Debug, Serialize)]
pub struct ProcessReport {
    pub group: String,
    pub state_count: usize,
    pub spectrum_size: usize,
    /// `T_t f_k = conj(pairing(k, t)) f_k`
    pub eigen_residual: f64,
    /// `N(T_t F) = T_{-t} N(F)`
    pub equivariance_residual: f64,
    /// `|theta(h)|^2 = sum |h|^2 omega`
    pub isometry_residual: f64,
    /// spectral measure of `theta(h)` is `|h|^2 omega`
    pub spectral_residual: f64,
    /// `<N(F), N(H)> = <gamma, F * involute(H)>`
    pub second_moment_residual: f64,
    /// two-point function equals the autocorrelation
    pub two_point_residual: f64,
    /// twisting the form by `u` shifts states by `-u`
    pub twist_residual: f64,
    /// `N(1_x)(xi) = (1/|G|) conj(rho(-x - xi))`
    pub indicator_residual: f64,
    /// phase recovery from the operator returns the same form
    pub roundtrip_residual: f64,
}

impl ProcessReport {
    pub fn max_residual(&self) -> f64 {
        [
            self.eigen_residual,
            self.equivariance_residual,
            self.isometry_residual,
            self.spectral_residual,
            self.second_moment_residual,
            self.two_point_residual,
            self.twist_residual,
            self.indicator_residual,
            self.roundtrip_residual,
        ]
        .into_iter()
        .fold(0.0f64, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual() <= tol
    }
}

fn random_function(g: &Group, rng: &mut ChaCha8Rng) -> GroupFunction {
    let vals = (0..g.order())
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    GroupFunction::new(g, vals).expect("length matches by construction")
}

fn random_element(g: &Group, rng: &mut ChaCha8Rng) -> Element {
    g.element_at(rng.gen_range(0..g.order()))
}

fn state_diff(a: &[C64], b: &[C64]) -> f64 {
    let num = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0f64, f64::max);
    let den = b.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    num / den.max(1.0)
}

/// Check every defining identity on seeded random inputs.
pub fn verify(model: &ProcessModel, seed: u64, trials: usize) -> Result<ProcessReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = model.group();
    let rho = model.density()?;
    let gamma = autocorrelation(&rho);

    let mut eigen = 0.0f64;
    let mut equivariance = 0.0f64;
    let mut isometry = 0.0f64;
    let mut spectral = 0.0f64;
    let mut second = 0.0f64;
    let mut twist = 0.0f64;
    let mut indicator = 0.0f64;

    for _ in 0..trials.max(1) {
        let t = random_element(g, &mut rng);
        for k in &model.points {
            let fk = model.eigenfunction(k)?;
            let shifted = model.translate_state(&fk, &t)?;
            let scaled: Vec<C64> = fk.iter().map(|v| v * g.pairing(k, &t).conj()).collect();
            eigen = eigen.max(state_diff(&shifted, &scaled));
        }

        let f = random_function(g, &mut rng);
        let h = random_function(g, &mut rng);
        let lhs = model.apply_n(&f.translate(&t))?;
        let rhs = model.translate_state(&model.apply_n(&f)?, &g.neg(&t))?;
        equivariance = equivariance.max(state_diff(&lhs, &rhs));

        let coeff: Vec<C64> = (0..model.points.len())
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let v = model.theta(&coeff)?;
        let want: f64 = coeff
            .iter()
            .zip(&model.points)
            .map(|(c, k)| c.norm_sqr() * model.omega.weight(k))
            .sum();
        let got = model.state_inner(&v, &v)?.re;
        isometry = isometry.max((got - want).abs() / want.max(1.0));

        let sm = spectral_measure(model, &v)?;
        let scale = model.omega.max_weight().max(1.0);
        for (j, k) in model.points.iter().enumerate() {
            let want = coeff[j].norm_sqr() * model.omega.weight(k);
            spectral = spectral.max((sm.masses.weight(k) - want).abs() / scale);
        }
        spectral = spectral.max(sm.off_span);

        second = second.max(second_moment_check(model, &f, &h)?);

        let u = random_element(g, &mut rng);
        let twisted = build_process(&model.omega, &model.form.twist(&u)?)?;
        let lhs = twisted.apply_n(&f)?;
        let rhs = model.translate_state(&model.apply_n(&f)?, &g.neg(&u))?;
        twist = twist.max(state_diff(&lhs, &rhs));

        let x0 = random_element(g, &mut rng);
        let n1 = model.apply_n(&GroupFunction::indicator(g, &x0))?;
        let expected: Vec<C64> = model
            .states
            .reps()
            .map(|rep| rho.weight(&g.neg(&g.add(&x0, &rep))).conj() / g.order() as f64)
            .collect();
        indicator = indicator.max(state_diff(&n1, &expected));
    }

    let tp = two_point_correlation(model)?;
    let scale = gamma.max_abs().max(1.0);
    let two_point = tp
        .values()
        .iter()
        .zip(gamma.values())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max)
        / scale;

    let recovered = extract_phase_data(model)?;
    let mut roundtrip = 0.0f64;
    for k in &model.points {
        let d = (recovered.evaluate(k)? - model.form.evaluate(k)?).norm();
        roundtrip = roundtrip.max(d);
    }

    Ok(ProcessReport {
        group: g.describe(),
        state_count: model.states.len(),
        spectrum_size: model.points.len(),
        eigen_residual: eigen,
        equivariance_residual: equivariance,
        isometry_residual: isometry,
        spectral_residual: spectral,
        second_moment_residual: second,
        two_point_residual: two_point,
        twist_residual: twist,
        indicator_residual: indicator,
        roundtrip_residual: roundtrip,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{diffraction_default, Density};
    use crate::phaseforms::{make_elementary, same_phase_form, trivial_form};
    use crate::relators::relator_lattice;

    fn z6_model(angle: f64) -> ProcessModel {
        let g = Group::new(&[6]).unwrap();
        let rho = Density::from_real(&g, &[11.0, 25.0, 42.0, 45.0, 31.0, 14.0]).unwrap();
        let omega = diffraction_default(&rho);
        let spectrum = bragg_spectrum(&omega).unwrap();
        let basis = canonical_basis(&spectrum);
        let form = make_elementary(&basis, &[Turn::real(angle)], &[]).unwrap();
        build_process(&omega, &form).unwrap()
    }

    #[test]
    fn state_space_matches_generated_subgroup() {
        let model = z6_model(0.25);
        assert_eq!(model.state_space().len(), 6);
        assert_eq!(model.spectrum().len(), 3);
    }

    #[test]
    fn verify_passes_on_z6() {
        let model = z6_model(0.443099);
        let report = verify(&model, 7, 3).unwrap();
        assert!(
            report.passes(1e-8),
            "max residual {}",
            report.max_residual()
        );
    }

    #[test]
    fn verify_passes_with_torsion() {
        let g = Group::new(&[4]).unwrap();
        let rho = Density::from_real(&g, &[5.0, 1.0, 2.0, 3.0]).unwrap();
        let omega = diffraction_default(&rho);
        let spectrum = bragg_spectrum(&omega).unwrap();
        let basis = canonical_basis(&spectrum);
        assert_eq!((basis.p(), basis.q()), (1, 1));
        let form = make_elementary(&basis, &[Turn::real(0.37)], &[-1]).unwrap();
        let model = build_process(&omega, &form).unwrap();
        let report = verify(&model, 11, 3).unwrap();
        assert!(
            report.passes(1e-8),
            "max residual {}",
            report.max_residual()
        );
    }

    #[test]
    fn two_point_recovers_autocorrelation() {
        let model = z6_model(0.1);
        let gamma = autocorrelation(&model.density().unwrap());
        let tp = two_point_correlation(&model).unwrap();
        for (a, b) in tp.values().iter().zip(gamma.values()) {
            assert!((a - b).norm() < 1e-8 * gamma.max_abs());
        }
    }

    #[test]
    fn moment_formula_matches_direct_average() {
        let model = z6_model(0.443099);
        let g = model.group().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for m in 0..=4usize {
            let fs: Vec<GroupFunction> =
                (0..m).map(|_| random_function(&g, &mut rng)).collect();
            let r = moment_formula_check(&model, &fs).unwrap();
            assert!(r < 1e-10, "order {m} residual {r}");
        }
    }

    #[test]
    fn moment_guards_trip() {
        let model = z6_model(0.0);
        let g = model.group().clone();
        let ones: Vec<GroupFunction> = (0..9)
            .map(|_| GroupFunction::indicator(&g, &g.zero()))
            .collect();
        assert!(matches!(
            process_moment(&model, &ones),
            Err(Error::CostGuard(_))
        ));
    }

    #[test]
    fn phase_recovery_roundtrips() {
        let model = z6_model(0.443099);
        let rec = extract_phase_data(&model).unwrap();
        let lat = relator_lattice(model.basis()).unwrap();
        assert!(same_phase_form(&rec, model.form(), &lat).unwrap());
        let one = model.group().element(&[1]).unwrap();
        let d = (rec.evaluate(&one).unwrap() - model.form().evaluate(&one).unwrap()).norm();
        assert!(d < 1e-12);
    }

    #[test]
    fn translation_is_found_and_respected() {
        let model = z6_model(0.443099);
        let g = model.group().clone();
        let u = g.element(&[2]).unwrap();
        let twisted = model.form().twist(&u).unwrap();
        let found = find_translation(model.form(), &twisted).unwrap();
        assert_eq!(found, Some(u));
        // Distinct classes admit no translation.
        let other = make_elementary(model.basis(), &[Turn::real(0.520310)], &[]).unwrap();
        assert_eq!(find_translation(model.form(), &other).unwrap(), None);
    }

    #[test]
    fn indicator_image_reflects_density() {
        // The indicator image is a reflected conjugate copy of the density,
        // scaled by 1/|G|; with a real density the conjugation drops out.
        let model = z6_model(0.0);
        let basis = model.basis().clone();
        let form = trivial_form(&basis);
        let model = build_process(model.omega(), &form).unwrap();
        let rho = model.density().unwrap();
        assert!(rho.is_real(1e-10));
        let g = model.group().clone();
        let n0 = model.apply_n(&GroupFunction::indicator(&g, &g.zero())).unwrap();
        for (rep, v) in model.state_space().reps().zip(&n0) {
            let want = rho.weight(&g.neg(&rep)) / g.order() as f64;
            assert!((v - want).norm() < 1e-10);
        }
    }

    #[test]
    fn spectral_measure_flags_off_span_component() {
        // Support {0,1,5} of Z/6 spans only 3 of the 6 state dimensions, so a
        // generic state has an off-span part.
        let model = z6_model(0.2);
        let mut v = vec![C64::new(0.0, 0.0); 6];
        v[0] = C64::new(1.0, 0.0);
        let sm = spectral_measure(&model, &v).unwrap();
        assert!(sm.off_span > 0.1);
        let w = model.theta(&[C64::new(0.3, 0.1); 3].to_vec()).unwrap();
        let sm = spectral_measure(&model, &w).unwrap();
        assert!(sm.off_span < 1e-12);
    }
}
