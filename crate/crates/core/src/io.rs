//! JSON and CSV interchange for the public types.
//!
//! JSON is the canonical format; CSV is provided for plot-ready tables only.
//! All serializers are deterministic: struct fields keep declaration order
//! and floats print in shortest-roundtrip form, so equal inputs give byte
//! identical output.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::abelian::{Group, GroupFunction};
use crate::density::{BraggSpectrum, Density, PointMeasure};
use crate::error::{Error, Result};
use crate::inverse::{ExtractedPhase, FamilyDescription};
use crate::phaseforms::{make_elementary, ElementaryPhaseForm};
use crate::relators::{canonical_basis, GeneratorBasis};
use crate::turn::Turn;
use crate::{C64, DEFAULT_REL_TOL};

/// A complex value: either a bare real or an `[re, im]` pair.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexJson {
    Real(f64),
    Pair([f64; 2]),
}

impl ComplexJson {
    fn to_complex(self) -> C64 {
        match self {
            ComplexJson::Real(re) => C64::new(re, 0.0),
            ComplexJson::Pair([re, im]) => C64::new(re, im),
        }
    }
}

/// A weighted density on `Z/m_1 x ... x Z/m_d`, weights in element order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DensityJson {
    pub moduli: Vec<i64>,
    pub weights: Vec<ComplexJson>,
}

/// A nonnegative point measure, weights in element order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointMeasureJson {
    pub moduli: Vec<i64>,
    pub weights: Vec<f64>,
    /// Relative extinction threshold; defaults to 1e-9 when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

/// A complex function on the group, values in element order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFunctionJson {
    pub moduli: Vec<i64>,
    pub values: Vec<[f64; 2]>,
}

/// A canonical generator basis of a diffraction support.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisJson {
    pub moduli: Vec<i64>,
    pub zero_in_spectrum: bool,
    pub free_reps: Vec<Vec<i64>>,
    pub torsion_gens: Vec<Vec<i64>>,
}

/// A phase form: angles in turns on the free generators, signs on the
/// order-two generators.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhaseFormJson {
    pub basis: BasisJson,
    pub free_angles: Vec<f64>,
    pub torsion_signs: Vec<i8>,
}

/// Extraction result: diffraction, phase form, and the sign flag.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtractedPhaseJson {
    pub omega: PointMeasureJson,
    pub form: PhaseFormJson,
    pub negated: bool,
}

/// Input for the circle-family check: `(frequency, angle in turns)` pairs
/// covering both signs, plus the coefficient window to scan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CircleInputJson {
    pub values: Vec<(i64, f64)>,
    pub window: i64,
}

/// Solution-family summary with one sample density.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyReportJson {
    pub p: usize,
    pub q: usize,
    pub class_group: String,
    pub generates_full_dual: bool,
    pub sample: DensityJson,
}

/// Parse a JSON string into any deserializable type.
pub fn parse_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Invalid(format!("malformed JSON: {e}")))
}

/// Pretty-print any serializable value, with a trailing newline.
pub fn to_json_string<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)
        .map_err(|e| Error::Invalid(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn density_to_json(rho: &Density) -> DensityJson {
    DensityJson {
        moduli: rho.group().moduli().to_vec(),
        weights: rho
            .weights()
            .iter()
            .map(|z| {
                if z.im == 0.0 {
                    ComplexJson::Real(z.re)
                } else {
                    ComplexJson::Pair([z.re, z.im])
                }
            })
            .collect(),
    }
}

pub fn density_from_json(j: &DensityJson, cap: u64) -> Result<Density> {
    let g = Group::with_cap(&j.moduli, cap)?;
    let weights = j.weights.iter().map(|w| w.to_complex()).collect();
    Density::new(&g, weights)
}

pub fn point_measure_to_json(m: &PointMeasure) -> PointMeasureJson {
    PointMeasureJson {
        moduli: m.group().moduli().to_vec(),
        weights: m.weights().to_vec(),
        tol: Some(m.rel_tol()),
    }
}

pub fn point_measure_from_json(j: &PointMeasureJson, cap: u64) -> Result<PointMeasure> {
    let g = Group::with_cap(&j.moduli, cap)?;
    PointMeasure::new(&g, j.weights.clone(), j.tol.unwrap_or(DEFAULT_REL_TOL))
}

pub fn function_to_json(f: &GroupFunction) -> GroupFunctionJson {
    GroupFunctionJson {
        moduli: f.group().moduli().to_vec(),
        values: f.values().iter().map(|z| [z.re, z.im]).collect(),
    }
}

pub fn function_from_json(j: &GroupFunctionJson, cap: u64) -> Result<GroupFunction> {
    let g = Group::with_cap(&j.moduli, cap)?;
    let values = j.values.iter().map(|[re, im]| C64::new(*re, *im)).collect();
    GroupFunction::new(&g, values)
}

pub fn basis_to_json(basis: &GeneratorBasis) -> BasisJson {
    BasisJson {
        moduli: basis.group().moduli().to_vec(),
        zero_in_spectrum: basis.zero_in_spectrum(),
        free_reps: basis
            .free_reps()
            .iter()
            .map(|e| e.coords().to_vec())
            .collect(),
        torsion_gens: basis
            .torsion_gens()
            .iter()
            .map(|e| e.coords().to_vec())
            .collect(),
    }
}

/// Rebuild a basis from its JSON form. The support is reassembled from the
/// listed generators and the result must be in canonical form: a basis that
/// disagrees with the canonical one for its own support is refused.
pub fn basis_from_json(j: &BasisJson, cap: u64) -> Result<GeneratorBasis> {
    let g = Group::with_cap(&j.moduli, cap)?;
    let mut pts = Vec::new();
    if j.zero_in_spectrum {
        pts.push(g.zero());
    }
    for c in &j.free_reps {
        let e = g.element(c)?;
        pts.push(g.neg(&e));
        pts.push(e);
    }
    for c in &j.torsion_gens {
        pts.push(g.element(c)?);
    }
    let spectrum = BraggSpectrum::from_points(&g, &pts)?;
    let basis = canonical_basis(&spectrum);
    let reps: Vec<Vec<i64>> = basis
        .free_reps()
        .iter()
        .map(|e| e.coords().to_vec())
        .collect();
    let gens: Vec<Vec<i64>> = basis
        .torsion_gens()
        .iter()
        .map(|e| e.coords().to_vec())
        .collect();
    let want_reps: Vec<Vec<i64>> = j
        .free_reps
        .iter()
        .map(|c| Ok(g.element(c)?.coords().to_vec()))
        .collect::<Result<_>>()?;
    let want_gens: Vec<Vec<i64>> = j
        .torsion_gens
        .iter()
        .map(|c| Ok(g.element(c)?.coords().to_vec()))
        .collect::<Result<_>>()?;
    if reps != want_reps || gens != want_gens {
        return Err(Error::Invalid(
            "basis fields are not in canonical form for their support".into(),
        ));
    }
    Ok(basis)
}

pub fn form_to_json(form: &ElementaryPhaseForm) -> PhaseFormJson {
    PhaseFormJson {
        basis: basis_to_json(form.basis()),
        free_angles: form.free_angles().iter().map(|t| t.value()).collect(),
        torsion_signs: form.torsion_signs().to_vec(),
    }
}

pub fn form_from_json(j: &PhaseFormJson, cap: u64) -> Result<ElementaryPhaseForm> {
    let basis = basis_from_json(&j.basis, cap)?;
    let angles: Vec<Turn> = j.free_angles.iter().map(|&t| Turn::real(t)).collect();
    make_elementary(&basis, &angles, &j.torsion_signs)
}

pub fn extracted_to_json(ex: &ExtractedPhase) -> ExtractedPhaseJson {
    ExtractedPhaseJson {
        omega: point_measure_to_json(&ex.omega),
        form: form_to_json(&ex.form),
        negated: ex.negated,
    }
}

pub fn family_report(family: &FamilyDescription, sample: &Density) -> FamilyReportJson {
    FamilyReportJson {
        p: family.p(),
        q: family.q(),
        class_group: family.class_group().to_string(),
        generates_full_dual: family.generates_full_dual(),
        sample: density_to_json(sample),
    }
}

fn coord_header(rank: usize) -> String {
    (0..rank)
        .map(|i| format!("x{i}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn coord_row(coords: &[i64]) -> String {
    coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One row per group element: coordinates, then the weight.
pub fn point_measure_csv(m: &PointMeasure) -> String {
    let g = m.group();
    let mut out = format!("{},weight\n", coord_header(g.rank()));
    for (x, w) in g.elements().zip(m.weights()) {
        out.push_str(&format!("{},{}\n", coord_row(x.coords()), w));
    }
    out
}

/// One row per group element: coordinates, then real and imaginary parts.
pub fn function_csv(f: &GroupFunction) -> String {
    let g = f.group();
    let mut out = format!("{},re,im\n", coord_header(g.rank()));
    for (x, z) in g.elements().zip(f.values()) {
        out.push_str(&format!("{},{},{}\n", coord_row(x.coords()), z.re, z.im));
    }
    out
}

/// One row per group element: coordinates, then real and imaginary parts.
pub fn density_csv(rho: &Density) -> String {
    function_csv(&rho.as_function())
}

/// Weight curves along the first circle parameter: rows `t, w_0, ..., w_n`
/// with `t` sweeping `[0, 1)` in `samples` steps, other parameters held at
/// their trivial values.
pub fn family_sweep_csv(family: &FamilyDescription, samples: usize) -> Result<String> {
    if family.p() == 0 {
        return Err(Error::Invalid(
            "family has no circle parameter to sweep".into(),
        ));
    }
    if samples == 0 {
        return Err(Error::Invalid("need at least one sample".into()));
    }
    let g = family.basis().group();
    let mut out = String::from("t");
    for i in 0..g.order() {
        out.push_str(&format!(",w{i}"));
    }
    out.push('\n');
    let signs = vec![1i8; family.q()];
    let mut angles = vec![Turn::ZERO; family.p()];
    for i in 0..samples {
        let t = i as f64 / samples as f64;
        angles[0] = Turn::real(t);
        let rho = family.sample(&angles, &signs)?;
        out.push_str(&t.to_string());
        for w in rho.weights() {
            out.push_str(&format!(",{}", w.re));
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{diffraction_default, phase_coefficient};
    use crate::inverse::{extract_phase_from_density, solve_family};

    fn z6() -> Density {
        let g = Group::new(&[6]).unwrap();
        Density::from_real(&g, &[11.0, 25.0, 42.0, 45.0, 31.0, 14.0]).unwrap()
    }

    #[test]
    fn density_json_accepts_bare_reals_and_pairs() {
        let j: DensityJson = parse_json(
            r#"{"moduli":[2,3],"weights":[1,2,[0.5,-1.5],4,5,6]}"#,
        )
        .unwrap();
        let rho = density_from_json(&j, 1000).unwrap();
        assert_eq!(rho.weight(&rho.group().element(&[0, 2]).unwrap()), C64::new(0.5, -1.5));
        let back = density_to_json(&rho);
        let again = density_from_json(&back, 1000).unwrap();
        assert_eq!(rho.weights(), again.weights());
    }

    #[test]
    fn malformed_json_is_a_validation_error() {
        let r: Result<DensityJson> = parse_json("{nope");
        assert!(matches!(r, Err(Error::Invalid(_))));
        let r: Result<DensityJson> = parse_json(r#"{"moduli":[2]}"#);
        assert!(r.is_err());
    }

    #[test]
    fn point_measure_roundtrip_keeps_tolerance() {
        let rho = z6();
        let omega = diffraction_default(&rho);
        let j = point_measure_to_json(&omega);
        let back = point_measure_from_json(&j, 1000).unwrap();
        assert_eq!(omega.weights(), back.weights());
        assert_eq!(omega.rel_tol(), back.rel_tol());
        // tol is optional on input
        let j: PointMeasureJson =
            parse_json(r#"{"moduli":[2],"weights":[1.0,1.0]}"#).unwrap();
        let m = point_measure_from_json(&j, 1000).unwrap();
        assert_eq!(m.rel_tol(), DEFAULT_REL_TOL);
    }

    #[test]
    fn form_roundtrip_preserves_evaluation() {
        let rho = z6();
        let ex = extract_phase_from_density(&rho, 1e-9).unwrap();
        let j = form_to_json(&ex.form);
        let back = form_from_json(&j, 1000).unwrap();
        let g = rho.group();
        for k in g.elements() {
            if ex.omega.weight(&k) > ex.omega.threshold() {
                let a = ex.form.evaluate(&k).unwrap();
                let b = back.evaluate(&k).unwrap();
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn noncanonical_basis_json_is_refused() {
        let rho = z6();
        let ex = extract_phase_from_density(&rho, 1e-9).unwrap();
        let mut j = form_to_json(&ex.form);
        // {0, 1, 5} has canonical representative 1, not 5.
        j.basis.free_reps = vec![vec![5]];
        assert!(matches!(
            form_from_json(&j, 1000),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn csv_tables_are_stable() {
        let g = Group::new(&[2]).unwrap();
        let m = PointMeasure::new(&g, vec![2.0, 0.0], 1e-9).unwrap();
        assert_eq!(point_measure_csv(&m), "x0,weight\n0,2\n1,0\n");
        let f = GroupFunction::new(&g, vec![C64::new(1.5, 0.0), C64::new(0.0, -2.0)]).unwrap();
        assert_eq!(function_csv(&f), "x0,re,im\n0,1.5,0\n1,0,-2\n");
    }

    #[test]
    fn sweep_rows_sample_the_circle() {
        let rho = z6();
        let family = solve_family(&diffraction_default(&rho)).unwrap();
        let csv = family_sweep_csv(&family, 10).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 11);
        assert_eq!(lines[0], "t,w0,w1,w2,w3,w4,w5");
        assert!(lines[1].starts_with("0,"));
        // every sampled density keeps the diffraction
        let sample = family.sample(&[Turn::real(0.3)], &[]).unwrap();
        let c = phase_coefficient(&sample, &rho.group().zero());
        assert!((c.re - 28.0).abs() < 1e-9);
    }

    #[test]
    fn deterministic_serialization() {
        let rho = z6();
        let a = to_json_string(&density_to_json(&rho)).unwrap();
        let b = to_json_string(&density_to_json(&rho)).unwrap();
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
    }
}
