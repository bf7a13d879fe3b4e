//! Phase forms: consistent unit phases on a diffraction support.
//!
//! An elementary phase form assigns `a(k)` on the unit circle to each support
//! point, with `a(0) = 1` and `a(-k) = conj(a(k))` built in structurally: the
//! data is one free angle per plus/minus pair representative and one sign per
//! order-two point. Evaluation extends multiplicatively over symbol-group
//! elements ([`FsVector`]); restricted to the relator lattice this is the
//! *moment content* of the form. Two forms are the same exactly when they
//! agree on the lattice, and the group of forms modulo characters of the
//! generated subgroup — the classes of the homometry problem — is computed
//! here as an explicit product of circles and finite cyclic factors.
//!
//! Angles are [`Turn`]s: rational inputs evaluate exactly, so golden cases
//! with root-of-unity phases compare without tolerance.

use crate::abelian::Element;
use crate::error::{Error, Result};
use crate::lattice;
use crate::relators::{relators_up_to, FsVector, GeneratorBasis, RelatorLattice, SymbolRole};
use crate::turn::Turn;
use crate::C64;

/// Tolerance, in radians, for phase comparisons.
pub const PHASE_TOL: f64 = 1e-10;

/// Tolerance, in radians, for declaring moment tables divergent.
pub const MOMENT_TOL: f64 = 1e-9;

/// A phase form given by free angles and torsion signs on a generator basis.
///
/// `a(0) = 1` is structural: the zero point carries no parameter, so no
/// builder can assign it `-1`.
#[derive(Clone, Debug)]
pub struct ElementaryPhaseForm {
    basis: GeneratorBasis,
    free_angles: Vec<Turn>,
    torsion_signs: Vec<i8>,
}

/// Phase form with the given angles (turns) and signs (`+1`/`-1`).
pub fn make_elementary(
    basis: &GeneratorBasis,
    free_angles: &[Turn],
    torsion_signs: &[i8],
) -> Result<ElementaryPhaseForm> {
    if free_angles.len() != basis.p() || torsion_signs.len() != basis.q() {
        return Err(Error::BasisMismatch(format!(
            "got {} angles and {} signs for a basis with p={}, q={}",
            free_angles.len(),
            torsion_signs.len(),
            basis.p(),
            basis.q()
        )));
    }
    if let Some(&s) = torsion_signs.iter().find(|&&s| s != 1 && s != -1) {
        return Err(Error::Invalid(format!("torsion sign must be +1 or -1, got {s}")));
    }
    Ok(ElementaryPhaseForm {
        basis: basis.clone(),
        free_angles: free_angles.to_vec(),
        torsion_signs: torsion_signs.to_vec(),
    })
}

/// The form with every angle zero and every sign positive.
pub fn trivial_form(basis: &GeneratorBasis) -> ElementaryPhaseForm {
    ElementaryPhaseForm {
        basis: basis.clone(),
        free_angles: vec![Turn::ZERO; basis.p()],
        torsion_signs: vec![1; basis.q()],
    }
}

impl ElementaryPhaseForm {
    pub fn basis(&self) -> &GeneratorBasis {
        &self.basis
    }

    pub fn free_angles(&self) -> &[Turn] {
        &self.free_angles
    }

    pub fn torsion_signs(&self) -> &[i8] {
        &self.torsion_signs
    }

    fn sign_turn(&self, index: usize) -> Turn {
        if self.torsion_signs[index] < 0 {
            Turn::HALF
        } else {
            Turn::ZERO
        }
    }

    /// Angle of `a(k)` for a support point `k`.
    pub fn evaluate_turn(&self, k: &Element) -> Result<Turn> {
        Ok(match self.basis.role(k)? {
            SymbolRole::Zero => Turn::ZERO,
            SymbolRole::Free { index, sign } => {
                if sign > 0 {
                    self.free_angles[index]
                } else {
                    self.free_angles[index].neg()
                }
            }
            SymbolRole::Torsion { index } => self.sign_turn(index),
        })
    }

    /// `a(k)` for a support point `k`.
    pub fn evaluate(&self, k: &Element) -> Result<C64> {
        Ok(self.evaluate_turn(k)?.to_complex())
    }

    /// Angle of the multiplicative extension on a symbol-group element.
    pub fn evaluate_vector_turn(&self, v: &FsVector) -> Result<Turn> {
        if v.free.len() != self.basis.p() || v.torsion.len() != self.basis.q() {
            return Err(Error::BasisMismatch(
                "vector shape differs from phase form basis".into(),
            ));
        }
        let mut t = Turn::ZERO;
        for (angle, &c) in self.free_angles.iter().zip(&v.free) {
            t = t.add(angle.scale(c));
        }
        for (j, &b) in v.torsion.iter().enumerate() {
            t = t.add(self.sign_turn(j).scale(b as i64));
        }
        Ok(t)
    }

    /// Multiplicative extension on a symbol-group element.
    pub fn evaluate_vector(&self, v: &FsVector) -> Result<C64> {
        Ok(self.evaluate_vector_turn(v)?.to_complex())
    }

    /// Angle on an integer coordinate row over `Z^(p+q)`.
    fn row_turn(&self, row: &[i128]) -> Turn {
        let mut t = Turn::ZERO;
        for (angle, &c) in self.free_angles.iter().zip(row.iter()) {
            t = t.add(angle.scale(c as i64));
        }
        for (j, &c) in row[self.basis.p()..].iter().enumerate() {
            t = t.add(self.sign_turn(j).scale(c as i64));
        }
        t
    }

    /// The form `k -> pairing(k, u) a(k)`: same class, different sample.
    pub fn twist(&self, u: &Element) -> Result<ElementaryPhaseForm> {
        let g = self.basis.group();
        if u.coords().len() != g.rank() {
            return Err(Error::RankMismatch {
                expected: g.rank(),
                got: u.coords().len(),
            });
        }
        let free_angles: Vec<Turn> = self
            .free_angles
            .iter()
            .zip(self.basis.free_reps())
            .map(|(a, rep)| a.add(g.pairing_turn(rep, u)))
            .collect();
        let torsion_signs: Vec<i8> = self
            .torsion_signs
            .iter()
            .zip(self.basis.torsion_gens())
            .map(|(&s, gen)| {
                let t = g.pairing_turn(gen, u);
                // An order-two character value is exactly +1 or -1.
                if t.is_exactly_zero() {
                    s
                } else {
                    debug_assert!(matches!(t, Turn::Exact { num: 1, den: 2 }));
                    -s
                }
            })
            .collect();
        Ok(ElementaryPhaseForm {
            basis: self.basis.clone(),
            free_angles,
            torsion_signs,
        })
    }
}

fn check_same_basis(a: &ElementaryPhaseForm, b: &ElementaryPhaseForm) -> Result<()> {
    if a.basis.spectrum() != b.basis.spectrum() {
        return Err(Error::BasisMismatch(
            "phase forms live on different supports".into(),
        ));
    }
    Ok(())
}

fn check_lattice_basis(a: &ElementaryPhaseForm, lat: &RelatorLattice) -> Result<()> {
    if a.basis.spectrum() != lat.basis().spectrum() {
        return Err(Error::BasisMismatch(
            "phase form and lattice live on different supports".into(),
        ));
    }
    Ok(())
}

/// Whether the form kills every relator of reduced length at most `m`
/// (cumulative). With `exact_length` only relators representable by a tuple
/// of length exactly `m` count: those of length `l <= m` with `m - l` even,
/// or any `l <= m` when zero is in the support (padding with zeros).
pub fn moment_condition(
    a: &ElementaryPhaseForm,
    lat: &RelatorLattice,
    m: u64,
    exact_length: bool,
) -> Result<bool> {
    check_lattice_basis(a, lat)?;
    let zero_in = a.basis.zero_in_spectrum();
    for v in relators_up_to(lat, m)? {
        let l = v.reduced_length();
        if exact_length && !zero_in && (m - l) % 2 != 0 {
            continue;
        }
        if !a.evaluate_vector_turn(&v)?.phase_close(Turn::ZERO, PHASE_TOL) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether two forms define the same phase form: their ratio kills the
/// relator lattice.
pub fn same_phase_form(
    a: &ElementaryPhaseForm,
    b: &ElementaryPhaseForm,
    lat: &RelatorLattice,
) -> Result<bool> {
    check_same_basis(a, b)?;
    check_lattice_basis(a, lat)?;
    Ok(lat
        .hnf_rows()
        .iter()
        .all(|row| a.row_turn(row).phase_close(b.row_turn(row), PHASE_TOL)))
}

/// Whether the form extends to a character of the generated subgroup, i.e.
/// kills the whole relator lattice.
pub fn extends_to_character(a: &ElementaryPhaseForm, lat: &RelatorLattice) -> Result<bool> {
    check_lattice_basis(a, lat)?;
    Ok(lat
        .hnf_rows()
        .iter()
        .all(|row| a.row_turn(row).phase_close(Turn::ZERO, PHASE_TOL)))
}

/// Values of a form on all relators up to a reduced length.
#[derive(Clone, Debug)]
pub struct MomentTable {
    pub m: u64,
    pub entries: Vec<(FsVector, Turn)>,
}

impl MomentTable {
    pub fn values(&self) -> impl Iterator<Item = (&FsVector, C64)> + '_ {
        self.entries.iter().map(|(v, t)| (v, t.to_complex()))
    }
}

/// Moment table of the form through reduced length `m`.
pub fn moments(a: &ElementaryPhaseForm, lat: &RelatorLattice, m: u64) -> Result<MomentTable> {
    check_lattice_basis(a, lat)?;
    let entries = relators_up_to(lat, m)?
        .into_iter()
        .map(|v| {
            let t = a.evaluate_vector_turn(&v)?;
            Ok((v, t))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MomentTable { m, entries })
}

/// Least reduced length `m <= m_max` at which the moment tables of two forms
/// differ, or `None` when they agree through `m_max`.
pub fn first_divergent_moment(
    a: &ElementaryPhaseForm,
    b: &ElementaryPhaseForm,
    lat: &RelatorLattice,
    m_max: u64,
) -> Result<Option<u64>> {
    check_same_basis(a, b)?;
    check_lattice_basis(a, lat)?;
    let mut first: Option<u64> = None;
    for v in relators_up_to(lat, m_max)? {
        let ta = a.evaluate_vector_turn(&v)?;
        let tb = b.evaluate_vector_turn(&v)?;
        if !ta.phase_close(tb, MOMENT_TOL) {
            let l = v.reduced_length();
            first = Some(first.map_or(l, |f| f.min(l)));
        }
    }
    Ok(first)
}

/// The group of phase forms modulo characters: a product of circles and
/// finite cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseGroupStructure {
    pub circle_rank: usize,
    pub finite_factors: Vec<u64>,
}

impl std::fmt::Display for PhaseGroupStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.circle_rank {
            0 => {}
            1 => parts.push("U(1)".to_string()),
            r => parts.push(format!("U(1)^{r}")),
        }
        for d in &self.finite_factors {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "trivial")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Structure of the class group: the dual of the relator group modulo the
/// doubled torsion axes. One circle per free invariant, one finite cyclic
/// factor per nontrivial elementary divisor.
pub fn phase_group_structure(lat: &RelatorLattice) -> Result<PhaseGroupStructure> {
    let n = lat.basis().dim();
    let q = lat.basis().q();
    if n == 0 {
        return Ok(PhaseGroupStructure {
            circle_rank: 0,
            finite_factors: Vec::new(),
        });
    }
    if q == 0 {
        return Ok(PhaseGroupStructure {
            circle_rank: n,
            finite_factors: Vec::new(),
        });
    }
    // Express the doubled torsion axes in the lattice basis and take the
    // Smith form of the resulting coordinate matrix.
    let p = lat.basis().p();
    let mut rows = Vec::with_capacity(q);
    for t in 0..q {
        let mut v = vec![0i128; n];
        v[p + t] = 2;
        let coords = lattice::coords_in_basis(lat.hnf_rows(), &v).ok_or_else(|| {
            Error::Contract("doubled torsion axis escapes the relator lattice".into())
        })?;
        rows.push(coords);
    }
    let diag = lattice::snf_diagonal(rows);
    let circle_rank = n - diag.len();
    let finite_factors: Vec<u64> = diag
        .iter()
        .filter(|&&d| d > 1)
        .map(|&d| d as u64)
        .collect();
    Ok(PhaseGroupStructure {
        circle_rank,
        finite_factors,
    })
}
