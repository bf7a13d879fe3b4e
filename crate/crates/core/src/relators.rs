//! Relator combinatorics of a diffraction support.
//!
//! A centrally symmetric support `S` in the dual group carries one abstract
//! symbol per point, subject to: the symbol of `0` is the identity and the
//! symbols of `k` and `-k` are mutually inverse. Splitting `S` into the zero
//! point, `q` points of order two, and `p` plus/minus pairs shows the symbol
//! group is `Z^p x (Z/2)^q`; an element is an [`FsVector`]: an integer
//! exponent per pair representative and a bit per order-two point. Sending
//! each symbol to its dual point is [`sum_map`]; its kernel is the *relator
//! lattice*, the invariant that decides when two phase assignments on `S`
//! agree.
//!
//! Subgroups of `Z^p x (Z/2)^q` are handled as integer lattices in `Z^(p+q)`
//! containing the doubled torsion axes, compared through their Hermite normal
//! forms. The reduced length of an [`FsVector`] (L1 norm of the free part
//! plus the number of set bits) equals the shortest symbol tuple representing
//! it, so "relators of length at most n" is a finite enumeration.

use crate::abelian::{subgroup_generated, Element, Group, Subgroup};
use crate::density::BraggSpectrum;
use crate::error::{Error, Result};
use crate::lattice::{self, Mat};

/// Cap on `p + q` for lattice enumerations.
pub const MAX_BASIS_DIM: usize = 12;
/// Cap on the reduced length for relator enumerations.
pub const MAX_RELATOR_LENGTH: u64 = 12;

/// How a support point enters the generator basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolRole {
    /// The zero character; its symbol is the identity.
    Zero,
    /// Representative (`sign = +1`) or inverse (`sign = -1`) of pair `index`.
    Free { index: usize, sign: i8 },
    /// Order-two point `index`.
    Torsion { index: usize },
}

/// Canonical generator choice for a symmetric support: order-two points in
/// element order, and the lexicographically smaller member of each
/// plus/minus pair as its representative.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorBasis {
    group: Group,
    spectrum: BraggSpectrum,
    zero_in: bool,
    free_reps: Vec<Element>,
    torsion_gens: Vec<Element>,
    roles: Vec<Option<SymbolRole>>,
}

pub fn canonical_basis(spectrum: &BraggSpectrum) -> GeneratorBasis {
    let g = spectrum.group().clone();
    let mut roles: Vec<Option<SymbolRole>> = vec![None; g.order()];
    let mut free_reps = Vec::new();
    let mut torsion_gens = Vec::new();
    for k in spectrum.points() {
        let ki = g.index_of(&k);
        if roles[ki].is_some() {
            continue;
        }
        if g.is_zero(&k) {
            roles[ki] = Some(SymbolRole::Zero);
        } else if g.is_zero(&g.add(&k, &k)) {
            roles[ki] = Some(SymbolRole::Torsion {
                index: torsion_gens.len(),
            });
            torsion_gens.push(k);
        } else {
            let nk = g.neg(&k);
            // Spectrum points come in element order, so k < -k here.
            debug_assert!(ki < g.index_of(&nk));
            roles[ki] = Some(SymbolRole::Free {
                index: free_reps.len(),
                sign: 1,
            });
            roles[g.index_of(&nk)] = Some(SymbolRole::Free {
                index: free_reps.len(),
                sign: -1,
            });
            free_reps.push(k);
        }
    }
    GeneratorBasis {
        group: g,
        spectrum: spectrum.clone(),
        zero_in: spectrum.zero_in(),
        free_reps,
        torsion_gens,
        roles,
    }
}

impl GeneratorBasis {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn spectrum(&self) -> &BraggSpectrum {
        &self.spectrum
    }

    /// Number of plus/minus pairs.
    pub fn p(&self) -> usize {
        self.free_reps.len()
    }

    /// Number of order-two points.
    pub fn q(&self) -> usize {
        self.torsion_gens.len()
    }

    /// Total coordinate dimension `p + q`.
    pub fn dim(&self) -> usize {
        self.p() + self.q()
    }

    pub fn zero_in_spectrum(&self) -> bool {
        self.zero_in
    }

    pub fn free_reps(&self) -> &[Element] {
        &self.free_reps
    }

    pub fn torsion_gens(&self) -> &[Element] {
        &self.torsion_gens
    }

    /// Role of a support point.
    pub fn role(&self, k: &Element) -> Result<SymbolRole> {
        self.roles[self.group.index_of(k)]
            .ok_or_else(|| Error::OutsideSpectrum(k.to_string()))
    }

    /// The partition check `|S| = 2p + q + [0 in S]`.
    pub fn partition_consistent(&self) -> bool {
        self.spectrum.len() == 2 * self.p() + self.q() + usize::from(self.zero_in)
    }

    /// Subgroup of the dual generated by the support.
    pub fn generated_subgroup(&self) -> Subgroup {
        let pts: Vec<Element> = self.spectrum.points().collect();
        subgroup_generated(&self.group, &pts).expect("points live on the dual")
    }

    /// Zero-based identity vector.
    pub fn identity_vector(&self) -> FsVector {
        FsVector {
            free: vec![0; self.p()],
            torsion: vec![0; self.q()],
        }
    }
}

/// An element of the symbol group `Z^p x (Z/2)^q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FsVector {
    pub free: Vec<i64>,
    pub torsion: Vec<u8>,
}

impl FsVector {
    /// Shortest representing tuple length: L1 of the free part plus the
    /// number of set torsion bits.
    pub fn reduced_length(&self) -> u64 {
        let l1: u64 = self.free.iter().map(|v| v.unsigned_abs()).sum();
        let bits: u64 = self.torsion.iter().map(|&b| u64::from(b)).sum();
        l1 + bits
    }

    pub fn is_identity(&self) -> bool {
        self.free.iter().all(|&v| v == 0) && self.torsion.iter().all(|&b| b == 0)
    }

    fn as_int_row(&self) -> Vec<i128> {
        self.free
            .iter()
            .map(|&v| v as i128)
            .chain(self.torsion.iter().map(|&b| b as i128))
            .collect()
    }
}

impl std::fmt::Display for FsVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.free.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v:+}")?;
        }
        if !self.torsion.is_empty() {
            write!(f, " |")?;
            for b in &self.torsion {
                write!(f, " {b}")?;
            }
        }
        write!(f, "]")
    }
}

/// Abelianised word: the symbol-group element of a tuple of support points.
pub fn tuple_to_vector(basis: &GeneratorBasis, tuple: &[Element]) -> Result<FsVector> {
    let mut v = basis.identity_vector();
    for k in tuple {
        match basis.role(k)? {
            SymbolRole::Zero => {}
            SymbolRole::Free { index, sign } => v.free[index] += sign as i64,
            SymbolRole::Torsion { index } => v.torsion[index] ^= 1,
        }
    }
    Ok(v)
}

/// Image of a symbol-group element in the dual group.
pub fn sum_map(basis: &GeneratorBasis, v: &FsVector) -> Result<Element> {
    if v.free.len() != basis.p() || v.torsion.len() != basis.q() {
        return Err(Error::BasisMismatch(format!(
            "vector of shape ({}, {}) against basis of shape ({}, {})",
            v.free.len(),
            v.torsion.len(),
            basis.p(),
            basis.q()
        )));
    }
    let g = basis.group();
    let mut acc = g.zero();
    for (c, rep) in v.free.iter().zip(basis.free_reps()) {
        acc = g.add(&acc, &g.scale(rep, *c));
    }
    for (b, gen) in v.torsion.iter().zip(basis.torsion_gens()) {
        if *b != 0 {
            acc = g.add(&acc, gen);
        }
    }
    Ok(acc)
}

/// Kernel of [`sum_map`] as a canonical integer lattice in `Z^(p+q)`.
///
/// The lattice always contains the doubled torsion axes, has full rank
/// `p + q`, and its index in `Z^(p+q)` equals the order of the subgroup
/// generated by the support.
#[derive(Clone, Debug, PartialEq)]
pub struct RelatorLattice {
    basis: GeneratorBasis,
    hnf: Mat,
    index: i128,
}

pub fn relator_lattice(basis: &GeneratorBasis) -> Result<RelatorLattice> {
    let n = basis.dim();
    let g = basis.group();
    let d = g.rank();
    let e = basis.generated_subgroup();
    if n == 0 {
        return Ok(RelatorLattice {
            basis: basis.clone(),
            hnf: Vec::new(),
            index: 1,
        });
    }
    // Rows: one per generator, then the moduli relations.
    let mut c: Mat = Vec::with_capacity(n + d);
    for rep in basis.free_reps().iter().chain(basis.torsion_gens()) {
        c.push(rep.coords().iter().map(|&x| x as i128).collect());
    }
    for (j, &m) in g.moduli().iter().enumerate() {
        let mut row = vec![0i128; d];
        row[j] = m as i128;
        c.push(row);
    }
    let kernel = lattice::left_kernel(c);
    let mut rows: Mat = kernel.iter().map(|r| r[..n].to_vec()).collect();
    for t in 0..basis.q() {
        let mut row = vec![0i128; n];
        row[basis.p() + t] = 2;
        rows.push(row);
    }
    let hnf = lattice::hnf(rows);
    let index = lattice::full_rank_index(&hnf, n).ok_or_else(|| {
        Error::Contract("relator lattice is rank deficient".into())
    })?;
    if index != e.order() as i128 {
        return Err(Error::Contract(format!(
            "relator lattice index {index} differs from generated subgroup order {}",
            e.order()
        )));
    }
    Ok(RelatorLattice {
        basis: basis.clone(),
        hnf,
        index,
    })
}

impl RelatorLattice {
    pub fn basis(&self) -> &GeneratorBasis {
        &self.basis
    }

    /// Canonical HNF rows over `Z^(p+q)`.
    pub fn hnf_rows(&self) -> &Mat {
        &self.hnf
    }

    /// Index in `Z^(p+q)`; the order of the generated subgroup.
    pub fn index(&self) -> i128 {
        self.index
    }

    /// Whether the relator group is trivial, i.e. the lattice is exactly the
    /// doubled torsion axes (plus nothing in the free directions is possible
    /// only when every free column is absent).
    pub fn is_trivial(&self) -> bool {
        self.hnf == self.torsion_hnf()
    }

    fn torsion_rows(&self) -> Mat {
        let n = self.basis.dim();
        (0..self.basis.q())
            .map(|t| {
                let mut row = vec![0i128; n];
                row[self.basis.p() + t] = 2;
                row
            })
            .collect()
    }

    fn torsion_hnf(&self) -> Mat {
        lattice::hnf(self.torsion_rows())
    }

    /// Membership of a symbol-group element in the relator lattice.
    pub fn contains(&self, v: &FsVector) -> Result<bool> {
        if v.free.len() != self.basis.p() || v.torsion.len() != self.basis.q() {
            return Err(Error::BasisMismatch(
                "vector shape differs from lattice basis".into(),
            ));
        }
        Ok(lattice::in_lattice(&self.hnf, &v.as_int_row()))
    }
}

fn check_enumeration_caps(basis: &GeneratorBasis, n: u64) -> Result<()> {
    if basis.dim() > MAX_BASIS_DIM {
        return Err(Error::EnumerationCap(format!(
            "basis dimension {} exceeds {}",
            basis.dim(),
            MAX_BASIS_DIM
        )));
    }
    if n > MAX_RELATOR_LENGTH {
        return Err(Error::EnumerationCap(format!(
            "relator length {n} exceeds {MAX_RELATOR_LENGTH}"
        )));
    }
    Ok(())
}

/// All relators of reduced length at most `n`, in (length, coordinates)
/// order. The identity is included.
pub fn relators_up_to(lat: &RelatorLattice, n: u64) -> Result<Vec<FsVector>> {
    check_enumeration_caps(&lat.basis, n)?;
    let p = lat.basis.p();
    let q = lat.basis.q();
    let mut out = Vec::new();
    let mut free = vec![0i64; p];
    fn rec(
        lat: &RelatorLattice,
        free: &mut Vec<i64>,
        coord: usize,
        budget: u64,
        q: usize,
        out: &mut Vec<FsVector>,
    ) {
        if coord == free.len() {
            let mut torsion = vec![0u8; q];
            enumerate_bits(lat, free, &mut torsion, 0, budget, out);
            return;
        }
        let b = budget as i64;
        for v in -b..=b {
            free[coord] = v;
            rec(lat, free, coord + 1, budget - v.unsigned_abs(), q, out);
        }
        free[coord] = 0;
    }
    fn enumerate_bits(
        lat: &RelatorLattice,
        free: &[i64],
        torsion: &mut Vec<u8>,
        bit: usize,
        budget: u64,
        out: &mut Vec<FsVector>,
    ) {
        if bit == torsion.len() {
            let v = FsVector {
                free: free.to_vec(),
                torsion: torsion.clone(),
            };
            if lat.contains(&v).expect("shape matches") {
                out.push(v);
            }
            return;
        }
        torsion[bit] = 0;
        enumerate_bits(lat, free, torsion, bit + 1, budget, out);
        if budget > 0 {
            torsion[bit] = 1;
            enumerate_bits(lat, free, torsion, bit + 1, budget - 1, out);
            torsion[bit] = 0;
        }
    }
    rec(lat, &mut free, 0, n, q, &mut out);
    out.sort_by(|a, b| {
        (a.reduced_length(), &a.free, &a.torsion).cmp(&(b.reduced_length(), &b.free, &b.torsion))
    });
    Ok(out)
}

/// Whether the relators of reduced length at most `n` generate the whole
/// relator group.
pub fn generated_equals(lat: &RelatorLattice, n: u64) -> Result<bool> {
    let short = relators_up_to(lat, n)?;
    let mut rows: Mat = lat.torsion_rows();
    rows.extend(short.iter().map(|v| v.as_int_row()));
    Ok(lattice::hnf(rows) == lat.hnf)
}

/// Least `n <= n_max` whose short relators generate the relator group;
/// zero when the relator group is trivial.
pub fn n_zero(lat: &RelatorLattice, n_max: u64) -> Result<Option<u64>> {
    for n in 0..=n_max {
        if generated_equals(lat, n)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Result of the sumset covering scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringNumber {
    /// Least `r` with the `r`-fold sumset of the support equal to the
    /// generated subgroup, when such an `r` exists.
    pub r: Option<u64>,
    /// `2r + 1`, an upper bound for the generating length of the relator
    /// group whenever `r` exists.
    pub bound: Option<u64>,
}

/// Scan `r = 1..=|E|` for the least `r`-fold sumset of the support equal to
/// the generated subgroup `E`. With `0` in the support the sumsets are
/// nested and the scan succeeds; without it they may oscillate between
/// cosets forever, in which case the scan reports `None`.
pub fn covering_number(spectrum: &BraggSpectrum) -> Result<CoveringNumber> {
    let g = spectrum.group();
    let pts: Vec<Element> = spectrum.points().collect();
    let e = subgroup_generated(g, &pts)?;
    let target: Vec<bool> = {
        let mut t = vec![false; g.order()];
        for &i in e.member_indices() {
            t[i] = true;
        }
        t
    };
    let mut current = vec![false; g.order()];
    for &i in spectrum.point_indices() {
        current[i] = true;
    }
    for r in 1..=e.order() as u64 {
        if current == target {
            return Ok(CoveringNumber {
                r: Some(r),
                bound: Some(2 * r + 1),
            });
        }
        let mut next = vec![false; g.order()];
        for (i, &in_cur) in current.iter().enumerate() {
            if !in_cur {
                continue;
            }
            let x = g.element_at(i);
            for s in &pts {
                next[g.index_of(&g.add(&x, s))] = true;
            }
        }
        current = next;
    }
    Ok(CoveringNumber {
        r: None,
        bound: None,
    })
}
