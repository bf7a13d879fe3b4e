//! Finite abelian groups, their characters, and the finite Fourier calculus.
//!
//! A group is a product `Z/m_1 x ... x Z/m_d` given by its moduli. The same
//! index set serves as the dual group: the character labelled `k` sends `x`
//! to `pairing(k, x) = exp(2 pi i sum_j k_j x_j / m_j)`. Haar measure on the
//! group is the probability measure (each point carries `1/|G|`), while the
//! dual carries plain counting measure. The transforms below are normalised
//! accordingly:
//!
//! * `dft(f)(k)  = (1/|G|) sum_x conj(pairing(k, x)) f(x)`
//! * `idft(h)(x) = sum_k pairing(k, x) h(k)`
//! * `(f * g)(t) = (1/|G|) sum_s f(t - s) g(s)`
//! * `involute(f)(x) = conj(f(-x))`
//!
//! so that `idft(dft(f)) = f`, `dft(f * g) = dft(f) dft(g)`, and Parseval
//! reads `(1/|G|) sum_x |f(x)|^2 = sum_k |dft(f)(k)|^2`.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::turn::Turn;
use crate::{C64, DEFAULT_ORDER_CAP};

/// An element of a finite abelian group, with reduced coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coords: Vec<i64>,
}

impl Element {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite abelian group `Z/m_1 x ... x Z/m_d`, doubling as its own dual.
///
/// Elements are enumerated in lexicographic coordinate order; the element at
/// index `i` has coordinates given by the mixed-radix digits of `i` with the
/// first coordinate most significant.
#[derive(Clone, Debug)]
pub struct Group {
    moduli: Vec<i64>,
    strides: Vec<usize>,
    order: usize,
    lcm: i64,
    roots: Arc<OnceLock<Vec<C64>>>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.moduli == other.moduli
    }
}
impl Eq for Group {}

fn lcm(a: i64, b: i64) -> i64 {
    let g = {
        let (mut a, mut b) = (a, b);
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    };
    a / g * b
}

impl Group {
    /// Group with the given moduli under the default order cap.
    pub fn new(moduli: &[i64]) -> Result<Group> {
        Group::with_cap(moduli, DEFAULT_ORDER_CAP)
    }

    /// Group with the given moduli; orders above `cap` are refused.
    pub fn with_cap(moduli: &[i64], cap: u64) -> Result<Group> {
        if moduli.is_empty() {
            return Err(Error::Invalid("group needs at least one modulus".into()));
        }
        let mut order: u128 = 1;
        let mut l: i64 = 1;
        for &m in moduli {
            if m < 1 {
                return Err(Error::InvalidModulus(m));
            }
            order *= m as u128;
            if order > cap as u128 {
                return Err(Error::OrderCap { order, cap });
            }
            l = lcm(l, m);
        }
        let mut strides = vec![1usize; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1] as usize;
        }
        Ok(Group {
            moduli: moduli.to_vec(),
            strides,
            order: order as usize,
            lcm: l,
            roots: Arc::new(OnceLock::new()),
        })
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z/{m}")).collect();
        parts.join(" x ")
    }

    /// Element from coordinates, reduced modulo the respective moduli.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.moduli.len() {
            return Err(Error::RankMismatch {
                expected: self.moduli.len(),
                got: coords.len(),
            });
        }
        Ok(Element {
            coords: coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &m)| c.rem_euclid(m))
                .collect(),
        })
    }

    pub fn zero(&self) -> Element {
        Element {
            coords: vec![0; self.moduli.len()],
        }
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        a.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| (x + y).rem_euclid(m))
                .collect(),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| (x - y).rem_euclid(m))
                .collect(),
        }
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element {
            coords: a
                .coords
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| (-x).rem_euclid(m))
                .collect(),
        }
    }

    /// Integer multiple `n * a`.
    pub fn scale(&self, a: &Element, n: i64) -> Element {
        Element {
            coords: a
                .coords
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| ((x as i128 * n as i128).rem_euclid(m as i128)) as i64)
                .collect(),
        }
    }

    /// Order of the element in the group.
    pub fn element_order(&self, a: &Element) -> i64 {
        a.coords
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| {
                let g = {
                    let (mut a, mut b) = (x, m);
                    while b != 0 {
                        let t = a % b;
                        a = b;
                        b = t;
                    }
                    a.abs().max(1)
                };
                m / if x == 0 { m } else { g }
            })
            .fold(1, lcm)
    }

    pub fn index_of(&self, a: &Element) -> usize {
        a.coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    pub fn element_at(&self, index: usize) -> Element {
        debug_assert!(index < self.order);
        let mut coords = Vec::with_capacity(self.moduli.len());
        let mut rem = index;
        for (&m, &s) in self.moduli.iter().zip(&self.strides) {
            let c = rem / s;
            rem %= s;
            debug_assert!((c as i64) < m);
            let _ = m;
            coords.push(c as i64);
        }
        Element { coords }
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    /// The pairing angle `sum_j k_j x_j / m_j` as an exactly reduced turn.
    pub fn pairing_turn(&self, k: &Element, x: &Element) -> Turn {
        let mut t = Turn::ZERO;
        for ((&kj, &xj), &m) in k.coords.iter().zip(&x.coords).zip(&self.moduli) {
            let r = ((kj as i128 * xj as i128).rem_euclid(m as i128)) as i64;
            t = t.add(Turn::exact(r, m));
        }
        t
    }

    /// Character value `pairing(k, x) = exp(2 pi i sum_j k_j x_j / m_j)`.
    pub fn pairing(&self, k: &Element, x: &Element) -> C64 {
        let idx = self.pairing_index(k, x);
        self.roots()[idx]
    }

    /// Pairing angle as a multiple of `1/lcm(moduli)`.
    fn pairing_index(&self, k: &Element, x: &Element) -> usize {
        let l = self.lcm as i128;
        let mut acc: i128 = 0;
        for ((&kj, &xj), &m) in k.coords.iter().zip(&x.coords).zip(&self.moduli) {
            let r = (kj as i128 * xj as i128).rem_euclid(m as i128);
            acc = (acc + r * (l / m as i128)) % l;
        }
        acc as usize
    }

    /// Root table `exp(2 pi i r / lcm)` for `r` in `0..lcm`, computed from
    /// reduced fractions so shared angles are bit-identical.
    fn roots(&self) -> &[C64] {
        self.roots.get_or_init(|| {
            (0..self.lcm)
                .map(|r| Turn::exact(r, self.lcm).to_complex())
                .collect()
        })
    }

    /// Error unless the two groups have identical moduli.
    pub fn check_same(&self, other: &Group) -> Result<()> {
        if self != other {
            return Err(Error::GroupMismatch {
                left: self.describe(),
                right: other.describe(),
            });
        }
        Ok(())
    }
}

/// A subgroup, stored as a sorted member list plus a membership table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    group: Group,
    members: Vec<bool>,
    elements: Vec<usize>,
    generators: Vec<Element>,
}

impl Subgroup {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &Element) -> bool {
        self.members[self.group.index_of(a)]
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Members in increasing index order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.elements.iter().map(|&i| self.group.element_at(i))
    }

    pub fn member_indices(&self) -> &[usize] {
        &self.elements
    }
}

/// The subgroup generated by `gens`, via breadth-first closure.
pub fn subgroup_generated(group: &Group, gens: &[Element]) -> Result<Subgroup> {
    for g in gens {
        if g.coords().len() != group.rank() {
            return Err(Error::RankMismatch {
                expected: group.rank(),
                got: g.coords().len(),
            });
        }
    }
    let mut members = vec![false; group.order()];
    members[group.index_of(&group.zero())] = true;
    let mut frontier = vec![group.zero()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = group.add(&x, g);
            let yi = group.index_of(&y);
            if !members[yi] {
                members[yi] = true;
                frontier.push(y);
            }
        }
    }
    let elements: Vec<usize> = (0..group.order()).filter(|&i| members[i]).collect();
    Ok(Subgroup {
        group: group.clone(),
        members,
        elements,
        generators: gens.to_vec(),
    })
}

/// The annihilator `{ k : pairing(k, h) = 1 for all h in sub }`, computed
/// exactly through rational pairing angles. `|sub| * |annihilator| = |G|`.
pub fn annihilator(group: &Group, sub: &Subgroup) -> Result<Subgroup> {
    group.check_same(sub.group())?;
    let mut members = vec![false; group.order()];
    let mut elements = Vec::new();
    for (i, k) in group.elements().enumerate() {
        // Killing the generators kills the whole subgroup; an empty generator
        // list denotes the trivial subgroup, annihilated by every character.
        let kills_all = sub
            .generators()
            .iter()
            .all(|g| group.pairing_turn(&k, g).is_exactly_zero());
        if kills_all {
            members[i] = true;
            elements.push(i);
        }
    }
    let gens: Vec<Element> = elements.iter().map(|&i| group.element_at(i)).collect();
    Ok(Subgroup {
        group: group.clone(),
        members,
        elements,
        generators: gens,
    })
}

/// A quotient `G / H` with deterministic coset representatives: scanning
/// elements in index order, each yet-unassigned element opens a new coset
/// and becomes its representative.
#[derive(Clone, Debug)]
pub struct Quotient {
    group: Group,
    subgroup: Subgroup,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

pub fn quotient(group: &Group, sub: &Subgroup) -> Result<Quotient> {
    group.check_same(sub.group())?;
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps = Vec::new();
    for i in 0..group.order() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let rep = group.element_at(i);
        let c = reps.len();
        for h in sub.member_indices() {
            let y = group.add(&rep, &group.element_at(*h));
            coset_of[group.index_of(&y)] = c;
        }
        reps.push(i);
    }
    Ok(Quotient {
        group: group.clone(),
        subgroup: sub.clone(),
        reps,
        coset_of,
    })
}

impl Quotient {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Number of cosets.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the coset containing `x`.
    pub fn coset_of(&self, x: &Element) -> usize {
        self.coset_of[self.group.index_of(x)]
    }

    /// Representative of coset `c`.
    pub fn rep(&self, c: usize) -> Element {
        self.group.element_at(self.reps[c])
    }

    /// Representatives in coset order.
    pub fn reps(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.len()).map(move |c| self.rep(c))
    }
}

/// A complex-valued function on a group, stored in element index order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupFunction {
    group: Group,
    values: Vec<C64>,
}

impl GroupFunction {
    pub fn new(group: &Group, values: Vec<C64>) -> Result<GroupFunction> {
        if values.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                got: values.len(),
            });
        }
        Ok(GroupFunction {
            group: group.clone(),
            values,
        })
    }

    pub fn zero(group: &Group) -> GroupFunction {
        GroupFunction {
            group: group.clone(),
            values: vec![C64::new(0.0, 0.0); group.order()],
        }
    }

    pub fn from_fn(group: &Group, mut f: impl FnMut(&Element) -> C64) -> GroupFunction {
        GroupFunction {
            group: group.clone(),
            values: group.elements().map(|x| f(&x)).collect(),
        }
    }

    /// Indicator of the single point `x`.
    pub fn indicator(group: &Group, x: &Element) -> GroupFunction {
        let mut v = GroupFunction::zero(group);
        v.values[group.index_of(x)] = C64::new(1.0, 0.0);
        v
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn value(&self, x: &Element) -> C64 {
        self.values[self.group.index_of(x)]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Forward translate: `(T_t f)(x) = f(x - t)`.
    pub fn translate(&self, t: &Element) -> GroupFunction {
        GroupFunction::from_fn(&self.group, |x| self.value(&self.group.sub(x, t)))
    }

    /// `dft(f)(k) = (1/|G|) sum_x conj(pairing(k, x)) f(x)`.
    pub fn dft(&self) -> GroupFunction {
        let g = &self.group;
        let n = g.order() as f64;
        let values = g
            .elements()
            .map(|k| {
                let mut acc = C64::new(0.0, 0.0);
                for (i, x) in g.elements().enumerate() {
                    acc += g.pairing(&k, &x).conj() * self.values[i];
                }
                acc / n
            })
            .collect();
        GroupFunction {
            group: g.clone(),
            values,
        }
    }

    /// `idft(h)(x) = sum_k pairing(k, x) h(k)`.
    pub fn idft(&self) -> GroupFunction {
        let g = &self.group;
        let values = g
            .elements()
            .map(|x| {
                let mut acc = C64::new(0.0, 0.0);
                for (i, k) in g.elements().enumerate() {
                    acc += g.pairing(&k, &x) * self.values[i];
                }
                acc
            })
            .collect();
        GroupFunction {
            group: g.clone(),
            values,
        }
    }

    /// Haar-normalised convolution `(f * g)(t) = (1/|G|) sum_s f(t - s) g(s)`.
    pub fn convolve(&self, other: &GroupFunction) -> Result<GroupFunction> {
        self.group.check_same(&other.group)?;
        let g = &self.group;
        let n = g.order() as f64;
        let values = g
            .elements()
            .map(|t| {
                let mut acc = C64::new(0.0, 0.0);
                for (i, s) in g.elements().enumerate() {
                    acc += self.value(&g.sub(&t, &s)) * other.values[i];
                }
                acc / n
            })
            .collect();
        Ok(GroupFunction {
            group: g.clone(),
            values,
        })
    }

    /// `involute(f)(x) = conj(f(-x))`; an idempotent conjugate reflection.
    pub fn involute(&self) -> GroupFunction {
        GroupFunction::from_fn(&self.group, |x| self.value(&self.group.neg(x)).conj())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn indexing_roundtrip_is_lexicographic() {
        let g = Group::new(&[2, 3]).unwrap();
        let expect = [
            [0, 0],
            [0, 1],
            [0, 2],
            [1, 0],
            [1, 1],
            [1, 2],
        ];
        for (i, e) in expect.iter().enumerate() {
            let x = g.element_at(i);
            assert_eq!(x.coords(), e);
            assert_eq!(g.index_of(&x), i);
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        assert!(matches!(
            Group::with_cap(&[1000, 1001], 1_000_000),
            Err(Error::OrderCap { .. })
        ));
        assert!(Group::with_cap(&[1000, 1000], 1_000_000).is_ok());
        assert!(matches!(Group::new(&[0]), Err(Error::InvalidModulus(0))));
    }

    #[test]
    fn pairing_on_z2xz3_matches_direct_evaluation() {
        // pairing((1,1), (1,1)) = exp(2 pi i (1/2 + 1/3)) = exp(2 pi i 5/6).
        let g = Group::new(&[2, 3]).unwrap();
        let k = g.element(&[1, 1]).unwrap();
        let x = g.element(&[1, 1]).unwrap();
        let t = g.pairing_turn(&k, &x);
        assert!(matches!(t, Turn::Exact { num: 5, den: 6 }));
        let th = std::f64::consts::TAU * 5.0 / 6.0;
        assert!(close(g.pairing(&k, &x), C64::new(th.cos(), th.sin()), 1e-15));
    }

    #[test]
    fn pairing_is_bilinear_exactly() {
        let g = Group::new(&[4, 6]).unwrap();
        let k = g.element(&[3, 5]).unwrap();
        let l = g.element(&[2, 1]).unwrap();
        let x = g.element(&[1, 4]).unwrap();
        let lhs = g.pairing_turn(&g.add(&k, &l), &x);
        let rhs = g.pairing_turn(&k, &x).add(g.pairing_turn(&l, &x));
        assert!(lhs.phase_close(rhs, 0.0));
        let lhs = g.pairing_turn(&k, &g.add(&x, &l));
        let rhs = g.pairing_turn(&k, &x).add(g.pairing_turn(&k, &l));
        assert!(lhs.phase_close(rhs, 0.0));
    }

    #[test]
    fn dft_inverts_and_parseval_holds() {
        let g = Group::new(&[6]).unwrap();
        let f = GroupFunction::new(
            &g,
            vec![
                C64::new(11.0, 0.0),
                C64::new(25.0, 0.0),
                C64::new(42.0, 0.0),
                C64::new(45.0, 0.0),
                C64::new(31.0, 0.0),
                C64::new(14.0, 0.0),
            ],
        )
        .unwrap();
        let back = f.dft().idft();
        for (a, b) in back.values().iter().zip(f.values()) {
            assert!(close(*a, *b, 1e-9));
        }
        let lhs: f64 = f.values().iter().map(|v| v.norm_sqr()).sum::<f64>() / 6.0;
        let rhs: f64 = f.dft().values().iter().map(|v| v.norm_sqr()).sum();
        assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs());
    }

    #[test]
    fn dft_at_zero_is_the_mean() {
        let g = Group::new(&[6]).unwrap();
        let f = GroupFunction::new(
            &g,
            [11.0, 25.0, 42.0, 45.0, 31.0, 14.0]
                .iter()
                .map(|&w| C64::new(w, 0.0))
                .collect(),
        )
        .unwrap();
        assert!(close(f.dft().value(&g.zero()), C64::new(28.0, 0.0), 1e-12));
    }

    #[test]
    fn convolution_transforms_to_a_product() {
        let g = Group::new(&[2, 3]).unwrap();
        let f = GroupFunction::from_fn(&g, |x| {
            C64::new(x.coords()[0] as f64 + 1.0, x.coords()[1] as f64 - 1.0)
        });
        let h = GroupFunction::from_fn(&g, |x| {
            C64::new((x.coords()[1] * x.coords()[1]) as f64, 0.5)
        });
        let conv = f.convolve(&h).unwrap().dft();
        let prod_f = f.dft();
        let prod_h = h.dft();
        for (i, v) in conv.values().iter().enumerate() {
            assert!(close(*v, prod_f.values()[i] * prod_h.values()[i], 1e-12));
        }
    }

    #[test]
    fn convolution_identity_element() {
        // |G| * 1_{0} is the unit of Haar-normalised convolution.
        let g = Group::new(&[5]).unwrap();
        let f = GroupFunction::from_fn(&g, |x| C64::new(x.coords()[0] as f64, 1.0));
        let mut unit = GroupFunction::zero(&g);
        unit = GroupFunction::new(
            &g,
            unit.values()
                .iter()
                .enumerate()
                .map(|(i, _)| {
                    if i == 0 {
                        C64::new(5.0, 0.0)
                    } else {
                        C64::new(0.0, 0.0)
                    }
                })
                .collect(),
        )
        .unwrap();
        let conv = f.convolve(&unit).unwrap();
        for (a, b) in conv.values().iter().zip(f.values()) {
            assert!(close(*a, *b, 1e-12));
        }
        // 1_a * 1_b = (1/|G|) 1_{a+b}.
        let a = g.element(&[2]).unwrap();
        let b = g.element(&[4]).unwrap();
        let conv = GroupFunction::indicator(&g, &a)
            .convolve(&GroupFunction::indicator(&g, &b))
            .unwrap();
        for (i, v) in conv.values().iter().enumerate() {
            let want = if i == g.index_of(&g.element(&[6]).unwrap()) {
                C64::new(0.2, 0.0)
            } else {
                C64::new(0.0, 0.0)
            };
            assert!(close(*v, want, 1e-15));
        }
    }

    #[test]
    fn involution_conjugates_the_transform() {
        let g = Group::new(&[4]).unwrap();
        let f = GroupFunction::from_fn(&g, |x| C64::new(x.coords()[0] as f64, 2.0));
        assert_eq!(f.involute().involute(), f);
        let lhs = f.involute().dft();
        let rhs = f.dft();
        for (a, b) in lhs.values().iter().zip(rhs.values()) {
            assert!(close(*a, b.conj(), 1e-12));
        }
    }

    #[test]
    fn idft_of_point_masses() {
        let g = Group::new(&[5]).unwrap();
        let h = GroupFunction::indicator(&g, &g.zero());
        let f = h.idft();
        for v in f.values() {
            assert!(close(*v, C64::new(1.0, 0.0), 1e-15));
        }
        let k0 = g.element(&[2]).unwrap();
        let h = GroupFunction::indicator(&g, &k0);
        let f = h.idft();
        for (x, v) in g.elements().zip(f.values()) {
            assert!(close(*v, g.pairing(&k0, &x), 1e-15));
        }
    }

    #[test]
    fn subgroup_annihilator_quotient_on_z6() {
        let g = Group::new(&[6]).unwrap();
        let two = g.element(&[2]).unwrap();
        let e = subgroup_generated(&g, &[two]).unwrap();
        let members: Vec<i64> = e.elements().map(|x| x.coords()[0]).collect();
        assert_eq!(members, vec![0, 2, 4]);
        let ann = annihilator(&g, &e).unwrap();
        let members: Vec<i64> = ann.elements().map(|x| x.coords()[0]).collect();
        assert_eq!(members, vec![0, 3]);
        assert_eq!(e.order() * ann.order(), g.order());
        let q = quotient(&g, &ann).unwrap();
        assert_eq!(q.len(), 3);
        let reps: Vec<i64> = q.reps().map(|x| x.coords()[0]).collect();
        assert_eq!(reps, vec![0, 1, 2]);
        assert_eq!(q.coset_of(&g.element(&[4]).unwrap()), 1);
    }

    #[test]
    fn full_group_from_unit_generators() {
        let g = Group::new(&[6]).unwrap();
        let s = subgroup_generated(
            &g,
            &[g.element(&[1]).unwrap(), g.element(&[5]).unwrap()],
        )
        .unwrap();
        assert_eq!(s.order(), 6);
        let ann = annihilator(&g, &s).unwrap();
        assert_eq!(ann.order(), 1);
    }

    #[test]
    fn translate_moves_mass_forward() {
        let g = Group::new(&[4]).unwrap();
        let f = GroupFunction::indicator(&g, &g.zero());
        let t = g.element(&[1]).unwrap();
        let shifted = f.translate(&t);
        assert!(close(shifted.value(&t), C64::new(1.0, 0.0), 0.0));
        assert!(close(shifted.value(&g.zero()), C64::new(0.0, 0.0), 0.0));
    }
}
