//! The Hopf algebras `F(G)` (functions, basis `φ_g`) and `CG` (group
//! algebra, basis `g`), dual to each other through `⟨g, φ_h⟩ = δ_{g,h}`.
//!
//! Structure maps:
//!
//! | | `F(G)` | `CG` |
//! |---|---|---|
//! | product | pointwise | convolution from the table |
//! | coproduct | `(Δφ)(g,h) = φ(gh)` | `Δg = g⊗g` |
//! | antipode | `S(φ)(g) = φ(g⁻¹)` | `S(g) = g⁻¹` |
//! | counit | `ε(φ) = φ(e)` | `ε(g) = 1` |
//!
//! Sweedler sums are expanded as explicit loops over the group basis.

use std::ops::{Add, Mul, Neg, Sub};

use crate::group::GroupTable;
use crate::linalg::{C64, ONE, ZERO};

macro_rules! coefficient_vector {
    ($name:ident) => {
        impl $name {
            pub fn new(coeffs: Vec<C64>) -> Self {
                $name { coeffs }
            }

            pub fn zero(n: usize) -> Self {
                $name {
                    coeffs: vec![ZERO; n],
                }
            }

            pub fn basis(n: usize, g: usize) -> Self {
                let mut coeffs = vec![ZERO; n];
                coeffs[g] = ONE;
                $name { coeffs }
            }

            pub fn coeffs(&self) -> &[C64] {
                &self.coeffs
            }

            pub fn len(&self) -> usize {
                self.coeffs.len()
            }

            pub fn is_empty(&self) -> bool {
                self.coeffs.is_empty()
            }

            pub fn scale(&self, s: C64) -> Self {
                $name {
                    coeffs: self.coeffs.iter().map(|c| c * s).collect(),
                }
            }

            pub fn max_abs(&self) -> f64 {
                self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
            }

            pub fn max_abs_diff(&self, other: &Self) -> f64 {
                self.coeffs
                    .iter()
                    .zip(&other.coeffs)
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max)
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name {
                    coeffs: self
                        .coeffs
                        .iter()
                        .zip(&rhs.coeffs)
                        .map(|(a, b)| a + b)
                        .collect(),
                }
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name {
                    coeffs: self
                        .coeffs
                        .iter()
                        .zip(&rhs.coeffs)
                        .map(|(a, b)| a - b)
                        .collect(),
                }
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name {
                    coeffs: self.coeffs.iter().map(|a| -a).collect(),
                }
            }
        }

        impl Mul<C64> for &$name {
            type Output = $name;
            fn mul(self, s: C64) -> $name {
                self.scale(s)
            }
        }
    };
}

/// A function on `G`; `coeffs[g]` is its value at `g` (coefficient of `φ_g`).
#[derive(Clone, Debug, PartialEq)]
pub struct FunElement {
    coeffs: Vec<C64>,
}

/// An element `Σ_g c_g g` of the group algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgElement {
    coeffs: Vec<C64>,
}

coefficient_vector!(FunElement);
coefficient_vector!(GroupAlgElement);

impl FunElement {
    /// The unit `1 = Σ_g φ_g`.
    pub fn one(n: usize) -> Self {
        FunElement {
            coeffs: vec![ONE; n],
        }
    }

    pub fn at(&self, g: usize) -> C64 {
        self.coeffs[g]
    }
}

impl GroupAlgElement {
    /// The group-like basis element `g` (the unit is `group_like(n, 0)`).
    pub fn group_like(n: usize, g: usize) -> Self {
        Self::basis(n, g)
    }

    pub fn coeff(&self, g: usize) -> C64 {
        self.coeffs[g]
    }
}

/// Which factors a [`TensorElement`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorKind {
    /// `F(G) ⊗ F(G)`, basis `φ_g ⊗ φ_h`.
    FunFun,
    /// `CG ⊗ CG`, basis `g ⊗ h`.
    GroupGroup,
}

/// Two-fold tensor; the coefficient of `b_g ⊗ b_h` sits at `g * n + h`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement {
    kind: TensorKind,
    n: usize,
    coeffs: Vec<C64>,
}

impl TensorElement {
    pub fn zero(kind: TensorKind, n: usize) -> Self {
        TensorElement {
            kind,
            n,
            coeffs: vec![ZERO; n * n],
        }
    }

    pub fn new(kind: TensorKind, n: usize, coeffs: Vec<C64>) -> Self {
        assert_eq!(coeffs.len(), n * n, "tensor coefficient count");
        TensorElement { kind, n, coeffs }
    }

    /// `a ⊗ b` for functions.
    pub fn simple_fun(a: &FunElement, b: &FunElement) -> Self {
        let n = a.len();
        let coeffs = (0..n * n).map(|k| a.at(k / n) * b.at(k % n)).collect();
        TensorElement {
            kind: TensorKind::FunFun,
            n,
            coeffs,
        }
    }

    /// `X ⊗ Y` in `CG ⊗ CG`.
    pub fn simple_group(x: &GroupAlgElement, y: &GroupAlgElement) -> Self {
        let n = x.len();
        let coeffs = (0..n * n)
            .map(|k| x.coeff(k / n) * y.coeff(k % n))
            .collect();
        TensorElement {
            kind: TensorKind::GroupGroup,
            n,
            coeffs,
        }
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, g: usize, h: usize) -> C64 {
        self.coeffs[g * self.n + h]
    }

    pub fn get_mut(&mut self, g: usize, h: usize) -> &mut C64 {
        &mut self.coeffs[g * self.n + h]
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.kind != other.kind || self.n != other.n {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.kind, other.kind);
        TensorElement {
            kind: self.kind,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.kind, other.kind);
        TensorElement {
            kind: self.kind,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Componentwise product in `F ⊗ F`.
    pub fn mul_fun(&self, other: &Self) -> Self {
        assert_eq!(
            (self.kind, other.kind),
            (TensorKind::FunFun, TensorKind::FunFun)
        );
        TensorElement {
            kind: self.kind,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    /// `(id ⊗ ε)` on `F ⊗ F`.
    pub fn counit_right(&self) -> FunElement {
        assert_eq!(self.kind, TensorKind::FunFun);
        FunElement::new((0..self.n).map(|g| self.get(g, 0)).collect())
    }

    /// `(ε ⊗ id)` on `F ⊗ F`.
    pub fn counit_left(&self) -> FunElement {
        assert_eq!(self.kind, TensorKind::FunFun);
        FunElement::new((0..self.n).map(|h| self.get(0, h)).collect())
    }

    /// Multiplication map `F ⊗ F → F`.
    pub fn multiply_legs(&self) -> FunElement {
        assert_eq!(self.kind, TensorKind::FunFun);
        // φ_g φ_h = δ_{g,h} φ_g
        FunElement::new((0..self.n).map(|g| self.get(g, g)).collect())
    }
}

// --- F(G) ---

pub fn delta_f(group: &GroupTable, a: &FunElement) -> TensorElement {
    let n = group.order();
    let mut t = TensorElement::zero(TensorKind::FunFun, n);
    for g in 0..n {
        for h in 0..n {
            *t.get_mut(g, h) = a.at(group.mul(g, h));
        }
    }
    t
}

/// `(Δ ⊗ id)Δa`, with the coefficient of `φ_x⊗φ_y⊗φ_z` at `(x*n + y)*n + z`.
pub fn delta2_f(group: &GroupTable, a: &FunElement) -> Vec<C64> {
    let n = group.order();
    let mut out = vec![ZERO; n * n * n];
    for x in 0..n {
        for y in 0..n {
            let xy = group.mul(x, y);
            for z in 0..n {
                out[(x * n + y) * n + z] = a.at(group.mul(xy, z));
            }
        }
    }
    out
}

pub fn antipode_f(group: &GroupTable, a: &FunElement) -> FunElement {
    FunElement::new((0..group.order()).map(|g| a.at(group.inv(g))).collect())
}

pub fn counit_f(a: &FunElement) -> C64 {
    a.at(0)
}

pub fn product_f(a: &FunElement, b: &FunElement) -> FunElement {
    FunElement::new(a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x * y).collect())
}

// --- CG ---

pub fn product_u(group: &GroupTable, x: &GroupAlgElement, y: &GroupAlgElement) -> GroupAlgElement {
    let n = group.order();
    let mut out = vec![ZERO; n];
    for g in 0..n {
        if x.coeffs[g] == ZERO {
            continue;
        }
        for h in 0..n {
            out[group.mul(g, h)] += x.coeffs[g] * y.coeffs[h];
        }
    }
    GroupAlgElement::new(out)
}

pub fn delta_u(x: &GroupAlgElement) -> TensorElement {
    let n = x.len();
    let mut t = TensorElement::zero(TensorKind::GroupGroup, n);
    for g in 0..n {
        *t.get_mut(g, g) = x.coeffs[g];
    }
    t
}

pub fn antipode_u(group: &GroupTable, x: &GroupAlgElement) -> GroupAlgElement {
    let mut out = vec![ZERO; group.order()];
    for (g, c) in x.coeffs.iter().enumerate() {
        out[group.inv(g)] += c;
    }
    GroupAlgElement::new(out)
}

/// Inverse of [`antipode_u`]; coincides with it because `(g⁻¹)⁻¹ = g`.
pub fn antipode_u_inv(group: &GroupTable, x: &GroupAlgElement) -> GroupAlgElement {
    GroupAlgElement::new((0..group.order()).map(|g| x.coeffs[group.inv(g)]).collect())
}

pub fn counit_u(x: &GroupAlgElement) -> C64 {
    x.coeffs.iter().sum()
}

// --- duality ---

/// Bilinear extension of `⟨g, φ_h⟩ = δ_{g,h}`.
pub fn pairing(x: &GroupAlgElement, a: &FunElement) -> C64 {
    x.coeffs.iter().zip(&a.coeffs).map(|(p, q)| p * q).sum()
}

/// `⟨X ⊗ Y, t⟩` for `t ∈ F ⊗ F`.
pub fn pairing_tensor(xy: &TensorElement, t: &TensorElement) -> C64 {
    assert_eq!(xy.kind, TensorKind::GroupGroup);
    assert_eq!(t.kind, TensorKind::FunFun);
    xy.coeffs.iter().zip(&t.coeffs).map(|(p, q)| p * q).sum()
}

/// `f∗a = (id ⊗ f)Δa`, i.e. `(g∗φ)(h) = φ(hg)`.
pub fn conv_left(group: &GroupTable, f: &GroupAlgElement, a: &FunElement) -> FunElement {
    let n = group.order();
    let delta = delta_f(group, a);
    FunElement::new(
        (0..n)
            .map(|x| (0..n).map(|y| delta.get(x, y) * f.coeffs[y]).sum())
            .collect(),
    )
}

/// `a∗f = (f ⊗ id)Δa`, i.e. `(φ∗g)(h) = φ(gh)`.
pub fn conv_right(group: &GroupTable, a: &FunElement, f: &GroupAlgElement) -> FunElement {
    let n = group.order();
    let delta = delta_f(group, a);
    FunElement::new(
        (0..n)
            .map(|y| (0..n).map(|x| f.coeffs[x] * delta.get(x, y)).sum())
            .collect(),
    )
}

/// `Ad_X a = Σ a_(2) ⟨X, S(a_(1)) a_(3)⟩`; on group-likes `Ad_g φ_h = φ_{ghg⁻¹}`
/// and `Ad_{gh} = Ad_g ∘ Ad_h`.
pub fn ad_action(group: &GroupTable, x: &GroupAlgElement, a: &FunElement) -> FunElement {
    let n = group.order();
    let d2 = delta2_f(group, a);
    let mut out = vec![ZERO; n];
    for p in 0..n {
        // S(φ_p) φ_q = φ_{p⁻¹} φ_q vanishes unless q = p⁻¹
        let q = group.inv(p);
        let weight = x.coeffs[q];
        if weight == ZERO {
            continue;
        }
        for y in 0..n {
            out[y] += d2[(p * n + y) * n + q] * weight;
        }
    }
    FunElement::new(out)
}

/// Right adjoint coaction `ad(a) = Σ a_(2) ⊗ S(a_(1)) a_(3)` in `F ⊗ F`.
pub fn ad_coaction(group: &GroupTable, a: &FunElement) -> TensorElement {
    let n = group.order();
    let d2 = delta2_f(group, a);
    let mut t = TensorElement::zero(TensorKind::FunFun, n);
    for p in 0..n {
        let q = group.inv(p);
        for y in 0..n {
            *t.get_mut(y, q) += d2[(p * n + y) * n + q];
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    fn e(n: usize, g: usize) -> FunElement {
        FunElement::basis(n, g)
    }

    #[test]
    fn coproduct_of_delta_at_identity_in_z2() {
        let g = catalog("Z2").unwrap().table;
        let d = delta_f(&g, &e(2, 0));
        let expected = TensorElement::simple_fun(&e(2, 0), &e(2, 0))
            .add(&TensorElement::simple_fun(&e(2, 1), &e(2, 1)));
        assert_eq!(d, expected);
        let one = FunElement::one(2);
        assert_eq!(delta_f(&g, &one), TensorElement::simple_fun(&one, &one));
    }

    #[test]
    fn pairing_of_dual_bases() {
        let n = 6;
        for g in 0..n {
            for h in 0..n {
                let v = pairing(&GroupAlgElement::group_like(n, g), &e(n, h));
                assert_eq!(v, if g == h { ONE } else { ZERO });
            }
        }
    }

    #[test]
    fn group_algebra_product_follows_table() {
        let s3 = catalog("S3").unwrap().table;
        for a in 0..6 {
            for b in 0..6 {
                let p = product_u(
                    &s3,
                    &GroupAlgElement::group_like(6, a),
                    &GroupAlgElement::group_like(6, b),
                );
                assert_eq!(p, GroupAlgElement::group_like(6, s3.mul(a, b)));
            }
        }
    }

    #[test]
    fn convolution_examples() {
        let s3 = catalog("S3").unwrap().table;
        let n = 6;
        let unit = GroupAlgElement::group_like(n, 0);
        let a = FunElement::new((0..n).map(|k| C64::new(k as f64, 1.0)).collect());
        assert_eq!(conv_left(&s3, &unit, &a), a);
        assert_eq!(conv_right(&s3, &a, &unit), a);
        for g in 0..n {
            let gl = GroupAlgElement::group_like(n, g);
            assert_eq!(conv_left(&s3, &gl, &e(n, 0)), e(n, s3.inv(g)));
            assert_eq!(conv_right(&s3, &e(n, 0), &gl), e(n, s3.inv(g)));
            let chi = &unit - &gl;
            assert_eq!(conv_left(&s3, &chi, &e(n, 0)), &e(n, 0) - &e(n, s3.inv(g)));
        }
    }

    #[test]
    fn adjoint_action_conjugates() {
        let s3 = catalog("S3").unwrap().table;
        let n = 6;
        for g in 0..n {
            for h in 0..n {
                let ad = ad_action(&s3, &GroupAlgElement::group_like(n, g), &e(n, h));
                assert_eq!(ad, e(n, s3.conj(g, h)));
            }
        }
        let z4 = catalog("Z4").unwrap().table;
        let a = FunElement::new((0..4).map(|k| C64::new(1.0 + k as f64, -1.0)).collect());
        for g in 0..4 {
            assert_eq!(ad_action(&z4, &GroupAlgElement::group_like(4, g), &a), a);
        }
    }

    #[test]
    fn adjoint_action_composes_as_left_action() {
        let s3 = catalog("S3").unwrap().table;
        let n = 6;
        let a = FunElement::new((0..n).map(|k| C64::new(k as f64, (k * k) as f64)).collect());
        for g in 0..n {
            for h in 0..n {
                let gl = |x| GroupAlgElement::group_like(n, x);
                let composed = ad_action(&s3, &gl(g), &ad_action(&s3, &gl(h), &a));
                let direct = ad_action(&s3, &gl(s3.mul(g, h)), &a);
                assert_eq!(composed, direct);
            }
        }
    }
}
