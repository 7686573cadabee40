//! The Drinfeld double `D(G)`, spanned by normal-ordered products `φ_h·g`
//! with `g φ_k = φ_{gkg⁻¹} g`, and its representations `ρ^μ_C`.

use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, GroupTable, Irrep};
use crate::hopf::{FunElement, GroupAlgElement};
use crate::linalg::{commutant_dimension, CMatrix, C64, ONE, ZERO};

/// Element of `D(G)`; the coefficient of `φ_h·g` sits at `h * n + g`.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleElement {
    n: usize,
    coeffs: Vec<C64>,
}

impl DoubleElement {
    pub fn zero(n: usize) -> Self {
        DoubleElement {
            n,
            coeffs: vec![ZERO; n * n],
        }
    }

    pub fn new(n: usize, coeffs: Vec<C64>) -> Self {
        assert_eq!(coeffs.len(), n * n, "double coefficient count");
        DoubleElement { n, coeffs }
    }

    /// `φ_h·g`.
    pub fn basis(n: usize, h: usize, g: usize) -> Self {
        let mut x = Self::zero(n);
        x.coeffs[h * n + g] = ONE;
        x
    }

    /// The unit `1 = Σ_h φ_h·e`.
    pub fn one(n: usize) -> Self {
        Self::from_fun(&FunElement::one(n))
    }

    /// `a ↦ a·e`.
    pub fn from_fun(a: &FunElement) -> Self {
        let n = a.len();
        let mut x = Self::zero(n);
        for h in 0..n {
            x.coeffs[h * n] = a.at(h);
        }
        x
    }

    /// `X ↦ 1·X = Σ_{h,g} X_g φ_h·g`.
    pub fn from_group_alg(xg: &GroupAlgElement) -> Self {
        let n = xg.len();
        let mut x = Self::zero(n);
        for h in 0..n {
            for g in 0..n {
                x.coeffs[h * n + g] = xg.coeff(g);
            }
        }
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, h: usize, g: usize) -> C64 {
        self.coeffs[h * self.n + g]
    }

    pub fn add(&self, other: &Self) -> Self {
        DoubleElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        DoubleElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn nonzero(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        let n = self.n;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != ZERO)
            .map(move |(k, c)| (k / n, k % n, *c))
    }
}

/// `(φ_h g)(φ_k g') = δ_{h, gkg⁻¹} φ_h (gg')`.
pub fn product_d(group: &GroupTable, x: &DoubleElement, y: &DoubleElement) -> DoubleElement {
    let n = group.order();
    let mut out = DoubleElement::zero(n);
    for (h, g, c) in x.nonzero() {
        for (k, g2, c2) in y.nonzero() {
            if group.conj(g, k) == h {
                out.coeffs[h * n + group.mul(g, g2)] += c * c2;
            }
        }
    }
    out
}

/// `ε(φ_h·g) = δ_{h,e}`.
pub fn counit_d(x: &DoubleElement) -> C64 {
    (0..x.n).map(|g| x.coeff(0, g)).sum()
}

/// `Δ(φ_h·g) = Σ_{xy=h} φ_x·g ⊗ φ_y·g`; the coefficient of `b_p ⊗ b_q` sits at
/// `p * n² + q` for basis indices `p, q` of `D(G)`.
pub fn coproduct_d(group: &GroupTable, x: &DoubleElement) -> Vec<C64> {
    let n = group.order();
    let dim = n * n;
    let mut out = vec![ZERO; dim * dim];
    for (h, g, c) in x.nonzero() {
        for a in 0..n {
            let b = group.mul(group.inv(a), h);
            out[(a * n + g) * dim + b * n + g] += c;
        }
    }
    out
}

/// Antipode `S̃(φ_h·g) = S(g) S(φ_h) = φ_{g⁻¹h⁻¹g}·g⁻¹`, restricting to `S` on
/// `F(G)` and to `S⁻¹` on `CG`.
pub fn antipode_d(group: &GroupTable, x: &DoubleElement) -> DoubleElement {
    let n = group.order();
    let mut out = DoubleElement::zero(n);
    for (h, g, c) in x.nonzero() {
        let gi = group.inv(g);
        out.coeffs[group.conj(gi, group.inv(h)) * n + gi] += c;
    }
    out
}

/// The commutation rule `aX = Σ X_(2) a_(2) ⟨X_(1), S⁻¹(a_(3))⟩ ⟨X_(3), a_(1)⟩`
/// evaluated term by term, with `a_(2)` placed to the right of `X_(2)` by
/// [`product_d`]. Compare against `product_d(a·e, 1·X)`.
pub fn commutation_rhs(group: &GroupTable, a: &FunElement, xg: &GroupAlgElement) -> DoubleElement {
    let n = group.order();
    let d2 = crate::hopf::delta2_f(group, a);
    let mut out = DoubleElement::zero(n);
    for g in 0..n {
        let xc = xg.coeff(g);
        if xc == ZERO {
            continue;
        }
        // Δ²g = g⊗g⊗g; ⟨g, S⁻¹φ_z⟩ = δ_{z,g⁻¹}, ⟨g, φ_x⟩ = δ_{x,g}
        let left = DoubleElement::from_group_alg(&GroupAlgElement::group_like(n, g));
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let weight = d2[(x * n + y) * n + z]
                        * if z == group.inv(g) { ONE } else { ZERO }
                        * if x == g { ONE } else { ZERO };
                    if weight == ZERO {
                        continue;
                    }
                    let mid = DoubleElement::from_fun(&FunElement::basis(n, y));
                    out = out.add(&product_d(group, &left, &mid).scale(xc * weight));
                }
            }
        }
    }
    out
}

/// `ρ^μ_C` on the carrier spanned by `v_h ⊗ w_α` (`h ∈ C`), with basis index
/// `pos(h) * deg μ + α` where `pos` is the position in the sorted class.
#[derive(Clone, Debug)]
pub struct DoubleRep {
    class: ConjugacyClass,
    irrep: Irrep,
    /// `ρ(φ_k)`, diagonal.
    fun: Vec<CMatrix>,
    /// `ρ(g)`.
    group: Vec<CMatrix>,
}

impl DoubleRep {
    /// `ρ(φ_k) v_h⊗w_α = δ_{k,h} v_h⊗w_α` and `ρ(g) v_h⊗w_α = v_{ghg⁻¹}⊗ρ^μ(g)w_α`,
    /// checked against the defining relations of `D(G)`.
    pub fn build(g: &GroupTable, class: &ConjugacyClass, irrep: &Irrep, tol: f64) -> Result<Self> {
        let n = g.order();
        if irrep.matrices().len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: irrep.matrices().len(),
            });
        }
        for &h in &class.members {
            g.check_index(h)?;
        }
        let nm = irrep.degree();
        let dim = class.size() * nm;
        let idx = |h: usize, a: usize| class.position(h).expect("class member") * nm + a;
        let fun: Vec<CMatrix> = (0..n)
            .map(|k| {
                let mut m = CMatrix::zeros(dim, dim);
                if class.contains(k) {
                    for a in 0..nm {
                        m[(idx(k, a), idx(k, a))] = ONE;
                    }
                }
                m
            })
            .collect();
        let group: Vec<CMatrix> = (0..n)
            .map(|x| {
                let mu = irrep.matrix(x);
                let mut m = CMatrix::zeros(dim, dim);
                for &h in &class.members {
                    let target = g.conj(x, h);
                    for a in 0..nm {
                        for b in 0..nm {
                            m[(idx(target, b), idx(h, a))] = mu[(b, a)];
                        }
                    }
                }
                m
            })
            .collect();
        let rep = DoubleRep {
            class: class.clone(),
            irrep: irrep.clone(),
            fun,
            group,
        };
        let residual = rep.relation_residual(g);
        if residual > tol {
            return Err(Error::NotHomomorphism { residual, tol });
        }
        Ok(rep)
    }

    /// Largest deviation from the relations: `ρ(φ_h)ρ(φ_k) = δ_{h,k}ρ(φ_h)`,
    /// `Σ_h ρ(φ_h) = 1`, `ρ(g)ρ(g') = ρ(gg')`, `ρ(e) = 1` and
    /// `ρ(g)ρ(φ_h) = ρ(φ_{ghg⁻¹})ρ(g)`.
    pub fn relation_residual(&self, g: &GroupTable) -> f64 {
        let n = g.order();
        let dim = self.dim();
        let id = CMatrix::identity(dim);
        let mut worst: f64 = 0.0;
        let mut sum = CMatrix::zeros(dim, dim);
        for h in 0..n {
            sum = &sum + &self.fun[h];
            for k in 0..n {
                let prod = &self.fun[h] * &self.fun[k];
                let expected = if h == k {
                    self.fun[h].clone()
                } else {
                    CMatrix::zeros(dim, dim)
                };
                worst = worst.max(prod.max_abs_diff(&expected));
            }
        }
        worst = worst.max(sum.max_abs_diff(&id));
        worst = worst.max(self.group[0].max_abs_diff(&id));
        for x in 0..n {
            for y in 0..n {
                let prod = &self.group[x] * &self.group[y];
                worst = worst.max(prod.max_abs_diff(&self.group[g.mul(x, y)]));
                let lhs = &self.group[x] * &self.fun[y];
                let rhs = &self.fun[g.conj(x, y)] * &self.group[x];
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
        worst
    }

    /// `max ‖ρ(xy) − ρ(x)ρ(y)‖` over all pairs of basis elements of `D(G)`.
    pub fn homomorphism_residual(&self, g: &GroupTable) -> f64 {
        let n = g.order();
        let mut worst: f64 = 0.0;
        for h in 0..n {
            for x in 0..n {
                let left = self.basis_matrix(h, x);
                for k in 0..n {
                    for y in 0..n {
                        let prod = product_d(
                            g,
                            &DoubleElement::basis(n, h, x),
                            &DoubleElement::basis(n, k, y),
                        );
                        let expected = &left * &self.basis_matrix(k, y);
                        worst = worst.max(self.matrix_of(&prod).max_abs_diff(&expected));
                    }
                }
            }
        }
        worst
    }

    pub fn class(&self) -> &ConjugacyClass {
        &self.class
    }

    pub fn irrep(&self) -> &Irrep {
        &self.irrep
    }

    pub fn dim(&self) -> usize {
        self.class.size() * self.irrep.degree()
    }

    /// Labels `(h, α)` in carrier-basis order.
    pub fn labels(&self) -> Vec<(usize, usize)> {
        let nm = self.irrep.degree();
        self.class
            .members
            .iter()
            .flat_map(|&h| (0..nm).map(move |a| (h, a)))
            .collect()
    }

    pub fn fun_matrix(&self, h: usize) -> &CMatrix {
        &self.fun[h]
    }

    pub fn group_matrix(&self, g: usize) -> &CMatrix {
        &self.group[g]
    }

    /// `ρ(φ_h·g) = ρ(φ_h)ρ(g)`.
    pub fn basis_matrix(&self, h: usize, g: usize) -> CMatrix {
        &self.fun[h] * &self.group[g]
    }

    pub fn matrix_of(&self, x: &DoubleElement) -> CMatrix {
        let dim = self.dim();
        let mut out = CMatrix::zeros(dim, dim);
        for (h, g, c) in x.nonzero() {
            out = &out + &self.basis_matrix(h, g).scale(c);
        }
        out
    }

    /// `χ(φ_h·g)` at index `h * n + g`.
    pub fn character(&self) -> Vec<C64> {
        let n = self.fun.len();
        (0..n * n)
            .map(|k| self.basis_matrix(k / n, k % n).trace())
            .collect()
    }

    /// Dimension of the commutant of `ρ(D(G))`; 1 iff irreducible.
    pub fn commutant_dimension(&self, tol: f64) -> usize {
        let mut gens = self.fun.clone();
        gens.extend(self.group.iter().cloned());
        commutant_dimension(&gens, tol)
    }

    /// Equal classes, and equal characters of the two irreps restricted to
    /// the centralizer of the smallest class member.
    pub fn equivalent(&self, other: &DoubleRep, g: &GroupTable, tol: f64) -> bool {
        if self.class != other.class || self.irrep.degree() != other.irrep.degree() {
            return false;
        }
        let z = g
            .centralizer(self.class.representative)
            .expect("representative is valid");
        let a = self.irrep.restricted_character(&z);
        let b = other.irrep.restricted_character(&z);
        a.iter().zip(&b).all(|(x, y)| (x - y).norm() <= tol)
    }

    /// Equality of the full `D(G)` characters.
    pub fn same_character(&self, other: &DoubleRep, tol: f64) -> bool {
        let a = self.character();
        let b = other.character();
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).norm() <= tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    const TOL: f64 = 1e-9;

    #[test]
    fn group_like_moves_past_delta() {
        let s3 = catalog("S3").unwrap().table;
        let n = 6;
        let t = s3.conjugacy_classes()[1].representative;
        for h in 0..n {
            let lhs = product_d(
                &s3,
                &DoubleElement::from_group_alg(&GroupAlgElement::group_like(n, t)),
                &DoubleElement::from_fun(&FunElement::basis(n, h)),
            );
            assert_eq!(lhs, DoubleElement::basis(n, s3.conj(t, h), t));
        }
        let z1 = catalog("Z1").unwrap().table;
        let x = DoubleElement::basis(1, 0, 0);
        assert_eq!(product_d(&z1, &x, &x), x);
    }

    #[test]
    fn product_is_associative_with_unit() {
        let d4 = catalog("D4").unwrap().table;
        let n = 8;
        let b = |k: usize| DoubleElement::basis(n, k / n, k % n);
        let one = DoubleElement::one(n);
        for i in 0..n * n {
            assert_eq!(product_d(&d4, &one, &b(i)), b(i));
            assert_eq!(product_d(&d4, &b(i), &one), b(i));
        }
        for i in (0..n * n).step_by(3) {
            for j in 0..n * n {
                let ij = product_d(&d4, &b(i), &b(j));
                for k in (0..n * n).step_by(5) {
                    let l = product_d(&d4, &ij, &b(k));
                    let r = product_d(&d4, &b(i), &product_d(&d4, &b(j), &b(k)));
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn antipode_restricts_and_satisfies_axiom() {
        let s3 = catalog("S3").unwrap().table;
        let n = 6;
        let dim = n * n;
        for h in 0..n {
            let a = FunElement::basis(n, h);
            let lhs = antipode_d(&s3, &DoubleElement::from_fun(&a));
            assert_eq!(
                lhs,
                DoubleElement::from_fun(&crate::hopf::antipode_f(&s3, &a))
            );
            let x = GroupAlgElement::group_like(n, h);
            let lhs = antipode_d(&s3, &DoubleElement::from_group_alg(&x));
            assert_eq!(
                lhs,
                DoubleElement::from_group_alg(&crate::hopf::antipode_u_inv(&s3, &x))
            );
        }
        for h in 0..n {
            for g in 0..n {
                let x = DoubleElement::basis(n, h, g);
                let cop = coproduct_d(&s3, &x);
                let mut total = DoubleElement::zero(n);
                for p in 0..dim {
                    for q in 0..dim {
                        let c = cop[p * dim + q];
                        if c == ZERO {
                            continue;
                        }
                        let s = antipode_d(&s3, &DoubleElement::basis(n, p / n, p % n));
                        let prod = product_d(&s3, &s, &DoubleElement::basis(n, q / n, q % n));
                        total = total.add(&prod.scale(c));
                    }
                }
                assert_eq!(total, DoubleElement::one(n).scale(counit_d(&x)));
            }
        }
    }

    #[test]
    fn z2_class_of_generator() {
        let z2 = catalog("Z2").unwrap();
        let class = z2.table.class_of(1).unwrap();
        let rep = DoubleRep::build(&z2.table, &class, &z2.irreps[0], TOL).unwrap();
        assert_eq!(rep.dim(), 1);
        assert_eq!(rep.fun_matrix(0)[(0, 0)], ZERO);
        assert_eq!(rep.fun_matrix(1)[(0, 0)], ONE);
        assert_eq!(rep.group_matrix(1)[(0, 0)], ONE);
    }

    #[test]
    fn counit_representation_character() {
        let s3 = catalog("S3").unwrap();
        let rep = DoubleRep::build(
            &s3.table,
            &s3.table.class_of(0).unwrap(),
            &s3.irreps[0],
            TOL,
        )
        .unwrap();
        let chi = rep.character();
        for h in 0..6 {
            for g in 0..6 {
                assert_eq!(chi[h * 6 + g], if h == 0 { ONE } else { ZERO });
            }
        }
    }

    #[test]
    fn transposition_class_permutes_by_conjugation() {
        let s3 = catalog("S3").unwrap();
        let class = s3.table.conjugacy_classes()[1].clone();
        let rep = DoubleRep::build(&s3.table, &class, &s3.irreps[0], TOL).unwrap();
        assert_eq!(rep.dim(), 3);
        for g in 0..6 {
            for (col, &h) in class.members.iter().enumerate() {
                let row = class.position(s3.table.conj(g, h)).unwrap();
                assert_eq!(rep.group_matrix(g)[(row, col)], ONE);
            }
        }
        assert!(rep.homomorphism_residual(&s3.table) <= TOL);
        let chi = rep.character();
        for &h in &class.members {
            assert_eq!(chi[h * 6], ONE);
        }
    }

    #[test]
    fn equivalence_examples_in_s3() {
        let s3 = catalog("S3").unwrap();
        let classes = s3.table.conjugacy_classes();
        let (trivial, sign) = (&s3.irreps[0], &s3.irreps[1]);
        let build =
            |c: usize, mu: &Irrep| DoubleRep::build(&s3.table, &classes[c], mu, TOL).unwrap();
        let t_triv = build(1, trivial);
        assert!(t_triv.equivalent(&t_triv, &s3.table, TOL));
        assert!(!t_triv.equivalent(&build(1, sign), &s3.table, TOL));
        assert!(build(2, trivial).equivalent(&build(2, sign), &s3.table, TOL));
        assert!(build(2, trivial).same_character(&build(2, sign), TOL));
    }

    #[test]
    fn bad_class_index_is_rejected() {
        let z2 = catalog("Z2").unwrap();
        let bogus = ConjugacyClass {
            representative: 5,
            members: vec![5],
        };
        assert!(DoubleRep::build(&z2.table, &bogus, &z2.irreps[0], TOL).is_err());
    }
}
