//! Hochschild cochains `C^k(F, invΓ)`.
//!
//! `invΓ ≅ C^d` is an `F`-bimodule with `a.γ = ε(a)γ` and `γ.a = τ_F(a)γ`.
//! A `k`-cochain is stored by its values on basis tuples `(φ_{a_1}, …, φ_{a_k})`:
//! the tuple is numbered `a_1 n^{k-1} + … + a_k` and component `i` of its value
//! sits at `tuple * d + i`.

use crate::bicov::BicovBimodule;
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, GroupTable};
use crate::hopf::{ad_action, ad_coaction, FunElement, GroupAlgElement};
use crate::linalg::{nullspace, rank, same_column_space, CMatrix, C64, ONE, ZERO};

#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    degree: usize,
    n: usize,
    d: usize,
    values: Vec<C64>,
}

fn tuples(n: usize, k: usize) -> usize {
    n.pow(k as u32)
}

fn digits(mut t: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = t % n;
        t /= n;
    }
    out
}

fn number(digits: &[usize], n: usize) -> usize {
    digits.iter().fold(0, |acc, &a| acc * n + a)
}

impl Cochain {
    pub fn zero(degree: usize, n: usize, d: usize) -> Self {
        Cochain {
            degree,
            n,
            d,
            values: vec![ZERO; tuples(n, degree) * d],
        }
    }

    pub fn from_values(degree: usize, n: usize, d: usize, values: Vec<C64>) -> Result<Self> {
        let expected = tuples(n, degree) * d;
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: values.len(),
            });
        }
        Ok(Cochain {
            degree,
            n,
            d,
            values,
        })
    }

    /// Degree-0 cochain, i.e. an element of `invΓ`.
    pub fn constant(n: usize, gamma: &[C64]) -> Self {
        Cochain {
            degree: 0,
            n,
            d: gamma.len(),
            values: gamma.to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// `ψ(φ_{a_1}, …, φ_{a_k})`.
    pub fn at(&self, args: &[usize]) -> &[C64] {
        debug_assert_eq!(args.len(), self.degree);
        let t = number(args, self.n);
        &self.values[t * self.d..(t + 1) * self.d]
    }

    /// `ψ(a)` for a degree-1 cochain and an arbitrary function `a`.
    pub fn eval1(&self, a: &FunElement) -> Vec<C64> {
        assert_eq!(self.degree, 1);
        let mut out = vec![ZERO; self.d];
        for (g, c) in a.coeffs().iter().enumerate() {
            for (o, v) in out.iter_mut().zip(self.at(&[g])) {
                *o += c * v;
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.values.len() != other.values.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, s: C64) -> Self {
        Cochain {
            values: self.values.iter().map(|v| v * s).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Cochain {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
            ..self.clone()
        }
    }
}

/// A subspace of `k`-cochains; the columns of `basis` are flattened cochains.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    degree: usize,
    n: usize,
    d: usize,
    basis: CMatrix,
}

impl CochainSpace {
    fn from_vectors(degree: usize, n: usize, d: usize, vectors: Vec<Vec<C64>>) -> Self {
        CochainSpace {
            degree,
            n,
            d,
            basis: CMatrix::from_columns(tuples(n, degree) * d, &vectors),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.basis
    }

    pub fn cochain(&self, j: usize) -> Cochain {
        Cochain {
            degree: self.degree,
            n: self.n,
            d: self.d,
            values: self.basis.col(j),
        }
    }

    pub fn cochains(&self) -> Vec<Cochain> {
        (0..self.dim()).map(|j| self.cochain(j)).collect()
    }
}

fn counit_basis(a: usize) -> C64 {
    if a == 0 {
        ONE
    } else {
        ZERO
    }
}

/// `(δψ)(a_1,…,a_{k+1}) = ε(a_1)ψ(a_2,…) + Σ_i (−1)^i ψ(…, a_i a_{i+1}, …)
/// + (−1)^{k+1} τ_F(a_{k+1})ψ(a_1,…,a_k)`.
pub fn coboundary(module: &BicovBimodule, psi: &Cochain) -> Cochain {
    let (n, d, k) = (psi.n, psi.d, psi.degree);
    let mut out = Cochain::zero(k + 1, n, d);
    for t in 0..tuples(n, k + 1) {
        let args = digits(t, n, k + 1);
        let slot = &mut out.values[t * d..(t + 1) * d];
        let eps = counit_basis(args[0]);
        if eps != ZERO {
            for (s, v) in slot.iter_mut().zip(psi.at(&args[1..])) {
                *s += eps * v;
            }
        }
        for i in 1..=k {
            // φ_a φ_b = δ_{a,b} φ_a
            if args[i - 1] != args[i] {
                continue;
            }
            let mut merged = args[..i].to_vec();
            merged.extend_from_slice(&args[i + 1..]);
            let sign = if i % 2 == 0 { ONE } else { -ONE };
            for (s, v) in slot.iter_mut().zip(psi.at(&merged)) {
                *s += sign * v;
            }
        }
        let sign = if (k + 1) % 2 == 0 { ONE } else { -ONE };
        let last = module.tau_f(args[k]).matvec(psi.at(&args[..k]));
        for (s, v) in slot.iter_mut().zip(last) {
            *s += sign * v;
        }
    }
    out
}

/// `h ↦ Ad_g φ_h` as a permutation of basis indices, read off [`ad_action`].
fn ad_permutation(group: &GroupTable, g: usize) -> Vec<usize> {
    let n = group.order();
    let x = GroupAlgElement::group_like(n, g);
    (0..n)
        .map(|h| {
            let image = ad_action(group, &x, &FunElement::basis(n, h));
            image
                .coeffs()
                .iter()
                .position(|c| *c == ONE)
                .expect("Ad of a group-like permutes the basis")
        })
        .collect()
}

/// `(ψ•g)(a_1,…,a_k) = τ_D(g) ψ(Ad_g a_1, …, Ad_g a_k)`.
pub fn act_group_like(module: &BicovBimodule, psi: &Cochain, g: usize) -> Cochain {
    let (n, d, k) = (psi.n, psi.d, psi.degree);
    let perm = ad_permutation(module.group(), g);
    let tau = module.tau_u(g);
    let mut out = Cochain::zero(k, n, d);
    for t in 0..tuples(n, k) {
        let moved: Vec<usize> = digits(t, n, k).iter().map(|&a| perm[a]).collect();
        let v = tau.matvec(psi.at(&moved));
        out.values[t * d..(t + 1) * d].copy_from_slice(&v);
    }
    out
}

/// `ψ•X`, using `Δ^{(k)}X = Σ_g X_g g⊗…⊗g`.
pub fn act(module: &BicovBimodule, psi: &Cochain, x: &GroupAlgElement) -> Cochain {
    let mut out = Cochain::zero(psi.degree, psi.n, psi.d);
    for (g, c) in x.coeffs().iter().enumerate() {
        if *c == ZERO {
            continue;
        }
        let term = act_group_like(module, psi, g);
        for (o, v) in out.values.iter_mut().zip(&term.values) {
            *o += c * v;
        }
    }
    out
}

/// Both sides of the invariance criterion at `g`: whether `ψ•g = ε(g)ψ`, and
/// whether `τ_D(S g)ψ(a_1,…) = ψ(Ad_g a_1,…)` on all basis tuples.
pub fn invariance_criterion_sides(
    module: &BicovBimodule,
    psi: &Cochain,
    g: usize,
    tol: f64,
) -> (bool, bool) {
    let (n, k) = (psi.n, psi.degree);
    let invariant = act_group_like(module, psi, g).max_abs_diff(psi) <= tol;
    let perm = ad_permutation(module.group(), g);
    let tau = module.tau_u(module.group().inv(g));
    let mut criterion = true;
    for t in 0..tuples(n, k) {
        let args = digits(t, n, k);
        let moved: Vec<usize> = args.iter().map(|&a| perm[a]).collect();
        let lhs = tau.matvec(psi.at(&args));
        let rhs = psi.at(&moved);
        if lhs.iter().zip(rhs).any(|(a, b)| (a - b).norm() > tol) {
            criterion = false;
            break;
        }
    }
    (invariant, criterion)
}

fn basis_cochain(degree: usize, n: usize, d: usize, index: usize) -> Cochain {
    let mut c = Cochain::zero(degree, n, d);
    c.values[index] = ONE;
    c
}

/// Matrix of `δ : C^k → C^{k+1}`.
pub fn coboundary_matrix(module: &BicovBimodule, degree: usize) -> CMatrix {
    let (n, d) = (module.n(), module.dim());
    let columns: Vec<Vec<C64>> = (0..tuples(n, degree) * d)
        .map(|j| coboundary(module, &basis_cochain(degree, n, d, j)).values)
        .collect();
    CMatrix::from_columns(tuples(n, degree + 1) * d, &columns)
}

/// Rows `ψ•g − ψ = 0` for every `g`, stacked.
fn invariance_matrix(module: &BicovBimodule, degree: usize) -> CMatrix {
    let (n, d) = (module.n(), module.dim());
    let size = tuples(n, degree) * d;
    let blocks: Vec<CMatrix> = (0..n)
        .map(|g| {
            let columns: Vec<Vec<C64>> = (0..size)
                .map(|j| {
                    let e = basis_cochain(degree, n, d, j);
                    act_group_like(module, &e, g).sub(&e).values
                })
                .collect();
            CMatrix::from_columns(size, &columns)
        })
        .collect();
    CMatrix::vstack(&blocks).expect("blocks share a column count")
}

/// Invariant `k`-cochains (`k ≤ 2`).
pub fn invariant_subspace(module: &BicovBimodule, degree: usize, tol: f64) -> Result<CochainSpace> {
    if degree > 2 {
        return Err(Error::Invariant(format!(
            "invariant cochains are computed up to degree 2, not {degree}"
        )));
    }
    let basis = nullspace(&invariance_matrix(module, degree), tol);
    Ok(CochainSpace::from_vectors(
        degree,
        module.n(),
        module.dim(),
        basis,
    ))
}

/// `Z¹`, all 1-cocycles.
pub fn cocycles(module: &BicovBimodule, tol: f64) -> CochainSpace {
    let basis = nullspace(&coboundary_matrix(module, 1), tol);
    CochainSpace::from_vectors(1, module.n(), module.dim(), basis)
}

/// Invariant 1-cocycles: the nullspace of `[δ; ψ•g − ψ]`.
pub fn invariant_cocycles(module: &BicovBimodule, tol: f64) -> CochainSpace {
    let stacked = CMatrix::vstack(&[coboundary_matrix(module, 1), invariance_matrix(module, 1)])
        .expect("blocks share a column count");
    CochainSpace::from_vectors(1, module.n(), module.dim(), nullspace(&stacked, tol))
}

/// `δ` applied to a basis of the invariant 0-cochains, as columns.
pub fn invariant_coboundaries(module: &BicovBimodule, tol: f64) -> Result<CMatrix> {
    let inv0 = invariant_subspace(module, 0, tol)?;
    let columns: Vec<Vec<C64>> = inv0
        .cochains()
        .iter()
        .map(|c| coboundary(module, c).values)
        .collect();
    Ok(CMatrix::from_columns(module.n() * module.dim(), &columns))
}

/// Whether `δ(invariant 0-cochains)` and the invariant 1-cocycles span the
/// same space. Failure is an error, never a warning.
pub fn check_coboundaries_exhaust_invariant_cocycles(
    module: &BicovBimodule,
    tol: f64,
) -> Result<()> {
    let b = invariant_coboundaries(module, tol)?;
    let z = invariant_cocycles(module, tol);
    if same_column_space(&b, z.matrix(), tol)? {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "invariant coboundaries (rank {}) differ from invariant cocycles (dim {})",
            rank(&b, tol),
            z.dim()
        )))
    }
}

/// `(dim Z¹, dim B¹)`.
pub fn first_cohomology_dims(module: &BicovBimodule, tol: f64) -> (usize, usize) {
    (
        cocycles(module, tol).dim(),
        rank(&coboundary_matrix(module, 0), tol),
    )
}

/// Extends `ψ` to `D(G)` by `φ(φ_h·g) = τ_U(g)ψ(φ_h)` (so `φ(U) = 0` when
/// `ψ(1) = 0`) and returns the largest deviation from
/// `ε(x)φ(y) − φ(xy) + τ_D(y)φ(x) = 0` over basis pairs, together with `|φ(U)|`.
pub fn double_cocycle_residual(module: &BicovBimodule, psi: &Cochain) -> f64 {
    assert_eq!(psi.degree, 1);
    let (n, d) = (module.n(), module.dim());
    let group = module.group();
    let phi: Vec<Vec<C64>> = (0..n * n)
        .map(|k| module.tau_u(k % n).matvec(psi.at(&[k / n])))
        .collect();
    let t: Vec<CMatrix> = (0..n * n)
        .map(|k| module.tau_u(k % n) * module.tau_f(k / n))
        .collect();
    let mut worst: f64 = 0.0;
    for g in 0..n {
        let mut on_u = vec![ZERO; d];
        for h in 0..n {
            for (o, v) in on_u.iter_mut().zip(&phi[h * n + g]) {
                *o += v;
            }
        }
        worst = worst.max(on_u.iter().map(|c| c.norm()).fold(0.0, f64::max));
    }
    for x in 0..n * n {
        let (h, g) = (x / n, x % n);
        for y in 0..n * n {
            let (k, g2) = (y / n, y % n);
            let eps = counit_basis(h);
            let tail = t[y].matvec(&phi[x]);
            let prod = (group.conj(g, k) == h).then(|| &phi[h * n + group.mul(g, g2)]);
            for i in 0..d {
                let mut r = eps * phi[y][i] + tail[i];
                if let Some(p) = prod {
                    r -= p[i];
                }
                worst = worst.max(r.norm());
            }
        }
    }
    worst
}

pub fn verify_double_cocycle(module: &BicovBimodule, psi: &Cochain, tol: f64) -> bool {
    double_cocycle_residual(module, psi) <= tol
}

/// `ad(φ_s) ∈ R ⊗ F` for every `s ∈ support`, with `R = span{φ_s}`.
pub fn is_ad_invariant(group: &GroupTable, support: &[usize]) -> bool {
    let n = group.order();
    let mut inside = vec![false; n];
    for &s in support {
        inside[s] = true;
    }
    support.iter().all(|&s| {
        let ad = ad_coaction(group, &FunElement::basis(n, s));
        (0..n).all(|y| inside[y] || (0..n).all(|w| ad.get(y, w) == ZERO))
    })
}

/// Supports `S ⊆ G∖{e}` of the ad-invariant right ideals `span{φ_s : s ∈ S}`
/// of `Ker ε`: all unions of nontrivial classes, ordered by the bitmask over
/// the class list.
pub fn ad_invariant_ideals(group: &GroupTable) -> Vec<Vec<usize>> {
    let nontrivial: Vec<ConjugacyClass> = group
        .conjugacy_classes()
        .into_iter()
        .filter(|c| !c.is_identity_class())
        .collect();
    (0u64..1 << nontrivial.len())
        .map(|mask| {
            let mut s: Vec<usize> = nontrivial
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .flat_map(|(_, c)| c.members.iter().copied())
                .collect();
            s.sort_unstable();
            s
        })
        .collect()
}

/// Every subset of `G∖{e}` passing [`is_ad_invariant`], by exhaustive search.
pub fn ad_invariant_ideals_brute_force(group: &GroupTable) -> Vec<Vec<usize>> {
    let n = group.order();
    assert!(n <= 24, "exhaustive subset search is limited to order 24");
    let mut found: Vec<Vec<usize>> = (0u64..1 << (n - 1))
        .map(|mask| {
            (1..n)
                .filter(|&s| mask >> (s - 1) & 1 == 1)
                .collect::<Vec<_>>()
        })
        .filter(|s| is_ad_invariant(group, s))
        .collect();
    found.sort();
    found
}

/// One irreducible calculus per conjugacy class.
#[derive(Clone, Debug, PartialEq)]
pub struct CalculusDescriptor {
    pub class: ConjugacyClass,
    /// Dimension of `Γ_C` as a left module, `n_C`.
    pub bimodule_dim: usize,
    /// `true` for the class `{e}`, where `χ_e = 0` and `d = 0`.
    pub zero: bool,
    /// `χ_g = e − g` for `g ∈ C`, as coefficient vectors in `CG`.
    pub chi: Vec<GroupAlgElement>,
    /// Support of the complementary maximal ad-invariant ideal; `None` for `{e}`.
    pub ideal_support: Option<Vec<usize>>,
}

/// Nontrivial calculi are matched with maximal ad-invariant ideals
/// `S = G∖({e} ∪ C)`, checked to be ad-invariant with `n_C = (n−1) − |S|`.
pub fn classify_calculi(group: &GroupTable) -> Result<Vec<CalculusDescriptor>> {
    let n = group.order();
    let ideals = ad_invariant_ideals(group);
    let contains =
        |big: &Vec<usize>, small: &Vec<usize>| small.iter().all(|x| big.binary_search(x).is_ok());
    // proper (S ≠ G∖{e}) and not strictly inside another proper one
    let maximal_proper = |s: &Vec<usize>| {
        s.len() < n - 1
            && ideals
                .iter()
                .all(|t| t.len() == n - 1 || t.len() <= s.len() || !contains(t, s))
    };
    group
        .conjugacy_classes()
        .into_iter()
        .map(|class| {
            let zero = class.is_identity_class();
            let chi = class
                .members
                .iter()
                .map(|&g| &GroupAlgElement::group_like(n, 0) - &GroupAlgElement::group_like(n, g))
                .collect();
            let ideal_support = if zero {
                None
            } else {
                let s: Vec<usize> = (1..n).filter(|&x| !class.contains(x)).collect();
                if !ideals.contains(&s)
                    || !maximal_proper(&s)
                    || !is_ad_invariant(group, &s)
                    || n - 1 - s.len() != class.size()
                {
                    return Err(Error::Invariant(format!(
                        "class {:?} has no matching maximal ad-invariant ideal",
                        class.members
                    )));
                }
                Some(s)
            };
            Ok(CalculusDescriptor {
                bimodule_dim: class.size(),
                zero,
                chi,
                ideal_support,
                class,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    const TOL: f64 = 1e-9;

    fn module(name: &str, class: usize, irrep: usize) -> BicovBimodule {
        let g = catalog(name).unwrap();
        let classes = g.table.conjugacy_classes();
        BicovBimodule::build(&g.table, &classes[class], &g.irreps[irrep], TOL).unwrap()
    }

    #[test]
    fn degree_zero_coboundary() {
        let m = module("S3", 1, 0);
        let gamma = [C64::new(1.0, 0.0), C64::new(2.0, 1.0), C64::new(-1.0, 0.5)];
        let dg = coboundary(&m, &Cochain::constant(6, &gamma));
        for a in 0..6 {
            let expected: Vec<C64> = m
                .tau_f(a)
                .matvec(&gamma)
                .iter()
                .zip(&gamma)
                .map(|(t, g)| counit_basis(a) * g - t)
                .collect();
            assert_eq!(dg.at(&[a]), expected.as_slice());
        }
    }

    #[test]
    fn degree_one_coboundary_in_z2() {
        let m = module("Z2", 1, 0);
        let psi =
            Cochain::from_values(1, 2, 1, vec![C64::new(3.0, 0.0), C64::new(5.0, 0.0)]).unwrap();
        let dpsi = coboundary(&m, &psi);
        // ε(φ_e)ψ(φ_e) − ψ(φ_e φ_e) + τ_F(φ_e)ψ(φ_e), with τ_F(φ_e) = 0 on class {g}
        assert_eq!(dpsi.at(&[0, 0])[0], C64::new(3.0 - 3.0 + 0.0, 0.0));
        // ε(φ_g)ψ(φ_g) − ψ(φ_g φ_g) + τ_F(φ_g)ψ(φ_g) = 0 − 5 + 5
        assert_eq!(dpsi.at(&[1, 1])[0], ZERO);
        // ε(φ_e)ψ(φ_g) + τ_F(φ_g)ψ(φ_e) = 5 + 3
        assert_eq!(dpsi.at(&[0, 1])[0], C64::new(8.0, 0.0));
    }

    #[test]
    fn invariant_zero_cochains() {
        assert_eq!(
            invariant_subspace(&module("S3", 0, 0), 0, TOL)
                .unwrap()
                .dim(),
            1
        );
        let inv = invariant_subspace(&module("S3", 1, 0), 0, TOL).unwrap();
        assert_eq!(inv.dim(), 1);
        let v = inv.cochain(0);
        let first = v.values()[0];
        assert!(v.values().iter().all(|c| (c - first).norm() < TOL));
        assert_eq!(
            invariant_subspace(&module("Z4", 1, 0), 0, TOL)
                .unwrap()
                .dim(),
            1
        );
        assert_eq!(
            invariant_subspace(&module("Z4", 1, 1), 0, TOL)
                .unwrap()
                .dim(),
            0
        );
    }

    #[test]
    fn invariant_cocycles_of_small_modules() {
        assert_eq!(invariant_cocycles(&module("S3", 0, 0), TOL).dim(), 0);
        let z2 = module("Z2", 1, 0);
        let z = invariant_cocycles(&z2, TOL);
        assert_eq!(z.dim(), 1);
        let psi = z.cochain(0);
        assert!((psi.at(&[0])[0] + psi.at(&[1])[0]).norm() < TOL);
        assert!(psi.max_abs() > 0.5);
        assert!(verify_double_cocycle(&z2, &psi, TOL));
        assert!(verify_double_cocycle(&z2, &Cochain::zero(1, 2, 1), TOL));
        check_coboundaries_exhaust_invariant_cocycles(&z2, TOL).unwrap();
    }

    #[test]
    fn non_invariant_cocycle_is_not_a_double_cocycle() {
        let m = module("S3", 1, 0);
        let z = cocycles(&m, TOL);
        let zi = invariant_cocycles(&m, TOL);
        assert!(z.dim() > zi.dim());
        let bad = z
            .cochains()
            .into_iter()
            .find(|psi| {
                !same_column_space(
                    zi.matrix(),
                    &zi.matrix().hstack(&CMatrix::column(psi.values())).unwrap(),
                    TOL,
                )
                .unwrap()
            })
            .expect("a cocycle outside the invariant subspace");
        assert!(!verify_double_cocycle(&m, &bad, TOL));
        for psi in zi.cochains() {
            assert!(verify_double_cocycle(&m, &psi, TOL));
        }
    }

    #[test]
    fn action_is_right_action() {
        let m = module("S3", 2, 2);
        let (n, d) = (6, m.dim());
        let psi = Cochain::from_values(
            1,
            n,
            d,
            (0..n * d)
                .map(|k| C64::new(k as f64, 1.0 / (1.0 + k as f64)))
                .collect(),
        )
        .unwrap();
        let g = m.group();
        for a in 0..n {
            for b in 0..n {
                let twice = act_group_like(&m, &act_group_like(&m, &psi, a), b);
                assert!(twice.max_abs_diff(&act_group_like(&m, &psi, g.mul(a, b))) < 1e-12);
            }
        }
        assert_eq!(act_group_like(&m, &psi, 0), psi);
    }

    #[test]
    fn abelian_trivial_character_action_is_trivial() {
        let m = module("Z4", 2, 0);
        let psi = Cochain::from_values(1, 4, 1, (0..4).map(|k| C64::new(k as f64, 0.0)).collect())
            .unwrap();
        for g in 0..4 {
            assert_eq!(act_group_like(&m, &psi, g), psi);
        }
    }

    #[test]
    fn ideals_match_brute_force() {
        for name in ["Z1", "Z2", "S3", "D4", "Q8", "A4"] {
            let g = catalog(name).unwrap().table;
            let mut listed = ad_invariant_ideals(&g);
            listed.sort();
            assert_eq!(listed, ad_invariant_ideals_brute_force(&g), "{name}");
        }
        assert_eq!(
            ad_invariant_ideals(&catalog("Z1").unwrap().table),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(ad_invariant_ideals(&catalog("S3").unwrap().table).len(), 4);
    }

    #[test]
    fn classification_dimensions() {
        let dims = |name: &str| -> (Vec<usize>, bool) {
            let list = classify_calculi(&catalog(name).unwrap().table).unwrap();
            let mut nonzero: Vec<usize> = list
                .iter()
                .filter(|c| !c.zero)
                .map(|c| c.bimodule_dim)
                .collect();
            nonzero.sort_unstable();
            (nonzero, list.iter().any(|c| c.zero))
        };
        assert_eq!(dims("Z1"), (vec![], true));
        assert_eq!(dims("Z2"), (vec![1], true));
        assert_eq!(dims("S3"), (vec![2, 3], true));
    }
}
