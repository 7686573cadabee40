//! Bicovariant bimodules `Γ = F(G) ⊗ V` built from `ρ^μ_C`.
//!
//! `V = invΓ` has basis `ω_i`, one per carrier label `[h, α]` of the double
//! representation. An element `Σ_i c_i.ω_i` of `Γ` is stored as an `n × d`
//! matrix of coordinates, entry `(x, i)` holding `c_i(x)`.
//!
//! Right representations on `V`:
//!
//! - `τ_F(φ_k) = ρ(φ_k)`, the diagonal projector onto labels with `h = k`;
//! - `τ_U(g) = ρ(g⁻¹)`;
//! - `τ_D(φ_h·g) = τ_U(g) τ_F(φ_h)`.
//!
//! With this orientation `⟨f_ij, a⟩ = [τ_D(a)]_ji` and
//! `⟨X, R_ij⟩ = [τ_D(S X)]_ij` give `f_ij = δ_ij h_i` and
//! `R_ij(g) = ρ(g)_ij`, and `Λ^{ij}_{kl} = ⟨f_jl, R_ki⟩` is stored at row
//! `i * d + j`, column `k * d + l`.

use serde::{Deserialize, Serialize};

use crate::double::{DoubleElement, DoubleRep};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, GroupTable, Irrep};
use crate::hopf::{conv_left, conv_right, FunElement, GroupAlgElement};
use crate::linalg::{kron, rank, CMatrix, C64, ONE, ZERO};

/// Coordinates of an element of `Γ`: row `x`, column `i` is `c_i(x)`.
pub type GammaCoords = CMatrix;

/// A named residual from a verification routine.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
}

impl Check {
    pub fn new(name: impl Into<String>, residual: f64) -> Self {
        Check {
            name: name.into(),
            residual,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BicovBimodule {
    group: GroupTable,
    rep: DoubleRep,
    tau_f: Vec<CMatrix>,
    tau_u: Vec<CMatrix>,
    lambda: CMatrix,
}

impl BicovBimodule {
    pub fn new(group: &GroupTable, rep: DoubleRep) -> Self {
        let n = group.order();
        let tau_f = (0..n).map(|k| rep.fun_matrix(k).clone()).collect();
        let tau_u = (0..n)
            .map(|g| rep.group_matrix(group.inv(g)).clone())
            .collect();
        let mut module = BicovBimodule {
            group: group.clone(),
            rep,
            tau_f,
            tau_u,
            lambda: CMatrix::zeros(0, 0),
        };
        module.lambda = module.lambda_from_pairing();
        module
    }

    /// Builds `ρ^μ_C` and the bimodule in one step.
    pub fn build(
        group: &GroupTable,
        class: &ConjugacyClass,
        irrep: &Irrep,
        tol: f64,
    ) -> Result<Self> {
        let rep = DoubleRep::build(group, class, irrep, tol)?;
        let module = Self::new(group, rep);
        let residual = module.tau_generator_residual();
        if residual > tol {
            return Err(Error::NotHomomorphism { residual, tol });
        }
        Ok(module)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn rep(&self) -> &DoubleRep {
        &self.rep
    }

    pub fn n(&self) -> usize {
        self.group.order()
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    /// Labels `(h, α)` of the invariant basis.
    pub fn labels(&self) -> Vec<(usize, usize)> {
        self.rep.labels()
    }

    pub fn tau_f(&self, k: usize) -> &CMatrix {
        &self.tau_f[k]
    }

    pub fn tau_u(&self, g: usize) -> &CMatrix {
        &self.tau_u[g]
    }

    pub fn tau_d(&self, x: &DoubleElement) -> CMatrix {
        let (n, d) = (self.n(), self.dim());
        let mut out = CMatrix::zeros(d, d);
        for h in 0..n {
            for g in 0..n {
                let c = x.coeff(h, g);
                if c != ZERO {
                    out = &out + &(&self.tau_u[g] * &self.tau_f[h]).scale(c);
                }
            }
        }
        out
    }

    /// `τ_F(a)` for an arbitrary function.
    pub fn tau_f_of(&self, a: &FunElement) -> CMatrix {
        let d = self.dim();
        let mut out = CMatrix::zeros(d, d);
        for (k, c) in a.coeffs().iter().enumerate() {
            if *c != ZERO {
                out = &out + &self.tau_f[k].scale(*c);
            }
        }
        out
    }

    /// `τ_U(X)` for an arbitrary group-algebra element.
    pub fn tau_u_of(&self, x: &GroupAlgElement) -> CMatrix {
        let d = self.dim();
        let mut out = CMatrix::zeros(d, d);
        for (g, c) in x.coeffs().iter().enumerate() {
            if *c != ZERO {
                out = &out + &self.tau_u[g].scale(*c);
            }
        }
        out
    }

    /// `f_ij = Σ_g [τ_F(φ_g)]_ji g`.
    pub fn f(&self, i: usize, j: usize) -> GroupAlgElement {
        GroupAlgElement::new(self.tau_f.iter().map(|m| m[(j, i)]).collect())
    }

    /// `f^{[ℓβ]}_{[hα]} = h δ_{h,ℓ} δ_{α,β}`.
    pub fn f_closed(&self, i: usize, j: usize) -> GroupAlgElement {
        let n = self.n();
        if i == j {
            GroupAlgElement::group_like(n, self.labels()[i].0)
        } else {
            GroupAlgElement::zero(n)
        }
    }

    /// `R_ij(g) = [τ_U(S g)]_ij`.
    pub fn r(&self, i: usize, j: usize) -> FunElement {
        FunElement::new(
            (0..self.n())
                .map(|g| self.tau_u[self.group.inv(g)][(i, j)])
                .collect(),
        )
    }

    /// `R^{[ℓβ]}_{[hα]} = Σ_g φ_g δ_{ℓ,ghg⁻¹} [ρ^μ(g)]_{βα}`.
    pub fn r_closed(&self, i: usize, j: usize) -> FunElement {
        let labels = self.labels();
        let ((l, b), (h, a)) = (labels[i], labels[j]);
        let mu = self.rep.irrep();
        FunElement::new(
            (0..self.n())
                .map(|g| {
                    if self.group.conj(g, h) == l {
                        mu.matrix(g)[(b, a)]
                    } else {
                        ZERO
                    }
                })
                .collect(),
        )
    }

    fn lambda_from_pairing(&self) -> CMatrix {
        let d = self.dim();
        let f: Vec<GroupAlgElement> = (0..d * d).map(|k| self.f(k / d, k % d)).collect();
        let r: Vec<FunElement> = (0..d * d).map(|k| self.r(k / d, k % d)).collect();
        CMatrix::from_fn(d * d, d * d, |row, col| {
            let (i, j) = (row / d, row % d);
            let (k, l) = (col / d, col % d);
            crate::hopf::pairing(&f[j * d + l], &r[k * d + i])
        })
    }

    /// `Λ^{ij}_{kl} = ⟨f_jl, R_ki⟩`.
    pub fn lambda(&self) -> &CMatrix {
        &self.lambda
    }

    /// `Λ^{[nη][ℓβ]}_{[mγ][kα]} = δ_{ℓ,k} δ_{α,β} δ_{m,knk⁻¹} [ρ^μ(k)]_{γη}`.
    pub fn lambda_closed(&self) -> CMatrix {
        let d = self.dim();
        let labels = self.labels();
        let mu = self.rep.irrep();
        CMatrix::from_fn(d * d, d * d, |row, col| {
            let ((n_, eta), (l, beta)) = (labels[row / d], labels[row % d]);
            let ((m, gamma), (k, alpha)) = (labels[col / d], labels[col % d]);
            if l == k && alpha == beta && m == self.group.conj(k, n_) {
                mu.matrix(k)[(gamma, eta)]
            } else {
                ZERO
            }
        })
    }

    /// `Σ_g ρ_D(S g) ⊗ ρ_D(φ_g)` with `ρ_D = τ_Dᵀ`, the image of `σ∘ℛ⁻¹`.
    pub fn lambda_universal(&self) -> CMatrix {
        let d = self.dim();
        let mut out = CMatrix::zeros(d * d, d * d);
        for g in 0..self.n() {
            let left = self.tau_u[self.group.inv(g)].transpose();
            let right = self.tau_f[g].transpose();
            out = &out + &kron(&left, &right);
        }
        out
    }

    /// Left-invariant element `Σ_i v_i ω_i`.
    pub fn invariant(&self, v: &[C64]) -> GammaCoords {
        CMatrix::from_fn(self.n(), self.dim(), |_, i| v[i])
    }

    /// `φ_x.ω_i`.
    pub fn basis_element(&self, x: usize, i: usize) -> GammaCoords {
        let mut c = CMatrix::zeros(self.n(), self.dim());
        c[(x, i)] = ONE;
        c
    }

    pub fn left_mult(&self, a: &FunElement, gamma: &GammaCoords) -> GammaCoords {
        CMatrix::from_fn(self.n(), self.dim(), |x, i| a.at(x) * gamma[(x, i)])
    }

    /// `ω_i.a = Σ_j (f_ij∗a).ω_j`, as coordinates.
    pub fn right_mult_basis(&self, i: usize, a: &FunElement) -> GammaCoords {
        let (n, d) = (self.n(), self.dim());
        let mut out = CMatrix::zeros(n, d);
        for j in 0..d {
            let f = self.f(i, j);
            if f.max_abs() == 0.0 {
                continue;
            }
            let conv = conv_left(&self.group, &f, a);
            for x in 0..n {
                out[(x, j)] = conv.at(x);
            }
        }
        out
    }

    /// `(Σ_i c_i.ω_i).a = Σ_i c_i.(ω_i.a)`.
    pub fn right_mult(&self, gamma: &GammaCoords, a: &FunElement) -> GammaCoords {
        let (n, d) = (self.n(), self.dim());
        let mut out = CMatrix::zeros(n, d);
        for i in 0..d {
            let c = FunElement::new(gamma.col(i));
            if c.max_abs() == 0.0 {
                continue;
            }
            out = &out + &self.left_mult(&c, &self.right_mult_basis(i, a));
        }
        out
    }

    /// `(1⊗γ).a = Σ a_(1) ⊗ τ_F(a_(2))γ` for invariant `γ`.
    pub fn right_mult_tau(&self, v: &[C64], a: &FunElement) -> GammaCoords {
        let (n, d) = (self.n(), self.dim());
        let delta = crate::hopf::delta_f(&self.group, a);
        let mut out = CMatrix::zeros(n, d);
        for x in 0..n {
            for y in 0..n {
                let c = delta.get(x, y);
                if c == ZERO {
                    continue;
                }
                let w = self.tau_f[y].matvec(v);
                for j in 0..d {
                    out[(x, j)] += c * w[j];
                }
            }
        }
        out
    }

    /// `δΓ(c.ω_i) = Δc.(1⊗ω_i)`; coefficient of `φ_x ⊗ φ_y.ω_i` at `(x*n + y)*d + i`.
    pub fn left_coaction(&self, gamma: &GammaCoords) -> Vec<C64> {
        let (n, d) = (self.n(), self.dim());
        let mut out = vec![ZERO; n * n * d];
        for x in 0..n {
            for y in 0..n {
                let xy = self.group.mul(x, y);
                for i in 0..d {
                    out[(x * n + y) * d + i] = gamma[(xy, i)];
                }
            }
        }
        out
    }

    /// `Γδ(c.ω_i) = Δc.(Σ_j ω_j ⊗ R_ji)`; coefficient of `φ_y.ω_j ⊗ φ_z` at
    /// `(y*d + j)*n + z`.
    pub fn right_coaction(&self, gamma: &GammaCoords) -> Vec<C64> {
        let (n, d) = (self.n(), self.dim());
        let r: Vec<FunElement> = (0..d * d).map(|k| self.r(k / d, k % d)).collect();
        let mut out = vec![ZERO; n * d * n];
        for y in 0..n {
            for z in 0..n {
                let yz = self.group.mul(y, z);
                for i in 0..d {
                    let c = gamma[(yz, i)];
                    if c == ZERO {
                        continue;
                    }
                    for j in 0..d {
                        out[(y * d + j) * n + z] += c * r[j * d + i].at(z);
                    }
                }
            }
        }
        out
    }

    /// `max ‖τ(xy) − τ(y)τ(x)‖` over basis pairs of `F` and of `CG`.
    pub fn tau_generator_residual(&self) -> f64 {
        let n = self.n();
        let zero = CMatrix::zeros(self.dim(), self.dim());
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                let ff = if a == b { &self.tau_f[a] } else { &zero };
                worst = worst.max((&self.tau_f[b] * &self.tau_f[a]).max_abs_diff(ff));
                let uu = &self.tau_u[b] * &self.tau_u[a];
                worst = worst.max(uu.max_abs_diff(&self.tau_u[self.group.mul(a, b)]));
            }
        }
        worst
    }

    /// `max ‖τ_D(xy) − τ_D(y)τ_D(x)‖` over all basis pairs of `D(G)`.
    pub fn tau_right_rep_residual(&self) -> f64 {
        let n = self.n();
        let t: Vec<CMatrix> = (0..n * n)
            .map(|k| &self.tau_u[k % n] * &self.tau_f[k / n])
            .collect();
        let zero = CMatrix::zeros(self.dim(), self.dim());
        let mut worst: f64 = 0.0;
        for h in 0..n {
            for g in 0..n {
                for k in 0..n {
                    for g2 in 0..n {
                        // (φ_h g)(φ_k g') = δ_{h,gkg⁻¹} φ_h gg'
                        let xy = if self.group.conj(g, k) == h {
                            &t[h * n + self.group.mul(g, g2)]
                        } else {
                            &zero
                        };
                        let expected = &t[k * n + g2] * &t[h * n + g];
                        worst = worst.max(xy.max_abs_diff(&expected));
                    }
                }
            }
        }
        worst
    }

    /// f and R from the pairing definitions against their closed forms.
    pub fn closed_form_residual(&self) -> f64 {
        let d = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                worst = worst.max(self.f(i, j).max_abs_diff(&self.f_closed(i, j)));
                worst = worst.max(self.r(i, j).max_abs_diff(&self.r_closed(i, j)));
            }
        }
        worst
    }

    /// `Δf_ij = Σ_k f_ik⊗f_kj`, `ΔR_ij = Σ_k R_ik⊗R_kj`, `ε(f_ij) = ε(R_ij) = δ_ij`.
    pub fn representative_law_residual(&self) -> f64 {
        let (n, d) = (self.n(), self.dim());
        let f: Vec<GroupAlgElement> = (0..d * d).map(|k| self.f(k / d, k % d)).collect();
        let r: Vec<FunElement> = (0..d * d).map(|k| self.r(k / d, k % d)).collect();
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let delta_ij = if i == j { ONE } else { ZERO };
                let fij = &f[i * d + j];
                let rij = &r[i * d + j];
                worst = worst.max((crate::hopf::counit_u(fij) - delta_ij).norm());
                worst = worst.max((crate::hopf::counit_f(rij) - delta_ij).norm());
                let df = crate::hopf::delta_u(fij);
                let dr = crate::hopf::delta_f(&self.group, rij);
                for x in 0..n {
                    for y in 0..n {
                        let sf: C64 = (0..d)
                            .map(|k| f[i * d + k].coeff(x) * f[k * d + j].coeff(y))
                            .sum();
                        let sr: C64 = (0..d)
                            .map(|k| r[i * d + k].at(x) * r[k * d + j].at(y))
                            .sum();
                        worst = worst.max((df.get(x, y) - sf).norm());
                        worst = worst.max((dr.get(x, y) - sr).norm());
                    }
                }
            }
        }
        worst
    }

    /// `(id⊗S̃(g))Γδ(ω_i) = τ_U(g)ω_i` for all `g`, `i`.
    pub fn right_coaction_residual(&self) -> f64 {
        let (n, d) = (self.n(), self.dim());
        let mut worst: f64 = 0.0;
        for i in 0..d {
            let mut e = vec![ZERO; d];
            e[i] = ONE;
            let co = self.right_coaction(&self.invariant(&e));
            for g in 0..n {
                // ⟨S̃(g), φ_z⟩ = δ_{z, g⁻¹}
                let z = self.group.inv(g);
                let expected = self.tau_u[g].matvec(&e);
                for y in 0..n {
                    for j in 0..d {
                        worst = worst.max((co[(y * d + j) * n + z] - expected[j]).norm());
                    }
                }
            }
        }
        worst
    }

    /// Right module law `(ω_i.a).b = ω_i.(ab)` and agreement of `f_ij∗a` with
    /// the `τ_F` form of right multiplication, over basis `a`, `b`.
    pub fn right_module_residual(&self) -> f64 {
        let (n, d) = (self.n(), self.dim());
        let mut worst: f64 = 0.0;
        for i in 0..d {
            let mut e = vec![ZERO; d];
            e[i] = ONE;
            for a in 0..n {
                let fa = FunElement::basis(n, a);
                let once = self.right_mult_basis(i, &fa);
                worst = worst.max(once.max_abs_diff(&self.right_mult_tau(&e, &fa)));
                for b in 0..n {
                    let fb = FunElement::basis(n, b);
                    let twice = self.right_mult(&once, &fb);
                    let direct = self.right_mult_basis(i, &crate::hopf::product_f(&fa, &fb));
                    worst = worst.max(twice.max_abs_diff(&direct));
                }
            }
            let unit = self.right_mult_basis(i, &FunElement::one(n));
            worst = worst.max(unit.max_abs_diff(&self.invariant(&e)));
        }
        worst
    }

    /// `(id⊗Γδ)δΓ = (δΓ⊗id)Γδ` and the counit laws, on every `φ_x.ω_i`.
    pub fn compatibility_residual(&self) -> f64 {
        let (n, d) = (self.n(), self.dim());
        let mut worst: f64 = 0.0;
        for x0 in 0..n {
            for i0 in 0..d {
                let gamma = self.basis_element(x0, i0);
                let left = self.left_coaction(&gamma);
                let right = self.right_coaction(&gamma);
                // (ε⊗id)δΓ = id and (id⊗ε)Γδ = id
                for y in 0..n {
                    for i in 0..d {
                        worst = worst.max((left[y * d + i] - gamma[(y, i)]).norm());
                        worst = worst.max((right[(y * d + i) * n] - gamma[(y, i)]).norm());
                    }
                }
                // index (x, y, j, z) for F ⊗ Γ ⊗ F
                let mut lhs = vec![ZERO; n * n * d * n];
                for x in 0..n {
                    let slice = CMatrix::from_fn(n, d, |y, i| left[(x * n + y) * d + i]);
                    let co = self.right_coaction(&slice);
                    for (k, c) in co.iter().enumerate() {
                        lhs[x * n * d * n + k] = *c;
                    }
                }
                for z in 0..n {
                    let slice = CMatrix::from_fn(n, d, |y, j| right[(y * d + j) * n + z]);
                    let co = self.left_coaction(&slice);
                    for x in 0..n {
                        for y in 0..n {
                            for j in 0..d {
                                let l = lhs[((x * n + y) * d + j) * n + z];
                                worst = worst.max((l - co[(x * n + y) * d + j]).norm());
                            }
                        }
                    }
                }
            }
        }
        worst
    }

    /// `τ_F(a)γ = Σ S(a_(1)).γ.a_(2)` on basis `a` and `γ = ω_i`.
    pub fn tau_f_reconstruction_residual(&self) -> f64 {
        let (n, d) = (self.n(), self.dim());
        let mut worst: f64 = 0.0;
        for g in 0..n {
            for i in 0..d {
                let mut total = CMatrix::zeros(n, d);
                for x in 0..n {
                    // Δφ_g = Σ_{xy=g} φ_x ⊗ φ_y
                    let y = self.group.mul(self.group.inv(x), g);
                    let right = self.right_mult_basis(i, &FunElement::basis(n, y));
                    let s = FunElement::basis(n, self.group.inv(x));
                    total = &total + &self.left_mult(&s, &right);
                }
                let expected = self.invariant(&self.tau_f[g].col(i));
                worst = worst.max(total.max_abs_diff(&expected));
            }
        }
        worst
    }

    /// `Σ_i (f_li∗a) R_si = Σ_i R_il (a∗f_is)` over all `l`, `s` and basis `a`.
    pub fn commutation_residual(&self) -> f64 {
        let (n, d) = (self.n(), self.dim());
        let f: Vec<GroupAlgElement> = (0..d * d).map(|k| self.f(k / d, k % d)).collect();
        let r: Vec<FunElement> = (0..d * d).map(|k| self.r(k / d, k % d)).collect();
        let mut worst: f64 = 0.0;
        for g in 0..n {
            let a = FunElement::basis(n, g);
            for l in 0..d {
                for s in 0..d {
                    let mut lhs = FunElement::zero(n);
                    let mut rhs = FunElement::zero(n);
                    for i in 0..d {
                        let left = conv_left(&self.group, &f[l * d + i], &a);
                        lhs = &lhs + &crate::hopf::product_f(&left, &r[s * d + i]);
                        let right = conv_right(&self.group, &a, &f[i * d + s]);
                        rhs = &rhs + &crate::hopf::product_f(&r[i * d + l], &right);
                    }
                    worst = worst.max(lhs.max_abs_diff(&rhs));
                }
            }
        }
        worst
    }

    /// Rank of the coordinate vectors of all `φ_g.ω_i`; `n·d` iff free.
    pub fn freeness_rank(&self, tol: f64) -> usize {
        let (n, d) = (self.n(), self.dim());
        let columns: Vec<Vec<C64>> = (0..n * d)
            .map(|k| self.basis_element(k / d, k % d).as_slice().to_vec())
            .collect();
        rank(&CMatrix::from_columns(n * d, &columns), tol)
    }

    pub fn universal_r_residual(&self) -> f64 {
        self.lambda_universal().max_abs_diff(&self.lambda)
    }

    pub fn lambda_closed_residual(&self) -> f64 {
        self.lambda_closed().max_abs_diff(&self.lambda)
    }

    /// Every structural identity of the bimodule, by name.
    pub fn checks(&self) -> Result<Vec<Check>> {
        Ok(vec![
            Check::new("tau_right_rep", self.tau_right_rep_residual()),
            Check::new("f_r_closed_form", self.closed_form_residual()),
            Check::new("representative_laws", self.representative_law_residual()),
            Check::new("right_module", self.right_module_residual()),
            Check::new("right_coaction", self.right_coaction_residual()),
            Check::new("coaction_compatibility", self.compatibility_residual()),
            Check::new("tau_f_reconstruction", self.tau_f_reconstruction_residual()),
            Check::new("f_r_commutation", self.commutation_residual()),
            Check::new("lambda_closed_form", self.lambda_closed_residual()),
            Check::new("universal_r", self.universal_r_residual()),
            Check::new("qybe", verify_qybe(&self.lambda)?),
        ])
    }
}

/// Side `d` of a `d² × d²` matrix.
pub fn braid_side(m: &CMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "{}x{} is not square",
            m.rows(),
            m.cols()
        )));
    }
    let d = (m.rows() as f64).sqrt().round() as usize;
    if d * d != m.rows() {
        return Err(Error::Shape(format!(
            "order {} is not a perfect square",
            m.rows()
        )));
    }
    Ok(d)
}

/// `‖Λ₁₂Λ₁₃Λ₂₃ − Λ₂₃Λ₁₃Λ₁₂‖∞` on `V⊗V⊗V`, with `Λ₁₂ = Λ⊗1`, `Λ₂₃ = 1⊗Λ`
/// and `Λ₁₃ = P₂₃ Λ₁₂ P₂₃`. Both sides are applied column by column using
/// the nonzero pattern of `Λ`, so the cost scales with its sparsity.
pub fn verify_qybe(lambda: &CMatrix) -> Result<f64> {
    let d = braid_side(lambda)?;
    let d2 = d * d;
    // nonzeros of column (x, y), as (row a, row b, value)
    let columns: Vec<Vec<(usize, usize, C64)>> = (0..d2)
        .map(|col| {
            (0..d2)
                .filter_map(|row| {
                    let v = lambda[(row, col)];
                    (v != ZERO).then_some((row / d, row % d, v))
                })
                .collect()
        })
        .collect();
    let apply = |slots: (usize, usize), v: &[C64], out: &mut Vec<C64>| {
        out.iter_mut().for_each(|z| *z = ZERO);
        for (k, &c) in v.iter().enumerate() {
            if c == ZERO {
                continue;
            }
            let mut t = [k / d2, (k / d) % d, k % d];
            for &(a, b, val) in &columns[t[slots.0] * d + t[slots.1]] {
                t[slots.0] = a;
                t[slots.1] = b;
                out[(t[0] * d + t[1]) * d + t[2]] += val * c;
            }
        }
    };
    let size = d2 * d;
    let (mut e, mut p, mut q) = (vec![ZERO; size], vec![ZERO; size], vec![ZERO; size]);
    let mut worst = 0.0f64;
    for k in 0..size {
        e.iter_mut().for_each(|z| *z = ZERO);
        e[k] = ONE;
        apply((1, 2), &e, &mut p);
        apply((0, 2), &p, &mut q);
        let mut lhs = vec![ZERO; size];
        apply((0, 1), &q, &mut lhs);
        apply((0, 1), &e, &mut p);
        apply((0, 2), &p, &mut q);
        let mut rhs = vec![ZERO; size];
        apply((1, 2), &q, &mut rhs);
        worst = lhs
            .iter()
            .zip(&rhs)
            .map(|(a, b)| (a - b).norm())
            .fold(worst, f64::max);
    }
    Ok(worst)
}

pub const LAMBDA_CONVENTION: &str =
    "row i*d+j, column k*d+l holds Lambda^{ij}_{kl} = <f_jl, R_ki>; kron(A,B)[(i*q+k),(j*s+l)] = A_ij B_kl";

/// JSON form of a braiding matrix, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaExport {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
    pub convention: String,
}

impl LambdaExport {
    pub fn from_matrix(lambda: &CMatrix) -> Result<Self> {
        let dim = braid_side(lambda)?;
        Ok(LambdaExport {
            dim,
            entries: lambda.as_slice().iter().map(|z| [z.re, z.im]).collect(),
            convention: LAMBDA_CONVENTION.to_owned(),
        })
    }

    pub fn to_matrix(&self) -> Result<CMatrix> {
        let side = self.dim * self.dim;
        CMatrix::from_vec(
            side,
            side,
            self.entries
                .iter()
                .map(|[re, im]| C64::new(*re, *im))
                .collect(),
        )
    }
}
