//! First-order differential calculi `(Γ, d)` on `F(G)`, the universal
//! calculus `F ⊗ Ker ε`, and the quantum Lie algebra of a cocycle.

use crate::bicov::{BicovBimodule, Check, GammaCoords};
use crate::cohom::{coboundary, Cochain};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, GroupTable, Irrep};
use crate::hopf::{
    conv_left, delta_f, delta_u, product_u, FunElement, GroupAlgElement, TensorElement, TensorKind,
};
use crate::linalg::{nullspace, rank, same_column_space, CMatrix, C64, ONE, ZERO};

// --- universal calculus ---

/// `D′a = Δa − a⊗1`.
pub fn universal_d(group: &GroupTable, a: &FunElement) -> TensorElement {
    let n = group.order();
    delta_f(group, a).sub(&TensorElement::simple_fun(a, &FunElement::one(n)))
}

/// `Da = 1⊗a − a⊗1`, the universal differential in `Ker m`.
pub fn universal_d_kernel(a: &FunElement) -> TensorElement {
    let one = FunElement::one(a.len());
    TensorElement::simple_fun(&one, a).sub(&TensorElement::simple_fun(a, &one))
}

/// `Σ_{p,q} T_{pq} (φ_p⊗1) Δ(φ_q)` with `Δ` or `(S⊗1)Δ` on the second leg.
fn twist(group: &GroupTable, t: &TensorElement, with_antipode: bool) -> TensorElement {
    let n = group.order();
    let mut out = TensorElement::zero(TensorKind::FunFun, n);
    for p in 0..n {
        for q in 0..n {
            let c = t.get(p, q);
            if c == ZERO {
                continue;
            }
            let dq = delta_f(group, &FunElement::basis(n, q));
            for u in 0..n {
                // (φ_p ⊗ 1)(φ_u ⊗ φ_v), or φ_{u⁻¹} in place of φ_u
                let first = if with_antipode { group.inv(u) } else { u };
                if first != p {
                    continue;
                }
                for v in 0..n {
                    *out.get_mut(p, v) += c * dq.get(u, v);
                }
            }
        }
    }
    out
}

/// `r(a⊗b) = (a⊗1)Δb`.
pub fn r_iso(group: &GroupTable, t: &TensorElement) -> TensorElement {
    twist(group, t, false)
}

/// `r⁻¹(a⊗b) = (a⊗1)(S⊗1)Δb`.
pub fn r_inv(group: &GroupTable, t: &TensorElement) -> TensorElement {
    twist(group, t, true)
}

/// `a.T = (a⊗1)T` on `F⊗F`.
pub fn universal_left_mult(a: &FunElement, t: &TensorElement) -> TensorElement {
    let n = a.len();
    t.mul_fun(&TensorElement::simple_fun(a, &FunElement::one(n)))
}

/// `T.a = TΔa` on `F⊗F`.
pub fn universal_right_mult(
    group: &GroupTable,
    t: &TensorElement,
    a: &FunElement,
) -> TensorElement {
    t.mul_fun(&delta_f(group, a))
}

/// Residuals of the universal calculus: `r∘r⁻¹ = r⁻¹∘r = id` on basis
/// tensors, `r(Da) = D′a`, `(id⊗ε)D′a = 0` and Leibniz for `D′`, over basis `a`, `b`.
pub fn universal_checks(group: &GroupTable) -> Vec<Check> {
    let n = group.order();
    let mut roundtrip: f64 = 0.0;
    for p in 0..n {
        for q in 0..n {
            let mut t = TensorElement::zero(TensorKind::FunFun, n);
            *t.get_mut(p, q) = ONE;
            roundtrip = roundtrip.max(r_iso(group, &r_inv(group, &t)).max_abs_diff(&t));
            roundtrip = roundtrip.max(r_inv(group, &r_iso(group, &t)).max_abs_diff(&t));
        }
    }
    let (mut r_of_d, mut kernel, mut leibniz): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for a in 0..n {
        let fa = FunElement::basis(n, a);
        let dprime = universal_d(group, &fa);
        r_of_d = r_of_d.max(r_iso(group, &universal_d_kernel(&fa)).max_abs_diff(&dprime));
        kernel = kernel.max(dprime.counit_right().max_abs());
        for b in 0..n {
            let fb = FunElement::basis(n, b);
            let lhs = universal_d(group, &crate::hopf::product_f(&fa, &fb));
            let rhs = universal_left_mult(&fa, &universal_d(group, &fb))
                .add(&universal_right_mult(group, &dprime, &fb));
            leibniz = leibniz.max(lhs.max_abs_diff(&rhs));
        }
    }
    vec![
        Check::new("r_roundtrip", roundtrip),
        Check::new("r_of_D", r_of_d),
        Check::new("universal_in_ker_eps", kernel),
        Check::new("universal_leibniz", leibniz),
    ]
}

/// Rank of `r(Ker m)` and the largest `|(id⊗ε) r(T)|` over a basis of `Ker m`.
pub fn r_kernel_image(group: &GroupTable, tol: f64) -> (usize, f64) {
    let n = group.order();
    let mut worst: f64 = 0.0;
    let mut columns = Vec::new();
    // m(φ_p⊗φ_q) = δ_{p,q}φ_p, so Ker m is spanned by φ_p⊗φ_q with p ≠ q
    for p in 0..n {
        for q in (0..n).filter(|&q| q != p) {
            let mut t = TensorElement::zero(TensorKind::FunFun, n);
            *t.get_mut(p, q) = ONE;
            debug_assert_eq!(t.multiply_legs().max_abs(), 0.0);
            let image = r_iso(group, &t);
            worst = worst.max(image.counit_right().max_abs());
            columns.push(image.coeffs().to_vec());
        }
    }
    (rank(&CMatrix::from_columns(n * n, &columns), tol), worst)
}

// --- calculi on bicovariant bimodules ---

#[derive(Clone, Debug)]
pub struct FirstOrderCalculus {
    module: BicovBimodule,
    /// `dφ_g` for each `g`.
    differential: Vec<GammaCoords>,
    cocycle: Option<Cochain>,
    witness: Option<Vec<C64>>,
}

impl FirstOrderCalculus {
    /// `da = Σ a_(1).ψ(a_(2))`, so `(da)_i(y) = Σ_z a(yz) ψ_i(φ_z)`.
    /// Rejects `ψ` when the Leibniz residual exceeds `tol`.
    pub fn from_cocycle(module: &BicovBimodule, psi: &Cochain, tol: f64) -> Result<Self> {
        if psi.degree() != 1 || psi.dim() != module.dim() {
            return Err(Error::Shape(
                "expected a 1-cochain on the bimodule's invariant forms".into(),
            ));
        }
        let (n, d) = (module.n(), module.dim());
        let group = module.group();
        let differential = (0..n)
            .map(|g| {
                let delta = delta_f(group, &FunElement::basis(n, g));
                let mut out = CMatrix::zeros(n, d);
                for y in 0..n {
                    for z in 0..n {
                        let c = delta.get(y, z);
                        if c == ZERO {
                            continue;
                        }
                        for (i, v) in psi.at(&[z]).iter().enumerate() {
                            out[(y, i)] += c * v;
                        }
                    }
                }
                out
            })
            .collect();
        let calc = FirstOrderCalculus {
            module: module.clone(),
            differential,
            cocycle: Some(psi.clone()),
            witness: None,
        };
        let residual = calc.leibniz_residual();
        if residual > tol {
            return Err(Error::NotCocycle(residual));
        }
        Ok(calc)
    }

    /// The internal derivation `da = a.γ − γ.a` of an invariant `γ ∈ invΓ`.
    pub fn coboundary(module: &BicovBimodule, gamma: &[C64], tol: f64) -> Result<Self> {
        if gamma.len() != module.dim() {
            return Err(Error::DimensionMismatch {
                expected: module.dim(),
                found: gamma.len(),
            });
        }
        let n = module.n();
        let residual = (0..n)
            .map(|g| {
                module
                    .tau_u(g)
                    .matvec(gamma)
                    .iter()
                    .zip(gamma)
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if residual > tol {
            return Err(Error::NotInvariant(residual));
        }
        let inv = module.invariant(gamma);
        let differential = (0..n)
            .map(|g| {
                let a = FunElement::basis(n, g);
                &module.left_mult(&a, &inv) - &module.right_mult(&inv, &a)
            })
            .collect();
        Ok(FirstOrderCalculus {
            module: module.clone(),
            differential,
            cocycle: Some(coboundary(module, &Cochain::constant(n, gamma))),
            witness: Some(gamma.to_vec()),
        })
    }

    /// `d_C φ = Σ_{g∈C} (χ_g∗φ).ω_g` with `χ_g = e − g` on `Γ_C` (trivial irrep).
    pub fn d_c(group: &GroupTable, class: &ConjugacyClass, tol: f64) -> Result<Self> {
        let module = BicovBimodule::build(group, class, &Irrep::trivial(group), tol)?;
        let n = group.order();
        let e = GroupAlgElement::group_like(n, 0);
        let differential = (0..n)
            .map(|x| {
                let phi = FunElement::basis(n, x);
                let mut out = CMatrix::zeros(n, class.size());
                for (pos, &g) in class.members.iter().enumerate() {
                    let chi = &e - &GroupAlgElement::group_like(n, g);
                    let c = conv_left(group, &chi, &phi);
                    for y in 0..n {
                        out[(y, pos)] = c.at(y);
                    }
                }
                out
            })
            .collect();
        let witness = vec![ONE; class.size()];
        let cocycle = coboundary(&module, &Cochain::constant(n, &witness));
        Ok(FirstOrderCalculus {
            module,
            differential,
            cocycle: Some(cocycle),
            witness: Some(witness),
        })
    }

    pub fn module(&self) -> &BicovBimodule {
        &self.module
    }

    pub fn cocycle(&self) -> Option<&Cochain> {
        self.cocycle.as_ref()
    }

    /// The invariant 0-cochain `γ` when the calculus is a coboundary.
    pub fn witness(&self) -> Option<&[C64]> {
        self.witness.as_deref()
    }

    pub fn is_coboundary(&self) -> bool {
        self.witness.is_some()
    }

    /// `dφ_g`.
    pub fn d_basis(&self, g: usize) -> &GammaCoords {
        &self.differential[g]
    }

    pub fn d(&self, a: &FunElement) -> GammaCoords {
        let (n, d) = (self.module.n(), self.module.dim());
        let mut out = CMatrix::zeros(n, d);
        for (g, c) in a.coeffs().iter().enumerate() {
            if *c != ZERO {
                out = &out + &self.differential[g].scale(*c);
            }
        }
        out
    }

    /// Row `g` holds the coordinates of `dφ_g`, flattened as `x * d + i`.
    pub fn matrix(&self) -> CMatrix {
        let (n, d) = (self.module.n(), self.module.dim());
        CMatrix::from_fn(n, n * d, |g, k| self.differential[g][(k / d, k % d)])
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.differential.iter().all(|m| m.max_abs() <= tol)
    }

    /// `max ‖d(ab) − a.db − da.b‖` over basis pairs.
    pub fn leibniz_residual(&self) -> f64 {
        let n = self.module.n();
        let zero = CMatrix::zeros(n, self.module.dim());
        let mut worst: f64 = 0.0;
        for a in 0..n {
            let fa = FunElement::basis(n, a);
            for b in 0..n {
                let fb = FunElement::basis(n, b);
                let lhs = if a == b { &self.differential[a] } else { &zero };
                let rhs = &self.module.left_mult(&fa, &self.differential[b])
                    + &self.module.right_mult(&self.differential[a], &fb);
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
        worst
    }

    /// `|d(1)|`.
    pub fn d_one_residual(&self) -> f64 {
        self.d(&FunElement::one(self.module.n())).max_abs()
    }

    /// `max |δΓ(dφ) − (1⊗d)Δφ|` over basis `φ`.
    pub fn left_covariance_residual(&self) -> f64 {
        let (n, d) = (self.module.n(), self.module.dim());
        let group = self.module.group();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            let lhs = self.module.left_coaction(&self.differential[a]);
            let delta = delta_f(group, &FunElement::basis(n, a));
            let mut rhs = vec![ZERO; n * n * d];
            for x in 0..n {
                for y in 0..n {
                    let c = delta.get(x, y);
                    if c == ZERO {
                        continue;
                    }
                    for z in 0..n {
                        for i in 0..d {
                            rhs[(x * n + z) * d + i] += c * self.differential[y][(z, i)];
                        }
                    }
                }
            }
            worst = worst.max(max_diff(&lhs, &rhs));
        }
        worst
    }

    /// `max |Γδ(dφ) − (d⊗1)Δφ|` over basis `φ`.
    pub fn right_covariance_residual(&self) -> f64 {
        let (n, d) = (self.module.n(), self.module.dim());
        let group = self.module.group();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            let lhs = self.module.right_coaction(&self.differential[a]);
            let delta = delta_f(group, &FunElement::basis(n, a));
            let mut rhs = vec![ZERO; n * d * n];
            for x in 0..n {
                for y in 0..n {
                    let c = delta.get(x, y);
                    if c == ZERO {
                        continue;
                    }
                    for z in 0..n {
                        for j in 0..d {
                            rhs[(z * d + j) * n + y] += c * self.differential[x][(z, j)];
                        }
                    }
                }
            }
            worst = worst.max(max_diff(&lhs, &rhs));
        }
        worst
    }

    /// `rank span{a.db}` over basis `a`, `b`; equals `n·d` iff `Im d` generates `Γ`.
    pub fn surjectivity_rank(&self, tol: f64) -> usize {
        let n = self.module.n();
        let columns: Vec<Vec<C64>> = (0..n * n)
            .map(|k| {
                let a = FunElement::basis(n, k / n);
                self.module
                    .left_mult(&a, &self.differential[k % n])
                    .as_slice()
                    .to_vec()
            })
            .collect();
        rank(&CMatrix::from_columns(n * self.module.dim(), &columns), tol)
    }

    /// `max |Γδ(γ) − γ⊗1|` for the coboundary witness.
    pub fn witness_right_invariance_residual(&self) -> Option<f64> {
        let gamma = self.witness.as_ref()?;
        let (n, d) = (self.module.n(), self.module.dim());
        let co = self.module.right_coaction(&self.module.invariant(gamma));
        let expected: Vec<C64> = (0..n * d * n).map(|k| gamma[(k / n) % d]).collect();
        Some(max_diff(&co, &expected))
    }

    /// `max |d − d′|` against another calculus on the same bimodule.
    pub fn max_abs_diff(&self, other: &FirstOrderCalculus) -> f64 {
        self.matrix().max_abs_diff(&other.matrix())
    }

    /// Maurer–Cartan map `ω(b) = Σ S(b_(1)).db_(2)` on `Ker ε = span{φ_x : x ≠ e}`.
    /// Returns the rank of `ω`, the largest deviation of its values from
    /// left invariance, and whether its kernel is `span{φ_x : x ∈ support}`.
    pub fn quotient_check(&self, support: &[usize], tol: f64) -> Result<(usize, f64, bool)> {
        let (n, d) = (self.module.n(), self.module.dim());
        let group = self.module.group();
        let mut drift: f64 = 0.0;
        let mut columns = Vec::with_capacity(n - 1);
        for x in 1..n {
            let mut total = CMatrix::zeros(n, d);
            for u in 0..n {
                // Δφ_x = Σ_u φ_u ⊗ φ_{u⁻¹x}
                let v = group.mul(group.inv(u), x);
                let s = FunElement::basis(n, group.inv(u));
                total = &total + &self.module.left_mult(&s, &self.differential[v]);
            }
            let first: Vec<C64> = (0..d).map(|i| total[(0, i)]).collect();
            drift = drift.max(total.max_abs_diff(&self.module.invariant(&first)));
            columns.push(first);
        }
        let omega = CMatrix::from_columns(d, &columns);
        let kernel = CMatrix::from_columns(n - 1, &nullspace(&omega, tol));
        let ideal: Vec<Vec<C64>> = support
            .iter()
            .map(|&s| (1..n).map(|x| if x == s { ONE } else { ZERO }).collect())
            .collect();
        let ideal = CMatrix::from_columns(n - 1, &ideal);
        Ok((
            rank(&omega, tol),
            drift,
            same_column_space(&kernel, &ideal, tol)?,
        ))
    }

    /// Leibniz, `d(1) = 0`, both covariances, and for coboundaries the right
    /// invariance of the witness.
    pub fn checks(&self) -> Vec<Check> {
        let mut out = vec![
            Check::new("leibniz", self.leibniz_residual()),
            Check::new("d_of_one", self.d_one_residual()),
            Check::new("left_covariance", self.left_covariance_residual()),
            Check::new("right_covariance", self.right_covariance_residual()),
        ];
        if let Some(r) = self.witness_right_invariance_residual() {
            out.push(Check::new("witness_right_invariant", r));
        }
        out
    }
}

fn max_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

// --- quantum Lie algebra ---

/// Fields `χ_i` with `⟨χ_i, a⟩ = [ψ(a)]_i`, and the structure elements.
#[derive(Clone, Debug)]
pub struct QuantumLie {
    pub chi: Vec<GroupAlgElement>,
    /// `f_ij` at `i * d + j`.
    pub f: Vec<GroupAlgElement>,
    /// `R_ij` at `i * d + j`.
    pub r: Vec<FunElement>,
}

impl QuantumLie {
    pub fn new(module: &BicovBimodule, psi: &Cochain) -> Self {
        let (n, d) = (module.n(), module.dim());
        let chi = (0..d)
            .map(|i| GroupAlgElement::new((0..n).map(|g| psi.at(&[g])[i]).collect()))
            .collect();
        QuantumLie {
            chi,
            f: (0..d * d).map(|k| module.f(k / d, k % d)).collect(),
            r: (0..d * d).map(|k| module.r(k / d, k % d)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.chi.len()
    }

    /// `Δχ_i = e⊗χ_i + Σ_j χ_j⊗f_ji`.
    pub fn coproduct_residual(&self) -> f64 {
        let d = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..d {
            let n = self.chi[i].len();
            let lhs = delta_u(&self.chi[i]);
            let mut rhs =
                TensorElement::simple_group(&GroupAlgElement::group_like(n, 0), &self.chi[i]);
            for j in 0..d {
                rhs = rhs.add(&TensorElement::simple_group(
                    &self.chi[j],
                    &self.f[j * d + i],
                ));
            }
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
        worst
    }

    /// `|ε(χ_i)|`.
    pub fn counit_residual(&self) -> f64 {
        self.chi
            .iter()
            .map(|c| crate::hopf::counit_u(c).norm())
            .fold(0.0, f64::max)
    }

    /// `S(h) χ_i h = Σ_k R_ik(h) χ_k` for every group-like `h`.
    pub fn adjoint_residual(&self, group: &GroupTable) -> f64 {
        let (n, d) = (group.order(), self.dim());
        let mut worst: f64 = 0.0;
        for h in 0..n {
            let hl = GroupAlgElement::group_like(n, h);
            let hinv = GroupAlgElement::group_like(n, group.inv(h));
            for i in 0..d {
                let lhs = product_u(group, &product_u(group, &hinv, &self.chi[i]), &hl);
                let mut rhs = GroupAlgElement::zero(n);
                for k in 0..d {
                    rhs = &rhs + &self.chi[k].scale(self.r[i * d + k].at(h));
                }
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
        worst
    }

    /// `da = Σ_i (χ_i∗a).ω_i` for basis `a`.
    pub fn differential(&self, module: &BicovBimodule, g: usize) -> GammaCoords {
        let n = module.n();
        let a = FunElement::basis(n, g);
        let mut out = CMatrix::zeros(n, module.dim());
        for (i, chi) in self.chi.iter().enumerate() {
            let c = conv_left(module.group(), chi, &a);
            for y in 0..n {
                out[(y, i)] = c.at(y);
            }
        }
        out
    }
}

/// Relations (i)–(iii) and the agreement of `Σ_i (χ_i∗a).ω_i` with
/// `Σ a_(1).ψ(a_(2))`.
pub fn verify_quantum_lie(
    module: &BicovBimodule,
    psi: &Cochain,
    tol: f64,
) -> Result<(QuantumLie, Vec<Check>)> {
    let lie = QuantumLie::new(module, psi);
    let calc = FirstOrderCalculus::from_cocycle(module, psi, tol)?;
    let fields = (0..module.n())
        .map(|g| lie.differential(module, g).max_abs_diff(calc.d_basis(g)))
        .fold(0.0, f64::max);
    let checks = vec![
        Check::new("lie_coproduct", lie.coproduct_residual()),
        Check::new("lie_counit", lie.counit_residual()),
        Check::new("lie_adjoint", lie.adjoint_residual(module.group())),
        Check::new("fields_vs_cocycle", fields),
    ];
    Ok((lie, checks))
}
