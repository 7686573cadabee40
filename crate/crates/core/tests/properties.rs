//! Randomised algebraic identities.

use bicov_core::cohom::{coboundary, invariant_cocycles};
use bicov_core::double::{antipode_d, counit_d, product_d};
use bicov_core::group::CATALOG_NAMES;
use bicov_core::hopf::{
    ad_action, antipode_f, antipode_u, counit_f, delta2_f, delta_f, pairing, pairing_tensor,
    product_f, product_u, TensorElement,
};
use bicov_core::linalg::{kron, matmul, nullspace, rank};
use bicov_core::{
    catalog, BicovBimodule, CMatrix, Cochain, DoubleElement, FirstOrderCalculus, FunElement,
    GroupAlgElement, C64,
};
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn complex() -> impl Strategy<Value = C64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| C64::new(re, im))
}

fn coefficients(len: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec(complex(), len)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = CMatrix> {
    coefficients(rows * cols).prop_map(move |v| CMatrix::from_vec(rows, cols, v).unwrap())
}

/// Low-rank matrices, so rank decisions are exercised away from full rank.
fn product_matrix() -> impl Strategy<Value = CMatrix> {
    (1usize..6, 1usize..6, 1usize..4)
        .prop_flat_map(|(r, c, k)| (matrix(r, k), matrix(k, c)))
        .prop_map(|(a, b)| &a * &b)
}

fn group_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(CATALOG_NAMES.to_vec())
}

/// A catalog group with three random elements of `F(G)` and two of `CG`.
fn group_with_elements(
) -> impl Strategy<Value = (&'static str, Vec<FunElement>, Vec<GroupAlgElement>)> {
    group_name().prop_flat_map(|name| {
        let n = catalog(name).unwrap().table.order();
        (
            Just(name),
            prop::collection::vec(coefficients(n).prop_map(FunElement::new), 3),
            prop::collection::vec(coefficients(n).prop_map(GroupAlgElement::new), 2),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_transpose_invariant(a in product_matrix()) {
        prop_assert_eq!(rank(&a, TOL), rank(&a.transpose(), TOL));
        prop_assert!(rank(&a, TOL) <= a.rows().min(a.cols()));
    }

    #[test]
    fn nullspace_vectors_are_annihilated(a in product_matrix()) {
        let kernel = nullspace(&a, TOL);
        prop_assert_eq!(kernel.len() + rank(&a, TOL), a.cols());
        for v in &kernel {
            let image = a.matvec(v);
            prop_assert!(image.iter().all(|z| z.norm() <= 1e-8));
        }
    }

    #[test]
    fn matmul_matches_triple_loop(a in matrix(3, 4), b in matrix(4, 2)) {
        let fast = matmul(&a, &b).unwrap();
        for i in 0..3 {
            for j in 0..2 {
                let slow: C64 = (0..4).map(|k| a[(i, k)] * b[(k, j)]).sum();
                prop_assert!((fast[(i, j)] - slow).norm() <= 1e-12);
            }
        }
        prop_assert!(matmul(&b, &b).is_err());
    }

    #[test]
    fn kron_mixed_product(a in matrix(2, 3), b in matrix(2, 2), c in matrix(3, 2), d in matrix(2, 3)) {
        let lhs = &kron(&a, &b) * &kron(&c, &d);
        let rhs = kron(&(&a * &c), &(&b * &d));
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-10);
    }

    #[test]
    fn hopf_axioms_of_functions((name, a, _x) in group_with_elements()) {
        let g = catalog(name).unwrap().table;
        let n = g.order();
        let a = &a[0];
        prop_assert!(antipode_f(&g, &antipode_f(&g, a)).max_abs_diff(a) <= 1e-12);
        // m(S⊗id)Δa = ε(a)1 and m(id⊗S)Δa = ε(a)1
        let delta = delta_f(&g, a);
        let (mut left, mut right) = (FunElement::zero(n), FunElement::zero(n));
        for p in 0..n {
            for q in 0..n {
                let c = delta.get(p, q);
                let (bp, bq) = (FunElement::basis(n, p), FunElement::basis(n, q));
                left = &left + &(&product_f(&antipode_f(&g, &bp), &bq) * c);
                right = &right + &(&product_f(&bp, &antipode_f(&g, &bq)) * c);
            }
        }
        let unit = &FunElement::one(n) * counit_f(a);
        prop_assert!(left.max_abs_diff(&unit) <= 1e-12);
        prop_assert!(right.max_abs_diff(&unit) <= 1e-12);
        // (Δ⊗id)Δ = (id⊗Δ)Δ, both read off the double coproduct
        let d2 = delta2_f(&g, a);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    prop_assert!((d2[(x * n + y) * n + z] - a.at(g.mul(g.mul(x, y), z))).norm() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn pairing_is_a_hopf_duality((name, a, x) in group_with_elements()) {
        let g = catalog(name).unwrap().table;
        let (x, y) = (&x[0], &x[1]);
        let (a, b) = (&a[0], &a[1]);
        let xy = product_u(&g, x, y);
        let joint = pairing_tensor(&TensorElement::simple_group(x, y), &delta_f(&g, a));
        prop_assert!((pairing(&xy, a) - joint).norm() <= 1e-10);
        let ab = product_f(a, b);
        let split = pairing_tensor(&bicov_core::hopf::delta_u(x), &TensorElement::simple_fun(a, b));
        prop_assert!((pairing(x, &ab) - split).norm() <= 1e-10);
        prop_assert!((pairing(&antipode_u(&g, x), a) - pairing(x, &antipode_f(&g, a))).norm() <= 1e-10);
    }

    #[test]
    fn adjoint_action_composes_left((name, a, x) in group_with_elements()) {
        let g = catalog(name).unwrap().table;
        let a = &a[0];
        let composed = ad_action(&g, &x[0], &ad_action(&g, &x[1], a));
        let direct = ad_action(&g, &product_u(&g, &x[0], &x[1]), a);
        prop_assert!(composed.max_abs_diff(&direct) <= 1e-10);
    }

    #[test]
    fn double_is_an_algebra_with_antimultiplicative_antipode(
        name in group_name(),
        seed in prop::collection::vec(complex(), 3 * 81),
    ) {
        let g = catalog(name).unwrap().table;
        let n = g.order();
        prop_assume!(n <= 9);
        let element = |k: usize| DoubleElement::new(n, seed[k * 81..k * 81 + n * n].to_vec());
        let (x, y, z) = (element(0), element(1), element(2));
        let p = |a: &DoubleElement, b: &DoubleElement| product_d(&g, a, b);
        prop_assert!(p(&p(&x, &y), &z).max_abs_diff(&p(&x, &p(&y, &z))) <= 1e-9);
        prop_assert!(p(&DoubleElement::one(n), &x).max_abs_diff(&x) <= 1e-12);
        prop_assert!((counit_d(&p(&x, &y)) - counit_d(&x) * counit_d(&y)).norm() <= 1e-9);
        let s_xy = antipode_d(&g, &p(&x, &y));
        prop_assert!(s_xy.max_abs_diff(&p(&antipode_d(&g, &y), &antipode_d(&g, &x))) <= 1e-9);
    }

    #[test]
    fn random_invariant_cocycles_give_calculi(
        (name, class, irrep) in group_name().prop_flat_map(|name| {
            let g = catalog(name).unwrap();
            (Just(name), 0..g.table.conjugacy_classes().len(), 0..g.irreps.len())
        }),
        weights in coefficients(16),
    ) {
        let g = catalog(name).unwrap();
        let classes = g.table.conjugacy_classes();
        let m = BicovBimodule::build(&g.table, &classes[class], &g.irreps[irrep], TOL).unwrap();
        let space = invariant_cocycles(&m, TOL);
        let mut psi = Cochain::zero(1, m.n(), m.dim());
        for (j, w) in (0..space.dim()).zip(&weights) {
            let term = space.cochain(j).scale(*w);
            psi = Cochain::from_values(1, m.n(), m.dim(), psi.values().iter().zip(term.values()).map(|(a, b)| a + b).collect()).unwrap();
        }
        prop_assert!(coboundary(&m, &psi).max_abs() <= 1e-9);
        let calc = FirstOrderCalculus::from_cocycle(&m, &psi, TOL).unwrap();
        for check in calc.checks() {
            prop_assert!(check.residual <= TOL, "{} {}", check.name, check.residual);
        }
    }
}
