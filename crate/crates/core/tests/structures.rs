//! Exhaustive checks over the catalog: every double representation, every
//! bimodule, every irreducible calculus.

use bicov_core::bicov::LambdaExport;
use bicov_core::cohom::{
    classify_calculi, coboundary, first_cohomology_dims, invariant_cocycles, verify_double_cocycle,
};
use bicov_core::group::CATALOG_NAMES;
use bicov_core::{catalog, BicovBimodule, Cochain, DoubleRep, FirstOrderCalculus, C64};

const TOL: f64 = 1e-9;

fn each_bimodule(mut f: impl FnMut(&str, &BicovBimodule)) {
    for name in CATALOG_NAMES {
        let g = catalog(name).unwrap();
        for class in g.table.conjugacy_classes() {
            for irrep in &g.irreps {
                let m = BicovBimodule::build(&g.table, &class, irrep, TOL).unwrap();
                f(&format!("{name} {:?} {}", class.members, irrep.label()), &m);
            }
        }
    }
}

#[test]
fn double_representations_are_homomorphisms() {
    for name in CATALOG_NAMES {
        let g = catalog(name).unwrap();
        for class in g.table.conjugacy_classes() {
            for irrep in &g.irreps {
                let rep = DoubleRep::build(&g.table, &class, irrep, TOL).unwrap();
                assert!(
                    rep.homomorphism_residual(&g.table) <= TOL,
                    "{name} {:?}",
                    class.members
                );
                assert_eq!(rep.dim(), class.size() * irrep.degree());
            }
        }
    }
}

#[test]
fn irreps_restrict_to_centralizers() {
    for name in CATALOG_NAMES {
        let g = catalog(name).unwrap();
        for class in g.table.conjugacy_classes() {
            let z = g.table.centralizer(class.representative).unwrap();
            for irrep in &g.irreps {
                for &a in &z {
                    for &b in &z {
                        let ab = g.table.mul(a, b);
                        assert!(z.contains(&ab));
                        let prod = irrep.matrix(a) * irrep.matrix(b);
                        assert!(prod.max_abs_diff(irrep.matrix(ab)) <= TOL);
                    }
                }
            }
        }
    }
}

/// The centralizer criterion gives the same verdict at every class member.
#[test]
fn equivalence_is_independent_of_the_representative() {
    for name in ["S3", "D4", "Q8", "A4"] {
        let g = catalog(name).unwrap();
        for class in g.table.conjugacy_classes() {
            let reps: Vec<DoubleRep> = g
                .irreps
                .iter()
                .map(|mu| DoubleRep::build(&g.table, &class, mu, TOL).unwrap())
                .collect();
            for (a, ra) in g.irreps.iter().zip(&reps) {
                for (b, rb) in g.irreps.iter().zip(&reps) {
                    let verdict = ra.equivalent(rb, &g.table, TOL);
                    for &h in &class.members {
                        let z = g.table.centralizer(h).unwrap();
                        let (x, y) = (a.restricted_character(&z), b.restricted_character(&z));
                        let here = x.iter().zip(&y).all(|(p, q)| (p - q).norm() <= TOL);
                        assert_eq!(
                            here,
                            verdict,
                            "{name} {} vs {} at {h}",
                            a.label(),
                            b.label()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn bimodule_identities_hold_everywhere() {
    each_bimodule(|label, m| {
        for check in m.checks().unwrap() {
            assert!(
                check.residual <= TOL,
                "{label}: {} = {:e}",
                check.name,
                check.residual
            );
        }
        assert_eq!(m.freeness_rank(TOL), m.n() * m.dim(), "{label}");
    });
}

#[test]
fn invariant_cocycles_extend_to_the_double() {
    each_bimodule(|label, m| {
        for psi in invariant_cocycles(m, TOL).cochains() {
            assert!(verify_double_cocycle(m, &psi, TOL), "{label}");
        }
    });
}

#[test]
fn non_invariant_cocycles_do_not_extend() {
    let g = catalog("S3").unwrap();
    let class = &g.table.conjugacy_classes()[1];
    let m = BicovBimodule::build(&g.table, class, &g.irreps[0], TOL).unwrap();
    // δγ for a γ not fixed by τ_U
    let mut gamma = vec![C64::new(0.0, 0.0); m.dim()];
    gamma[0] = C64::new(1.0, 0.0);
    let psi = coboundary(&m, &Cochain::constant(m.n(), &gamma));
    assert!(coboundary(&m, &psi).max_abs() <= 1e-12);
    assert!(!verify_double_cocycle(&m, &psi, TOL));
}

#[test]
fn coboundary_calculi_are_not_zero() {
    for name in CATALOG_NAMES {
        let g = catalog(name).unwrap().table;
        for class in g.conjugacy_classes() {
            let calc = FirstOrderCalculus::d_c(&g, &class, TOL).unwrap();
            assert!(calc.is_coboundary());
            assert_eq!(
                calc.is_zero(TOL),
                class.is_identity_class(),
                "{name} {:?}",
                class.members
            );
        }
    }
}

#[test]
fn calculi_are_quotients_by_their_ideals() {
    for name in CATALOG_NAMES {
        let g = catalog(name).unwrap().table;
        for calc in classify_calculi(&g).unwrap() {
            let Some(support) = &calc.ideal_support else {
                continue;
            };
            let d = FirstOrderCalculus::d_c(&g, &calc.class, TOL).unwrap();
            let (rank, drift, matches) = d.quotient_check(support, TOL).unwrap();
            assert_eq!(rank, calc.bimodule_dim, "{name}");
            assert!(drift <= TOL, "{name}");
            assert!(matches, "{name} {:?}", calc.class.members);
        }
    }
}

#[test]
fn cohomology_dimensions_are_consistent() {
    each_bimodule(|label, m| {
        let (cocycles, boundaries) = first_cohomology_dims(m, TOL);
        assert!(boundaries <= cocycles, "{label}");
        assert!(invariant_cocycles(m, TOL).dim() <= cocycles, "{label}");
    });
}

#[test]
fn lambda_export_round_trips() {
    let g = catalog("S3").unwrap();
    let class = &g.table.conjugacy_classes()[2];
    let m = BicovBimodule::build(&g.table, class, &g.irreps[1], TOL).unwrap();
    let export = LambdaExport::from_matrix(m.lambda()).unwrap();
    let text = serde_json::to_string(&export).unwrap();
    let back: LambdaExport = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_matrix().unwrap().max_abs_diff(m.lambda()), 0.0);
}
