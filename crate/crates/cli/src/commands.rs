//! The five commands. Each returns a document and its text rendering;
//! every list is in canonical index order.

use std::fmt::Write as _;

use bicov_core::bicov::{verify_qybe, Check, LambdaExport};
use bicov_core::calculus::{r_kernel_image, universal_checks, verify_quantum_lie};
use bicov_core::cohom::{
    ad_invariant_ideals, ad_invariant_ideals_brute_force,
    check_coboundaries_exhaust_invariant_cocycles, classify_calculi, coboundary_matrix,
    double_cocycle_residual, invariant_cocycles,
};
use bicov_core::double::{commutation_rhs, product_d};
use bicov_core::{
    BicovBimodule, DoubleElement, DoubleRep, Error, FirstOrderCalculus, FunElement,
    GroupAlgElement, GroupTable, C64,
};
use serde::Serialize;

use crate::config::{Command, Format, LoadedGroup, RunConfig};
use crate::error::{CliError, CliResult};
use crate::report::*;

/// Brute-force ideal search and the commutation sweep stop at this order.
const EXHAUSTIVE_ORDER: usize = 24;

pub struct Outcome {
    pub rendered: String,
    /// Λ export written by `ybe --out`.
    pub artifact: Option<String>,
    pub passed: bool,
}

fn failed(e: Error) -> CliError {
    CliError::Verification(e.to_string())
}

fn group_info(g: &LoadedGroup) -> GroupInfo {
    GroupInfo {
        name: g.name.clone(),
        source: g.source.clone(),
        order: g.table.order(),
        abelian: g.table.is_abelian(),
        irreps: g.origin.describe(),
    }
}

fn names(t: &GroupTable, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| t.name(x).to_owned()).collect()
}

fn set(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(", "))
}

fn finish<T: Serialize>(
    config: &RunConfig,
    g: &LoadedGroup,
    passed: bool,
    result: T,
    text: String,
    artifact: Option<String>,
) -> CliResult<Outcome> {
    let rendered = match config.format {
        Format::Text => text,
        Format::Json => {
            let doc = Document {
                schema: SCHEMA,
                command: config.command.name().to_owned(),
                group: group_info(g),
                tolerance: config.tol,
                passed,
                result,
            };
            let mut s =
                serde_json::to_string_pretty(&doc).map_err(|e| CliError::Output(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    Ok(Outcome {
        rendered,
        artifact,
        passed,
    })
}

pub fn run(config: &RunConfig, g: &LoadedGroup) -> CliResult<Outcome> {
    match &config.command {
        Command::Classify => classify(config, g),
        Command::Bimodules => bimodules(config, g),
        Command::Verify => verify(config, g),
        Command::Ybe { class, irrep } => ybe(config, g, class, irrep),
        Command::Calculus { class, phi } => calculus(config, g, class, phi.as_deref()),
    }
}

fn header(g: &LoadedGroup) -> String {
    format!(
        "group {} (order {}, {})\n",
        g.name,
        g.table.order(),
        if g.table.is_abelian() {
            "abelian"
        } else {
            "non-abelian"
        }
    )
}

fn class_infos(t: &GroupTable) -> Vec<ClassInfo> {
    t.conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(index, c)| ClassInfo {
            index,
            size: c.size(),
            representative: t.name(c.representative).to_owned(),
            members: names(t, &c.members),
        })
        .collect()
}

fn group_terms(t: &GroupTable, x: &GroupAlgElement) -> Vec<GroupTerm> {
    (0..t.order())
        .filter(|&g| x.coeff(g).norm() > 0.0)
        .map(|g| GroupTerm {
            element: t.name(g).to_owned(),
            coefficient: x.coeff(g),
        })
        .collect()
}

fn cocycle_rows(calc: &FirstOrderCalculus) -> Vec<Vec<C64>> {
    let psi = calc.cocycle().expect("d_C is a coboundary calculus");
    (0..calc.module().n())
        .map(|z| psi.at(&[z]).to_vec())
        .collect()
}

fn calculus_checks(calc: &FirstOrderCalculus, scope: &str, tol: f64) -> Vec<CheckEntry> {
    let mut suite = Suite {
        tol,
        checks: Vec::new(),
    };
    suite.extend(scope, calc.checks());
    suite.checks
}

fn classify_report(t: &GroupTable, tol: f64) -> CliResult<(ClassifyReport, bool)> {
    let n = t.order();
    let classes = t.conjugacy_classes();
    let descriptors = classify_calculi(t).map_err(failed)?;
    let ideals = ad_invariant_ideals(t);
    let brute_force_agrees = (n <= EXHAUSTIVE_ORDER).then(|| {
        let mut a = ideals.clone();
        a.sort();
        a == ad_invariant_ideals_brute_force(t)
    });
    let proper: Vec<&Vec<usize>> = ideals.iter().filter(|s| s.len() < n - 1).collect();
    let maximal: Vec<&Vec<usize>> = proper
        .iter()
        .copied()
        .filter(|s| {
            !proper
                .iter()
                .any(|u| u.len() > s.len() && s.iter().all(|x| u.contains(x)))
        })
        .collect();
    let supports: Vec<&Vec<usize>> = descriptors
        .iter()
        .filter_map(|d| d.ideal_support.as_ref())
        .collect();
    let bijection = supports.len() == maximal.len() && supports.iter().all(|s| maximal.contains(s));
    let calculi = descriptors
        .iter()
        .map(|d| {
            let class = classes
                .iter()
                .position(|c| *c == d.class)
                .expect("descriptor classes are canonical");
            let calc = FirstOrderCalculus::d_c(t, &d.class, tol).map_err(failed)?;
            Ok(CalculusInfo {
                class,
                dim: d.bimodule_dim,
                zero: d.zero,
                chi: d
                    .class
                    .members
                    .iter()
                    .zip(&d.chi)
                    .map(|(&g, x)| ChiField {
                        form: t.name(g).to_owned(),
                        terms: group_terms(t, x),
                    })
                    .collect(),
                ideal_support: d.ideal_support.as_ref().map(|s| names(t, s)),
                cocycle: cocycle_rows(&calc),
                checks: calculus_checks(&calc, &format!("calculus C{class}"), tol),
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let nontrivial = classes.len() as u32 - 1;
    let report = ClassifyReport {
        classes: class_infos(t),
        calculi,
        ideals: IdealCheck {
            invariant_ideals: ideals.len(),
            brute_force_agrees,
            maximal: maximal.len(),
            bijection,
        },
        direct_sums: 1u64.checked_shl(nontrivial).unwrap_or(u64::MAX),
    };
    let passed = bijection
        && brute_force_agrees != Some(false)
        && report
            .calculi
            .iter()
            .all(|c| c.checks.iter().all(|k| k.passed));
    Ok((report, passed))
}

fn classify(config: &RunConfig, g: &LoadedGroup) -> CliResult<Outcome> {
    let t = &g.table;
    let (report, passed) = classify_report(t, config.tol)?;
    let mut text = header(g);
    let _ = writeln!(text, "{} conjugacy classes", report.classes.len());
    for (c, calc) in report.classes.iter().zip(&report.calculi) {
        if calc.zero {
            let _ = writeln!(
                text,
                "  class {} {}: zero calculus (dim {})",
                c.index,
                set(&c.members),
                calc.dim
            );
            continue;
        }
        let chi: Vec<String> = calc
            .chi
            .iter()
            .map(|f| {
                let terms: Vec<(C64, String)> = f
                    .terms
                    .iter()
                    .map(|t| (t.coefficient, t.element.clone()))
                    .collect();
                format!("χ_{} = {}", f.form, format_sum(&terms))
            })
            .collect();
        let _ = writeln!(
            text,
            "  class {} {}: calculus of dim {}; {}",
            c.index,
            set(&c.members),
            calc.dim,
            chi.join(", ")
        );
    }
    let dims: Vec<String> = report
        .calculi
        .iter()
        .map(|c| {
            if c.zero {
                format!("{}(zero)", c.dim)
            } else {
                c.dim.to_string()
            }
        })
        .collect();
    let _ = writeln!(text, "calculi dims [{}]", dims.join(", "));
    let brute = match report.ideals.brute_force_agrees {
        Some(true) => "agrees",
        Some(false) => "DISAGREES",
        None => "skipped",
    };
    let _ = writeln!(
        text,
        "ad-invariant ideals: {} (exhaustive search {brute}), maximal proper: {}, bijection with nontrivial classes: {}",
        report.ideals.invariant_ideals,
        report.ideals.maximal,
        if report.ideals.bijection { "yes" } else { "NO" }
    );
    let _ = writeln!(
        text,
        "multiplicity-free direct sums: {} (sums with repeated classes are not enumerated)",
        report.direct_sums
    );
    finish(config, g, passed, report, text, None)
}

fn bimodules(config: &RunConfig, g: &LoadedGroup) -> CliResult<Outcome> {
    let t = &g.table;
    let irreps = g.require_irreps()?;
    let tol = config.tol;
    let mut entries = Vec::new();
    let mut reps: Vec<DoubleRep> = Vec::new();
    for (ci, class) in t.conjugacy_classes().iter().enumerate() {
        for mu in irreps {
            let m = BicovBimodule::build(t, class, mu, tol).map_err(failed)?;
            let qybe_residual = verify_qybe(m.lambda()).map_err(failed)?;
            let rep = m.rep().clone();
            let equivalence_class = reps
                .iter()
                .position(|r| r.equivalent(&rep, t, tol))
                .unwrap_or(reps.len());
            entries.push(BimoduleEntry {
                class: ci,
                irrep: mu.label().to_owned(),
                dim: m.dim(),
                commutant_dim: rep.commutant_dimension(tol),
                qybe_residual,
                equivalence_class,
            });
            reps.push(rep);
        }
    }
    let criteria_agree = reps.iter().all(|a| {
        reps.iter()
            .all(|b| a.equivalent(b, t, tol) == a.same_character(b, tol))
    });
    let irreps_complete = irreps.iter().map(|r| r.degree().pow(2)).sum::<usize>() == t.order();
    let inequivalent = entries
        .iter()
        .enumerate()
        .filter(|(k, e)| e.equivalence_class == *k)
        .count();
    let passed = criteria_agree && entries.iter().all(|e| e.qybe_residual <= tol);
    let report = BimodulesReport {
        irreps_complete,
        bimodules: entries,
        inequivalent,
        criteria_agree,
    };

    let mut text = header(g);
    let _ = writeln!(
        text,
        "{} bimodules ({} inequivalent)",
        report.bimodules.len(),
        report.inequivalent
    );
    for (k, e) in report.bimodules.iter().enumerate() {
        let _ = writeln!(
            text,
            "  [{k}] class {} irrep {}: dim {}, commutant {}, qybe {:.1e}, equivalent to [{}]",
            e.class, e.irrep, e.dim, e.commutant_dim, e.qybe_residual, e.equivalence_class
        );
    }
    let _ = writeln!(
        text,
        "centralizer criterion vs characters: {}",
        if report.criteria_agree {
            "agree"
        } else {
            "DISAGREE"
        }
    );
    if !report.irreps_complete {
        let _ = writeln!(
            text,
            "note: the supplied irreps do not exhaust the group (sum of squared degrees != order)"
        );
    }
    finish(config, g, passed, report, text, None)
}

struct Suite {
    tol: f64,
    checks: Vec<CheckEntry>,
}

impl Suite {
    fn push(&mut self, scope: &str, name: &str, residual: f64) {
        let passed = residual.is_finite() && residual <= self.tol;
        self.checks.push(CheckEntry {
            scope: scope.to_owned(),
            name: name.to_owned(),
            residual,
            passed,
        });
    }

    fn extend(&mut self, scope: &str, checks: Vec<Check>) {
        for c in checks {
            self.push(scope, &c.name, c.residual);
        }
    }

    /// Pass/fail facts enter as residual 0 or 1.
    fn flag(&mut self, scope: &str, name: &str, ok: bool) {
        self.push(scope, name, if ok { 0.0 } else { 1.0 });
    }
}

fn commutation_residual(t: &GroupTable) -> f64 {
    let n = t.order();
    let mut worst: f64 = 0.0;
    for h in 0..n {
        let a = FunElement::basis(n, h);
        let left = DoubleElement::from_fun(&a);
        for x in 0..n {
            let xg = GroupAlgElement::group_like(n, x);
            let lhs = product_d(t, &left, &DoubleElement::from_group_alg(&xg));
            worst = worst.max(lhs.max_abs_diff(&commutation_rhs(t, &a, &xg)));
        }
    }
    worst
}

fn verify(config: &RunConfig, g: &LoadedGroup) -> CliResult<Outcome> {
    let t = &g.table;
    let n = t.order();
    let tol = config.tol;
    let irreps = g.require_irreps()?;
    let mut suite = Suite {
        tol,
        checks: Vec::new(),
    };

    let (classification, classified) = classify_report(t, tol)?;
    suite.flag("classification", "ideal_bijection", classified);
    if n <= EXHAUSTIVE_ORDER {
        suite.push("double", "commutation_formula", commutation_residual(t));
    }
    suite.extend("universal", universal_checks(t));
    let (rank, leak) = r_kernel_image(t, tol);
    suite.push(
        "universal",
        "r_kernel_rank_deficit",
        (n * n - n - rank) as f64,
    );
    suite.push("universal", "r_kernel_in_ker_eps", leak);

    for (ci, class) in t.conjugacy_classes().iter().enumerate() {
        for mu in irreps {
            let scope = format!("bimodule C{ci}/{}", mu.label());
            let m = BicovBimodule::build(t, class, mu, tol).map_err(failed)?;
            suite.extend(&scope, m.checks().map_err(failed)?);
            suite.push(
                &scope,
                "double_homomorphism",
                m.rep().homomorphism_residual(t),
            );
            suite.push(
                &scope,
                "freeness_rank_deficit",
                (n * m.dim() - m.freeness_rank(tol)) as f64,
            );
            let dd = &coboundary_matrix(&m, 1) * &coboundary_matrix(&m, 0);
            suite.push(&scope, "coboundary_squared", dd.max_abs());
            suite.flag(
                &scope,
                "invariant_cocycles_are_coboundaries",
                check_coboundaries_exhaust_invariant_cocycles(&m, tol).is_ok(),
            );
            let extension = invariant_cocycles(&m, tol)
                .cochains()
                .iter()
                .map(|psi| double_cocycle_residual(&m, psi))
                .fold(0.0, f64::max);
            suite.push(&scope, "double_cocycle_extension", extension);
        }
    }

    for (ci, class) in t.conjugacy_classes().iter().enumerate() {
        let scope = format!("calculus C{ci}");
        let calc = FirstOrderCalculus::d_c(t, class, tol).map_err(failed)?;
        suite.extend(&scope, calc.checks());
        if class.is_identity_class() {
            suite.flag(&scope, "zero", calc.is_zero(tol));
            continue;
        }
        suite.push(
            &scope,
            "surjectivity_rank_deficit",
            (n * class.size()) as f64 - calc.surjectivity_rank(tol) as f64,
        );
        let psi = calc.cocycle().expect("d_C is a coboundary calculus");
        let (_, lie) = verify_quantum_lie(calc.module(), psi, tol).map_err(failed)?;
        suite.extend(&scope, lie);
        let support = classification.calculi[ci]
            .ideal_support
            .as_ref()
            .map(|s| {
                s.iter()
                    .filter_map(|x| t.element_by_name(x))
                    .collect::<Vec<_>>()
            })
            .unwrap_or_default();
        let (rank, drift, kernel) = calc.quotient_check(&support, tol).map_err(failed)?;
        suite.push(
            &scope,
            "maurer_cartan_rank_deficit",
            (class.size() as f64 - rank as f64).abs(),
        );
        suite.push(&scope, "maurer_cartan_invariance", drift);
        suite.flag(&scope, "kernel_is_ideal", kernel);
    }

    let failures = suite.checks.iter().filter(|c| !c.passed).count();
    let max_residual = suite.checks.iter().map(|c| c.residual).fold(0.0, f64::max);
    let report = VerifyReport {
        checks: suite.checks,
        failures,
        max_residual,
    };
    let mut text = header(g);
    for c in &report.checks {
        let _ = writeln!(
            text,
            "  {} {} / {}: {:.1e}",
            if c.passed { "ok  " } else { "FAIL" },
            c.scope,
            c.name,
            c.residual
        );
    }
    let _ = writeln!(
        text,
        "{} checks, {} failed, max residual {:.1e} (tolerance {:.1e})",
        report.checks.len(),
        failures,
        max_residual,
        tol
    );
    finish(config, g, failures == 0, report, text, None)
}

fn ybe(
    config: &RunConfig,
    g: &LoadedGroup,
    class_key: &str,
    irrep_key: &str,
) -> CliResult<Outcome> {
    let t = &g.table;
    let class = g.select_class(class_key)?;
    let irrep = g.select_irrep(irrep_key)?;
    let ci = t
        .conjugacy_classes()
        .iter()
        .position(|c| *c == class)
        .expect("selected from the class list");
    let m = BicovBimodule::build(t, &class, &irrep, config.tol).map_err(failed)?;
    let residual = verify_qybe(m.lambda()).map_err(failed)?;
    let lambda = LambdaExport::from_matrix(m.lambda()).map_err(failed)?;
    let artifact = config
        .out
        .is_some()
        .then(|| serde_json::to_string_pretty(&lambda).map(|s| s + "\n"))
        .transpose()
        .map_err(|e| CliError::Output(e.to_string()))?;
    let side = m.dim() * m.dim();
    let mut text = header(g);
    let _ = writeln!(
        text,
        "class {ci} {} with irrep {}: Λ is {side}x{side}",
        set(&names(t, &class.members)),
        irrep.label()
    );
    if side <= 16 {
        for row in 0..side {
            let cells: Vec<String> = (0..side)
                .map(|col| format_complex(m.lambda()[(row, col)]))
                .collect();
            let _ = writeln!(text, "  [{}]", cells.join(", "));
        }
    }
    let _ = writeln!(text, "qybe residual {residual:.1e}");
    let report = YbeReport {
        class: ci,
        irrep: irrep.label().to_owned(),
        dim: m.dim(),
        residual,
        lambda,
    };
    finish(config, g, residual <= config.tol, report, text, artifact)
}

fn calculus(
    config: &RunConfig,
    g: &LoadedGroup,
    class_key: &str,
    phi: Option<&str>,
) -> CliResult<Outcome> {
    let t = &g.table;
    let n = t.order();
    let class = g.select_class(class_key)?;
    let ci = t
        .conjugacy_classes()
        .iter()
        .position(|c| *c == class)
        .expect("selected from the class list");
    let calc = FirstOrderCalculus::d_c(t, &class, config.tol).map_err(failed)?;
    let points: Vec<usize> = match phi {
        Some(key) => vec![g.select_element(key)?],
        None => (0..n).collect(),
    };
    let forms = names(t, &class.members);
    let differentials: Vec<Differential> = points
        .iter()
        .map(|&x| {
            let d = calc.d_basis(x);
            let mut terms = Vec::new();
            for y in 0..n {
                for (i, form) in forms.iter().enumerate() {
                    let coefficient: C64 = d[(y, i)];
                    if coefficient.norm() > config.tol {
                        terms.push(FormTerm {
                            point: t.name(y).to_owned(),
                            form: form.clone(),
                            coefficient,
                        });
                    }
                }
            }
            Differential {
                phi: t.name(x).to_owned(),
                terms,
            }
        })
        .collect();
    let checks = calculus_checks(&calc, &format!("calculus C{ci}"), config.tol);
    let passed = checks.iter().all(|c| c.passed);
    let m = calc.module();
    let d = m.dim();
    let f = (0..d * d)
        .map(|k| m.f(k / d, k % d).coeffs().to_vec())
        .collect();
    let r = (0..d * d)
        .map(|k| m.r(k / d, k % d).coeffs().to_vec())
        .collect();

    let mut text = header(g);
    let _ = writeln!(
        text,
        "calculus of class {ci} {}, forms ω_g for g in the class",
        set(&forms)
    );
    for d in &differentials {
        let terms: Vec<(C64, String)> = d
            .terms
            .iter()
            .map(|t| (t.coefficient, format!("φ_{}·ω_{}", t.point, t.form)))
            .collect();
        let _ = writeln!(text, "  dφ_{} = {}", d.phi, format_sum(&terms));
    }
    let worst = checks.iter().map(|c| c.residual).fold(0.0, f64::max);
    let _ = writeln!(text, "axioms: max residual {worst:.1e}");
    let report = CalculusReport {
        class: ci,
        forms,
        differentials,
        cocycle: cocycle_rows(&calc),
        f,
        r,
        checks,
    };
    finish(config, g, passed, report, text, None)
}
