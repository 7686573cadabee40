//! Report documents. Every JSON document carries `"schema": 1` and
//! deserializes back into the same type.

use bicov_core::bicov::LambdaExport;
use bicov_core::C64;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub schema: u32,
    pub command: String,
    pub group: GroupInfo,
    pub tolerance: f64,
    pub passed: bool,
    pub result: T,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub name: String,
    pub source: String,
    pub order: usize,
    pub abelian: bool,
    pub irreps: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub index: usize,
    pub size: usize,
    pub representative: String,
    pub members: Vec<String>,
}

/// `coefficient · element` in `CG`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupTerm {
    pub element: String,
    pub coefficient: C64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiField {
    pub form: String,
    pub terms: Vec<GroupTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalculusInfo {
    pub class: usize,
    pub dim: usize,
    pub zero: bool,
    pub chi: Vec<ChiField>,
    /// Elements `s` of the ad-invariant ideal `span{φ_s}`; absent for `{e}`.
    pub ideal_support: Option<Vec<String>>,
    /// Generating cocycle: `cocycle[z][i] = ψ_i(φ_z)`.
    pub cocycle: Vec<Vec<C64>>,
    pub checks: Vec<CheckEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealCheck {
    pub invariant_ideals: usize,
    /// Agreement with exhaustive subset search; absent above order 24.
    pub brute_force_agrees: Option<bool>,
    pub maximal: usize,
    pub bijection: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub classes: Vec<ClassInfo>,
    pub calculi: Vec<CalculusInfo>,
    pub ideals: IdealCheck,
    /// Multiplicity-free direct sums of nontrivial irreducible calculi,
    /// the zero calculus included as the empty sum.
    pub direct_sums: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BimoduleEntry {
    pub class: usize,
    pub irrep: String,
    pub dim: usize,
    pub commutant_dim: usize,
    pub qybe_residual: f64,
    /// Index of the first entry equivalent to this one.
    pub equivalence_class: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BimodulesReport {
    pub irreps_complete: bool,
    pub bimodules: Vec<BimoduleEntry>,
    pub inequivalent: usize,
    /// The centralizer criterion agreed with character comparison on every pair.
    pub criteria_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub scope: String,
    pub name: String,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckEntry>,
    pub failures: usize,
    pub max_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct YbeReport {
    pub class: usize,
    pub irrep: String,
    pub dim: usize,
    pub residual: f64,
    pub lambda: LambdaExport,
}

/// `coefficient · φ_point · ω_form`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormTerm {
    pub point: String,
    pub form: String,
    pub coefficient: C64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Differential {
    pub phi: String,
    pub terms: Vec<FormTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalculusReport {
    pub class: usize,
    pub forms: Vec<String>,
    pub differentials: Vec<Differential>,
    /// `cocycle[z][i] = ψ_i(φ_z)`.
    pub cocycle: Vec<Vec<C64>>,
    /// `f[i * d + j]`, coefficients on the group elements in index order.
    pub f: Vec<Vec<C64>>,
    /// `r[i * d + j]`, values on the group elements in index order.
    pub r: Vec<Vec<C64>>,
    pub checks: Vec<CheckEntry>,
}

/// Compact decimal form: `1`, `-0.5`, `0.5+0.866025i`, `-i`.
pub fn format_complex(z: C64) -> String {
    fn real(x: f64) -> String {
        let s = format!("{:.6}", x);
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".into()
        } else {
            s.into()
        }
    }
    let (re, im) = (real(z.re), real(z.im));
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", "1") => "i".into(),
        ("0", "-1") => "-i".into(),
        ("0", _) => format!("{im}i"),
        (_, "1") => format!("{re}+i"),
        (_, "-1") => format!("{re}-i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

/// `Σ c·x` with unit coefficients elided and signs folded: `() − (0 1)`.
pub fn format_sum(terms: &[(C64, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, x)) in terms.iter().enumerate() {
        let text = format_complex(*c);
        let (negative, magnitude) = match text.strip_prefix('-') {
            Some(rest) if c.im == 0.0 || c.re.abs() < 5e-7 => (true, rest.to_owned()),
            _ => (false, text),
        };
        let coefficient = match magnitude.as_str() {
            "1" => String::new(),
            m if m.contains(['+', '-']) => format!("({m})·"),
            m => format!("{m}·"),
        };
        let sign = match (k, negative) {
            (0, false) => "",
            (0, true) => "−",
            (_, false) => " + ",
            (_, true) => " − ",
        };
        out.push_str(&format!("{sign}{coefficient}{x}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_formatting() {
        let one = C64::new(1.0, 0.0);
        assert_eq!(
            format_sum(&[(one, "e".into()), (-one, "g".into())]),
            "e − g"
        );
        assert_eq!(
            format_sum(&[(-one * 2.0, "x".into()), (C64::new(1.0, 1.0), "y".into())]),
            "−2·x + (1+i)·y"
        );
        assert_eq!(format_sum(&[(C64::new(0.0, -1.0), "x".into())]), "−i·x");
        assert_eq!(format_sum(&[]), "0");
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(C64::new(1.0, 0.0)), "1");
        assert_eq!(format_complex(C64::new(-0.0, 0.0)), "0");
        assert_eq!(
            format_complex(C64::new(-0.5, 3f64.sqrt() / 2.0)),
            "-0.5+0.866025i"
        );
        assert_eq!(format_complex(C64::new(0.0, -1.0)), "-i");
        assert_eq!(format_complex(C64::new(2.0, -0.25)), "2-0.25i");
        assert_eq!(format_complex(C64::new(1e-12, 1.0)), "i");
    }
}
