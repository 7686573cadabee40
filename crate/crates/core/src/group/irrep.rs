use std::f64::consts::PI;

use serde::Deserialize;

use super::GroupTable;
use crate::error::{Error, Result};
use crate::linalg::{commutant_dimension, CMatrix, C64, ONE};

/// A validated irreducible matrix representation `g ↦ ρ(g)`.
#[derive(Clone, Debug)]
pub struct Irrep {
    label: String,
    degree: usize,
    matrices: Vec<CMatrix>,
}

/// Largest entry of `ρ(g)ρ(h) - ρ(gh)` over all pairs.
pub(crate) fn homomorphism_residual(group: &GroupTable, matrices: &[CMatrix]) -> f64 {
    let n = group.order();
    let mut worst: f64 = 0.0;
    for g in 0..n {
        for h in 0..n {
            let prod = &matrices[g] * &matrices[h];
            worst = worst.max(prod.max_abs_diff(&matrices[group.mul(g, h)]));
        }
    }
    worst
}

impl Irrep {
    /// Checks shape, `ρ(e) = 1`, the homomorphism property and that the
    /// commutant is one-dimensional.
    pub fn new(
        group: &GroupTable,
        label: impl Into<String>,
        matrices: Vec<CMatrix>,
        tol: f64,
    ) -> Result<Self> {
        let n = group.order();
        if matrices.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrices.len(),
            });
        }
        let degree = matrices[0].rows();
        if degree == 0 {
            return Err(Error::Shape("zero-dimensional representation".into()));
        }
        if let Some(m) = matrices
            .iter()
            .find(|m| m.rows() != degree || m.cols() != degree)
        {
            return Err(Error::Shape(format!(
                "expected {degree}x{degree} matrices, found {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let unit = matrices[0].max_abs_diff(&CMatrix::identity(degree));
        let residual = homomorphism_residual(group, &matrices).max(unit);
        if residual > tol {
            return Err(Error::NotHomomorphism { residual, tol });
        }
        let commutant = commutant_dimension(&matrices, tol);
        if commutant != 1 {
            return Err(Error::Reducible(commutant));
        }
        Ok(Irrep {
            label: label.into(),
            degree,
            matrices,
        })
    }

    pub fn trivial(group: &GroupTable) -> Self {
        Irrep {
            label: "trivial".into(),
            degree: 1,
            matrices: vec![CMatrix::identity(1); group.order()],
        }
    }

    /// Extends images of generators along the Cayley-graph word tree and
    /// validates the result.
    pub fn from_generator_images(
        group: &GroupTable,
        label: impl Into<String>,
        images: &[(usize, CMatrix)],
        tol: f64,
    ) -> Result<Self> {
        let degree = images.first().map_or(1, |(_, m)| m.rows());
        let generators: Vec<usize> = images.iter().map(|(g, _)| *g).collect();
        let mut matrices: Vec<Option<CMatrix>> = vec![None; group.order()];
        matrices[0] = Some(CMatrix::identity(degree));
        for (x, parent, s) in group.word_tree(&generators) {
            let m = matrices[parent].as_ref().expect("parent precedes child") * &images[s].1;
            matrices[x] = Some(m);
        }
        let matrices = matrices
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::Invariant("generator images do not reach every element".into())
            })?;
        Irrep::new(group, label, matrices, tol)
    }

    /// Reads `{"dim": d, "matrices": [...]}` with one matrix per element
    /// index, each either a flat row-major list of `[re, im]` pairs or a list
    /// of rows of pairs. An optional `"label"` overrides `default_label`.
    pub fn from_json(
        group: &GroupTable,
        text: &str,
        default_label: &str,
        tol: f64,
    ) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum MatrixData {
            Flat(Vec<[f64; 2]>),
            Rows(Vec<Vec<[f64; 2]>>),
        }
        #[derive(Deserialize)]
        struct IrrepFile {
            dim: usize,
            matrices: Vec<MatrixData>,
            label: Option<String>,
        }
        let file: IrrepFile = serde_json::from_str(text)?;
        let d = file.dim;
        let matrices = file
            .matrices
            .into_iter()
            .map(|m| {
                let flat: Vec<C64> = match m {
                    MatrixData::Flat(v) => v.into_iter().map(|[re, im]| C64::new(re, im)).collect(),
                    MatrixData::Rows(rows) => {
                        if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                            return Err(Error::Shape(format!(
                                "matrix rows do not form a {d}x{d} matrix"
                            )));
                        }
                        rows.into_iter()
                            .flatten()
                            .map(|[re, im]| C64::new(re, im))
                            .collect()
                    }
                };
                CMatrix::from_vec(d, d, flat)
            })
            .collect::<Result<Vec<_>>>()?;
        Irrep::new(
            group,
            file.label.unwrap_or_else(|| default_label.to_owned()),
            matrices,
            tol,
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self, g: usize) -> &CMatrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn character(&self) -> Vec<C64> {
        self.matrices.iter().map(CMatrix::trace).collect()
    }

    /// Character values on the listed subgroup elements, in the given order.
    pub fn restricted_character(&self, subgroup: &[usize]) -> Vec<C64> {
        subgroup.iter().map(|&g| self.matrices[g].trace()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.degree == 1
            && self
                .matrices
                .iter()
                .all(|m| (m[(0, 0)] - ONE).norm() < 1e-12)
    }
}

/// All characters of an abelian group, trivial character first.
///
/// Built by adjoining one element at a time: if `H` is the subgroup reached
/// so far and `g^m` is the first power of a new element `g` landing in `H`,
/// each character of `H` extends in `m` ways by choosing an `m`-th root of
/// its value on `g^m`.
pub fn abelian_irreps(group: &GroupTable) -> Result<Vec<Irrep>> {
    if !group.is_abelian() {
        return Err(Error::Invariant(
            "character construction requires an abelian group".into(),
        ));
    }
    let n = group.order();
    // members of H in a fixed order; `chars[c][k]` is the value on members[k]
    let mut members = vec![0usize];
    let mut in_h = vec![false; n];
    in_h[0] = true;
    let mut chars: Vec<Vec<C64>> = vec![vec![ONE]];
    while members.len() < n {
        let g = (0..n).find(|&x| !in_h[x]).expect("H is proper");
        let mut power = g;
        let mut m = 1;
        while !in_h[power] {
            power = group.mul(power, g);
            m += 1;
        }
        let power_pos: Vec<usize> = {
            let mut pos = vec![usize::MAX; n];
            for (k, &h) in members.iter().enumerate() {
                pos[h] = k;
            }
            pos
        };
        // new members: h * g^j for j in 0..m
        let mut g_pow = vec![0usize; m];
        for j in 1..m {
            g_pow[j] = group.mul(g_pow[j - 1], g);
        }
        let mut new_members = Vec::with_capacity(members.len() * m);
        for &gj in &g_pow {
            for &h in &members {
                new_members.push(group.mul(h, gj));
            }
        }
        let mut new_chars = Vec::with_capacity(chars.len() * m);
        for chi in &chars {
            let target = chi[power_pos[power]];
            let base = C64::from_polar(1.0, target.arg() / m as f64);
            for t in 0..m {
                let lambda = base * C64::from_polar(1.0, 2.0 * PI * t as f64 / m as f64);
                let mut values = Vec::with_capacity(new_members.len());
                let mut lj = ONE;
                for _ in 0..m {
                    values.extend(chi.iter().map(|v| v * lj));
                    lj *= lambda;
                }
                new_chars.push(values);
            }
        }
        for &x in &new_members {
            in_h[x] = true;
        }
        members = new_members;
        chars = new_chars;
    }
    chars
        .into_iter()
        .enumerate()
        .map(|(c, values)| {
            let mut by_element = vec![CMatrix::identity(1); n];
            for (k, &h) in members.iter().enumerate() {
                by_element[h] = CMatrix::from_fn(1, 1, |_, _| values[k]);
            }
            let label = if c == 0 {
                "trivial".to_string()
            } else {
                format!("chi{c}")
            };
            Irrep::new(group, label, by_element, 1e-9)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    #[test]
    fn trivial_and_sign_files_load() {
        let s3 = catalog("S3").unwrap();
        let trivial = r#"{"dim":1,"matrices":[[[1,0]],[[1,0]],[[1,0]],[[1,0]],[[1,0]],[[1,0]]]}"#;
        let rho = Irrep::from_json(&s3.table, trivial, "t", 1e-9).unwrap();
        assert_eq!(rho.degree(), 1);
        assert!(rho.is_trivial());

        let sign = &s3.irreps[1];
        let entries: Vec<String> = sign
            .matrices()
            .iter()
            .map(|m| format!("[[{},0]]", m[(0, 0)].re))
            .collect();
        let text = format!(
            r#"{{"dim":1,"label":"sgn","matrices":[{}]}}"#,
            entries.join(",")
        );
        let loaded = Irrep::from_json(&s3.table, &text, "x", 1e-9).unwrap();
        assert_eq!(loaded.label(), "sgn");
        let transposition = s3.table.conjugacy_classes()[1].representative;
        assert_eq!(loaded.matrix(transposition)[(0, 0)], C64::new(-1.0, 0.0));
    }

    #[test]
    fn two_dimensional_s3_irrep_has_scalar_commutant() {
        let s3 = catalog("S3").unwrap();
        let std = s3.irreps.iter().find(|r| r.label() == "std").unwrap();
        let rows: Vec<String> = std
            .matrices()
            .iter()
            .map(|m| {
                let r: Vec<String> = (0..2)
                    .map(|i| format!("[[{},0],[{},0]]", m[(i, 0)].re, m[(i, 1)].re))
                    .collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        let text = format!(r#"{{"dim":2,"matrices":[{}]}}"#, rows.join(","));
        let loaded = Irrep::from_json(&s3.table, &text, "std", 1e-9).unwrap();
        assert_eq!(commutant_dimension(loaded.matrices(), 1e-9), 1);
    }

    #[test]
    fn rejects_bad_representations() {
        let z2 = catalog("Z2").unwrap().table;
        let too_few = r#"{"dim":1,"matrices":[[[1,0]]]}"#;
        assert!(matches!(
            Irrep::from_json(&z2, too_few, "x", 1e-9),
            Err(Error::DimensionMismatch { .. })
        ));
        let not_hom = r#"{"dim":1,"matrices":[[[1,0]],[[2,0]]]}"#;
        assert!(matches!(
            Irrep::from_json(&z2, not_hom, "x", 1e-9),
            Err(Error::NotHomomorphism { .. })
        ));
        let reducible =
            r#"{"dim":2,"matrices":[[[1,0],[0,0],[0,0],[1,0]],[[1,0],[0,0],[0,0],[-1,0]]]}"#;
        assert!(matches!(
            Irrep::from_json(&z2, reducible, "x", 1e-9),
            Err(Error::Reducible(2))
        ));
        assert!(Irrep::from_json(&z2, "{", "x", 1e-9).is_err());
    }

    #[test]
    fn abelian_characters_are_complete() {
        for name in ["Z1", "Z2", "Z6", "Z2xZ2"] {
            let g = catalog(name).unwrap().table;
            let chars = abelian_irreps(&g).unwrap();
            assert_eq!(chars.len(), g.order());
            assert!(chars[0].is_trivial());
            // distinct characters
            for a in 0..chars.len() {
                for b in 0..a {
                    let diff = chars[a]
                        .character()
                        .iter()
                        .zip(chars[b].character())
                        .map(|(x, y)| (x - y).norm())
                        .fold(0.0, f64::max);
                    assert!(diff > 1e-6);
                }
            }
        }
        assert!(abelian_irreps(&catalog("S3").unwrap().table).is_err());
    }
}
