//! Built-in groups with complete lists of inequivalent irreducible
//! representations.

use std::f64::consts::PI;

use super::parse::{permutation_closure, Permutation, DEFAULT_CLOSURE_BOUND};
use super::{GroupTable, Irrep};
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64};

pub const CATALOG_NAMES: [&str; 9] = ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "A4"];

const TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub name: String,
    pub table: GroupTable,
    /// Complete, pairwise inequivalent; the trivial representation first.
    pub irreps: Vec<Irrep>,
}

/// Looks up `Z<n>` (any `n ≥ 1`), `Z2xZ2` (alias `V4`), `S3`, `D4`, `Q8`
/// or `A4`.
pub fn catalog(name: &str) -> Result<CatalogGroup> {
    let build = match name {
        "Z2xZ2" | "V4" => klein(),
        "S3" => s3(),
        "D4" => d4(),
        "Q8" => q8(),
        "A4" => a4(),
        _ => match name.strip_prefix('Z').and_then(|k| k.parse::<usize>().ok()) {
            Some(n) if (1..=DEFAULT_CLOSURE_BOUND).contains(&n) => cyclic(n),
            _ => return Err(Error::UnknownGroup(name.to_owned())),
        },
    }?;
    Ok(CatalogGroup {
        name: name.to_owned(),
        ..build
    })
}

fn scalar(z: C64) -> CMatrix {
    CMatrix::from_fn(1, 1, |_, _| z)
}

fn cyclic(n: usize) -> Result<CatalogGroup> {
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let table = GroupTable::from_table(n, table, None)?;
    let irreps = (0..n)
        .map(|j| {
            let mats = (0..n)
                .map(|k| {
                    scalar(C64::from_polar(
                        1.0,
                        2.0 * PI * ((j * k) % n) as f64 / n as f64,
                    ))
                })
                .collect();
            Irrep::new(&table, j.to_string(), mats, TOL)
        })
        .collect::<Result<_>>()?;
    Ok(CatalogGroup {
        name: format!("Z{n}"),
        table,
        irreps,
    })
}

fn klein() -> Result<CatalogGroup> {
    let names = ["e", "a", "b", "ab"].map(String::from).to_vec();
    let table = (0..16).map(|k| (k / 4) ^ (k % 4)).collect();
    let table = GroupTable::from_table(4, table, Some(names))?;
    let labels = ["trivial", "chi_a", "chi_b", "chi_ab"];
    let irreps = (0..4usize)
        .map(|c| {
            // character (s, t) sends a^x b^y to (-1)^(s x + t y) with a = bit 0
            let mats = (0..4usize)
                .map(|g| {
                    let parity = ((c & 1) & (g & 1)) ^ ((c >> 1) & (g >> 1));
                    scalar(C64::new(if parity == 1 { -1.0 } else { 1.0 }, 0.0))
                })
                .collect();
            Irrep::new(&table, labels[c], mats, TOL)
        })
        .collect::<Result<_>>()?;
    Ok(CatalogGroup {
        name: "Z2xZ2".into(),
        table,
        irreps,
    })
}

fn cycles(text: &str, degree: usize) -> Permutation {
    let mut p: Permutation = (0..degree).collect();
    for cycle in super::parse::parse_cycles(text).expect("catalog cycle literal") {
        for (k, &x) in cycle.iter().enumerate() {
            p[x] = cycle[(k + 1) % cycle.len()];
        }
    }
    p
}

fn parity(p: &[usize]) -> f64 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1.0;
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Matrix of the permutation action on vertex vectors `v_0, ..., v_{m-1}`
/// whose first `k` entries form a basis: `M v_i = v_{p(i)}`.
fn vertex_action(p: &[usize], vertices: &[Vec<f64>]) -> CMatrix {
    let k = vertices[0].len();
    let basis = CMatrix::from_fn(k, k, |r, c| C64::new(vertices[c][r], 0.0));
    let image = CMatrix::from_fn(k, k, |r, c| C64::new(vertices[p[c]][r], 0.0));
    &image * &basis.inverse(1e-12).expect("vertex basis is invertible")
}

fn perm_group(gens: &[Permutation]) -> Result<(GroupTable, Vec<Permutation>, Vec<usize>)> {
    let (table, perms) = permutation_closure(gens, DEFAULT_CLOSURE_BOUND)?;
    let gen_idx = gens
        .iter()
        .map(|g| {
            perms
                .iter()
                .position(|p| p == g)
                .expect("generator is an element")
        })
        .collect();
    Ok((table, perms, gen_idx))
}

fn s3() -> Result<CatalogGroup> {
    let (table, perms, _) = perm_group(&[cycles("(0 1)", 3), cycles("(0 1 2)", 3)])?;
    let sign = perms
        .iter()
        .map(|p| scalar(C64::new(parity(p), 0.0)))
        .collect();
    // sum-zero subspace of C^3 in the basis e_0 - e_2, e_1 - e_2
    let std = perms
        .iter()
        .map(|p| {
            let vertices = [[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]];
            let image = |c: usize| -> Vec<f64> {
                let a = &vertices[p[c]];
                let b = &vertices[p[2]];
                vec![a[0] - b[0], a[1] - b[1]]
            };
            let (c0, c1) = (image(0), image(1));
            CMatrix::from_real_rows(&[vec![c0[0], c1[0]], vec![c0[1], c1[1]]])
        })
        .collect();
    let irreps = vec![
        Irrep::trivial(&table),
        Irrep::new(&table, "sign", sign, TOL)?,
        Irrep::new(&table, "std", std, TOL)?,
    ];
    Ok(CatalogGroup {
        name: "S3".into(),
        table,
        irreps,
    })
}

fn d4() -> Result<CatalogGroup> {
    let (table, perms, gens) = perm_group(&[cycles("(0 1 2 3)", 4), cycles("(0 2)", 4)])?;
    let (r, s) = (gens[0], gens[1]);
    let one_dim = |label: &str, on_r: f64, on_s: f64| {
        Irrep::from_generator_images(
            &table,
            label,
            &[
                (r, scalar(C64::new(on_r, 0.0))),
                (s, scalar(C64::new(on_s, 0.0))),
            ],
            TOL,
        )
    };
    let square = vec![
        vec![1.0, 0.0],
        vec![0.0, 1.0],
        vec![-1.0, 0.0],
        vec![0.0, -1.0],
    ];
    let std = perms.iter().map(|p| vertex_action(p, &square)).collect();
    let irreps = vec![
        Irrep::trivial(&table),
        one_dim("chi_s", 1.0, -1.0)?,
        one_dim("chi_r", -1.0, 1.0)?,
        one_dim("chi_rs", -1.0, -1.0)?,
        Irrep::new(&table, "std", std, TOL)?,
    ];
    Ok(CatalogGroup {
        name: "D4".into(),
        table,
        irreps,
    })
}

fn q8() -> Result<CatalogGroup> {
    // element 2a + s is (-1)^s u_a with u = (1, i, j, k)
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) | (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mut table = Vec::with_capacity(64);
    for x in 0..8usize {
        for y in 0..8usize {
            let (u, neg) = unit_mul(x / 2, y / 2);
            let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
            table.push(2 * u + usize::from(sign));
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    let table = GroupTable::from_table(8, table, Some(names))?;
    let (i, j) = (2, 4);
    let one_dim = |label: &str, on_i: f64, on_j: f64| {
        Irrep::from_generator_images(
            &table,
            label,
            &[
                (i, scalar(C64::new(on_i, 0.0))),
                (j, scalar(C64::new(on_j, 0.0))),
            ],
            TOL,
        )
    };
    let im = C64::new(0.0, 1.0);
    let z = C64::new(0.0, 0.0);
    let o = C64::new(1.0, 0.0);
    let mat_i = CMatrix::from_vec(2, 2, vec![im, z, z, -im])?;
    let mat_j = CMatrix::from_vec(2, 2, vec![z, o, -o, z])?;
    let irreps = vec![
        Irrep::trivial(&table),
        one_dim("chi_i", 1.0, -1.0)?,
        one_dim("chi_j", -1.0, 1.0)?,
        one_dim("chi_k", -1.0, -1.0)?,
        Irrep::from_generator_images(&table, "std", &[(i, mat_i), (j, mat_j)], TOL)?,
    ];
    Ok(CatalogGroup {
        name: "Q8".into(),
        table,
        irreps,
    })
}

fn a4() -> Result<CatalogGroup> {
    let (table, perms, gens) = perm_group(&[cycles("(0 1 2)", 4), cycles("(0 1)(2 3)", 4)])?;
    let (c, v) = (gens[0], gens[1]);
    let omega = C64::from_polar(1.0, 2.0 * PI / 3.0);
    let one_dim = |label: &str, on_c: C64| {
        Irrep::from_generator_images(
            &table,
            label,
            &[(c, scalar(on_c)), (v, scalar(C64::new(1.0, 0.0)))],
            TOL,
        )
    };
    // rotations of the tetrahedron with these vertices
    let tetra = vec![
        vec![1.0, 1.0, 1.0],
        vec![1.0, -1.0, -1.0],
        vec![-1.0, 1.0, -1.0],
        vec![-1.0, -1.0, 1.0],
    ];
    let std = perms.iter().map(|p| vertex_action(p, &tetra)).collect();
    let irreps = vec![
        Irrep::trivial(&table),
        one_dim("omega", omega)?,
        one_dim("omega2", omega * omega)?,
        Irrep::new(&table, "std", std, TOL)?,
    ];
    Ok(CatalogGroup {
        name: "A4".into(),
        table,
        irreps,
    })
}
