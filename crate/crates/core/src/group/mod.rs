//! Finite groups given by Cayley tables.
//!
//! Elements are indices `0..n`; the identity is always index 0. Tables come
//! from text ([`parse_cayley`]), from permutation generators
//! ([`from_permutations`]) or from the built-in [`catalog`].

mod catalog;
mod irrep;
mod parse;

pub use catalog::{catalog, CatalogGroup, CATALOG_NAMES};
pub use irrep::{abelian_irreps, Irrep};
pub use parse::{
    format_cycles, from_permutations, parse_cayley, parse_cycles, parse_permutation_file,
    permutation_closure, Permutation, DEFAULT_CLOSURE_BOUND,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group as an indexed multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    names: Vec<String>,
}

/// Orbit of an element under conjugation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    /// Smallest member index.
    pub representative: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// Position of `g` inside `members`.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    pub fn is_identity_class(&self) -> bool {
        self.members == [0]
    }
}

impl GroupTable {
    /// Validates a row-major table and relabels so the identity is index 0.
    ///
    /// `names`, when given, must have one entry per element.
    pub fn from_table(order: usize, table: Vec<usize>, names: Option<Vec<String>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Malformed {
                line: 1,
                msg: "group order must be positive".into(),
            });
        }
        if table.len() != order * order {
            return Err(Error::Shape(format!(
                "{} entries for an order-{order} table",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: order,
            });
        }
        let at = |i: usize, j: usize| table[i * order + j];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| at(a, b) == identity && at(b, a) == identity)
                    .ok_or(Error::MissingInverse(a))
            })
            .collect::<Result<Vec<_>>>()?;
        let names = match names {
            Some(v) if v.len() == order => v,
            Some(v) => {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    found: v.len(),
                })
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        let group = GroupTable {
            order,
            table,
            inverse,
            names,
        };
        Ok(if identity == 0 {
            group
        } else {
            group.swap_labels(0, identity)
        })
    }

    /// Trusted constructor for tables built by closure (identity already at 0).
    pub(crate) fn from_closure(order: usize, table: Vec<usize>, names: Vec<String>) -> Self {
        let mut inverse = vec![0; order];
        for a in 0..order {
            inverse[a] = (0..order)
                .find(|&b| table[a * order + b] == 0)
                .expect("closure has inverses");
        }
        GroupTable {
            order,
            table,
            inverse,
            names,
        }
    }

    fn swap_labels(&self, x: usize, y: usize) -> Self {
        let n = self.order;
        let relabel = |i: usize| {
            if i == x {
                y
            } else if i == y {
                x
            } else {
                i
            }
        };
        let mut table = vec![0; n * n];
        let mut inverse = vec![0; n];
        let mut names = self.names.clone();
        names.swap(x, y);
        for a in 0..n {
            inverse[relabel(a)] = relabel(self.inverse[a]);
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(self.table[a * n + b]);
            }
        }
        GroupTable {
            order: n,
            table,
            inverse,
            names,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g h g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inverse[g])
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Conjugacy classes ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let mut members: Vec<usize> = (0..self.order).map(|g| self.conj(g, a)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                seen[m] = true;
            }
            classes.push(ConjugacyClass {
                representative: a,
                members,
            });
        }
        classes
    }

    pub fn class_of(&self, a: usize) -> Result<ConjugacyClass> {
        self.check_index(a)?;
        Ok(self
            .conjugacy_classes()
            .into_iter()
            .find(|c| c.contains(a))
            .expect("classes partition the group"))
    }

    /// `Z_a = {g : a g = g a}`, sorted.
    pub fn centralizer(&self, a: usize) -> Result<Vec<usize>> {
        self.check_index(a)?;
        Ok((0..self.order)
            .filter(|&g| self.mul(a, g) == self.mul(g, a))
            .collect())
    }

    /// Spanning tree of the Cayley graph from the identity, in breadth-first
    /// discovery order: each entry `(x, parent, s)` has `x = parent * generators[s]`.
    /// The identity is not listed; unreachable elements are absent.
    pub fn word_tree(&self, generators: &[usize]) -> Vec<(usize, usize, usize)> {
        let mut reached = vec![false; self.order];
        reached[0] = true;
        let mut tree = Vec::new();
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (s, &g) in generators.iter().enumerate() {
                let y = self.mul(x, g);
                if !reached[y] {
                    reached[y] = true;
                    tree.push((y, x, s));
                    queue.push_back(y);
                }
            }
        }
        tree
    }

    pub fn check_index(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                size: self.order,
            })
        }
    }

    /// The table as rows of indices.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupTable {
        catalog("S3").unwrap().table
    }

    #[test]
    fn identity_relabels_to_zero() {
        // Z2 with the identity stored at index 1
        let g = GroupTable::from_table(2, vec![1, 0, 0, 1], None).unwrap();
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.names(), ["1", "0"]);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(
            GroupTable::from_table(2, vec![0, 0, 0, 0], None),
            Err(Error::NoIdentity)
        ));
        // identity 0, but 1*1 = 1 and 1*2 = 2 has no inverse for 1
        let t = vec![0, 1, 2, 1, 1, 1, 2, 1, 0];
        assert!(GroupTable::from_table(3, t, None).is_err());
        assert!(matches!(
            GroupTable::from_table(2, vec![0, 1, 1, 5], None),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn classes_of_small_groups() {
        let z3 = catalog("Z3").unwrap().table;
        assert_eq!(z3.conjugacy_classes().len(), 3);
        let sizes: Vec<usize> = s3()
            .conjugacy_classes()
            .iter()
            .map(ConjugacyClass::size)
            .collect();
        assert_eq!(sizes, [1, 3, 2]);
        let trivial = catalog("Z1").unwrap().table;
        assert_eq!(
            trivial.conjugacy_classes(),
            [ConjugacyClass {
                representative: 0,
                members: vec![0]
            }]
        );
    }

    #[test]
    fn centralizers_in_s3() {
        let g = s3();
        let classes = g.conjugacy_classes();
        let transposition = classes[1].representative;
        let three_cycle = classes[2].representative;
        assert_eq!(g.centralizer(transposition).unwrap().len(), 2);
        assert_eq!(g.centralizer(three_cycle).unwrap().len(), 3);
        assert!(g.centralizer(6).is_err());
        let z4 = catalog("Z4").unwrap().table;
        assert_eq!(z4.centralizer(1).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn class_equation_holds_across_catalog() {
        for name in CATALOG_NAMES {
            let g = catalog(name).unwrap().table;
            let classes = g.conjugacy_classes();
            assert_eq!(
                classes.iter().map(ConjugacyClass::size).sum::<usize>(),
                g.order()
            );
            assert!(classes[0].is_identity_class());
            for c in &classes {
                assert_eq!(g.order() % c.size(), 0);
                for &a in &c.members {
                    assert_eq!(g.centralizer(a).unwrap().len() * c.size(), g.order());
                }
            }
        }
    }
}
