//! Finite group multiplication tables with validated axioms. Built-ins:
//! the quaternion group of order 8, cyclic groups, and the dihedral group
//! of the square.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct GroupTable {
    name: String,
    order: usize,
    /// table[i][j] = index of g_i · g_j.
    table: Vec<Vec<usize>>,
    element_names: Vec<String>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, associativity, identity, and inverses.
    pub fn new(
        name: impl Into<String>,
        table: Vec<Vec<usize>>,
        element_names: Vec<String>,
    ) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::Contract("empty group table".into()));
        }
        if element_names.len() != order {
            return Err(Error::Contract("element name count mismatch".into()));
        }
        for row in &table {
            if row.len() != order || row.iter().any(|&v| v >= order) {
                return Err(Error::Contract("group table is not closed".into()));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or_else(|| Error::Contract("group table has no identity".into()))?;
        for i in 0..order {
            for j in 0..order {
                for k in 0..order {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(Error::Associativity { i, j, k });
                    }
                }
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for i in 0..order {
            let inv = (0..order)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or_else(|| Error::Contract(format!("element {i} has no inverse")))?;
            inverses[i] = inv;
        }
        Ok(Self {
            name: name.into(),
            order,
            table,
            element_names,
            identity,
            inverses,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    /// Conjugacy class of an element, as a sorted index list.
    pub fn conjugacy_class(&self, i: usize) -> Vec<usize> {
        let mut class: Vec<usize> = (0..self.order)
            .map(|g| self.mul(self.mul(g, i), self.inverse(g)))
            .collect();
        class.sort_unstable();
        class.dedup();
        class
    }

    /// The quaternion group {±1, ±i, ±j, ±k}, elements ordered
    /// 1, i, j, k, -1, -i, -j, -k.
    pub fn quaternion() -> Self {
        // Encode g = (sign s, base b) with b in {1, i, j, k}, index s*4+b.
        // Base products carry a sign: i² = j² = k² = −1, ij = k cyclically,
        // reversed products negate.
        const BASE: [[(usize, usize); 4]; 4] = [
            // 1·x        i·x        j·x        k·x   (columns x = 1,i,j,k)
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut table = vec![vec![0usize; 8]; 8];
        for s1 in 0..2 {
            for b1 in 0..4 {
                for s2 in 0..2 {
                    for b2 in 0..4 {
                        let (sp, bp) = BASE[b1][b2];
                        let sign = (s1 + s2 + sp) % 2;
                        table[s1 * 4 + b1][s2 * 4 + b2] = sign * 4 + bp;
                    }
                }
            }
        }
        let names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
            .map(String::from)
            .to_vec();
        Self::new("q8", table, names).expect("quaternion table is a group")
    }

    /// Cyclic group of order m.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 || m > 16 {
            return Err(Error::Contract(format!(
                "cyclic group order {m} outside supported range 1..=16"
            )));
        }
        let table = (0..m)
            .map(|i| (0..m).map(|j| (i + j) % m).collect())
            .collect();
        let names = (0..m)
            .map(|i| if i == 0 { "1".into() } else { format!("g^{i}") })
            .collect();
        Self::new(format!("c{m}"), table, names)
    }

    /// Dihedral group of the square (order 8): rotations r^a and
    /// reflections r^a s with s·r = r⁻¹·s.
    pub fn dihedral4() -> Self {
        let idx = |a: usize, b: usize| a + 4 * b;
        let mut table = vec![vec![0usize; 8]; 8];
        for a1 in 0..4 {
            for b1 in 0..2 {
                for a2 in 0..4 {
                    for b2 in 0..2 {
                        // (r^a1 s^b1)(r^a2 s^b2): moving s past r^a2 flips
                        // the rotation's sign.
                        let a = if b1 == 0 { (a1 + a2) % 4 } else { (a1 + 4 - a2 % 4) % 4 };
                        let b = (b1 + b2) % 2;
                        table[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
                    }
                }
            }
        }
        let names = (0..8usize)
            .map(|i| {
                let (a, b) = (i % 4, i / 4);
                match (a, b) {
                    (0, 0) => "1".to_string(),
                    (a, 0) => format!("r^{a}"),
                    (0, _) => "s".to_string(),
                    (a, _) => format!("r^{a}s"),
                }
            })
            .collect();
        Self::new("d4", table, names).expect("dihedral table is a group")
    }
}
