//! Coxeter matrices and diagram automorphisms.

use crate::error::{Error, Result};
use num_integer::Integer;

/// Generator index, 0-based. Text I/O is 1-based; conversion happens at the
/// parse/print boundary only.
pub type Generator = u8;

/// A word in the generators.
pub type Word = Vec<Generator>;

/// Bond order between two distinct generators.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    pub fn finite(self) -> Option<u32> {
        match self {
            Bond::Finite(m) => Some(m),
            Bond::Infinite => None,
        }
    }
}

/// Symmetric Coxeter matrix. Diagonal entries are 1; off-diagonal entries are
/// at least 2, with 0 encoding an infinite bond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<u32>,
}

/// Ranks are capped so descent sets fit in a `u64` bitmask.
pub const MAX_RANK: usize = 63;

impl CoxeterMatrix {
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidMatrix(format!(
                "rank must be between 1 and {MAX_RANK}, got {rank}"
            )));
        }
        let mut entries = vec![0u32; rank * rank];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    rank
                )));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(Error::InvalidMatrix(format!(
                        "diagonal entry m(s{0}, s{0}) must be 1",
                        i + 1
                    )));
                }
                if i != j && m == 1 {
                    return Err(Error::InvalidMatrix(format!(
                        "off-diagonal entry m(s{}, s{}) must be 0 (infinite) or at least 2",
                        i + 1,
                        j + 1
                    )));
                }
                entries[i * rank + j] = m;
            }
        }
        for i in 0..rank {
            for j in 0..i {
                if entries[i * rank + j] != entries[j * rank + i] {
                    return Err(Error::InvalidMatrix(format!(
                        "matrix is not symmetric at (s{}, s{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bond(&self, s: Generator, t: Generator) -> Bond {
        match self.entries[s as usize * self.rank + t as usize] {
            0 => Bond::Infinite,
            m => Bond::Finite(m),
        }
    }

    /// Raw entry with 0 encoding infinity, as stored in system files.
    pub fn raw(&self, s: Generator, t: Generator) -> u32 {
        self.entries[s as usize * self.rank + t as usize]
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> {
        (0..self.rank as u8).collect::<Vec<_>>().into_iter()
    }

    /// Least common multiple of the finite off-diagonal bonds, 1 if there are
    /// none. The reflection representation lives in Q(2cos(pi/N)) for this N.
    pub fn bond_lcm(&self) -> u32 {
        let mut n: u32 = 1;
        for i in 0..self.rank {
            for j in 0..i {
                if let Bond::Finite(m) = self.bond(i as u8, j as u8) {
                    n = n.lcm(&m);
                }
            }
        }
        n
    }

    pub fn is_right_angled(&self) -> Result<()> {
        for i in 0..self.rank {
            for j in 0..i {
                if let Bond::Finite(m) = self.bond(i as u8, j as u8) {
                    if m != 2 {
                        return Err(Error::NotRightAngled {
                            s: j as u8,
                            t: i as u8,
                            m,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Path diagram with all bonds 3.
    pub fn type_a(n: usize) -> Self {
        Self::path(&vec![3; n.saturating_sub(1)])
    }

    /// Path diagram with the 4-bond at the first edge: m(s1,s2)=4, rest 3.
    pub fn type_b(n: usize) -> Self {
        assert!(n >= 2, "type B needs rank at least 2");
        let mut bonds = vec![3; n - 1];
        bonds[0] = 4;
        Self::path(&bonds)
    }

    /// Fork diagram: path s2-s3-...-sn with s1 attached to s3.
    pub fn type_d(n: usize) -> Self {
        assert!(n >= 4, "type D needs rank at least 4");
        let mut rows = vec![vec![2; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut join = |a: usize, b: usize| {
            rows[a][b] = 3;
            rows[b][a] = 3;
        };
        for i in 1..n - 1 {
            join(i, i + 1);
        }
        join(0, 2);
        Self::from_rows(&rows).expect("catalogue diagram")
    }

    /// Path s1-s3-s4-...-sn with s2 attached to s4.
    pub fn type_e(n: usize) -> Self {
        assert!((6..=8).contains(&n), "type E needs rank 6, 7 or 8");
        let mut rows = vec![vec![2; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut join = |a: usize, b: usize| {
            rows[a][b] = 3;
            rows[b][a] = 3;
        };
        join(0, 2);
        for i in 2..n - 1 {
            join(i, i + 1);
        }
        join(1, 3);
        Self::from_rows(&rows).expect("catalogue diagram")
    }

    /// Path with bonds 3, 4, 3.
    pub fn type_f4() -> Self {
        Self::path(&[3, 4, 3])
    }

    /// Path with the 5-bond at the first edge.
    pub fn type_h(n: usize) -> Self {
        assert!(n == 3 || n == 4, "type H needs rank 3 or 4");
        let mut bonds = vec![3; n - 1];
        bonds[0] = 5;
        Self::path(&bonds)
    }

    /// Rank-2 system with bond m (0 for infinity).
    pub fn type_i2(m: u32) -> Self {
        assert!(m == 0 || m >= 2, "dihedral bond must be 0 (infinite) or >= 2");
        Self::from_rows(&[vec![1, m], vec![m, 1]]).expect("catalogue diagram")
    }

    /// Path diagram with the given consecutive bonds.
    pub fn path(bonds: &[u32]) -> Self {
        let n = bonds.len() + 1;
        let mut rows = vec![vec![2; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, &m) in bonds.iter().enumerate() {
            rows[i][i + 1] = m;
            rows[i + 1][i] = m;
        }
        Self::from_rows(&rows).expect("path diagram")
    }
}

/// A diagram involution: a permutation of the generators that is its own
/// inverse and preserves every bond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    perm: Vec<Generator>,
}

impl Automorphism {
    pub fn identity(rank: usize) -> Self {
        Automorphism {
            perm: (0..rank as u8).collect(),
        }
    }

    /// Build from 0-based images and validate against the matrix.
    pub fn new(perm: Vec<Generator>, matrix: &CoxeterMatrix) -> Result<Self> {
        let n = matrix.rank();
        if perm.len() != n {
            return Err(Error::InvalidAutomorphism(format!(
                "permutation has {} entries, expected {}",
                perm.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &g in &perm {
            if (g as usize) >= n || seen[g as usize] {
                return Err(Error::InvalidAutomorphism(
                    "images must be a permutation of the generators".into(),
                ));
            }
            seen[g as usize] = true;
        }
        for s in 0..n as u8 {
            if perm[perm[s as usize] as usize] != s {
                return Err(Error::InvalidAutomorphism(format!(
                    "not an involution at s{}",
                    s as usize + 1
                )));
            }
        }
        for s in 0..n as u8 {
            for t in 0..s {
                if matrix.bond(s, t) != matrix.bond(perm[s as usize], perm[t as usize]) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "bond m(s{}, s{}) not preserved",
                        t as usize + 1,
                        s as usize + 1
                    )));
                }
            }
        }
        Ok(Automorphism { perm })
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn apply(&self, s: Generator) -> Generator {
        self.perm[s as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &g)| i == g as usize)
    }

    /// True when the automorphism maps the subset onto itself.
    pub fn stabilizes(&self, subset: &[Generator]) -> bool {
        subset.iter().all(|&s| subset.contains(&self.apply(s)))
    }

    /// True when every member of the subset is fixed pointwise.
    pub fn fixes_pointwise(&self, subset: &[Generator]) -> bool {
        subset.iter().all(|&s| self.apply(s) == s)
    }

    pub fn images(&self) -> &[Generator] {
        &self.perm
    }
}

/// All involutive diagram automorphisms of the matrix, identity first,
/// ordered by image sequence. Intended for desk-scale ranks.
pub fn involutive_diagram_automorphisms(matrix: &CoxeterMatrix) -> Vec<Automorphism> {
    let n = matrix.rank();
    let mut result = Vec::new();
    let mut perm: Vec<Generator> = (0..n as u8).collect();
    permute(&mut perm, 0, &mut |p| {
        if let Ok(theta) = Automorphism::new(p.to_vec(), matrix) {
            result.push(theta);
        }
    });
    result.sort_by(|a, b| a.perm.cmp(&b.perm));
    result
}

fn permute(perm: &mut [Generator], k: usize, visit: &mut impl FnMut(&[Generator])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}
