//! Coxeter systems with exact element arithmetic.
//!
//! Elements are interned ShortLex-minimal reduced words. All operations go
//! through the geometric representation: a word is scanned by tracking a
//! simple root through its reflections, and a positive root goes negative
//! exactly when it hits the simple root of the next letter, so descent tests
//! and exchange positions need only exact equality of root coordinates.
//!
//! The system hands out copyable [`Element`] ids; ids are only meaningful
//! together with the system that produced them. Interning and the
//! multiplication caches sit behind a mutex, so sharing a system across
//! threads is safe and every operation stays observably pure.

use crate::error::{Error, Result};
use crate::field::{NumberField, Scalar};
use crate::matrix::{Automorphism, Bond, CoxeterMatrix, Generator, Word};
use std::collections::HashMap;
use std::sync::Mutex;

/// Handle to an interned group element. Equality and hashing agree with
/// group-element equality for handles from the same system.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(u32);

impl Element {
    pub fn index(self) -> u32 {
        self.0
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

const UNKNOWN: u32 = u32::MAX;
const UNKNOWN_MASK: u64 = u64::MAX;

struct ElementTable {
    words: Vec<Box<[Generator]>>,
    index: HashMap<Box<[Generator]>, u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    right_desc: Vec<u64>,
    left_desc: Vec<u64>,
    inverse: Vec<u32>,
}

impl ElementTable {
    fn new(rank: usize) -> Self {
        let mut table = ElementTable {
            words: Vec::new(),
            index: HashMap::new(),
            right: Vec::new(),
            left: Vec::new(),
            right_desc: Vec::new(),
            left_desc: Vec::new(),
            inverse: Vec::new(),
        };
        table.intern(rank, &[]);
        table.inverse[0] = 0;
        table
    }

    fn intern(&mut self, rank: usize, word: &[Generator]) -> u32 {
        if let Some(&id) = self.index.get(word) {
            return id;
        }
        let id = self.words.len() as u32;
        let boxed: Box<[Generator]> = word.into();
        self.words.push(boxed.clone());
        self.index.insert(boxed, id);
        self.right.extend(std::iter::repeat_n(UNKNOWN, rank));
        self.left.extend(std::iter::repeat_n(UNKNOWN, rank));
        self.right_desc.push(UNKNOWN_MASK);
        self.left_desc.push(UNKNOWN_MASK);
        self.inverse.push(UNKNOWN);
        id
    }
}

/// A Coxeter system (W, S) over an exact reflection representation.
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    field: NumberField,
    // 2<alpha_i, alpha_j>, flattened row-major. The factor 2 keeps all root
    // coordinates inside Z[psi].
    two_gram: Vec<Scalar>,
    table: Mutex<ElementTable>,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let field = NumberField::new(matrix.bond_lcm());
        let n = matrix.rank();
        let mut two_gram = Vec::with_capacity(n * n);
        for i in 0..n as u8 {
            for j in 0..n as u8 {
                let entry = if i == j {
                    field.from_int(2)
                } else {
                    match matrix.bond(i, j) {
                        Bond::Infinite => field.from_int(-2),
                        Bond::Finite(m) => field.neg(&field.two_cos(field.order() / m)),
                    }
                };
                two_gram.push(entry);
            }
        }
        CoxeterSystem {
            matrix,
            field,
            two_gram,
            table: Mutex::new(ElementTable::new(n)),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    /// The simple root alpha_s as a coordinate vector.
    pub fn simple_root(&self, s: Generator) -> Vec<Scalar> {
        assert!((s as usize) < self.rank());
        let mut root = vec![self.field.zero(); self.rank()];
        root[s as usize] = self.field.one();
        root
    }

    /// Image of a root under the simple reflection sigma_s.
    pub fn reflect(&self, root: &[Scalar], s: Generator) -> Vec<Scalar> {
        let mut image = root.to_vec();
        self.reflect_in_place(&mut image, s);
        image
    }

    fn reflect_in_place(&self, root: &mut [Scalar], s: Generator) {
        let n = self.rank();
        let mut c = self.field.zero();
        for (t, r) in root.iter().enumerate() {
            if !r.is_zero() {
                let term = self.field.mul(r, &self.two_gram[t * n + s as usize]);
                c = self.field.add(&c, &term);
            }
        }
        root[s as usize] = self.field.sub(&root[s as usize], &c);
    }

    fn is_simple_root(&self, root: &[Scalar], s: Generator) -> bool {
        let one = self.field.one();
        if root[s as usize] != one {
            return false;
        }
        root.iter()
            .enumerate()
            .all(|(t, c)| t == s as usize || c.is_zero())
    }

    /// For reduced `word` and `s` a right descent of its element, the index
    /// whose deletion realizes the exchange property; `None` when ws is
    /// longer than w.
    fn descent_scan_right(&self, word: &[Generator], s: Generator) -> Option<usize> {
        let mut root = self.simple_root(s);
        for j in (0..word.len()).rev() {
            if self.is_simple_root(&root, word[j]) {
                return Some(j);
            }
            self.reflect_in_place(&mut root, word[j]);
        }
        None
    }

    fn descent_scan_left(&self, word: &[Generator], t: Generator) -> Option<usize> {
        let mut root = self.simple_root(t);
        for (j, &g) in word.iter().enumerate() {
            if self.is_simple_root(&root, g) {
                return Some(j);
            }
            self.reflect_in_place(&mut root, g);
        }
        None
    }

    /// Intern the ShortLex normal form of a *reduced* word by greedily
    /// extracting the smallest left descent. Every suffix of a normal form is
    /// itself a normal form, so the loop usually hits the intern table after
    /// one extraction.
    fn canonicalize_locked(&self, table: &mut ElementTable, word: &[Generator]) -> u32 {
        let mut extracted: Vec<Generator> = Vec::new();
        let mut cur: Vec<Generator> = word.to_vec();
        let mut id = loop {
            if let Some(&id) = table.index.get(cur.as_slice()) {
                break id;
            }
            let mut found = None;
            for t in 0..self.rank() as Generator {
                if let Some(j) = self.descent_scan_left(&cur, t) {
                    found = Some((t, j));
                    break;
                }
            }
            let (t, j) = found.expect("a nonempty reduced word has a left descent");
            extracted.push(t);
            cur.remove(j);
        };
        while let Some(t) = extracted.pop() {
            let mut nf = Vec::with_capacity(table.words[id as usize].len() + 1);
            nf.push(t);
            nf.extend_from_slice(&table.words[id as usize]);
            id = table.intern(self.rank(), &nf);
        }
        id
    }

    fn mult_locked(&self, table: &mut ElementTable, w: u32, s: Generator, side: Side) -> u32 {
        let n = self.rank();
        let slot = w as usize * n + s as usize;
        let cached = match side {
            Side::Right => table.right[slot],
            Side::Left => table.left[slot],
        };
        if cached != UNKNOWN {
            return cached;
        }
        let word = table.words[w as usize].clone();
        let product: Vec<Generator> = match side {
            Side::Right => match self.descent_scan_right(&word, s) {
                Some(j) => deleted(&word, j),
                None => {
                    let mut v = word.to_vec();
                    v.push(s);
                    v
                }
            },
            Side::Left => match self.descent_scan_left(&word, s) {
                Some(j) => deleted(&word, j),
                None => {
                    let mut v = Vec::with_capacity(word.len() + 1);
                    v.push(s);
                    v.extend_from_slice(&word);
                    v
                }
            },
        };
        let res = self.canonicalize_locked(table, &product);
        // Multiplying by a generator is an involution on elements, so the
        // cache entry holds in both directions.
        let res_slot = res as usize * n + s as usize;
        match side {
            Side::Right => {
                table.right[slot] = res;
                table.right[res_slot] = w;
            }
            Side::Left => {
                table.left[slot] = res;
                table.left[res_slot] = w;
            }
        }
        res
    }

    /// Product w * s (right) or s * w (left).
    pub fn mult(&self, w: Element, s: Generator, side: Side) -> Element {
        assert!((s as usize) < self.rank(), "generator out of range");
        let mut table = self.table.lock().unwrap();
        Element(self.mult_locked(&mut table, w.0, s, side))
    }

    /// ShortLex normal form of an arbitrary word, as an interned element.
    pub fn normalize(&self, word: &[Generator]) -> Result<Element> {
        self.check_word(word)?;
        let mut table = self.table.lock().unwrap();
        let mut id = 0u32;
        for &s in word {
            id = self.mult_locked(&mut table, id, s, Side::Right);
        }
        Ok(Element(id))
    }

    pub fn check_word(&self, word: &[Generator]) -> Result<()> {
        for &s in word {
            if (s as usize) >= self.rank() {
                return Err(Error::GeneratorOutOfRange {
                    found: s as usize,
                    rank: self.rank(),
                });
            }
        }
        Ok(())
    }

    pub fn is_reduced(&self, word: &[Generator]) -> Result<bool> {
        Ok(self.length(self.normalize(word)?) == word.len())
    }

    /// The ShortLex normal form of the element.
    pub fn word(&self, w: Element) -> Word {
        let table = self.table.lock().unwrap();
        table.words[w.0 as usize].to_vec()
    }

    pub fn length(&self, w: Element) -> usize {
        let table = self.table.lock().unwrap();
        table.words[w.0 as usize].len()
    }

    pub fn is_right_descent(&self, w: Element, s: Generator) -> bool {
        self.right_descent_mask(w) >> s & 1 == 1
    }

    pub fn is_left_descent(&self, w: Element, s: Generator) -> bool {
        self.left_descent_mask(w) >> s & 1 == 1
    }

    pub fn right_descent_mask(&self, w: Element) -> u64 {
        let mut table = self.table.lock().unwrap();
        let cached = table.right_desc[w.0 as usize];
        if cached != UNKNOWN_MASK {
            return cached;
        }
        let word = table.words[w.0 as usize].clone();
        let mut mask = 0u64;
        for s in 0..self.rank() as Generator {
            if self.descent_scan_right(&word, s).is_some() {
                mask |= 1 << s;
            }
        }
        table.right_desc[w.0 as usize] = mask;
        mask
    }

    pub fn left_descent_mask(&self, w: Element) -> u64 {
        let mut table = self.table.lock().unwrap();
        let cached = table.left_desc[w.0 as usize];
        if cached != UNKNOWN_MASK {
            return cached;
        }
        let word = table.words[w.0 as usize].clone();
        let mut mask = 0u64;
        for s in 0..self.rank() as Generator {
            if self.descent_scan_left(&word, s).is_some() {
                mask |= 1 << s;
            }
        }
        table.left_desc[w.0 as usize] = mask;
        mask
    }

    pub fn right_descents(&self, w: Element) -> Word {
        mask_to_word(self.right_descent_mask(w))
    }

    pub fn left_descents(&self, w: Element) -> Word {
        mask_to_word(self.left_descent_mask(w))
    }

    pub fn inverse(&self, w: Element) -> Element {
        let mut table = self.table.lock().unwrap();
        let cached = table.inverse[w.0 as usize];
        if cached != UNKNOWN {
            return Element(cached);
        }
        let mut word = table.words[w.0 as usize].to_vec();
        word.reverse();
        let res = self.canonicalize_locked(&mut table, &word);
        table.inverse[w.0 as usize] = res;
        table.inverse[res as usize] = w.0;
        Element(res)
    }

    /// Image of an element under a diagram automorphism.
    pub fn apply(&self, theta: &Automorphism, w: Element) -> Element {
        assert_eq!(theta.rank(), self.rank(), "automorphism rank mismatch");
        let mut table = self.table.lock().unwrap();
        let word: Vec<Generator> = table.words[w.0 as usize]
            .iter()
            .map(|&s| theta.apply(s))
            .collect();
        Element(self.canonicalize_locked(&mut table, &word))
    }

    /// Number of interned elements; a diagnostic, not |W|.
    pub fn interned_count(&self) -> usize {
        self.table.lock().unwrap().words.len()
    }
}

fn deleted(word: &[Generator], j: usize) -> Vec<Generator> {
    let mut v = Vec::with_capacity(word.len() - 1);
    v.extend_from_slice(&word[..j]);
    v.extend_from_slice(&word[j + 1..]);
    v
}

fn mask_to_word(mask: u64) -> Word {
    (0..64)
        .filter(|s| mask >> s & 1 == 1)
        .map(|s| s as Generator)
        .collect()
}
