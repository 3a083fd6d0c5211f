//! The monoid action underlying the word calculus for twisted involutions.
//!
//! Fix a Coxeter system (W, S) and an involutive diagram automorphism theta.
//! The twisted involutions are the elements with theta(w) = w^{-1}. Each
//! generator s acts on them by
//!
//!   w * s = ws            when theta(s) w s = w,
//!   w * s = theta(s) w s  otherwise,
//!
//! and every twisted involution is reachable from the identity. All shortest
//! expressions for w in this monoid share one length rho(w), the analogue of
//! Coxeter length; an expression is reduced exactly when every step raises
//! rho. In a reduced expression the one-letter branch fires exactly
//! [`Twist::twisted_absolute_length`] times.

use crate::error::{Error, Result};
use crate::matrix::{Automorphism, Generator, Word};
use crate::system::{CoxeterSystem, Element, Side};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

/// A twisted involution together with its monoid length rho.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedInvolution {
    element: Element,
    rho: u32,
}

impl TwistedInvolution {
    pub fn element(&self) -> Element {
        self.element
    }

    /// Common length of all reduced monoid expressions.
    pub fn rho(&self) -> u32 {
        self.rho
    }
}

/// A Coxeter system paired with an involutive diagram automorphism.
pub struct Twist<'a> {
    system: &'a CoxeterSystem,
    theta: Automorphism,
}

impl<'a> Twist<'a> {
    pub fn new(system: &'a CoxeterSystem, theta: Automorphism) -> Result<Self> {
        if theta.rank() != system.rank() {
            return Err(Error::InvalidAutomorphism(format!(
                "rank {} does not match system rank {}",
                theta.rank(),
                system.rank()
            )));
        }
        // Re-validate against this matrix; the automorphism may have been
        // built elsewhere.
        Automorphism::new(theta.images().to_vec(), system.matrix())?;
        Ok(Twist { system, theta })
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.system
    }

    pub fn theta(&self) -> &Automorphism {
        &self.theta
    }

    /// theta applied to an element.
    pub fn twist(&self, w: Element) -> Element {
        self.system.apply(&self.theta, w)
    }

    pub fn is_twisted_involution(&self, w: Element) -> bool {
        self.twist(self.system.inverse(w)) == w
    }

    pub fn identity(&self) -> TwistedInvolution {
        TwistedInvolution {
            element: self.system.identity(),
            rho: 0,
        }
    }

    /// The monoid action on the underlying element. The branch test compares
    /// elements, not word lengths; theta(s) w s can equal w even when the
    /// words differ.
    pub fn act(&self, w: Element, s: Generator) -> Element {
        let ws = self.system.mult(w, s, Side::Right);
        let tsws = self.system.mult(ws, self.theta.apply(s), Side::Left);
        if tsws == w {
            ws
        } else {
            tsws
        }
    }

    /// Whether acting by s lowers rho. For twisted involutions this agrees
    /// with the ordinary right descent test.
    pub fn is_descent(&self, w: &TwistedInvolution, s: Generator) -> bool {
        self.system.is_right_descent(w.element, s)
    }

    /// Ascending generators, i.e. those whose action raises rho.
    pub fn ascents(&self, w: &TwistedInvolution) -> Word {
        (0..self.system.rank() as Generator)
            .filter(|&s| !self.is_descent(w, s))
            .collect()
    }

    pub fn descents(&self, w: &TwistedInvolution) -> Word {
        self.system.right_descents(w.element)
    }

    /// The action with rho bookkeeping.
    pub fn act_ti(&self, w: &TwistedInvolution, s: Generator) -> TwistedInvolution {
        let rho = if self.is_descent(w, s) {
            w.rho - 1
        } else {
            w.rho + 1
        };
        TwistedInvolution {
            element: self.act(w.element, s),
            rho,
        }
    }

    /// Evaluate a monoid word from the identity.
    pub fn eval(&self, word: &[Generator]) -> Result<TwistedInvolution> {
        self.system.check_word(word)?;
        let mut w = self.identity();
        for &s in word {
            w = self.act_ti(&w, s);
        }
        Ok(w)
    }

    /// A monoid word is reduced when every step raises rho.
    pub fn is_reduced_expression(&self, word: &[Generator]) -> Result<bool> {
        self.system.check_word(word)?;
        let mut w = self.identity();
        for &s in word {
            if self.is_descent(&w, s) {
                return Ok(false);
            }
            w = self.act_ti(&w, s);
        }
        Ok(true)
    }

    /// Wrap an element, computing rho by stripping descents. Errors when the
    /// element is not a twisted involution.
    pub fn twisted_involution(&self, w: Element) -> Result<TwistedInvolution> {
        if !self.is_twisted_involution(w) {
            return Err(Error::NotTwisted);
        }
        let mut cur = w;
        let mut rho = 0u32;
        while cur != self.system.identity() {
            let s = self.system.right_descents(cur)[0];
            cur = self.act(cur, s);
            rho += 1;
        }
        Ok(TwistedInvolution { element: w, rho })
    }

    /// l(w) = 2 rho(w) - this. Equals the minimal number of twisted
    /// reflections multiplying to w, and counts the one-letter branches in
    /// any reduced monoid expression.
    pub fn twisted_absolute_length(&self, w: &TwistedInvolution) -> usize {
        2 * w.rho as usize - self.system.length(w.element)
    }

    /// Expand a monoid word into a plain word: the one-letter branch appends
    /// s, the two-letter branch prepends theta(s) and appends s. For reduced
    /// monoid words the result is a reduced word for the element.
    pub fn ord_expand(&self, word: &[Generator]) -> Result<Word> {
        self.system.check_word(word)?;
        let mut expansion: VecDeque<Generator> = VecDeque::new();
        let mut w = self.system.identity();
        for &s in word {
            let ws = self.system.mult(w, s, Side::Right);
            let tsws = self.system.mult(ws, self.theta.apply(s), Side::Left);
            if tsws == w {
                expansion.push_back(s);
                w = ws;
            } else {
                expansion.push_front(self.theta.apply(s));
                expansion.push_back(s);
                w = tsws;
            }
        }
        Ok(expansion.into_iter().collect())
    }

    /// All reduced monoid expressions for w, sorted lexicographically.
    pub fn reduced_expressions(&self, w: &TwistedInvolution) -> Vec<Word> {
        self.reduced_expressions_bounded(w, None)
            .expect("unbounded enumeration cannot exceed a cap")
    }

    /// As [`Twist::reduced_expressions`], aborting with
    /// [`Error::CapExceeded`] beyond `cap` expressions.
    pub fn reduced_expressions_bounded(
        &self,
        w: &TwistedInvolution,
        cap: Option<usize>,
    ) -> Result<Vec<Word>> {
        let mut out = BTreeSet::new();
        let mut suffix = Vec::with_capacity(w.rho as usize);
        self.collect_expressions(w, &mut suffix, &mut out, cap)?;
        Ok(out.into_iter().collect())
    }

    fn collect_expressions(
        &self,
        w: &TwistedInvolution,
        suffix: &mut Word,
        out: &mut BTreeSet<Word>,
        cap: Option<usize>,
    ) -> Result<()> {
        if w.rho == 0 {
            let mut word = suffix.clone();
            word.reverse();
            out.insert(word);
            if let Some(c) = cap {
                if out.len() > c {
                    return Err(Error::CapExceeded(c));
                }
            }
            return Ok(());
        }
        for s in self.descents(w) {
            suffix.push(s);
            self.collect_expressions(&self.act_ti(w, s), suffix, out, cap)?;
            suffix.pop();
        }
        Ok(())
    }

    /// Breadth-first sweep of twisted involutions by rho. `bound` of None
    /// exhausts the set (finite groups only); `cap` aborts with
    /// [`Error::CapExceeded`]. Sorted by (rho, length, word).
    pub fn enumerate_involutions(
        &self,
        bound: Option<u32>,
        cap: Option<usize>,
    ) -> Result<Vec<TwistedInvolution>> {
        let mut seen: HashMap<Element, u32> = HashMap::new();
        let mut queue = VecDeque::new();
        let identity = self.identity();
        seen.insert(identity.element, 0);
        queue.push_back(identity);
        while let Some(w) = queue.pop_front() {
            if let Some(b) = bound {
                if w.rho >= b {
                    continue;
                }
            }
            for s in self.ascents(&w) {
                let next = self.act_ti(&w, s);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(next.element) {
                    e.insert(next.rho);
                    if let Some(c) = cap {
                        if seen.len() > c {
                            return Err(Error::CapExceeded(c));
                        }
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<TwistedInvolution> = seen
            .into_iter()
            .map(|(element, rho)| TwistedInvolution { element, rho })
            .collect();
        self.sort_involutions(&mut out);
        Ok(out)
    }

    /// Deterministic order: by rho, then length, then ShortLex word.
    pub fn sort_involutions(&self, involutions: &mut [TwistedInvolution]) {
        involutions.sort_by_cached_key(|w| {
            (
                w.rho,
                self.system.length(w.element),
                self.system.word(w.element),
            )
        });
    }

    /// Bruhat order on twisted involutions by the subword dynamic program
    /// over one reduced monoid expression.
    pub fn bruhat_le_twisted(&self, x: &TwistedInvolution, w: &TwistedInvolution) -> bool {
        if x.rho > w.rho {
            return false;
        }
        self.down_set_inner(w).contains(&x.element)
    }

    /// The full twisted lower interval, sorted by (rho, length, word).
    pub fn twisted_down_set(&self, w: &TwistedInvolution) -> Vec<TwistedInvolution> {
        let mut out: Vec<TwistedInvolution> = self
            .down_set_inner(w)
            .into_iter()
            .map(|element| {
                self.twisted_involution(element)
                    .expect("down set contains only twisted involutions")
            })
            .collect();
        self.sort_involutions(&mut out);
        out
    }

    fn down_set_inner(&self, w: &TwistedInvolution) -> HashSet<Element> {
        let expression = self
            .reduced_expression(w)
            .expect("twisted involution has a reduced expression");
        let mut reachable: HashSet<Element> = HashSet::new();
        reachable.insert(self.system.identity());
        for &s in &expression {
            let next: Vec<Element> = reachable
                .iter()
                .filter(|&&x| !self.system.is_right_descent(x, s))
                .map(|&x| self.act(x, s))
                .collect();
            reachable.extend(next);
        }
        reachable
    }

    /// One canonical reduced monoid expression: smallest descent stripped
    /// first, so the word is colexicographically smallest.
    pub fn reduced_expression(&self, w: &TwistedInvolution) -> Result<Word> {
        let mut cur = *w;
        let mut suffix = Vec::with_capacity(w.rho as usize);
        while cur.rho > 0 {
            let s = self.descents(&cur)[0];
            suffix.push(s);
            cur = self.act_ti(&cur, s);
        }
        suffix.reverse();
        Ok(suffix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CoxeterMatrix;

    /// Permutations of {1..n} in one-line notation: an independent oracle
    /// for type A.
    fn perm_of_word(n: usize, word: &[Generator]) -> Vec<usize> {
        let mut p: Vec<usize> = (1..=n).collect();
        for &s in word {
            p.swap(s as usize, s as usize + 1);
        }
        p
    }

    fn perm_inverse(p: &[usize]) -> Vec<usize> {
        let mut inv = vec![0; p.len()];
        for (i, &v) in p.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        inv
    }

    fn perm_inversions(p: &[usize]) -> usize {
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    fn reverse_conjugate(p: &[usize]) -> Vec<usize> {
        // w0 p w0 for w0 the order-reversing permutation.
        let n = p.len();
        (0..n).map(|i| n + 1 - p[n - 1 - i]).collect()
    }

    fn a3() -> CoxeterSystem {
        CoxeterSystem::new(CoxeterMatrix::type_a(3))
    }

    fn twist_of(sys: &CoxeterSystem, images: Vec<Generator>) -> Twist<'_> {
        let theta = Automorphism::new(images, sys.matrix()).unwrap();
        Twist::new(sys, theta).unwrap()
    }

    #[test]
    fn action_branches_match_permutation_oracle() {
        let sys = a3();
        let swap = twist_of(&sys, vec![2, 1, 0]);
        // Acting by s3 on s2 s3 s1 s2 takes the one-letter branch even
        // though theta(s3) w s3 is written with two more letters.
        let w = sys.normalize(&[1, 2, 0, 1]).unwrap();
        let image = swap.act(w, 2);
        assert_eq!(sys.length(image), 5);
        let expected = {
            let mut p = perm_of_word(4, &[1, 2, 0, 1]);
            p.swap(2, 3);
            p
        };
        assert_eq!(perm_of_word(4, &sys.word(image)), expected);
    }

    #[test]
    fn eval_and_ord_expand_frozen_case() {
        let sys = a3();
        let swap = twist_of(&sys, vec![2, 1, 0]);
        let word = [0, 1, 2, 1];
        // Steps take branches two, two, one, two; the last step lowers rho.
        let expansion = swap.ord_expand(&word).unwrap();
        assert_eq!(expansion, vec![1, 1, 2, 0, 1, 2, 1]);
        let value = swap.eval(&word).unwrap();
        assert_eq!(sys.word(value.element()), vec![0, 1, 2]);
        assert_eq!(value.rho(), 2);
        // The expansion itself folds to the same element.
        assert_eq!(sys.normalize(&expansion).unwrap(), value.element());
        assert!(!swap.is_reduced_expression(&word).unwrap());
    }

    #[test]
    fn reduced_expression_expansion_is_reduced_word() {
        let sys = a3();
        for images in [vec![0, 1, 2], vec![2, 1, 0]] {
            let twist = twist_of(&sys, images);
            for w in twist.enumerate_involutions(None, None).unwrap() {
                for expr in twist.reduced_expressions(&w) {
                    assert_eq!(expr.len(), w.rho() as usize);
                    assert!(twist.is_reduced_expression(&expr).unwrap());
                    let expansion = twist.ord_expand(&expr).unwrap();
                    assert_eq!(expansion.len(), sys.length(w.element()));
                    assert_eq!(sys.normalize(&expansion).unwrap(), w.element());
                }
            }
        }
    }

    #[test]
    fn involution_counts_match_brute_force() {
        let sys = a3();
        for images in [vec![0, 1, 2], vec![2, 1, 0]] {
            let twist = twist_of(&sys, images.clone());
            let enumerated = twist.enumerate_involutions(None, None).unwrap();
            // Independent count over all of S4 in one-line notation.
            let all = crate::words::elements_up_to_length(&sys, None, None).unwrap();
            for &w in &all {
                let p = perm_of_word(4, &sys.word(w));
                assert_eq!(sys.length(w), perm_inversions(&p));
            }
            let expected: Vec<Element> = all
                .into_iter()
                .filter(|&w| {
                    let p = perm_of_word(4, &sys.word(w));
                    let twisted = if images[0] == 2 {
                        reverse_conjugate(&p)
                    } else {
                        p.clone()
                    };
                    twisted == perm_inverse(&p)
                })
                .collect();
            assert_eq!(enumerated.len(), expected.len());
            let got: HashSet<Element> = enumerated.iter().map(|w| w.element()).collect();
            let want: HashSet<Element> = expected.into_iter().collect();
            assert_eq!(got, want);
        }
        // Ordinary involutions of S4.
        let id_twist = twist_of(&sys, vec![0, 1, 2]);
        assert_eq!(id_twist.enumerate_involutions(None, None).unwrap().len(), 10);
    }

    #[test]
    fn rho_is_well_defined_and_length_formula_holds() {
        let sys = a3();
        for images in [vec![0, 1, 2], vec![2, 1, 0]] {
            let twist = twist_of(&sys, images);
            for w in twist.enumerate_involutions(None, None).unwrap() {
                let recomputed = twist.twisted_involution(w.element()).unwrap();
                assert_eq!(recomputed.rho(), w.rho());
                let length = sys.length(w.element());
                let absolute = twist.twisted_absolute_length(&w);
                assert_eq!(length + absolute, 2 * w.rho() as usize);
                // Branch profile of each reduced expression: one-letter
                // branches happen exactly absolute-length many times.
                for expr in twist.reduced_expressions(&w) {
                    let mut cur = sys.identity();
                    let mut one_letter = 0;
                    for &s in &expr {
                        let next = twist.act(cur, s);
                        if sys.length(next) == sys.length(cur) + 1 {
                            one_letter += 1;
                        }
                        cur = next;
                    }
                    assert_eq!(one_letter, absolute);
                }
            }
        }
    }

    #[test]
    fn dihedral_reduced_expressions() {
        let sys = CoxeterSystem::new(CoxeterMatrix::type_a(2));
        let twist = twist_of(&sys, vec![0, 1]);
        let w0 = twist
            .twisted_involution(sys.normalize(&[0, 1, 0]).unwrap())
            .unwrap();
        assert_eq!(w0.rho(), 2);
        assert_eq!(
            twist.reduced_expressions(&w0),
            vec![vec![0, 1], vec![1, 0]]
        );
        assert_eq!(twist.twisted_absolute_length(&w0), 1);
    }

    #[test]
    fn rejects_non_involutions() {
        let sys = a3();
        let twist = twist_of(&sys, vec![0, 1, 2]);
        let w = sys.normalize(&[0, 1]).unwrap();
        assert!(matches!(
            twist.twisted_involution(w),
            Err(Error::NotTwisted)
        ));
    }

    #[test]
    fn twisted_bruhat_agrees_with_plain_bruhat() {
        let sys = a3();
        for images in [vec![0, 1, 2], vec![2, 1, 0]] {
            let twist = twist_of(&sys, images);
            let involutions = twist.enumerate_involutions(None, None).unwrap();
            for x in &involutions {
                for w in &involutions {
                    let twisted = twist.bruhat_le_twisted(x, w);
                    let plain = crate::words::bruhat_le(&sys, x.element(), w.element());
                    assert_eq!(twisted, plain);
                }
            }
        }
    }

    #[test]
    fn twisted_down_sets() {
        let sys = a3();
        let twist = twist_of(&sys, vec![0, 1, 2]);
        let w0 = twist
            .twisted_involution(sys.normalize(&[0, 1, 0, 2, 1, 0]).unwrap())
            .unwrap();
        // All ten involutions of S4 sit below the longest element.
        assert_eq!(twist.twisted_down_set(&w0).len(), 10);
        let s2 = twist
            .twisted_involution(sys.normalize(&[1]).unwrap())
            .unwrap();
        let down = twist.twisted_down_set(&s2);
        assert_eq!(down.len(), 2);
        assert_eq!(down[1].element(), s2.element());
    }

    #[test]
    fn infinite_dihedral_sweep_is_bounded() {
        let sys = CoxeterSystem::new(CoxeterMatrix::type_i2(0));
        let twist = twist_of(&sys, vec![0, 1]);
        let bounded = twist.enumerate_involutions(Some(4), None).unwrap();
        assert_eq!(bounded.len(), 9);
        for w in &bounded {
            assert!(twist.is_twisted_involution(w.element()));
        }
        assert!(matches!(
            twist.enumerate_involutions(Some(50), Some(20)),
            Err(Error::CapExceeded(20))
        ));
    }
}
