//! Plain-word utilities: text round trips, braid moves, reduced-word
//! enumeration, and Bruhat order.
//!
//! All text I/O is 1-based (`s1` is generator index 0) and the empty word
//! prints as `-`.

use crate::error::{Error, Result};
use crate::matrix::{Bond, Generator, Word};
use crate::system::{CoxeterSystem, Element, Side};
use std::collections::{BTreeSet, HashSet, VecDeque};

/// Parse a whitespace-separated 1-based word; `-` denotes the empty word.
pub fn parse_word(input: &str, rank: usize) -> Result<Word> {
    let trimmed = input.trim();
    if trimmed == "-" || trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut word = Vec::new();
    for token in trimmed.split_whitespace() {
        let value: usize = token
            .parse()
            .map_err(|_| Error::InvalidWord(format!("bad letter {token:?}")))?;
        if value == 0 || value > rank {
            return Err(Error::GeneratorOutOfRange {
                found: value,
                rank,
            });
        }
        word.push((value - 1) as Generator);
    }
    Ok(word)
}

/// Render a word 1-based; the empty word renders as `-`.
pub fn format_word(word: &[Generator]) -> String {
    if word.is_empty() {
        return "-".to_string();
    }
    word.iter()
        .map(|&s| (s as usize + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// All words one braid move away from a reduced word, with the start index
/// of the rewritten window. Requires the input to be reduced.
pub fn braid_neighbors(sys: &CoxeterSystem, word: &[Generator]) -> Result<Vec<(usize, Word)>> {
    sys.check_word(word)?;
    if !sys.is_reduced(word)? {
        return Err(Error::NonReduced);
    }
    let mut out = Vec::new();
    for i in 0..word.len() {
        for j in i + 1..=word.len() {
            let window = &word[i..j];
            if let Some(replacement) = braid_image(sys, window) {
                let mut neighbor = word.to_vec();
                neighbor[i..j].copy_from_slice(&replacement);
                out.push((i, neighbor));
            }
        }
    }
    Ok(out)
}

/// If `window` is exactly an alternating run s t s t ... of the full bond
/// length m(s,t), the reversed-roles run; otherwise None.
pub(crate) fn braid_image(sys: &CoxeterSystem, window: &[Generator]) -> Option<Word> {
    if window.len() < 2 {
        return None;
    }
    let s = window[0];
    let t = window[1];
    if s == t {
        return None;
    }
    let m = match sys.matrix().bond(s, t) {
        Bond::Finite(m) => m as usize,
        Bond::Infinite => return None,
    };
    if window.len() != m {
        return None;
    }
    for (k, &g) in window.iter().enumerate() {
        let expected = if k % 2 == 0 { s } else { t };
        if g != expected {
            return None;
        }
    }
    Some((0..m).map(|k| if k % 2 == 0 { t } else { s }).collect())
}

/// All reduced words for an element, sorted lexicographically.
pub fn reduced_words(sys: &CoxeterSystem, w: Element) -> Vec<Word> {
    let mut out = BTreeSet::new();
    let mut prefix = Vec::with_capacity(sys.length(w));
    descend(sys, w, &mut prefix, &mut out);
    out.into_iter().collect()
}

fn descend(
    sys: &CoxeterSystem,
    w: Element,
    prefix: &mut Word,
    out: &mut BTreeSet<Word>,
) {
    if w == sys.identity() {
        let mut word = prefix.clone();
        word.reverse();
        out.insert(word);
        return;
    }
    for s in sys.right_descents(w) {
        prefix.push(s);
        descend(sys, sys.mult(w, s, Side::Right), prefix, out);
        prefix.pop();
    }
}

/// Breadth-first sweep of the group by length. `bound` of None exhausts the
/// group; `cap` aborts with [`Error::CapExceeded`] once more elements than
/// the cap have been seen. Sorted by (length, ShortLex word).
pub fn elements_up_to_length(
    sys: &CoxeterSystem,
    bound: Option<usize>,
    cap: Option<usize>,
) -> Result<Vec<Element>> {
    let mut seen: HashSet<Element> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(sys.identity());
    queue.push_back(sys.identity());
    while let Some(w) = queue.pop_front() {
        if let Some(b) = bound {
            if sys.length(w) >= b {
                continue;
            }
        }
        for s in 0..sys.rank() as Generator {
            if sys.is_right_descent(w, s) {
                continue;
            }
            let ws = sys.mult(w, s, Side::Right);
            if seen.insert(ws) {
                if let Some(c) = cap {
                    if seen.len() > c {
                        return Err(Error::CapExceeded(c));
                    }
                }
                queue.push_back(ws);
            }
        }
    }
    let mut out: Vec<Element> = seen.into_iter().collect();
    sort_elements(sys, &mut out);
    Ok(out)
}

/// Deterministic order: by length, then ShortLex word.
pub fn sort_elements(sys: &CoxeterSystem, elements: &mut [Element]) {
    elements.sort_by_cached_key(|&w| (sys.length(w), sys.word(w)));
}

/// Generators occurring in some (equivalently, every) reduced word of w.
pub fn support(sys: &CoxeterSystem, w: Element) -> Word {
    let mut letters = sys.word(w);
    letters.sort_unstable();
    letters.dedup();
    letters
}

/// Bruhat order test x <= w by the subword dynamic program over one fixed
/// reduced word of w.
pub fn bruhat_le(sys: &CoxeterSystem, x: Element, w: Element) -> bool {
    if sys.length(x) > sys.length(w) {
        return false;
    }
    bruhat_down_set_inner(sys, w).contains(&x)
}

/// The full lower interval {x : x <= w}, sorted by (length, word).
pub fn bruhat_down_set(sys: &CoxeterSystem, w: Element) -> Vec<Element> {
    let mut out: Vec<Element> = bruhat_down_set_inner(sys, w).into_iter().collect();
    sort_elements(sys, &mut out);
    out
}

fn bruhat_down_set_inner(sys: &CoxeterSystem, w: Element) -> HashSet<Element> {
    // Every x <= w arises as a reduced subword of this fixed word, built
    // letter by letter through ascents only.
    let word = sys.word(w);
    let mut reachable: HashSet<Element> = HashSet::new();
    reachable.insert(sys.identity());
    for &s in &word {
        let next: Vec<Element> = reachable
            .iter()
            .filter(|&&x| !sys.is_right_descent(x, s))
            .map(|&x| sys.mult(x, s, Side::Right))
            .collect();
        reachable.extend(next);
    }
    reachable
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CoxeterMatrix;

    fn a3() -> CoxeterSystem {
        CoxeterSystem::new(CoxeterMatrix::type_a(3))
    }

    #[test]
    fn word_text_round_trip() {
        let word = parse_word("1 2 1", 3).unwrap();
        assert_eq!(word, vec![0, 1, 0]);
        assert_eq!(format_word(&word), "1 2 1");
        assert_eq!(parse_word("-", 3).unwrap(), Vec::<Generator>::new());
        assert_eq!(format_word(&[]), "-");
        assert!(parse_word("0", 3).is_err());
        assert!(parse_word("4", 3).is_err());
        assert!(parse_word("x", 3).is_err());
    }

    #[test]
    fn braid_neighbors_of_short_words() {
        let sys = a3();
        let neighbors = braid_neighbors(&sys, &[0, 1, 0]).unwrap();
        assert_eq!(neighbors, vec![(0, vec![1, 0, 1])]);
        let neighbors = braid_neighbors(&sys, &[0, 2]).unwrap();
        assert_eq!(neighbors, vec![(0, vec![2, 0])]);
        assert!(matches!(
            braid_neighbors(&sys, &[0, 0]),
            Err(Error::NonReduced)
        ));
    }

    #[test]
    fn braid_closure_reaches_all_reduced_words() {
        let sys = a3();
        let w0 = sys.normalize(&[0, 1, 0, 2, 1, 0]).unwrap();
        let words = reduced_words(&sys, w0);
        // The longest element of A3 has sixteen reduced words.
        assert_eq!(words.len(), 16);
        for word in &words {
            assert_eq!(sys.normalize(word).unwrap(), w0);
            assert_eq!(word.len(), 6);
        }
        // Closure under braid moves stays inside the same set.
        let set: BTreeSet<Word> = words.iter().cloned().collect();
        for word in &words {
            for (_, neighbor) in braid_neighbors(&sys, word).unwrap() {
                assert!(set.contains(&neighbor));
            }
        }
    }

    #[test]
    fn reduced_words_of_a_palindrome() {
        let sys = a3();
        let w = sys.normalize(&[0, 1, 0]).unwrap();
        assert_eq!(reduced_words(&sys, w), vec![vec![0, 1, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn element_sweep_counts() {
        let sys = a3();
        let all = elements_up_to_length(&sys, None, None).unwrap();
        assert_eq!(all.len(), 24);
        let short = elements_up_to_length(&sys, Some(2), None).unwrap();
        assert_eq!(short.len(), 1 + 3 + 5);
        let infinite = CoxeterSystem::new(CoxeterMatrix::type_i2(0));
        let bounded = elements_up_to_length(&infinite, Some(3), None).unwrap();
        assert_eq!(bounded.len(), 7);
        assert!(matches!(
            elements_up_to_length(&infinite, Some(10), Some(5)),
            Err(Error::CapExceeded(5))
        ));
    }

    #[test]
    fn bruhat_interval_of_dihedral_product() {
        let sys = a3();
        let w = sys.normalize(&[0, 1]).unwrap();
        let down = bruhat_down_set(&sys, w);
        let words: Vec<Word> = down.iter().map(|&x| sys.word(x)).collect();
        assert_eq!(words, vec![vec![], vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn bruhat_comparisons() {
        let sys = a3();
        let w0 = sys.normalize(&[0, 1, 0, 2, 1, 0]).unwrap();
        let s2 = sys.normalize(&[1]).unwrap();
        let s1s3 = sys.normalize(&[0, 2]).unwrap();
        assert!(bruhat_le(&sys, s2, w0));
        assert!(!bruhat_le(&sys, s2, s1s3));
        assert!(!bruhat_le(&sys, s1s3, s2));
        assert!(bruhat_le(&sys, sys.identity(), s2));
        assert_eq!(bruhat_down_set(&sys, w0).len(), 24);
        // Subword: s1 s2 <= s1 s2 s1 but s2 s1 is also a subword product.
        let w = sys.normalize(&[0, 1, 0]).unwrap();
        assert!(bruhat_le(&sys, sys.normalize(&[0, 1]).unwrap(), w));
        assert!(bruhat_le(&sys, sys.normalize(&[1, 0]).unwrap(), w));
    }
}
