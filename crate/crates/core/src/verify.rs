//! Verification suites: connectivity of expression graphs under the move
//! regimes, necessity of each initial-move family, and the right-angled
//! correspondence between words and involutions.
//!
//! Each suite returns a [`VerificationReport`] whose checks are pure
//! functions of the inputs, so reports are reproducible byte for byte. When
//! an expression set exceeds the cap, connectivity is sampled: a handful of
//! random expressions are joined to the lexicographically smallest one by
//! bounded search. A sampled check that fails to join is inconclusive and is
//! reported as a failure rather than silently passing.

use crate::classify::{classify_subset, decomposition_label, longest_element};
use crate::error::{Error, Result};
use crate::matrix::{Bond, Generator, Word};
use crate::moves::{
    applicable_moves, expression_graph, minimal_move_instances, system_family_tag, MoveSet,
};
use crate::twist::{Twist, TwistedInvolution};
use crate::words::{bruhat_le, elements_up_to_length, format_word, reduced_words, sort_elements};
use serde_json::json;
use std::collections::{BTreeSet, HashSet, VecDeque};

const SAMPLE_COUNT: usize = 8;
const SAMPLE_BUDGET: usize = 4096;

/// Outcome of one check. `w` is a witness expression: the smallest vertex
/// when the check passes, the offending one when it fails. `size` is the
/// number of objects examined; `components` is 0 when sampling was
/// inconclusive.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub w: Word,
    pub regime: String,
    pub size: usize,
    pub components: usize,
    pub pass: bool,
}

/// A suite's worth of checks over one system and twist.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub system: String,
    pub theta: Vec<Generator>,
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Rename the system, typically to a file-supplied name.
    pub fn with_system(mut self, system: &str) -> Self {
        self.system = system.to_string();
        self
    }

    /// The report schema: {system, theta, checks: [{name, w, regime,
    /// components, pass}]} with 1-based letters.
    pub fn to_json(&self) -> serde_json::Value {
        let theta: Vec<usize> = self.theta.iter().map(|&g| g as usize + 1).collect();
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "w": format_word(&c.w),
                    "regime": c.regime,
                    "components": c.components,
                    "pass": c.pass,
                })
            })
            .collect();
        json!({ "system": self.system, "theta": theta, "checks": checks })
    }

    /// One line per check plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{}: w = {} regime = {} size = {} components = {} {}\n",
                c.name,
                format_word(&c.w),
                c.regime,
                c.size,
                c.components,
                if c.pass { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "{} [{}]: {}/{} checks passed\n",
            self.suite,
            self.system,
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        ));
        out
    }
}

fn system_label(twist: &Twist<'_>) -> String {
    let matrix = twist.system().matrix();
    let all: Word = matrix.generators().collect();
    match classify_subset(matrix, &all) {
        Ok(components) => decomposition_label(&components),
        Err(_) => format!("rank-{}", matrix.rank()),
    }
}

fn report(twist: &Twist<'_>, suite: &str, checks: Vec<CheckResult>) -> VerificationReport {
    VerificationReport {
        system: system_label(twist),
        theta: twist.theta().images().to_vec(),
        suite: suite.to_string(),
        checks,
    }
}

struct XorShift64(u64);

impl XorShift64 {
    fn new(seed: u64) -> Self {
        XorShift64(seed | 1)
    }

    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// A random reduced expression of w: strip a random descent per step.
fn random_expression(
    twist: &Twist<'_>,
    w: &TwistedInvolution,
    rng: &mut XorShift64,
) -> Word {
    let mut current = *w;
    let mut reversed = Vec::with_capacity(current.rho() as usize);
    while current.rho() > 0 {
        let descents = twist.descents(&current);
        let s = descents[rng.below(descents.len())];
        reversed.push(s);
        current = twist.act_ti(&current, s);
    }
    reversed.reverse();
    reversed
}

/// Breadth-first search bounded by an explored-node budget. `true` means a
/// path was found; `false` is inconclusive.
fn bounded_connected(
    twist: &Twist<'_>,
    from: &[Generator],
    to: &[Generator],
    moves: &MoveSet,
    budget: usize,
) -> Result<bool> {
    if from == to {
        return Ok(true);
    }
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(from.to_vec());
    queue.push_back(from.to_vec());
    while let Some(word) = queue.pop_front() {
        if seen.len() > budget {
            return Ok(false);
        }
        for (_, next) in applicable_moves(twist, &word, moves)? {
            if next.as_slice() == to {
                return Ok(true);
            }
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// One connectivity check of the expression graph of w under `moves`,
/// falling back to sampled pair connection above the cap.
fn connectivity_check(
    twist: &Twist<'_>,
    w: &TwistedInvolution,
    moves: &MoveSet,
    cap: Option<usize>,
    name: &str,
    regime: &str,
) -> Result<CheckResult> {
    match expression_graph(twist, w, moves, cap) {
        Ok(graph) => {
            let components = graph.components().len();
            Ok(CheckResult {
                name: name.to_string(),
                w: graph.words()[0].clone(),
                regime: regime.to_string(),
                size: graph.words().len(),
                components: components.max(1),
                pass: components <= 1,
            })
        }
        Err(Error::CapExceeded(_)) => {
            let base = twist.reduced_expression(w)?;
            let mut seed = 0xC0C0_0101_u64;
            for &s in &base {
                seed = seed.wrapping_mul(31).wrapping_add(s as u64 + 1);
            }
            let mut rng = XorShift64::new(seed);
            let mut all_joined = true;
            for _ in 0..SAMPLE_COUNT {
                let sample = random_expression(twist, w, &mut rng);
                if !bounded_connected(twist, &sample, &base, moves, SAMPLE_BUDGET)? {
                    all_joined = false;
                    break;
                }
            }
            Ok(CheckResult {
                name: name.to_string(),
                w: base,
                regime: format!("{regime} (sampled)"),
                size: SAMPLE_COUNT,
                components: if all_joined { 1 } else { 0 },
                pass: all_joined,
            })
        }
        Err(other) => Err(other),
    }
}

fn connectivity_sweep(
    twist: &Twist<'_>,
    moves: &MoveSet,
    rank_bound: Option<u32>,
    cap: Option<usize>,
    suite: &str,
    name: &str,
    regime: &str,
) -> Result<VerificationReport> {
    let mut involutions = twist.enumerate_involutions(rank_bound, cap)?;
    twist.sort_involutions(&mut involutions);
    let mut checks = Vec::with_capacity(involutions.len());
    for w in &involutions {
        checks.push(connectivity_check(twist, w, moves, cap, name, regime)?);
    }
    Ok(report(twist, suite, checks))
}

/// Every twisted involution of rank up to `rank_bound` (all of them when
/// None) has a connected expression graph under braid plus minimal moves.
pub fn verify_word_property(
    twist: &Twist<'_>,
    rank_bound: Option<u32>,
    cap: Option<usize>,
) -> Result<VerificationReport> {
    let moves = MoveSet::full(twist);
    connectivity_sweep(
        twist,
        &moves,
        rank_bound,
        cap,
        "word-property",
        "word-property",
        "braid+minimal",
    )
}

/// Dropping the move family of the system's own type and twist disconnects
/// the expression graph of the longest element. The whole system must be
/// one of the six listed classes.
pub fn verify_necessity(twist: &Twist<'_>, cap: Option<usize>) -> Result<VerificationReport> {
    let all: Word = twist.system().matrix().generators().collect();
    let tag = system_family_tag(twist).ok_or_else(|| Error::HypothesisViolated {
        subset: all.clone(),
        reason: "the whole system is not one of the six listed type/twist classes".to_string(),
    })?;
    let w0 = longest_element(twist.system(), &all)?;
    let w0 = twist.twisted_involution(w0)?;
    let moves = MoveSet::without_tag(twist, tag);
    let graph = expression_graph(twist, &w0, &moves, cap)?;
    let components = graph.components().len();
    let checks = vec![CheckResult {
        name: "necessity".to_string(),
        w: graph.words()[0].clone(),
        regime: format!("braid+minimal without {}", tag.label()),
        size: graph.words().len(),
        components,
        pass: components >= 2,
    }];
    Ok(report(twist, "necessity", checks))
}

/// Braid plus half-braid moves alone connect every expression graph,
/// provided no stable parabolic carries one of the non-dihedral families.
pub fn verify_half_braid(
    twist: &Twist<'_>,
    rank_bound: Option<u32>,
    cap: Option<usize>,
) -> Result<VerificationReport> {
    if let Some(obstruction) = minimal_move_instances(twist)
        .into_iter()
        .find(|inst| !inst.tag.is_half_braid())
    {
        return Err(Error::HypothesisViolated {
            subset: obstruction.support,
            reason: format!(
                "stable parabolic of class {} requires its own initial move",
                obstruction.tag.label()
            ),
        });
    }
    let moves = MoveSet::half_braid(twist);
    connectivity_sweep(
        twist,
        &moves,
        rank_bound,
        cap,
        "half-braid",
        "half-braid",
        "braid+halfbraid",
    )
}

/// In a right-angled system with identity twist, reduced words lift letter
/// for letter to reduced monoid expressions, the lift induces a bijection
/// from the length ball onto the rank ball of involutions, and the lift is
/// an isomorphism of Bruhat orders.
pub fn verify_right_angled(
    twist: &Twist<'_>,
    length_bound: usize,
    cap: Option<usize>,
) -> Result<VerificationReport> {
    let sys = twist.system();
    let matrix = sys.matrix();
    for s in matrix.generators() {
        for t in matrix.generators().filter(|&t| t > s) {
            if let Bond::Finite(m) = matrix.bond(s, t) {
                if m != 2 {
                    return Err(Error::NotRightAngled { s, t, m });
                }
            }
        }
    }
    if !twist.theta().is_identity() {
        return Err(Error::NotIdentityTwist);
    }

    let mut elements = elements_up_to_length(sys, Some(length_bound), cap)?;
    sort_elements(sys, &mut elements);

    let mut lift_pass = true;
    let mut lift_witness: Word = Vec::new();
    let mut words_checked = 0usize;
    let mut images = Vec::with_capacity(elements.len());
    for &w in &elements {
        let image = twist.eval(&sys.word(w))?;
        images.push(image);
        for word in reduced_words(sys, w) {
            words_checked += 1;
            let reduced = twist.is_reduced_expression(&word)?;
            if !reduced || twist.eval(&word)? != image {
                if lift_pass {
                    lift_witness = word.clone();
                }
                lift_pass = false;
            }
        }
    }
    let lift_check = CheckResult {
        name: "reduced-words-lift".to_string(),
        w: lift_witness,
        regime: "right-angled".to_string(),
        size: words_checked,
        components: 1,
        pass: lift_pass,
    };

    let image_set: BTreeSet<u32> = images.iter().map(|ti| ti.element().index()).collect();
    let involutions = twist.enumerate_involutions(Some(length_bound as u32), cap)?;
    let involution_set: BTreeSet<u32> =
        involutions.iter().map(|ti| ti.element().index()).collect();
    let bijection_pass = image_set.len() == elements.len() && image_set == involution_set;
    let bijection_check = CheckResult {
        name: "bijection".to_string(),
        w: Vec::new(),
        regime: "right-angled".to_string(),
        size: elements.len(),
        components: 1,
        pass: bijection_pass,
    };

    let mut order_pass = true;
    let mut order_witness: Word = Vec::new();
    let mut pairs = 0usize;
    for (i, &u) in elements.iter().enumerate() {
        for (j, &w) in elements.iter().enumerate() {
            pairs += 1;
            let plain = bruhat_le(sys, u, w);
            let lifted = twist.bruhat_le_twisted(&images[i], &images[j]);
            if plain != lifted {
                if order_pass {
                    order_witness = sys.word(u);
                }
                order_pass = false;
            }
        }
    }
    let order_check = CheckResult {
        name: "order-isomorphism".to_string(),
        w: order_witness,
        regime: "right-angled".to_string(),
        size: pairs,
        components: 1,
        pass: order_pass,
    };

    Ok(report(
        twist,
        "right-angled",
        vec![lift_check, bijection_check, order_check],
    ))
}
