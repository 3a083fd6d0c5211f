//! Moves on reduced monoid expressions and the graphs they generate.
//!
//! A braid move rewrites a full-bond alternating window anywhere in an
//! expression. An initial move swaps one fixed prefix pair for another; the
//! minimal instances are one prefix pair per stable parabolic of the six
//! families with disconnected maximality graphs, translated from the
//! reference indexing through a twist-intertwining diagram isomorphism.
//! Braid moves plus the minimal instances connect all reduced expressions of
//! any twisted involution, and dropping any one family breaks this.

use crate::classify::{classify_component, connected_components, diagram_isomorphisms, FiniteType};
use crate::error::{Error, Result};
use crate::matrix::{CoxeterMatrix, Generator, Word};
use crate::twist::{Twist, TwistedInvolution};
use crate::words::braid_image;
use serde_json::json;
use std::collections::{HashMap, VecDeque};

/// The six initial-move families, keyed by parabolic type and restricted
/// twist.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MoveTag {
    A3Swap,
    B3,
    D4Id,
    H3,
    I2Id(u32),
    I2Swap(u32),
}

impl MoveTag {
    pub fn label(&self) -> String {
        match *self {
            MoveTag::A3Swap => "A3".to_string(),
            MoveTag::B3 => "B3".to_string(),
            MoveTag::D4Id => "D4".to_string(),
            MoveTag::H3 => "H3".to_string(),
            MoveTag::I2Id(m) => format!("I2({m})-id"),
            MoveTag::I2Swap(m) => format!("I2({m})-swap"),
        }
    }

    /// Half-braid moves are the dihedral family.
    pub fn is_half_braid(&self) -> bool {
        matches!(self, MoveTag::I2Id(_) | MoveTag::I2Swap(_))
    }

    fn reference_type(&self) -> FiniteType {
        match *self {
            MoveTag::A3Swap => FiniteType::A(3),
            MoveTag::B3 => FiniteType::B(3),
            MoveTag::D4Id => FiniteType::D(4),
            MoveTag::H3 => FiniteType::H(3),
            MoveTag::I2Id(m) => FiniteType::I2(m),
            MoveTag::I2Swap(m) => FiniteType::I2(m),
        }
    }

    fn reference_twist(&self) -> Vec<Generator> {
        match *self {
            MoveTag::A3Swap => vec![2, 1, 0],
            MoveTag::B3 => vec![0, 1, 2],
            MoveTag::D4Id => vec![0, 1, 2, 3],
            MoveTag::H3 => vec![0, 1, 2],
            MoveTag::I2Id(_) => vec![0, 1],
            MoveTag::I2Swap(_) => vec![1, 0],
        }
    }

    /// The prefix pair in the reference indexing.
    fn reference_pair(&self) -> (Word, Word) {
        fn alternating(first: Generator, second: Generator, len: usize) -> Word {
            (0..len)
                .map(|i| if i % 2 == 0 { first } else { second })
                .collect()
        }
        match *self {
            MoveTag::A3Swap => (vec![1, 2, 0, 1], vec![1, 2, 1, 0]),
            MoveTag::B3 => (vec![0, 1, 2, 0, 1, 0], vec![0, 1, 2, 1, 0, 1]),
            MoveTag::D4Id => (
                vec![3, 1, 0, 2, 1, 0, 2, 3],
                vec![3, 1, 0, 2, 1, 0, 3, 2],
            ),
            MoveTag::H3 => (
                vec![0, 2, 1, 0, 2, 1, 0, 2, 1],
                vec![0, 2, 1, 0, 2, 1, 0, 1, 2],
            ),
            MoveTag::I2Id(m) => {
                let len = (m as usize + 2) / 2;
                (alternating(0, 1, len), alternating(1, 0, len))
            }
            MoveTag::I2Swap(m) => {
                let len = (m as usize).div_ceil(2);
                (alternating(0, 1, len), alternating(1, 0, len))
            }
        }
    }
}

/// One instantiated prefix swap on a stable parabolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialMove {
    pub tag: MoveTag,
    /// Sorted generators of the parabolic.
    pub support: Word,
    pub source: Word,
    pub target: Word,
}

/// A move regime: braid moves and a chosen set of initial-move instances.
#[derive(Clone, Debug, Default)]
pub struct MoveSet {
    pub braids: bool,
    pub initials: Vec<InitialMove>,
}

impl MoveSet {
    pub fn braid_only() -> Self {
        MoveSet {
            braids: true,
            initials: Vec::new(),
        }
    }

    /// Braid moves plus every minimal instance.
    pub fn full(twist: &Twist<'_>) -> Self {
        MoveSet {
            braids: true,
            initials: minimal_move_instances(twist),
        }
    }

    /// Braid moves plus the dihedral instances only.
    pub fn half_braid(twist: &Twist<'_>) -> Self {
        MoveSet {
            braids: true,
            initials: minimal_move_instances(twist)
                .into_iter()
                .filter(|inst| inst.tag.is_half_braid())
                .collect(),
        }
    }

    /// The full set with one family removed; used to test necessity.
    pub fn without_tag(twist: &Twist<'_>, tag: MoveTag) -> Self {
        MoveSet {
            braids: true,
            initials: minimal_move_instances(twist)
                .into_iter()
                .filter(|inst| inst.tag != tag)
                .collect(),
        }
    }
}

fn is_stable(theta: &crate::matrix::Automorphism, subset: &[Generator]) -> bool {
    subset.iter().all(|&g| subset.contains(&theta.apply(g)))
}

fn restricted_twist_is_identity(
    theta: &crate::matrix::Automorphism,
    subset: &[Generator],
) -> bool {
    subset.iter().all(|&g| theta.apply(g) == g)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current: Word = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Word, out: &mut Vec<Word>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for g in start..n {
            current.push(g as Generator);
            rec(n, k, g + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

fn instantiate(
    twist: &Twist<'_>,
    tag: MoveTag,
    subset: &[Generator],
) -> Option<InitialMove> {
    let reference = tag.reference_type().reference_matrix();
    let reference_twist = tag.reference_twist();
    let embedding = diagram_isomorphisms(&reference, twist.system().matrix(), subset)
        .into_iter()
        .find(|kappa| {
            (0..subset.len()).all(|i| {
                twist.theta().apply(kappa[i]) == kappa[reference_twist[i] as usize]
            })
        })?;
    let (src, tgt) = tag.reference_pair();
    let map = |word: Word| -> Word {
        word.into_iter()
            .map(|i| embedding[i as usize])
            .collect()
    };
    Some(InitialMove {
        tag,
        support: subset.to_vec(),
        source: map(src),
        target: map(tgt),
    })
}

/// One prefix-swap instance per stable parabolic of a listed family, sorted
/// by (support, tag, source). The commuting-pair family with identity twist
/// is excluded: its swap is already a braid move.
pub fn minimal_move_instances(twist: &Twist<'_>) -> Vec<InitialMove> {
    let matrix = twist.system().matrix();
    let theta = twist.theta();
    let n = twist.system().rank();
    let mut out: Vec<InitialMove> = Vec::new();

    for subset in subsets_of_size(n, 2) {
        if !is_stable(theta, &subset) {
            continue;
        }
        let m = match matrix.bond(subset[0], subset[1]) {
            crate::matrix::Bond::Finite(m) => m,
            crate::matrix::Bond::Infinite => continue,
        };
        let tag = if restricted_twist_is_identity(theta, &subset) {
            if m < 3 {
                continue;
            }
            MoveTag::I2Id(m)
        } else {
            MoveTag::I2Swap(m)
        };
        if let Some(inst) = instantiate(twist, tag, &subset) {
            out.push(inst);
        }
    }

    for size in [3usize, 4] {
        for subset in subsets_of_size(n, size) {
            if !is_stable(theta, &subset) {
                continue;
            }
            if connected_components(matrix, &subset).len() != 1 {
                continue;
            }
            let Some(component) = classify_component(matrix, &subset) else {
                continue;
            };
            let identity_twist = restricted_twist_is_identity(theta, &subset);
            let tag = match component.finite_type {
                FiniteType::A(3) if !identity_twist => MoveTag::A3Swap,
                FiniteType::B(3) => MoveTag::B3,
                FiniteType::H(3) => MoveTag::H3,
                FiniteType::D(4) if identity_twist => MoveTag::D4Id,
                _ => continue,
            };
            if let Some(inst) = instantiate(twist, tag, &subset) {
                out.push(inst);
            }
        }
    }

    out.sort_by(|a, b| {
        (a.support.len(), &a.support, &a.tag, &a.source)
            .cmp(&(b.support.len(), &b.support, &b.tag, &b.source))
    });
    out
}

/// How a single move was applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveApplication {
    Braid {
        position: usize,
        pair: (Generator, Generator),
    },
    Initial {
        tag: MoveTag,
        support: Word,
    },
}

impl MoveApplication {
    pub fn describe(&self) -> String {
        match self {
            MoveApplication::Braid { position, pair } => format!(
                "braid (s{}, s{}) at {}",
                pair.0 as usize + 1,
                pair.1 as usize + 1,
                position + 1
            ),
            MoveApplication::Initial { tag, support } => {
                let names: Vec<String> = support
                    .iter()
                    .map(|&g| format!("s{}", g as usize + 1))
                    .collect();
                format!("initial {} on {{{}}}", tag.label(), names.join(", "))
            }
        }
    }

    fn edge_kind(&self) -> EdgeKind {
        match self {
            MoveApplication::Braid { .. } => EdgeKind::Braid,
            MoveApplication::Initial { tag, .. } => {
                if tag.is_half_braid() {
                    EdgeKind::HalfBraid
                } else {
                    EdgeKind::Initial
                }
            }
        }
    }
}

/// All single-move rewrites of a reduced expression. Braid moves apply
/// anywhere; initial moves only to a literal prefix, in either direction.
pub fn applicable_moves(
    twist: &Twist<'_>,
    word: &[Generator],
    moves: &MoveSet,
) -> Result<Vec<(MoveApplication, Word)>> {
    if !twist.is_reduced_expression(word)? {
        return Err(Error::NonReduced);
    }
    let mut out = Vec::new();
    if moves.braids {
        for i in 0..word.len() {
            for j in i + 2..=word.len() {
                if let Some(replacement) = braid_image(twist.system(), &word[i..j]) {
                    let mut rewritten = word.to_vec();
                    rewritten[i..j].copy_from_slice(&replacement);
                    out.push((
                        MoveApplication::Braid {
                            position: i,
                            pair: (word[i], word[i + 1]),
                        },
                        rewritten,
                    ));
                }
            }
        }
    }
    for inst in &moves.initials {
        for (from, to) in [(&inst.source, &inst.target), (&inst.target, &inst.source)] {
            if word.starts_with(from) {
                let mut rewritten = to.clone();
                rewritten.extend_from_slice(&word[from.len()..]);
                out.push((
                    MoveApplication::Initial {
                        tag: inst.tag,
                        support: inst.support.clone(),
                    },
                    rewritten,
                ));
            }
        }
    }
    #[cfg(debug_assertions)]
    {
        let value = twist.eval(word)?;
        for (_, rewritten) in &out {
            debug_assert!(twist.is_reduced_expression(rewritten).unwrap());
            debug_assert_eq!(twist.eval(rewritten).unwrap(), value);
        }
    }
    Ok(out)
}

/// Edge flavor, in the precedence used when several moves join one pair.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeKind {
    Braid,
    HalfBraid,
    Initial,
}

impl EdgeKind {
    pub fn label(&self) -> &'static str {
        match self {
            EdgeKind::Braid => "braid",
            EdgeKind::HalfBraid => "half-braid",
            EdgeKind::Initial => "initial",
        }
    }

    fn dot_style(&self) -> &'static str {
        match self {
            EdgeKind::Braid => "solid",
            EdgeKind::HalfBraid => "dashed",
            EdgeKind::Initial => "dotted",
        }
    }
}

/// The graph on all reduced expressions of one twisted involution under a
/// move regime.
#[derive(Clone, Debug)]
pub struct ExpressionGraph {
    words: Vec<Word>,
    edges: Vec<(usize, usize, EdgeKind)>,
}

impl ExpressionGraph {
    /// Vertices in lexicographic order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Edges (i, j, kind) with i < j, sorted.
    pub fn edges(&self) -> &[(usize, usize, EdgeKind)] {
        &self.edges
    }

    pub fn vertex_index(&self, word: &[Generator]) -> Option<usize> {
        self.words.binary_search_by(|w| w.as_slice().cmp(word)).ok()
    }

    /// Components as sorted vertex-index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.words.len()];
        for &(i, j, _) in &self.edges {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        let mut seen = vec![false; self.words.len()];
        let mut components = Vec::new();
        for start in 0..self.words.len() {
            if seen[start] {
                continue;
            }
            let mut component = vec![start];
            seen[start] = true;
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for &u in &adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        component.push(u);
                        frontier.push(u);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// DOT rendering mirroring the usual legend: braid solid, half-braid
    /// dashed, other initial moves dotted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph expressions {\n");
        for word in &self.words {
            out.push_str(&format!("  \"{}\";\n", crate::words::format_word(word)));
        }
        for &(i, j, kind) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [style={}];\n",
                crate::words::format_word(&self.words[i]),
                crate::words::format_word(&self.words[j]),
                kind.dot_style()
            ));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering with 1-based letters.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<Vec<usize>> = self
            .words
            .iter()
            .map(|w| w.iter().map(|&s| s as usize + 1).collect())
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|&(i, j, kind)| json!([i, j, kind.label()]))
            .collect();
        json!({ "vertices": vertices, "edges": edges })
    }
}

/// Build the expression graph of w. `cap` bounds the number of vertices.
pub fn expression_graph(
    twist: &Twist<'_>,
    w: &TwistedInvolution,
    moves: &MoveSet,
    cap: Option<usize>,
) -> Result<ExpressionGraph> {
    let words = twist.reduced_expressions_bounded(w, cap)?;
    let index: HashMap<&[Generator], usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();
    let mut edges: HashMap<(usize, usize), EdgeKind> = HashMap::new();
    for (i, word) in words.iter().enumerate() {
        for (application, rewritten) in applicable_moves(twist, word, moves)? {
            let j = *index
                .get(rewritten.as_slice())
                .expect("moves stay within the expression set");
            if i == j {
                continue;
            }
            let key = (i.min(j), i.max(j));
            let kind = application.edge_kind();
            edges
                .entry(key)
                .and_modify(|existing| {
                    if kind < *existing {
                        *existing = kind;
                    }
                })
                .or_insert(kind);
        }
    }
    let mut edges: Vec<(usize, usize, EdgeKind)> = edges
        .into_iter()
        .map(|((i, j), kind)| (i, j, kind))
        .collect();
    edges.sort_unstable();
    Ok(ExpressionGraph { words, edges })
}

/// One step of a connecting path: the move taken and the expression it
/// produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub application: MoveApplication,
    pub word: Word,
}

/// Shortest move path between two reduced expressions of the same twisted
/// involution; ties are broken toward the lexicographically smallest word
/// sequence. `Ok(None)` means not connected under this move set.
pub fn connect(
    twist: &Twist<'_>,
    from: &[Generator],
    to: &[Generator],
    moves: &MoveSet,
) -> Result<Option<Vec<PathStep>>> {
    if !twist.is_reduced_expression(from)? || !twist.is_reduced_expression(to)? {
        return Err(Error::NonReduced);
    }
    if twist.eval(from)? != twist.eval(to)? {
        return Err(Error::DifferentElement);
    }
    if from == to {
        return Ok(Some(Vec::new()));
    }
    let dist_from = bfs_distances(twist, from, moves, Some(to))?;
    if !dist_from.contains_key(to) {
        return Ok(None);
    }
    let dist_to = bfs_distances(twist, to, moves, Some(from))?;
    // Walk forward, always into the lex-smallest neighbor that stays on a
    // shortest path.
    let total = dist_from[to];
    let mut current: Word = from.to_vec();
    let mut steps = Vec::with_capacity(total);
    while current.as_slice() != to {
        let remaining = total - dist_from[&current];
        let mut options = applicable_moves(twist, &current, moves)?;
        options.sort_by(|a, b| a.1.cmp(&b.1));
        let (application, next) = options
            .into_iter()
            .find(|(_, next)| {
                dist_to.get(next.as_slice()).copied() == Some(remaining - 1)
            })
            .expect("a shortest path continues through some neighbor");
        steps.push(PathStep {
            application,
            word: next.clone(),
        });
        current = next;
    }
    Ok(Some(steps))
}

/// Breadth-first distances in the expression graph from `start`, exploring
/// only as far as needed when `stop` is given (its whole level is finished
/// for correct forward reconstruction).
fn bfs_distances(
    twist: &Twist<'_>,
    start: &[Generator],
    moves: &MoveSet,
    stop: Option<&[Generator]>,
) -> Result<HashMap<Word, usize>> {
    let mut dist: HashMap<Word, usize> = HashMap::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    dist.insert(start.to_vec(), 0);
    queue.push_back(start.to_vec());
    let mut stop_level: Option<usize> = None;
    while let Some(word) = queue.pop_front() {
        let d = dist[&word];
        if let Some(limit) = stop_level {
            if d >= limit {
                continue;
            }
        }
        for (_, next) in applicable_moves(twist, &word, moves)? {
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                if stop == Some(next.as_slice()) {
                    stop_level = Some(d + 1);
                }
                queue.push_back(next);
            }
        }
    }
    Ok(dist)
}

/// Tag of the family a whole irreducible system belongs to, when its own
/// type and twist are one of the six listed; used to test necessity.
pub fn system_family_tag(twist: &Twist<'_>) -> Option<MoveTag> {
    let matrix: &CoxeterMatrix = twist.system().matrix();
    let all: Word = matrix.generators().collect();
    if connected_components(matrix, &all).len() != 1 && all.len() != 2 {
        return None;
    }
    let identity_twist = twist.theta().is_identity();
    if all.len() == 2 {
        let m = match matrix.bond(0, 1) {
            crate::matrix::Bond::Finite(m) => m,
            crate::matrix::Bond::Infinite => return None,
        };
        return if identity_twist {
            (m >= 3).then_some(MoveTag::I2Id(m))
        } else {
            (m >= 2).then_some(MoveTag::I2Swap(m))
        };
    }
    let component = classify_component(matrix, &all)?;
    match component.finite_type {
        FiniteType::A(3) if !identity_twist => Some(MoveTag::A3Swap),
        FiniteType::B(3) => Some(MoveTag::B3),
        FiniteType::D(4) if identity_twist => Some(MoveTag::D4Id),
        FiniteType::H(3) => Some(MoveTag::H3),
        _ => None,
    }
}
