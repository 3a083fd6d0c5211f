//! Pair-maximality of twisted involutions and the graph it induces on the
//! descent set.
//!
//! For distinct right descents s, s' of a twisted involution w with finite
//! bond m(s,s'), w is (s,s')-maximal when some reduced monoid expression for
//! w ends with an alternating run in s, s' of the full length m(s,s'). The
//! closed-form test avoids enumerating expressions:
//!
//!   m = 2:  maximal iff ws != theta(s') w,
//!   m >= 3: maximal iff {ws, ws'} != {theta(s) w, theta(s') w}.
//!
//! The graph on the descent set with these pairs as edges is connected for
//! most w; the disconnected cases form six families, each splitting into
//! exactly two components, and they are what makes extra moves beyond braid
//! moves necessary.

use crate::error::{Error, Result};
use crate::matrix::{Bond, Generator, Word};
use crate::system::{Element, Side};
use crate::twist::{Twist, TwistedInvolution};
use serde_json::json;

/// Graph on the right descent set of `owner` whose edges are the maximal
/// pairs.
#[derive(Clone, Debug)]
pub struct MaximalityGraph {
    owner: TwistedInvolution,
    vertices: Word,
    edges: Vec<(Generator, Generator)>,
}

impl MaximalityGraph {
    pub fn owner(&self) -> &TwistedInvolution {
        &self.owner
    }

    /// Sorted descent set.
    pub fn vertices(&self) -> &[Generator] {
        &self.vertices
    }

    /// Sorted pairs (s, s') with s < s'.
    pub fn edges(&self) -> &[(Generator, Generator)] {
        &self.edges
    }

    pub fn is_edge(&self, s: Generator, t: Generator) -> bool {
        let pair = (s.min(t), s.max(t));
        self.edges.binary_search(&pair).is_ok()
    }

    /// Connected components ordered by smallest member, each sorted. The
    /// empty graph has no components.
    pub fn connected_components(&self) -> Vec<Word> {
        let mut remaining: Vec<Generator> = self.vertices.clone();
        let mut components = Vec::new();
        while let Some(&seed) = remaining.first() {
            let mut component = vec![seed];
            let mut frontier = vec![seed];
            remaining.retain(|&g| g != seed);
            while let Some(g) = frontier.pop() {
                let adjacent: Vec<Generator> = remaining
                    .iter()
                    .copied()
                    .filter(|&h| self.is_edge(g, h))
                    .collect();
                for h in adjacent {
                    remaining.retain(|&x| x != h);
                    component.push(h);
                    frontier.push(h);
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// DOT rendering with 1-based vertex labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph maximality {\n");
        for &s in &self.vertices {
            out.push_str(&format!("  \"s{}\";\n", s as usize + 1));
        }
        for &(s, t) in &self.edges {
            out.push_str(&format!(
                "  \"s{}\" -- \"s{}\";\n",
                s as usize + 1,
                t as usize + 1
            ));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering with 1-based vertices.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<usize> = self.vertices.iter().map(|&s| s as usize + 1).collect();
        let edges: Vec<[usize; 2]> = self
            .edges
            .iter()
            .map(|&(s, t)| [s as usize + 1, t as usize + 1])
            .collect();
        json!({ "vertices": vertices, "edges": edges })
    }
}

fn validate_pair(
    twist: &Twist<'_>,
    w: &TwistedInvolution,
    s: Generator,
    t: Generator,
) -> Result<u32> {
    if s == t {
        return Err(Error::InvalidPair(s, t));
    }
    // The bond is checked first: maximality with an unbounded run length is
    // undefined, descents or not.
    let m = match twist.system().matrix().bond(s, t) {
        Bond::Finite(m) => m,
        Bond::Infinite => return Err(Error::InfiniteBond(s, t)),
    };
    for g in [s, t] {
        if !twist.system().is_right_descent(w.element(), g) {
            return Err(Error::NotDescent(g));
        }
    }
    Ok(m)
}

/// Closed-form maximality test for a pair of descents.
pub fn is_maximal(
    twist: &Twist<'_>,
    w: &TwistedInvolution,
    s: Generator,
    t: Generator,
) -> Result<bool> {
    let m = validate_pair(twist, w, s, t)?;
    let sys = twist.system();
    let e = w.element();
    let ws = sys.mult(e, s, Side::Right);
    let wt = sys.mult(e, t, Side::Right);
    let sw = sys.mult(e, twist.theta().apply(s), Side::Left);
    let tw = sys.mult(e, twist.theta().apply(t), Side::Left);
    if m == 2 {
        Ok(ws != tw)
    } else {
        let same = (ws == sw && wt == tw) || (ws == tw && wt == sw);
        Ok(!same)
    }
}

/// Definitional test: scan all reduced monoid expressions for an alternating
/// {s, t} suffix of the full bond length.
pub fn is_maximal_oracle(
    twist: &Twist<'_>,
    w: &TwistedInvolution,
    s: Generator,
    t: Generator,
) -> Result<bool> {
    let m = validate_pair(twist, w, s, t)?;
    for expr in twist.reduced_expressions(w) {
        let run = expr
            .iter()
            .rev()
            .take_while(|&&g| g == s || g == t)
            .count();
        // A reduced expression cannot end with a run longer than the bond.
        if run == m as usize {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The maximality graph of w on its descent set.
pub fn maximality_graph(twist: &Twist<'_>, w: &TwistedInvolution) -> Result<MaximalityGraph> {
    let vertices = twist.descents(w);
    let mut edges = Vec::new();
    for (i, &s) in vertices.iter().enumerate() {
        for &t in &vertices[i + 1..] {
            if is_maximal(twist, w, s, t)? {
                edges.push((s, t));
            }
        }
    }
    edges.sort_unstable();
    Ok(MaximalityGraph {
        owner: *w,
        vertices,
        edges,
    })
}

/// Longest element of the standard parabolic generated by the support of w,
/// when that parabolic is finite.
fn is_longest_of_support(twist: &Twist<'_>, w: Element) -> bool {
    let sys = twist.system();
    let support = crate::words::support(sys, w);
    match crate::classify::longest_element(sys, &support) {
        Ok(w0) => w0 == w,
        Err(_) => false,
    }
}

/// Structure underlying every disconnected graph: w is the longest element
/// of its support parabolic and its descent set is its whole support.
pub fn check_disconnected_shape(twist: &Twist<'_>, w: &TwistedInvolution) -> bool {
    let sys = twist.system();
    let support = crate::words::support(sys, w.element());
    let descents = twist.descents(w);
    descents == support && is_longest_of_support(twist, w.element())
}
