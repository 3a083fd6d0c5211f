//! Finite-type recognition for parabolic subgroups and longest elements.
//!
//! A standard parabolic is finite exactly when every connected component of
//! its induced diagram matches one of the finite reference diagrams. The
//! match also yields the relabeling onto the reference, which is what move
//! instantiation needs.

use crate::error::{Error, Result};
use crate::matrix::{Bond, CoxeterMatrix, Generator, Word};
use crate::system::{CoxeterSystem, Element, Side};

/// Irreducible finite types, under the conventions that the rank-two types
/// other than A2 report as I2(m) and that the smallest D type is D4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl FiniteType {
    pub fn rank(&self) -> usize {
        match *self {
            FiniteType::A(n) => n,
            FiniteType::B(n) => n,
            FiniteType::D(n) => n,
            FiniteType::E(n) => n,
            FiniteType::F4 => 4,
            FiniteType::H(n) => n,
            FiniteType::I2(_) => 2,
        }
    }

    /// Number of positive roots, which equals the length of the longest
    /// element.
    pub fn positive_roots(&self) -> usize {
        match *self {
            FiniteType::A(n) => n * (n + 1) / 2,
            FiniteType::B(n) => n * n,
            FiniteType::D(n) => n * (n - 1),
            FiniteType::E(6) => 36,
            FiniteType::E(7) => 63,
            FiniteType::E(8) => 120,
            FiniteType::E(_) => unreachable!("only E6, E7, E8 exist"),
            FiniteType::F4 => 24,
            FiniteType::H(3) => 15,
            FiniteType::H(4) => 60,
            FiniteType::H(_) => unreachable!("only H3 and H4 exist"),
            FiniteType::I2(m) => m as usize,
        }
    }

    pub fn reference_matrix(&self) -> CoxeterMatrix {
        match *self {
            FiniteType::A(n) => CoxeterMatrix::type_a(n),
            FiniteType::B(n) => CoxeterMatrix::type_b(n),
            FiniteType::D(n) => CoxeterMatrix::type_d(n),
            FiniteType::E(n) => CoxeterMatrix::type_e(n),
            FiniteType::F4 => CoxeterMatrix::type_f4(),
            FiniteType::H(n) => CoxeterMatrix::type_h(n),
            FiniteType::I2(m) => CoxeterMatrix::type_i2(m),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            FiniteType::A(n) => format!("A{n}"),
            FiniteType::B(n) => format!("B{n}"),
            FiniteType::D(n) => format!("D{n}"),
            FiniteType::E(n) => format!("E{n}"),
            FiniteType::F4 => "F4".to_string(),
            FiniteType::H(n) => format!("H{n}"),
            FiniteType::I2(m) => format!("I2({m})"),
        }
    }
}

/// A classified connected component: its type and the lex-smallest embedding
/// sending reference index i to `embedding[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentType {
    pub finite_type: FiniteType,
    pub embedding: Vec<Generator>,
}

/// Connected components of the diagram induced on `subset`, each sorted,
/// ordered by smallest member.
pub fn connected_components(matrix: &CoxeterMatrix, subset: &[Generator]) -> Vec<Vec<Generator>> {
    let mut remaining: Vec<Generator> = subset.to_vec();
    remaining.sort_unstable();
    remaining.dedup();
    let mut components = Vec::new();
    while let Some(&seed) = remaining.first() {
        let mut component = vec![seed];
        let mut frontier = vec![seed];
        remaining.retain(|&g| g != seed);
        while let Some(g) = frontier.pop() {
            let adjacent: Vec<Generator> = remaining
                .iter()
                .copied()
                .filter(|&h| matrix.bond(g, h) != Bond::Finite(2))
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

/// All diagram isomorphisms from `reference` onto the subdiagram of `target`
/// induced on `subset`: maps with image[i] playing the role of reference
/// generator i. Sorted by image sequence.
pub fn diagram_isomorphisms(
    reference: &CoxeterMatrix,
    target: &CoxeterMatrix,
    subset: &[Generator],
) -> Vec<Vec<Generator>> {
    if reference.rank() != subset.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut image: Vec<Generator> = Vec::with_capacity(subset.len());
    let mut used = vec![false; subset.len()];
    extend_isomorphism(reference, target, subset, &mut image, &mut used, &mut out);
    out.sort();
    out
}

fn extend_isomorphism(
    reference: &CoxeterMatrix,
    target: &CoxeterMatrix,
    subset: &[Generator],
    image: &mut Vec<Generator>,
    used: &mut [bool],
    out: &mut Vec<Vec<Generator>>,
) {
    let i = image.len();
    if i == subset.len() {
        out.push(image.clone());
        return;
    }
    for (k, &candidate) in subset.iter().enumerate() {
        if used[k] {
            continue;
        }
        let consistent = (0..i).all(|j| {
            reference.bond(i as Generator, j as Generator) == target.bond(candidate, image[j])
        });
        if consistent {
            used[k] = true;
            image.push(candidate);
            extend_isomorphism(reference, target, subset, image, used, out);
            image.pop();
            used[k] = false;
        }
    }
}

fn candidate_types(matrix: &CoxeterMatrix, component: &[Generator]) -> Vec<FiniteType> {
    match component.len() {
        0 => Vec::new(),
        1 => vec![FiniteType::A(1)],
        2 => match matrix.bond(component[0], component[1]) {
            Bond::Finite(3) => vec![FiniteType::A(2)],
            Bond::Finite(m) => vec![FiniteType::I2(m)],
            Bond::Infinite => Vec::new(),
        },
        3 => vec![FiniteType::A(3), FiniteType::B(3), FiniteType::H(3)],
        4 => vec![
            FiniteType::A(4),
            FiniteType::B(4),
            FiniteType::D(4),
            FiniteType::F4,
            FiniteType::H(4),
        ],
        n @ 5 => vec![FiniteType::A(n), FiniteType::B(n), FiniteType::D(n)],
        n @ 6..=8 => vec![
            FiniteType::A(n),
            FiniteType::B(n),
            FiniteType::D(n),
            FiniteType::E(n),
        ],
        n => vec![FiniteType::A(n), FiniteType::B(n), FiniteType::D(n)],
    }
}

/// Classify one connected component; None when it is not of finite type.
pub fn classify_component(matrix: &CoxeterMatrix, component: &[Generator]) -> Option<ComponentType> {
    for finite_type in candidate_types(matrix, component) {
        let isos = diagram_isomorphisms(&finite_type.reference_matrix(), matrix, component);
        if let Some(embedding) = isos.into_iter().next() {
            return Some(ComponentType {
                finite_type,
                embedding,
            });
        }
    }
    None
}

/// Classify the standard parabolic on `subset` into irreducible finite
/// factors, ordered by smallest member. Errors with the offending component
/// when any factor is infinite.
pub fn classify_subset(matrix: &CoxeterMatrix, subset: &[Generator]) -> Result<Vec<ComponentType>> {
    let mut out = Vec::new();
    for component in connected_components(matrix, subset) {
        match classify_component(matrix, &component) {
            Some(t) => out.push(t),
            None => return Err(Error::NotFinite(component)),
        }
    }
    Ok(out)
}

pub fn is_finite(matrix: &CoxeterMatrix, subset: &[Generator]) -> bool {
    classify_subset(matrix, subset).is_ok()
}

/// Human-readable type decomposition, e.g. `A3 x I2(5)`.
pub fn decomposition_label(components: &[ComponentType]) -> String {
    if components.is_empty() {
        return "trivial".to_string();
    }
    components
        .iter()
        .map(|c| c.finite_type.label())
        .collect::<Vec<_>>()
        .join(" x ")
}

/// Longest element of the standard parabolic on `subset`, by greedy ascent.
/// Errors when the parabolic is infinite.
pub fn longest_element(sys: &CoxeterSystem, subset: &[Generator]) -> Result<Element> {
    let components = classify_subset(sys.matrix(), subset)?;
    let expected: usize = components
        .iter()
        .map(|c| c.finite_type.positive_roots())
        .sum();
    let mut sorted: Word = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut w = sys.identity();
    'ascend: loop {
        for &s in &sorted {
            if !sys.is_right_descent(w, s) {
                w = sys.mult(w, s, Side::Right);
                continue 'ascend;
            }
        }
        break;
    }
    // The catalogue pins down the length, so a mismatch is a logic error.
    assert_eq!(sys.length(w), expected, "longest element length mismatch");
    Ok(w)
}
