use crate::matrix::Generator;
use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid diagram automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("generator index {found} out of range for rank {rank}")]
    GeneratorOutOfRange { found: usize, rank: usize },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("word is not reduced")]
    NonReduced,

    #[error("element is not a twisted involution")]
    NotTwisted,

    #[error("s{} is not a descent", index_1based(*.0))]
    NotDescent(Generator),

    #[error("pair (s{}, s{}) must be distinct", index_1based(*.0), index_1based(*.1))]
    InvalidPair(Generator, Generator),

    #[error("parabolic subgroup on {{{}}} is infinite", fmt_set(.0))]
    NotFinite(Vec<Generator>),

    #[error("bond m(s{}, s{}) is infinite", index_1based(*.0), index_1based(*.1))]
    InfiniteBond(Generator, Generator),

    #[error("expressions evaluate to different elements")]
    DifferentElement,

    #[error("hypothesis violated by parabolic {{{}}}: {reason}", fmt_set(.subset))]
    HypothesisViolated {
        subset: Vec<Generator>,
        reason: String,
    },

    #[error("system is not right-angled: bond m(s{}, s{}) = {m}", index_1based(*.s), index_1based(*.t))]
    NotRightAngled { s: Generator, t: Generator, m: u32 },

    #[error("twist must be the identity for this operation")]
    NotIdentityTwist,

    #[error("enumeration exceeded cap of {0} vertices")]
    CapExceeded(usize),
}

fn index_1based(g: Generator) -> usize {
    g as usize + 1
}

fn fmt_set(set: &[Generator]) -> String {
    let names: Vec<String> = set.iter().map(|&g| format!("s{}", g as usize + 1)).collect();
    names.join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
