use thiserror::Error;

/// Which partial-order axiom a relation violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl std::fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OrderAxiom::Reflexivity => "reflexivity",
            OrderAxiom::Antisymmetry => "antisymmetry",
            OrderAxiom::Transitivity => "transitivity",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("malformed relation: {0}")]
    Malformed(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("not a partial order: {axiom} fails at {elements:?}")]
    NotAPartialOrder { axiom: OrderAxiom, elements: Vec<String> },

    #[error("not a lattice: `{0}` and `{1}` lack a unique {2}")]
    NotALattice(String, String, &'static str),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("restriction to the empty vertex set")]
    EmptyRestriction,

    #[error("every vertex is a loop")]
    AllLoops,

    #[error("complex has loop vertices {0:?}; take the proper part first")]
    LoopsPresent(Vec<String>),

    #[error("{what}: size {size} exceeds the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("lattice is not atomistic: `{0}` is not a join of atoms")]
    NotAtomistic(String),

    #[error("lattice has height {0}, expected 3")]
    WrongHeight(usize),

    #[error("method `{method}` does not apply: {reason}")]
    MethodNotApplicable { method: &'static str, reason: String },

    #[error("construction mismatch: {0}")]
    ConstructionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size limits for the exhaustive scans.
///
/// The defaults are the documented soft limits; [`Limits::lifted`] raises
/// them to the hard limits imposed by the set representation and memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count for which the `2^|V|` flat scan runs.
    pub flat_vertices: usize,
    /// Largest element count for [`crate::lattice::enumerate_lattices`].
    pub enumeration_size: usize,
}

pub const SOFT_FLAT_VERTICES: usize = 24;
pub const HARD_FLAT_VERTICES: usize = 28;
pub const SOFT_ENUMERATION_SIZE: usize = 7;
pub const HARD_ENUMERATION_SIZE: usize = 8;

/// Environment variable that lifts the soft limits in the command-line tool.
pub const LIMIT_OVERRIDE_VAR: &str = "FLATLAT_LIMIT_OVERRIDE";

impl Default for Limits {
    fn default() -> Self {
        Limits {
            flat_vertices: SOFT_FLAT_VERTICES,
            enumeration_size: SOFT_ENUMERATION_SIZE,
        }
    }
}

impl Limits {
    pub fn lifted() -> Self {
        Limits {
            flat_vertices: HARD_FLAT_VERTICES,
            enumeration_size: HARD_ENUMERATION_SIZE,
        }
    }

    /// Soft limits, unless `FLATLAT_LIMIT_OVERRIDE=1` is set.
    pub fn from_env() -> Self {
        match std::env::var(LIMIT_OVERRIDE_VAR) {
            Ok(v) if v == "1" => Limits::lifted(),
            _ => Limits::default(),
        }
    }

    pub(crate) fn check(what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Error::LimitExceeded { what, size, limit })
        } else {
            Ok(())
        }
    }
}
