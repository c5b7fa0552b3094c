use thiserror::Error;

/// Errors reported by the toolkit.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("generator degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group closure exceeded the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("subgroup lattice requires |G| = {order} <= cap {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },

    #[error("character table requires |G| = {order} <= cap {cap}")]
    ChartableCapExceeded { order: usize, cap: usize },

    #[error("no prime q = 1 (mod {modulus}) with q > {floor} found below {bound}")]
    NoSplittingPrime { modulus: u64, floor: u64, bound: u64 },

    #[error("mark vector is not {primes}-local: coefficient {value} at class {class}")]
    NotPLocal {
        primes: String,
        class: usize,
        value: String,
    },

    #[error("subgroup class {class} is not {primes}-perfect")]
    NotPPerfect { primes: String, class: usize },

    #[error("class function has non-integer values")]
    NonIntegerValues,

    #[error("support of size {size} exceeds the subset-search cap of {cap}")]
    SubsetSearchCapExceeded { size: usize, cap: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown class label `{label}`; available: {available}")]
    UnknownLabel { label: String, available: String },

    #[error("unknown builtin group `{name}`")]
    UnknownBuiltin { name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
