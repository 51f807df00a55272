use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("generator {0} is smaller than 2")]
    GeneratorTooSmall(i64),
    #[error("{0} is not an element of the monoid")]
    NotAMember(i64),
    #[error("element {0} is negative")]
    NegativeElement(i64),
    #[error("the element must be nonzero")]
    ZeroElement,
    #[error("the monoid has a single generator")]
    SingleGenerator,
    #[error("no prime witness found for {0} within the search bound")]
    WitnessNotFound(i64),
    #[error("{0} lies below the range of the closed form (x >= 92)")]
    BelowFormulaRange(i64),
    #[error("{0} is an exceptional element for the closed form")]
    ExceptionalElement(i64),
}
