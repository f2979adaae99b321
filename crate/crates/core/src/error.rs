use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("inconsistent characteristic numbers: chi={chi}, tau={tau}, c1sq={c1sq} violate tau = (c1sq - 2 chi)/3")]
    InconsistentSignature { chi: i64, tau: i64, c1sq: i64 },

    #[error("cusp Euler number must be positive, got {0}")]
    NonPositiveCusp(i64),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("plane basis is not of rank 2")]
    DegeneratePlane,

    #[error("plane is not primitive in the ambient lattice; it cannot be the homology of an embedded subtorus")]
    NotPrimitive,

    #[error("planes are not transverse (they share a nonzero rational vector)")]
    NotTransverse,

    #[error("vector is not in the lattice")]
    NotInLattice,

    #[error("lattice is not of full rank 4")]
    NotFullRank,

    #[error("invalid modulus {0}: must be at least 2")]
    BadModulus(i64),

    #[error("{0} is not prime")]
    NotPrime(i64),

    #[error("covector is not surjective onto Z/{0}")]
    NotSurjective(i64),

    #[error("plane {0} does not reduce to a 2-plane modulo {1}")]
    DegenerateModP(usize, i64),

    #[error("no cover found modulo {0}")]
    NoCoverFound(i64),

    #[error("preimage of curve {0} is disconnected")]
    DisconnectedPreimage(String),

    #[error("curves {0} and {1} coincide")]
    CoincidentCurves(String, String),

    #[error("unknown incidence point {0}")]
    UnknownPoint(String),

    #[error("divisor curve {0} is not elliptic")]
    NonEllipticDivisor(String),

    #[error("divisor curve {0} has non-negative self-intersection")]
    NonNegativeSelfIntersection(String),

    #[error("divisor curves are not pairwise disjoint")]
    CurvesNotDisjoint,

    #[error("pair has no c1^2 recorded")]
    MissingC1Squared,

    #[error("bad cusp index {0}")]
    BadIndex(usize),

    #[error("cusp selection matches no cusp")]
    EmptySelection,

    #[error("verdict was not produced from this manifold")]
    InconsistentVerdict,

    #[error("internal verification failed: {0}")]
    Verification(String),
}
