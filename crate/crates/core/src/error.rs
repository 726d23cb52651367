use core::fmt;

/// Parameter errors raised by the stream combinators, the triangle model and
/// the identity verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `drop_every` was asked for a period below 2.
    DropPeriod { period: u64 },
    /// A recursive `g` evaluation would need a negative inner sum bound
    /// (`m > n` for `g_{m+1}(.., n)`).
    OutsideStaircase { i: u64, m: u64, x: u64, n: u64 },
    /// A block superscript that must be at least 1 was 0.
    BlockIndex { what: &'static str },
    /// An identity was evaluated at a cell outside its domain.
    Domain {
        identity: &'static str,
        bound: &'static str,
    },
    /// The cell lacks a coordinate the identity quantifies over.
    MissingCoordinate {
        identity: &'static str,
        coordinate: char,
    },
    /// An identity name that is not in the registry.
    UnknownIdentity,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DropPeriod { period } => {
                write!(f, "drop period must be at least 2, got {period}")
            }
            Error::OutsideStaircase { i, m, x, n } => write!(
                f,
                "g(i={i}, m={m}, x={x}, n={n}) is outside the staircase: requires m <= n + 1"
            ),
            Error::BlockIndex { what } => write!(f, "{what} requires block index i >= 1"),
            Error::Domain { identity, bound } => {
                write!(f, "cell outside the domain of {identity}: requires {bound}")
            }
            Error::MissingCoordinate {
                identity,
                coordinate,
            } => write!(f, "{identity} needs coordinate `{coordinate}`"),
            Error::UnknownIdentity => f.write_str("unknown identity id"),
        }
    }
}

impl core::error::Error for Error {}
