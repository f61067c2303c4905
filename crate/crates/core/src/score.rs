//! Scalar abstraction for treasure values and running scores.
//!
//! Outcomes are decided by sign tests against zero, so only exact ordered
//! types qualify: machine integers, big integers and rationals all do.
//! Floats are deliberately excluded (no `Ord`/`Hash`).

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed};

/// An exact, totally ordered signed number usable as a treasure value.
pub trait Score:
    Signed + FromPrimitive + Clone + Ord + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
}

impl<T> Score for T where
    T: Signed
        + FromPrimitive
        + Clone
        + Ord
        + Hash
        + Debug
        + Display
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Three-way sign of a score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<S: Score>(value: &S) -> Sign {
        if value.is_positive() {
            Sign::Positive
        } else if value.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

impl Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Negative => "<0",
            Sign::Zero => "=0",
            Sign::Positive => ">0",
        })
    }
}

/// Formats a score delta with an explicit sign, e.g. `+4`, `-3`, `+0`.
pub(crate) fn signed<S: Score>(value: &S) -> String {
    if value.is_negative() {
        format!("{value}")
    } else {
        format!("+{value}")
    }
}
