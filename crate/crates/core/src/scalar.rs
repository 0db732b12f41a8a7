//! The scalar abstraction: anything numeric enough to carry the linear
//! algebra. Exact work uses [`Rat`](crate::Rat); `f32`/`f64` satisfy the
//! same bounds for approximate experiments.

use std::fmt::{Debug, Display};

use num_traits::{Num, Signed};

use crate::error::{Error, Result};

/// Field-like scalars: cloneable, comparable, printable, with ring
/// operations, signs, and exact zero/one. Implemented automatically for
/// every qualifying type, in particular `BigRational`, `f32`, and `f64`.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Signed + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Display + Num + Signed + Send + Sync + 'static
{
}

/// Parse an exact rational from `"p/q"` or integer notation.
pub fn parse_rat(s: &str) -> Result<crate::Rat> {
    s.parse()
        .map_err(|e| Error::invalid(format!("bad rational {s:?}: {e}")))
}

/// Render an exact rational as `"p/q"`, or just `"p"` when the denominator
/// is one — the inverse of [`parse_rat`] on canonical values.
pub fn format_rat(x: &crate::Rat) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rat("3").unwrap(), Rat::from_integer(3.into()));
        assert_eq!(
            parse_rat("-4/6").unwrap(),
            Rat::new((-2).into(), 3.into())
        );
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a").is_err());
        assert!(parse_rat("0.5").is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["0", "7", "-3", "1/2", "-22/7"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
    }
}
