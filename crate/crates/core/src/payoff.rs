use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::error::Error;

/// An exact rational payoff, always kept in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Payoff(Rational64);

impl Payoff {
    pub const ZERO: Payoff = Payoff(Rational64::new_raw(0, 1));
    pub const ONE: Payoff = Payoff(Rational64::new_raw(1, 1));

    pub fn integer(n: i64) -> Self {
        Payoff(Rational64::from_integer(n))
    }

    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Payoff(Rational64::new(numer, denom))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }
}

impl fmt::Display for Payoff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn is_int(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// Accepts `int` or `int/posint`.
impl FromStr for Payoff {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidPayoff(s.to_string());
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        if !is_int(numer) {
            return Err(bad());
        }
        let numer: i64 = numer.parse().map_err(|_| bad())?;
        let denom: i64 = match denom {
            None => 1,
            Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
                d.parse().map_err(|_| bad())?
            }
            Some(_) => return Err(bad()),
        };
        if denom == 0 {
            return Err(bad());
        }
        Ok(Payoff(Rational64::new(numer, denom)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!("3".parse::<Payoff>().unwrap(), Payoff::integer(3));
        assert_eq!("-2/4".parse::<Payoff>().unwrap(), Payoff::new(-1, 2));
        assert_eq!("6/3".parse::<Payoff>().unwrap().to_string(), "2");
        assert_eq!("0/7".parse::<Payoff>().unwrap(), Payoff::ZERO);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1/0", "1/-2", "a", "1.5", "+1", "1/", "/2", "--1", "1/2/3"] {
            assert!(bad.parse::<Payoff>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn ordering_is_exact() {
        let third = Payoff::new(1, 3);
        let almost = Payoff::new(333_333_333, 1_000_000_000);
        assert!(almost < third);
        assert!(Payoff::ZERO < Payoff::ONE);
    }

    proptest! {
        #[test]
        fn print_parse_identity(n in -10_000i64..10_000, d in 1i64..10_000) {
            let p = Payoff::new(n, d);
            let printed = p.to_string();
            let back: Payoff = printed.parse().unwrap();
            prop_assert_eq!(back, p);
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}
