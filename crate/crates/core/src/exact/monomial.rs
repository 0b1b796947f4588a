use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{FormalSeries, Rational};
use crate::error::{QError, Result};

/// An exact parameter `coeff · q^power`.
///
/// Products and quotients of monomials stay monomials, which lets identity
/// evaluators form expressions such as `q/(d·u)` before committing to a
/// power series. Only monomials with `power >= 0` can be lifted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Rational,
    pub power: i64,
}

impl Monomial {
    pub fn new(coeff: Rational, power: i64) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            Self { coeff, power }
        }
    }

    pub fn constant(coeff: Rational) -> Self {
        Self::new(coeff, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self {
            coeff: Rational::zero(),
            power: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(QError::Domain(format!("division of {self} by zero")));
        }
        Ok(Self::new(&self.coeff / &other.coeff, self.power - other.power))
    }

    pub fn powi(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return Self::int(1).try_div(&self.powi(-n)?);
        }
        let mut coeff = Rational::one();
        for _ in 0..n {
            coeff *= &self.coeff;
        }
        Ok(Self::new(coeff, self.power * n))
    }

    /// Expands into a series of the given order.
    pub fn to_series(&self, order: usize) -> Result<FormalSeries> {
        if self.is_zero() {
            return Ok(FormalSeries::zero(order));
        }
        if self.power < 0 {
            return Err(QError::Domain(format!(
                "{self} has a negative power of q and is not a power series"
            )));
        }
        Ok(FormalSeries::monomial(self.coeff.clone(), self.power as usize, order))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.coeff * rhs.coeff, self.power + rhs.power)
    }
}

impl Neg for Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        Monomial::new(-self.coeff, self.power)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.coeff),
            p => {
                if self.coeff == -Rational::one() {
                    write!(f, "-")?;
                } else if !self.coeff.is_one() {
                    write!(f, "{}*", self.coeff)?;
                }
                if p == 1 {
                    write!(f, "q")
                } else {
                    write!(f, "q^{p}")
                }
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || QError::Domain(format!("cannot parse rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// Accepts `3/2`, `-q`, `q^2`, `1/5*q`, `-2*q^3`.
impl FromStr for Monomial {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || QError::Domain(format!("cannot parse monomial '{s}'"));
        let (coeff_part, q_part) = match s.find('q') {
            None => (s, None),
            Some(i) => (s[..i].trim_end_matches('*').trim(), Some(&s[i + 1..])),
        };
        let coeff = match coeff_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            c => parse_rational(c)?,
        };
        let power = match q_part {
            None => 0,
            Some("") => 1,
            Some(rest) => rest
                .strip_prefix('^')
                .ok_or_else(bad)?
                .trim()
                .parse::<i64>()
                .map_err(|_| bad())?,
        };
        Ok(Monomial::new(coeff, power))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn parse_forms() {
        assert_eq!("3/2".parse::<Monomial>().unwrap(), Monomial::constant(rat(3, 2)));
        assert_eq!("-q".parse::<Monomial>().unwrap(), Monomial::new(rat(-1, 1), 1));
        assert_eq!("1/5*q".parse::<Monomial>().unwrap(), Monomial::new(rat(1, 5), 1));
        assert_eq!("-2*q^3".parse::<Monomial>().unwrap(), Monomial::new(rat(-2, 1), 3));
        assert_eq!("q^2".parse::<Monomial>().unwrap(), Monomial::new(rat(1, 1), 2));
        assert!("2*x".parse::<Monomial>().is_err());
        assert!("1/0".parse::<Monomial>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["3/2", "-q", "1/5*q", "-2*q^3", "q^2", "0"] {
            let m: Monomial = s.parse().unwrap();
            assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
        }
    }

    #[test]
    fn quotient_tracks_powers() {
        let q = Monomial::new(rat(1, 1), 1);
        let d = Monomial::new(rat(1, 5), 1);
        let u = Monomial::int(2);
        let r = q.try_div(&(d * u)).unwrap();
        assert_eq!(r, Monomial::constant(rat(5, 2)));
        assert!(Monomial::int(1).try_div(&Monomial::zero()).is_err());
    }

    #[test]
    fn negative_power_does_not_lift() {
        let m = Monomial::new(rat(1, 1), -1);
        assert!(m.to_series(4).is_err());
        let m = Monomial::new(rat(2, 1), 6);
        assert_eq!(m.to_series(4).unwrap(), FormalSeries::zero(4));
    }
}
