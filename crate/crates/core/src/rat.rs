//! Exact rational scalar type and its `"p/q"` string form.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::Error;

/// The scalar used everywhere in this crate. All coordinates stay tiny at
/// desk scale, so a machine-word ratio is plenty; `Ratio` keeps itself
/// gcd-reduced with a positive denominator.
pub type Rat = Ratio<i64>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Canonical string form `p/q` with `q > 0` and gcd-reduced, e.g. `-3/2`, `5/1`.
pub fn to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse(s: &str) -> Result<Rat, Error> {
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        None => s
            .trim()
            .parse::<i64>()
            .map(Rat::from_integer)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q <= 0 {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Largest integer `<= r` (Euclidean semantics for negatives).
pub fn floor(r: &Rat) -> i64 {
    r.floor().to_integer()
}

/// Smallest integer `>= r`.
pub fn ceil(r: &Rat) -> i64 {
    r.ceil().to_integer()
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom() == &1
}

/// Exact integer value; panics on a non-integral input.
pub fn as_integer(r: &Rat) -> i64 {
    assert!(is_integer(r), "expected integer, got {}", r);
    *r.numer()
}

pub fn is_nonnegative(r: &Rat) -> bool {
    !r.is_negative() || r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for s in ["0/1", "-3/2", "5/1", "7/3"] {
            let r = parse(s).unwrap();
            assert_eq!(to_string(&r), s);
        }
        assert_eq!(parse("4").unwrap(), rat(4));
        assert_eq!(parse("6/4").unwrap(), Rat::new(3, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("1/0").is_err());
        assert!(parse("1/-2").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn euclidean_floor_ceil() {
        assert_eq!(floor(&Rat::new(-1, 2)), -1);
        assert_eq!(ceil(&Rat::new(-1, 2)), 0);
        assert_eq!(floor(&Rat::new(-3, 2)), -2);
        assert_eq!(ceil(&Rat::new(-3, 2)), -1);
        assert_eq!(floor(&rat(2)), 2);
        assert_eq!(ceil(&rat(2)), 2);
    }
}
