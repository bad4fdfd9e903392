//! Exact scalars, polynomials and linear algebra over `ℚ`.

mod echelon;
mod matrix;
mod monomial;
mod poly;

pub use echelon::{span_dimension, EchelonBasis};
pub use matrix::RationalMatrix;
pub use monomial::{lex_compare, monomials_of_degree, ExponentVector};
pub use poly::{apply_diff, elementary_symmetric, inner_product, PolyRecord, SparsePolynomial, TermRecord};

/// Exact rational scalar. Always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `a!` as an exact rational.
pub fn factorial(a: u32) -> Rational {
    use num_bigint::BigInt;
    let mut acc = BigInt::from(1u32);
    for i in 2..=a {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Falling factorial `b (b-1) ... (b-a+1)`; zero when `a > b`.
pub fn falling_factorial(b: u32, a: u32) -> Rational {
    use num_bigint::BigInt;
    if a > b {
        return Rational::from_integer(BigInt::from(0));
    }
    let mut acc = BigInt::from(1u32);
    for i in (b - a + 1)..=b {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
pub fn parse_rational(text: &str) -> crate::Result<Rational> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    let bad = || crate::Error::InvalidInput(format!("malformed rational {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
