use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Exact complex number with rational parts.
pub type GaussianRational = Complex<BigRational>;

/// `(re_num / re_den) + i (im_num / im_den)`.
pub fn gaussian(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Result<GaussianRational> {
    if re_den == 0 || im_den == 0 {
        return Err(Error::validation("zero denominator in a Gaussian rational"));
    }
    Ok(Complex::new(
        BigRational::new(re_num.into(), re_den.into()),
        BigRational::new(im_num.into(), im_den.into()),
    ))
}

/// Integer real and imaginary parts.
pub fn gaussian_int(re: i64, im: i64) -> GaussianRational {
    Complex::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
}

/// The semi-closed upper half-plane: positive imaginary part, or real and
/// strictly negative.
pub fn in_h(c: &GaussianRational) -> bool {
    in_h_parts(&c.re, &c.im)
}

fn in_h_parts<T: Signed>(re: &T, im: &T) -> bool {
    im.is_positive() || (im.is_zero() && re.is_negative())
}

fn fmt_gaussian(c: &GaussianRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.im.is_zero() {
        write!(f, "{}", c.re)
    } else if c.re.is_zero() {
        write!(f, "{}i", c.im)
    } else if c.im.is_negative() {
        write!(f, "{}-{}i", c.re, -c.im.clone())
    } else {
        write!(f, "{}+{}i", c.re, c.im)
    }
}

/// A point of complex n-space with Gaussian-rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexPoint(pub Vec<GaussianRational>);

impl ComplexPoint {
    pub fn new(coords: Vec<GaussianRational>) -> Self {
        ComplexPoint(coords)
    }

    /// From integer `(re, im)` pairs.
    pub fn from_ints(coords: &[(i64, i64)]) -> Self {
        ComplexPoint(coords.iter().map(|&(r, i)| gaussian_int(r, i)).collect())
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h . z` for an integer covector `h`.
    pub fn pair(&self, h: &[i64]) -> GaussianRational {
        let mut acc = Complex::new(BigRational::zero(), BigRational::zero());
        for (c, &k) in self.0.iter().zip(h) {
            if k != 0 {
                let k = BigRational::from_integer(k.into());
                acc.re += &c.re * &k;
                acc.im += &c.im * &k;
            }
        }
        acc
    }

    /// `m z`.
    pub fn transform(&self, m: &Matrix) -> ComplexPoint {
        ComplexPoint(m.rows().iter().map(|row| self.pair(row)).collect())
    }

    /// `self + t (other - self)`.
    pub fn lerp(&self, other: &ComplexPoint, t: &BigRational) -> ComplexPoint {
        ComplexPoint(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| {
                    Complex::new(&a.re + (&b.re - &a.re) * t, &a.im + (&b.im - &a.im) * t)
                })
                .collect(),
        )
    }

    pub fn all_in_h(&self) -> bool {
        self.0.iter().all(in_h)
    }

    /// The point scaled by a positive integer so that every coordinate is a
    /// Gaussian integer. Scaling by a positive number preserves every
    /// half-plane test.
    pub fn cleared(&self) -> ClearedPoint {
        let mut den = BigInt::one();
        for c in &self.0 {
            den = den.lcm(c.re.denom()).lcm(c.im.denom());
        }
        let scale = |q: &BigRational| q.numer() * (&den / q.denom());
        ClearedPoint {
            re: self.0.iter().map(|c| scale(&c.re)).collect(),
            im: self.0.iter().map(|c| scale(&c.im)).collect(),
        }
    }
}

impl fmt::Display for ComplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            fmt_gaussian(c, f)?;
        }
        f.write_str(")")
    }
}

/// A positive integer multiple of a [`ComplexPoint`], for sign tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClearedPoint {
    pub re: Vec<BigInt>,
    pub im: Vec<BigInt>,
}

impl ClearedPoint {
    /// Whether every coordinate of `m z` lies in the semi-closed upper
    /// half-plane.
    pub fn transform_in_h(&self, m: &Matrix) -> bool {
        m.rows().iter().all(|row| {
            let (re, im) = self.pair(row);
            in_h_parts(&re, &im)
        })
    }

    pub fn pair(&self, h: &[i64]) -> (BigInt, BigInt) {
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for (k, &c) in h.iter().enumerate() {
            if c != 0 {
                re += &self.re[k] * c;
                im += &self.im[k] * c;
            }
        }
        (re, im)
    }
}
