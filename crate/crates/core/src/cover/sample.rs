use num_complex::Complex;
use num_rational::BigRational;
use rand::Rng;

use super::complex::{ComplexPoint, GaussianRational};
use crate::arrangement::Arrangement;

/// Numerators are drawn from `-num..=num`, denominators from `1..=den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleWindow {
    pub num: i64,
    pub den: i64,
}

impl Default for SampleWindow {
    fn default() -> Self {
        SampleWindow { num: 6, den: 4 }
    }
}

fn ratio<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64, den: i64) -> BigRational {
    BigRational::new(rng.gen_range(lo..=hi).into(), rng.gen_range(1..=den).into())
}

pub fn sample_gaussian<R: Rng + ?Sized>(rng: &mut R, w: SampleWindow) -> GaussianRational {
    Complex::new(ratio(rng, -w.num, w.num, w.den), ratio(rng, -w.num, w.num, w.den))
}

/// A point off every complexified hyperplane, by rejection.
pub fn sample_complement_point<R: Rng + ?Sized>(rng: &mut R, arr: &Arrangement, w: SampleWindow) -> ComplexPoint {
    loop {
        let z = ComplexPoint::new((0..arr.rank()).map(|_| sample_gaussian(rng, w)).collect());
        let cz = z.cleared();
        if arr.hyperplanes().iter().all(|h| {
            let (re, im) = cz.pair(h.normal());
            re != 0.into() || im != 0.into()
        }) {
            return z;
        }
    }
}

/// A charge vector with every coordinate in the semi-closed upper
/// half-plane, including the negative real boundary.
pub fn sample_charge<R: Rng + ?Sized>(rng: &mut R, n: usize, w: SampleWindow) -> ComplexPoint {
    ComplexPoint::new(
        (0..n)
            .map(|_| {
                let im = ratio(rng, 0, w.num, w.den);
                let re = if im == BigRational::from_integer(0.into()) {
                    ratio(rng, -w.num, -1, w.den)
                } else {
                    ratio(rng, -w.num, w.num, w.den)
                };
                Complex::new(re, im)
            })
            .collect(),
    )
}
