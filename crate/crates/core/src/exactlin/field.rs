use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use super::poly;

/// Arbitrary-precision rational number in canonical form.
pub type Rational = BigRational;

/// An exact scalar field of characteristic zero.
///
/// Implemented by [`Rational`] and by [`Cyclotomic`](super::Cyclotomic)
/// fields. Arithmetic goes through by-reference methods so the hot loops in
/// row reduction do not clone big integers needlessly.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn recip(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;

    /// Degree of the field over the rationals.
    fn degree() -> usize;
    /// `n` when the field is Q(ζ_n); 1 for Q.
    fn cyclotomic_order() -> usize;
    /// Coordinates over Q in the power basis 1, ζ, ζ², …
    fn coords(&self) -> Vec<Rational>;
    fn from_coords(coords: &[Rational]) -> Option<Self>;

    /// Distinct roots lying in the field of a polynomial given low degree first.
    fn roots(poly: &[Self]) -> Vec<Self>;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self += a * b`
    fn fma_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.plus(&a.times(b));
    }

    fn div(&self, other: &Self) -> Self {
        self.times(&other.recip().expect("division by zero"))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

impl Field for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn recip(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(BigRational::recip(self))
        }
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn degree() -> usize {
        1
    }
    fn cyclotomic_order() -> usize {
        1
    }
    fn coords(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
    fn from_coords(coords: &[Rational]) -> Option<Self> {
        match coords {
            [q] => Some(q.clone()),
            _ => None,
        }
    }
    fn roots(poly: &[Self]) -> Vec<Self> {
        rational_roots(poly)
    }
}

/// Formats a rational as `"p/q"`, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, <BigInt as num_traits::One>::one()),
    };
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Exact rational roots: Sturm isolation of the real roots followed by a
/// simplest-fraction search inside each isolating interval.
fn rational_roots(poly: &[Rational]) -> Vec<Rational> {
    let p = poly::trim(poly.to_vec());
    if p.len() <= 1 {
        return Vec::new();
    }
    // clear denominators, make primitive
    let lcm_den = p.iter().fold(<BigInt as num_traits::One>::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm_den.clone())).to_integer()).collect();
    let content = ints.iter().fold(<BigInt as num_traits::Zero>::zero(), |acc, c| acc.gcd(c));
    let ints: Vec<BigInt> = ints.into_iter().map(|c| c / &content).collect();
    let lead = ints.last().unwrap().abs();

    let q: Vec<Rational> = ints.iter().map(|c| Rational::from_integer(c.clone())).collect();
    let sf = poly::squarefree(&q);
    if sf.len() <= 1 {
        return Vec::new();
    }
    let sturm = sturm_sequence(&sf);

    // Cauchy bound
    let an = sf.last().unwrap().abs();
    let bound = sf[..sf.len() - 1].iter().map(|c| c.abs() / &an).fold(Rational::zero(), |a, b| if b > a { b } else { a })
        + Rational::one();
    let lead_sq = Rational::from_integer(&lead * &lead);
    let eps = Rational::one() / (lead_sq * Rational::from_integer(BigInt::from(2)));

    let mut found = Vec::new();
    let lo = -bound.clone();
    let hi = bound;
    let mut stack = vec![(lo.clone(), hi.clone(), sign_changes(&sturm, &lo), sign_changes(&sturm, &hi))];
    while let Some((a, b, va, vb)) = stack.pop() {
        let count = va - vb;
        if count == 0 {
            continue;
        }
        if count == 1 && (&b - &a) < eps {
            for cand in [b.clone(), simplest_between(&a, &b)] {
                if poly::eval(&sf, &cand).is_zero() && !found.contains(&cand) {
                    found.push(cand);
                }
            }
            continue;
        }
        let mid = (&a + &b) / Rational::from_integer(BigInt::from(2));
        let vm = sign_changes(&sturm, &mid);
        stack.push((mid.clone(), b, vm, vb));
        stack.push((a, mid, va, vm));
    }
    found.sort();
    found
}

fn sturm_sequence(p: &[Rational]) -> Vec<Vec<Rational>> {
    let mut seq = vec![p.to_vec(), poly::derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let (_, r) = poly::divrem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.iter().map(|c| -c).collect());
    }
    seq
}

fn sign_changes(seq: &[Vec<Rational>], x: &Rational) -> i64 {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for p in seq {
        let v = poly::eval(p, x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(l) = last {
            if l != pos {
                changes += 1;
            }
        }
        last = Some(pos);
    }
    changes
}

/// Fraction with the smallest denominator in the closed interval `[a, b]`.
fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a <= b);
    if a.is_negative() && b.is_positive() || a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b, &-a);
    }
    let fl = a.floor();
    if fl == *a {
        return fl;
    }
    let next = &fl + Rational::one();
    if next <= *b {
        return next;
    }
    let inner = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4"), Some(q(3, 2)));
        assert_eq!(parse_rational("-7"), Some(q(-7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&q(-3, 1)), "-3/1");
        assert_eq!(format_rational(&q(0, 5)), "0/1");
    }

    #[test]
    fn roots_of_split_and_irreducible() {
        // (x - 1/2)(x + 3)(x^2 + 1)
        let p = poly::mul(
            &poly::mul(&[q(-1, 2), q(1, 1)], &[q(3, 1), q(1, 1)]),
            &[q(1, 1), q(0, 1), q(1, 1)],
        );
        assert_eq!(Rational::roots(&p), vec![q(-3, 1), q(1, 2)]);
        // x^2 - 2 has no rational root
        assert!(Rational::roots(&[q(-2, 1), q(0, 1), q(1, 1)]).is_empty());
    }

    #[test]
    fn roots_with_multiplicity_and_zero() {
        // x^2 (x - 5/3)^3
        let mut p = vec![q(0, 1), q(0, 1), q(1, 1)];
        for _ in 0..3 {
            p = poly::mul(&p, &[q(-5, 3), q(1, 1)]);
        }
        assert_eq!(Rational::roots(&p), vec![q(0, 1), q(5, 3)]);
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&q(3, 10), &q(4, 10)), q(1, 3));
        assert_eq!(simplest_between(&q(-4, 10), &q(-3, 10)), q(-1, 3));
        assert_eq!(simplest_between(&q(7, 2), &q(9, 2)), q(4, 1));
    }
}
