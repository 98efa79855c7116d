//! Dense univariate polynomials over a [`Field`], stored low degree first.
//! The zero polynomial is the empty vector.

use super::field::Field;

pub fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn eval<F: Field>(p: &[F], x: &F) -> F {
    p.iter().rev().fold(F::zero(), |acc, c| acc.times(x).plus(c))
}

pub fn mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j].fma_assign(x, y);
        }
    }
    trim(out)
}

pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let z = F::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z).minus(b.get(i).unwrap_or(&z))).collect())
}

pub fn derivative<F: Field>(p: &[F]) -> Vec<F> {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c.times(&F::from_i64(i as i64))).collect())
}

/// Quotient and remainder; panics on division by the zero polynomial.
pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().unwrap().recip().unwrap();
    let mut q = vec![F::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let coef = r.last().unwrap().times(&lead_inv);
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].minus(&coef.times(c));
        }
        q[shift] = coef;
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic<F: Field>(p: Vec<F>) -> Vec<F> {
    match p.last() {
        None => p,
        Some(l) => {
            let inv = l.recip().unwrap();
            p.iter().map(|c| c.times(&inv)).collect()
        }
    }
}

pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

/// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g` and `g` monic.
pub fn xgcd<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>, Vec<F>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![F::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![F::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = r0.last().map(|l| l.recip().unwrap()).unwrap_or_else(F::one);
    let scale = |p: Vec<F>| trim(p.iter().map(|c| c.times(&inv)).collect::<Vec<_>>());
    (scale(r0), scale(s0), scale(t0))
}

/// `p / gcd(p, p')`, made monic.
pub fn squarefree<F: Field>(p: &[F]) -> Vec<F> {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return monic(p);
    }
    let g = gcd(&p, &derivative(&p));
    monic(divrem(&p, &g).0)
}
