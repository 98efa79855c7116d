use std::fmt;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::field::{format_rational, Field, Rational};
use super::poly;
use super::{Matrix, Subspace};

const MAX_ORDER: usize = 64;

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_poly(n: usize) -> &'static [i64] {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    assert!((1..=MAX_ORDER).contains(&n), "cyclotomic order {n} out of range");
    &TABLE.get_or_init(|| {
        let mut table: Vec<Vec<i64>> = vec![Vec::new(); MAX_ORDER + 1];
        for m in 1..=MAX_ORDER {
            let mut p = vec![0i64; m + 1];
            p[0] = -1;
            p[m] = 1;
            for d in (1..m).filter(|d| m % d == 0) {
                p = exact_monic_div(&p, &table[d]);
            }
            table[m] = p;
        }
        table
    })[n]
}

fn exact_monic_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - b.len() + 1];
    for shift in (0..q.len()).rev() {
        let c = r[shift + b.len() - 1];
        q[shift] = c;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= c * bc;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Euler's totient, the degree of Q(ζ_n) over Q.
pub fn totient(n: usize) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// Element of the cyclotomic field Q(ζ_N), stored as coordinates in the power
/// basis `1, ζ, …, ζ^{φ(N)-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<const N: usize> {
    c: Vec<Rational>,
}

impl<const N: usize> Cyclotomic<N> {
    /// The primitive root ζ_N = exp(2πi/N).
    pub fn zeta() -> Self {
        let mut p = vec![Rational::zero(); N + 1];
        p[1] = <Rational as Field>::one();
        Self::reduce(p)
    }

    fn reduce(mut p: Vec<Rational>) -> Self {
        let phi = cyclotomic_poly(N);
        let deg = phi.len() - 1;
        while p.len() > deg {
            let lead = p.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = p.len() - deg;
            for (i, &c) in phi[..deg].iter().enumerate() {
                if c != 0 {
                    p[shift + i] = &p[shift + i] - &lead * Rational::from_integer(c.into());
                }
            }
        }
        p.resize(deg, Rational::zero());
        Cyclotomic { c: p }
    }

    fn to_complex(&self) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / N as f64);
        self.c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, q| acc * z + q.to_f64().unwrap_or(f64::NAN))
    }
}

impl<const N: usize> Field for Cyclotomic<N> {
    fn zero() -> Self {
        Cyclotomic { c: vec![Rational::zero(); totient(N)] }
    }
    fn one() -> Self {
        let mut c = vec![Rational::zero(); totient(N)];
        c[0] = <Rational as Field>::one();
        Cyclotomic { c }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|q| q.is_zero())
    }
    fn plus(&self, other: &Self) -> Self {
        Cyclotomic { c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect() }
    }
    fn minus(&self, other: &Self) -> Self {
        Cyclotomic { c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect() }
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut p = vec![Rational::zero(); self.c.len() + other.c.len()];
        for (i, a) in self.c.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.c.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                p[i + j] += a * b;
            }
        }
        Self::reduce(p)
    }
    fn negate(&self) -> Self {
        Cyclotomic { c: self.c.iter().map(|a| -a).collect() }
    }
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // solve (self * y) = 1 in coordinates
        let d = self.c.len();
        let mut m = Matrix::<Rational>::zeros(d, d);
        for j in 0..d {
            let mut basis = vec![Rational::zero(); d];
            basis[j] = <Rational as Field>::one();
            let col = self.times(&Cyclotomic { c: basis });
            for i in 0..d {
                m.set(i, j, col.c[i].clone());
            }
        }
        let mut rhs = vec![Rational::zero(); d];
        rhs[0] = <Rational as Field>::one();
        m.solve(&rhs).map(|c| Cyclotomic { c })
    }
    fn from_rational(q: &Rational) -> Self {
        let mut c = vec![Rational::zero(); totient(N)];
        c[0] = q.clone();
        Cyclotomic { c }
    }
    fn degree() -> usize {
        totient(N)
    }
    fn cyclotomic_order() -> usize {
        N
    }
    fn coords(&self) -> Vec<Rational> {
        self.c.clone()
    }
    fn from_coords(coords: &[Rational]) -> Option<Self> {
        (coords.len() == totient(N)).then(|| Cyclotomic { c: coords.to_vec() })
    }

    /// Roots are located numerically in the complex embedding ζ ↦ e^{2πi/N},
    /// reconstructed as `a + bζ` with small-denominator rationals, and kept
    /// only if they annihilate the polynomial exactly. Reconstruction needs
    /// φ(N) ≤ 2.
    fn roots(poly_in: &[Self]) -> Vec<Self> {
        let p = poly::squarefree(poly_in);
        if p.len() <= 1 {
            return Vec::new();
        }
        let coeffs: Vec<Complex64> = p.iter().map(|c| c.to_complex()).collect();
        let approx = aberth(&coeffs);
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / N as f64);
        let mut found: Vec<Self> = Vec::new();
        for r in approx {
            let cand = match totient(N) {
                1 => approximate(r.re).map(|a| Self::from_rational(&a)),
                2 => {
                    let b = r.im / z.im;
                    let a = r.re - b * z.re;
                    match (approximate(a), approximate(b)) {
                        (Some(a), Some(b)) => Some(Cyclotomic { c: vec![a, b] }),
                        _ => None,
                    }
                }
                _ => None,
            };
            if let Some(c) = cand {
                if poly::eval(&p, &c).is_zero() && !found.contains(&c) {
                    found.push(c);
                }
            }
        }
        found
    }
}

impl<const N: usize> fmt::Debug for Cyclotomic<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const N: usize> fmt::Display for Cyclotomic<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(i, q)| match i {
                0 => format_rational(q),
                1 => format!("{}*z{N}", format_rational(q)),
                _ => format!("{}*z{N}^{i}", format_rational(q)),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0/1")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Aberth–Ehrlich simultaneous root iteration.
fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    let eval = |x: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            dv = dv * x + v;
            v = v * x + c;
        }
        (v, dv)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, dv) = eval(roots[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (roots[i] - roots[j])).sum();
            let step = ratio / (1.0 - ratio * repulsion);
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-14 {
            break;
        }
    }
    roots
}

/// Best rational approximation with denominator ≤ 10⁶, if it is close.
fn approximate(x: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > 1_000_000 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = v - a;
        if (x - h1 as f64 / k1 as f64).abs() < 1e-9 || frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 || (x - h1 as f64 / k1 as f64).abs() > 1e-6 * (1.0 + x.abs()) {
        return None;
    }
    Some(Rational::new(h1.into(), k1.into()))
}

/// Extends every coordinate of a rational subspace into a cyclotomic field.
pub fn extend_subspace<const N: usize>(s: &Subspace<Rational>) -> Subspace<Cyclotomic<N>> {
    Subspace::span(
        s.ambient_dim(),
        s.basis().iter().map(|v| v.iter().map(Cyclotomic::<N>::from_rational).collect()),
    )
}
