//! Small coalgebras for property tests: path coalgebras, matrix coalgebras,
//! duals of block-triangular matrix algebras, and randomized mixtures of
//! these under integer changes of basis.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{Field, Matrix, Rational};

use super::data::{Algebra, CoalgebraData};
use super::validate::validate_coalgebra;

/// Path coalgebra of a quiver, truncated to paths of length ≤ `max_len`.
/// `Δ(p) = Σ_{p = uv} u⊗v`; vertices are group-like.
pub fn path_coalgebra<F: Field>(vertices: usize, arrows: &[(usize, usize)], max_len: usize) -> CoalgebraData<F> {
    // a path is (start, arrow sequence)
    let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..vertices).map(|v| (v, v, Vec::new())).collect();
    let mut frontier = paths.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (s, t, seq) in &frontier {
            for (a, &(from, to)) in arrows.iter().enumerate() {
                if from == *t {
                    let mut seq2 = seq.clone();
                    seq2.push(a);
                    next.push((*s, to, seq2));
                }
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    let index: HashMap<(usize, Vec<usize>), usize> = paths.iter().enumerate().map(|(i, (s, _, seq))| ((*s, seq.clone()), i)).collect();
    let end_of = |s: usize, seq: &[usize]| if seq.is_empty() { s } else { arrows[*seq.last().unwrap()].1 };
    let mut entries = Vec::new();
    for (i, (s, _, seq)) in paths.iter().enumerate() {
        for cut in 0..=seq.len() {
            let left = index[&(*s, seq[..cut].to_vec())];
            let mid = end_of(*s, &seq[..cut]);
            let right = index[&(mid, seq[cut..].to_vec())];
            entries.push((i, left, right, F::one()));
        }
    }
    let counit = paths.iter().map(|(_, _, seq)| if seq.is_empty() { F::one() } else { F::zero() }).collect();
    CoalgebraData::from_entries(paths.len(), entries, counit).expect("path coalgebra shapes")
}

/// Matrix coalgebra `M_d^c` with `Δ(e_{ij}) = Σ_k e_{ik}⊗e_{kj}`.
pub fn matrix_coalgebra<F: Field>(d: usize) -> CoalgebraData<F> {
    let idx = |i: usize, j: usize| i * d + j;
    let entries = (0..d).flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |k| (idx(i, j), idx(i, k), idx(k, j), F::one()))));
    let counit = (0..d * d).map(|p| if p / d == p % d { F::one() } else { F::zero() }).collect();
    CoalgebraData::from_entries(d * d, entries, counit).expect("matrix coalgebra shapes")
}

/// `n` group-like elements.
pub fn group_likes<F: Field>(n: usize) -> CoalgebraData<F> {
    CoalgebraData::from_entries(n, (0..n).map(|i| (i, i, i, F::one())), vec![F::one(); n]).expect("group-like shapes")
}

/// The coalgebra `A*` of a finite-dimensional algebra:
/// `Δ(e^k) = Σ_{a,b} m_{ab}^k e^a⊗e^b`, `ε(e^k) = 1_k`.
pub fn dual_coalgebra<F: Field>(a: &Algebra<F>) -> CoalgebraData<F> {
    let n = a.dim();
    let entries = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .flat_map(|(x, y)| a.product_terms(x, y).map(move |(k, c)| (k, x, y, c.clone())).collect::<Vec<_>>());
    CoalgebraData::from_entries(n, entries, a.unit().to_vec()).expect("dual coalgebra shapes")
}

/// Block upper-triangular matrices with diagonal block sizes `blocks`.
pub fn triangular_algebra<F: Field>(blocks: &[usize]) -> Algebra<F> {
    let size: usize = blocks.iter().sum();
    let block_of: Vec<usize> = blocks.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(b, s)).collect();
    let basis: Vec<(usize, usize)> =
        (0..size).flat_map(|i| (0..size).map(move |j| (i, j))).filter(|&(i, j)| block_of[i] <= block_of[j]).collect();
    let index: HashMap<(usize, usize), usize> = basis.iter().enumerate().map(|(p, &ij)| (ij, p)).collect();
    let mut entries = Vec::new();
    for (p, &(i, j)) in basis.iter().enumerate() {
        for (q, &(k, l)) in basis.iter().enumerate() {
            if j == k {
                entries.push((p, q, index[&(i, l)], F::one()));
            }
        }
    }
    let unit = basis.iter().map(|&(i, j)| if i == j { F::one() } else { F::zero() }).collect();
    Algebra::from_entries(basis.len(), entries, unit).expect("triangular algebra shapes")
}

fn random_base(rng: &mut ChaCha8Rng, max_dim: usize) -> CoalgebraData<Rational> {
    loop {
        let c = match rng.gen_range(0..4) {
            0 | 1 => {
                let v = rng.gen_range(1..=3);
                let arrows: Vec<(usize, usize)> = (0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(0..v), rng.gen_range(0..v))).collect();
                path_coalgebra(v, &arrows, rng.gen_range(1..=3))
            }
            2 => matrix_coalgebra::<Rational>(2).direct_sum(&group_likes(rng.gen_range(0..=2))),
            _ => {
                let v = rng.gen_range(1..=2);
                let arrows: Vec<(usize, usize)> = (0..rng.gen_range(1..=2)).map(|_| (rng.gen_range(0..v), rng.gen_range(0..v))).collect();
                let extra = if rng.gen_bool(0.5) { matrix_coalgebra(1) } else { group_likes(rng.gen_range(1..=2)) };
                path_coalgebra::<Rational>(v, &arrows, 1).direct_sum(&extra)
            }
        };
        if c.dim() <= max_dim {
            return c;
        }
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| Rational::from_i64(rng.gen_range(-2..=2)));
        if m.rank() == n {
            return m;
        }
    }
}

/// `count` random coalgebras of dimension ≤ `max_dim`, each in a random
/// integer basis, kept only if they pass [`validate_coalgebra`].
/// Deterministic in `seed`.
pub fn fuzz_coalgebras(seed: u64, count: usize, max_dim: usize) -> Vec<CoalgebraData<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let base = random_base(&mut rng, max_dim);
        let t = random_invertible(&mut rng, base.dim());
        let c = base.change_basis(&t).expect("invertible");
        if validate_coalgebra(&c).is_valid() {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_valid() {
        let kronecker = path_coalgebra::<Rational>(2, &[(0, 1), (0, 1)], 1);
        assert_eq!(kronecker.dim(), 4);
        assert!(validate_coalgebra(&kronecker).is_valid());
        let loop3 = path_coalgebra::<Rational>(1, &[(0, 0)], 3);
        assert_eq!(loop3.dim(), 4);
        assert!(validate_coalgebra(&loop3).is_valid());
        assert!(validate_coalgebra(&matrix_coalgebra::<Rational>(3)).is_valid());
        assert!(validate_coalgebra(&dual_coalgebra(&triangular_algebra::<Rational>(&[2, 1]))).is_valid());
    }

    #[test]
    fn fuzz_is_deterministic() {
        let a = fuzz_coalgebras(7, 5, 6);
        assert_eq!(a, fuzz_coalgebras(7, 5, 6));
        assert!(a.iter().all(|c| c.dim() <= 6));
    }
}
