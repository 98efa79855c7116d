use crate::coalgebra::{Algebra, CoalgebraData};
use crate::exactlin::{Field, Matrix, Subspace};

use super::adapted_basis;

/// Radical filtration data of `C*` and the dual coradical filtration of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport<F: Field> {
    /// `J, J², …` up to and including the first zero power.
    pub radical_powers: Vec<Subspace<F>>,
    /// `C_0 ⊆ C_1 ⊆ … ⊆ C_length = C`.
    pub coradical_chain: Vec<Subspace<F>>,
    pub length: usize,
    /// Whether `C_1` from duality equals `Δ⁻¹(C⊗C_0 + C_0⊗C)`.
    pub c1_agrees: bool,
}

impl<F: Field> FiltrationReport<F> {
    pub fn radical(&self) -> &Subspace<F> {
        &self.radical_powers[0]
    }

    pub fn coradical(&self) -> &Subspace<F> {
        &self.coradical_chain[0]
    }

    /// `C_n`, with `C_n = C` past the end of the chain.
    pub fn level(&self, n: usize) -> &Subspace<F> {
        &self.coradical_chain[n.min(self.length)]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.coradical_chain.iter().map(Subspace::dim).collect()
    }
}

/// Kernel of the trace form `(x, y) ↦ Tr(L_{xy})`.
pub fn jacobson_radical<F: Field>(a: &Algebra<F>) -> Subspace<F> {
    let n = a.dim();
    // t_k = Tr(L_{e_k}) = Σ_i m_{k,i}^i
    let t: Vec<F> = (0..n)
        .map(|k| {
            let mut acc = F::zero();
            for i in 0..n {
                acc = acc.plus(a.coefficient(k, i, i));
            }
            acc
        })
        .collect();
    let gram = Matrix::from_fn(n, n, |i, j| {
        let mut acc = F::zero();
        for (k, c) in a.product_terms(i, j) {
            acc.fma_assign(c, &t[k]);
        }
        acc
    });
    gram.kernel()
}

/// `J, J², …`, ending with the zero subspace (or a single zero entry when J = 0).
pub fn radical_powers<F: Field>(a: &Algebra<F>, j: &Subspace<F>) -> Vec<Subspace<F>> {
    let n = a.dim();
    let mut powers = vec![j.clone()];
    while !powers.last().unwrap().is_zero() {
        let last = powers.last().unwrap();
        let next = Subspace::span(n, last.basis().iter().flat_map(|x| j.basis().iter().map(move |y| a.mul(x, y))));
        powers.push(next);
    }
    powers
}

/// `C_n = ann(J^{n+1})`, plus the direct cross-check of `C_1`.
pub fn coradical_filtration<F: Field>(c: &CoalgebraData<F>) -> FiltrationReport<F> {
    let a = c.dual_algebra();
    let j = jacobson_radical(&a);
    let radical_powers = radical_powers(&a, &j);
    let coradical_chain: Vec<Subspace<F>> = radical_powers.iter().map(Subspace::annihilator).collect();
    let length = coradical_chain.len() - 1;
    let c1_agrees = match coradical_chain.get(1) {
        Some(c1) => *c1 == c1_direct(c, &coradical_chain[0]),
        None => c1_direct(c, &coradical_chain[0]) == coradical_chain[0],
    };
    FiltrationReport { radical_powers, coradical_chain, length, c1_agrees }
}

/// `Δ⁻¹(C⊗C_0 + C_0⊗C)`, computed in a basis whose first vectors span `C_0`:
/// there the target space is spanned by the `f_p⊗f_q` with `p` or `q` in
/// the `C_0` part, so membership means the other coefficients vanish.
pub fn c1_direct<F: Field>(c: &CoalgebraData<F>, c0: &Subspace<F>) -> Subspace<F> {
    let n = c.dim();
    let d0 = c0.dim();
    let p = adapted_basis(n, &[c0.basis()]);
    let cp = c.change_basis(&p).expect("adapted basis is invertible");
    let rows: Vec<Vec<F>> = (d0..n)
        .flat_map(|s| (d0..n).map(move |t| (s, t)))
        .map(|(s, t)| (0..n).map(|i| cp.delta(i, s, t).clone()).collect())
        .collect();
    let kernel = if rows.is_empty() { Subspace::full(n) } else { Matrix::from_rows(rows).kernel() };
    from_adapted(&p, &kernel)
}

/// Converts a subspace given in coordinates of the rows of `p` back to the
/// original basis.
pub(crate) fn from_adapted<F: Field>(p: &Matrix<F>, s: &Subspace<F>) -> Subspace<F> {
    let pt = p.transpose();
    Subspace::span(p.cols(), s.basis().iter().map(|y| pt.apply(y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{group_algebra, sweedler, taft, FiniteGroup};
    use crate::exactlin::{Cyclotomic, Rational};

    #[test]
    fn radical_dimensions() {
        let c2 = group_algebra::<Rational>(&FiniteGroup::cyclic(2));
        assert!(jacobson_radical(&c2.coalgebra.dual_algebra()).is_zero());
        assert_eq!(jacobson_radical(&sweedler().coalgebra.dual_algebra()).dim(), 2);
        let t3 = taft(3, &Cyclotomic::<3>::zeta()).unwrap();
        assert_eq!(jacobson_radical(&t3.coalgebra.dual_algebra()).dim(), 6);
    }

    #[test]
    fn filtration_examples() {
        let f = coradical_filtration(&group_algebra::<Rational>(&FiniteGroup::cyclic(3)).coalgebra);
        assert_eq!((f.length, f.dims()), (0, vec![3]));
        assert!(f.c1_agrees);

        let f = coradical_filtration(&sweedler().coalgebra);
        assert_eq!((f.length, f.dims()), (1, vec![2, 4]));
        assert!(f.c1_agrees);

        let f = coradical_filtration(&taft(3, &Cyclotomic::<3>::zeta()).unwrap().coalgebra);
        assert_eq!((f.length, f.dims()), (2, vec![3, 6, 9]));
        assert!(f.c1_agrees);
    }
}
