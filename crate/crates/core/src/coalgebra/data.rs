use crate::exactlin::{Field, Matrix};

use super::StructureError;

/// Coalgebra on the basis `e_0..e_{n-1}` given by structure constants:
/// `Δ(e_i) = Σ_{j,k} c_i^{jk} e_j ⊗ e_k` and `ε(e_i)`.
///
/// Tensors in `C ⊗ C` are coordinate vectors of length `n²`, index `j·n + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData<F> {
    dim: usize,
    delta: Vec<F>,
    counit: Vec<F>,
}

impl<F: Field> CoalgebraData<F> {
    pub fn new(dim: usize, delta: Vec<F>, counit: Vec<F>) -> Result<Self, StructureError> {
        if delta.len() != dim * dim * dim {
            return Err(StructureError::Shape(format!("delta has {} entries, expected {}", delta.len(), dim.pow(3))));
        }
        if counit.len() != dim {
            return Err(StructureError::Shape(format!("counit has {} entries, expected {dim}", counit.len())));
        }
        Ok(CoalgebraData { dim, delta, counit })
    }

    /// Builds from sparse `(i, j, k, c)` entries; repeated entries add up.
    pub fn from_entries<I>(dim: usize, entries: I, counit: Vec<F>) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = (usize, usize, usize, F)>,
    {
        let mut delta = vec![F::zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(StructureError::Shape(format!("delta index ({i}, {j}, {k}) out of range for dim {dim}")));
            }
            let idx = (i * dim + j) * dim + k;
            delta[idx] = delta[idx].plus(&c);
        }
        Self::new(dim, delta, counit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self, i: usize, j: usize, k: usize) -> &F {
        &self.delta[(i * self.dim + j) * self.dim + k]
    }

    pub fn delta_mut(&mut self, i: usize, j: usize, k: usize) -> &mut F {
        let n = self.dim;
        &mut self.delta[(i * n + j) * n + k]
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn counit_mut(&mut self) -> &mut [F] {
        &mut self.counit
    }

    /// Nonzero terms of `Δ(e_i)`.
    pub fn terms(&self, i: usize) -> impl Iterator<Item = (usize, usize, &F)> {
        let n = self.dim;
        self.delta[i * n * n..(i + 1) * n * n]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / n, idx % n, c))
    }

    /// `Δ(v)` as a vector of length `n²`.
    pub fn comultiply(&self, v: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n * n];
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, k, c) in self.terms(i) {
                out[j * n + k].fma_assign(vi, c);
            }
        }
        out
    }

    /// The `n² × n` matrix of Δ.
    pub fn delta_matrix(&self) -> Matrix<F> {
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for (j, k, c) in self.terms(i) {
                m.set(j * n + k, i, c.clone());
            }
        }
        m
    }

    pub fn apply_counit(&self, v: &[F]) -> F {
        let mut acc = F::zero();
        for (a, b) in v.iter().zip(&self.counit) {
            acc.fma_assign(a, b);
        }
        acc
    }

    /// Structure constants in the basis `f_i = Σ_j t[i][j] e_j`; `None` if `t`
    /// is singular.
    pub fn change_basis(&self, t: &Matrix<F>) -> Option<Self> {
        let n = self.dim;
        assert_eq!((t.rows(), t.cols()), (n, n));
        // e_a = Σ_p u[a][p] f_p
        let u = t.inverse()?;
        // image of Δ(e_j) in f⊗f coordinates
        let transformed: Vec<Vec<F>> = (0..n)
            .map(|j| {
                let mut out = vec![F::zero(); n * n];
                for (a, b, c) in self.terms(j) {
                    for p in 0..n {
                        let ua = c.times(u.get(a, p));
                        if ua.is_zero() {
                            continue;
                        }
                        for q in 0..n {
                            out[p * n + q].fma_assign(&ua, u.get(b, q));
                        }
                    }
                }
                out
            })
            .collect();
        let mut delta = vec![F::zero(); n * n * n];
        for i in 0..n {
            for (j, dj) in transformed.iter().enumerate() {
                let tij = t.get(i, j);
                if tij.is_zero() {
                    continue;
                }
                for (pq, x) in dj.iter().enumerate() {
                    delta[i * n * n + pq].fma_assign(tij, x);
                }
            }
        }
        let counit = (0..n).map(|i| self.apply_counit(t.row(i))).collect();
        Some(CoalgebraData { dim: n, delta, counit })
    }

    /// Direct sum, with `other`'s basis placed after `self`'s.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        let n = a + b;
        let mut entries = Vec::new();
        for i in 0..a {
            entries.extend(self.terms(i).map(|(j, k, c)| (i, j, k, c.clone())));
        }
        for i in 0..b {
            entries.extend(other.terms(i).map(|(j, k, c)| (a + i, a + j, a + k, c.clone())));
        }
        let counit = self.counit.iter().chain(&other.counit).cloned().collect();
        Self::from_entries(n, entries, counit).expect("direct sum shape")
    }

    /// The convolution algebra `C*` on the dual basis:
    /// `e^a * e^b = Σ_k c_k^{ab} e^k`, unit `ε`.
    pub fn dual_algebra(&self) -> Algebra<F> {
        let n = self.dim;
        let mut mult = vec![F::zero(); n * n * n];
        for k in 0..n {
            for (a, b, c) in self.terms(k) {
                mult[(a * n + b) * n + k] = c.clone();
            }
        }
        Algebra { dim: n, mult, unit: self.counit.clone() }
    }
}

/// Finite-dimensional unital algebra by structure constants:
/// `e_i e_j = Σ_k m_{ij}^k e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F> {
    dim: usize,
    mult: Vec<F>,
    unit: Vec<F>,
}

/// The convolution algebra of a coalgebra.
pub type DualAlgebra<F> = Algebra<F>;

impl<F: Field> Algebra<F> {
    pub fn new(dim: usize, mult: Vec<F>, unit: Vec<F>) -> Result<Self, StructureError> {
        if mult.len() != dim * dim * dim || unit.len() != dim {
            return Err(StructureError::Shape(format!("algebra tables do not match dim {dim}")));
        }
        Ok(Algebra { dim, mult, unit })
    }

    pub fn from_entries<I>(dim: usize, entries: I, unit: Vec<F>) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = (usize, usize, usize, F)>,
    {
        let mut mult = vec![F::zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(StructureError::Shape(format!("mult index ({i}, {j}, {k}) out of range for dim {dim}")));
            }
            let idx = (i * dim + j) * dim + k;
            mult[idx] = mult[idx].plus(&c);
        }
        Self::new(dim, mult, unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &F {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero terms of `e_i e_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, &F)> {
        let n = self.dim;
        self.mult[(i * n + j) * n..(i * n + j + 1) * n].iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let ab = ai.times(bj);
                for (k, c) in self.product_terms(i, j) {
                    out[k].fma_assign(&ab, c);
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn power(&self, x: &[F], e: usize) -> Vec<F> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }
}

/// Hopf algebra: coalgebra plus multiplication, unit and antipode on the
/// same basis. The antipode matrix has `S(e_j)` as its `j`-th column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData<F: Field> {
    pub coalgebra: CoalgebraData<F>,
    pub algebra: Algebra<F>,
    pub antipode: Matrix<F>,
}

impl<F: Field> HopfData<F> {
    pub fn new(coalgebra: CoalgebraData<F>, algebra: Algebra<F>, antipode: Matrix<F>) -> Result<Self, StructureError> {
        let n = coalgebra.dim();
        if algebra.dim() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(StructureError::Shape("Hopf data parts have different dimensions".into()));
        }
        Ok(HopfData { coalgebra, algebra, antipode })
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }
}
