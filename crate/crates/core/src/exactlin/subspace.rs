use super::field::Field;
use super::matrix::Matrix;
use super::LinAlgError;

/// Subspace of `F^n`, stored as the nonzero rows of its reduced row-echelon
/// basis. Equal subspaces therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_echelon(Matrix::identity(ambient))
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span<I: IntoIterator<Item = Vec<F>>>(ambient: usize, vectors: I) -> Self {
        let rows: Vec<Vec<F>> = vectors.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        assert!(rows.iter().all(|v| v.len() == ambient), "vector length differs from ambient dimension");
        Self::from_echelon(Matrix::from_rows(rows))
    }

    fn from_echelon(mut m: Matrix<F>) -> Self {
        let ambient = m.cols();
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing the pivot coordinates; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = o.minus(&c.times(r));
                }
            }
        }
        out
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if self.reduce(v).iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(F::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn join(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        Ok(Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned()))
    }

    /// `a ∩ b`, computed as the annihilator of `ann(a) + ann(b)`.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_ambient(other)?;
        Ok(self.annihilator().join(&other.annihilator())?.annihilator())
    }

    /// `{f : f·v = 0 for all v in self}` under the coordinate dot pairing.
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).kernel()
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn image(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.cols(), self.ambient);
        Self::span(m.rows(), self.basis.iter().map(|v| m.apply(v)))
    }

    /// `{v : m v ∈ target}`.
    pub fn preimage(m: &Matrix<F>, target: &Self) -> Self {
        assert_eq!(m.rows(), target.ambient);
        let ann = target.annihilator();
        if ann.is_zero() {
            return Self::full(m.cols());
        }
        Matrix::from_rows(ann.basis.clone()).mul(m).kernel()
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }
}

/// Extends an independent list of vectors inside `within` to a basis of
/// `within`, returning only the added vectors. Added vectors are taken from
/// the echelon basis of `within` in order.
pub fn extend_basis<F: Field>(current: &[Vec<F>], within: &Subspace<F>) -> Vec<Vec<F>> {
    let mut acc = Subspace::span(within.ambient_dim(), current.iter().cloned());
    let mut added = Vec::new();
    for v in within.basis() {
        if !acc.contains(v) {
            added.push(v.clone());
            acc = Subspace::span(within.ambient_dim(), acc.basis().iter().cloned().chain(std::iter::once(v.clone())));
        }
    }
    added
}
