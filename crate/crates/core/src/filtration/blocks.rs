use std::collections::BTreeMap;

use crate::coalgebra::CoalgebraData;
use crate::exactlin::{extend_basis, Field, Matrix, Subspace};

use super::projection::SimpleDecomposition;
use super::AnalysisError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabel {
    pub index: usize,
    pub d: usize,
    pub group_like: bool,
}

/// Block system of a coalgebra: isotypic multiplicities per level and the
/// aggregated block dimensions. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub dim: usize,
    pub components: Vec<ComponentLabel>,
    /// `(n, τ, μ) → k` with `dim Q^{τ,μ}_n = k·d_τ·d_μ`, for `n ≥ 1`.
    pub q_multiplicities: BTreeMap<(usize, usize, usize), usize>,
    /// `(n, d1, d2) → dim B^{d1,d2}_n`.
    pub block_dims: BTreeMap<(usize, usize, usize), usize>,
}

impl BlockSystem {
    /// A block system given only by its blocks (no component data), for
    /// fixtures and block-level checks.
    pub fn from_blocks(blocks: impl IntoIterator<Item = ((usize, usize, usize), usize)>) -> Self {
        let block_dims: BTreeMap<_, _> = blocks.into_iter().filter(|(_, v)| *v > 0).collect();
        let dim = block_dims.values().sum();
        BlockSystem { dim, components: Vec::new(), q_multiplicities: BTreeMap::new(), block_dims }
    }

    pub fn block(&self, n: usize, d1: usize, d2: usize) -> usize {
        self.block_dims.get(&(n, d1, d2)).copied().unwrap_or(0)
    }

    pub fn q_dim(&self, n: usize, tau: usize, mu: usize) -> usize {
        let k = self.q_multiplicities.get(&(n, tau, mu)).copied().unwrap_or(0);
        k * self.components[tau].d * self.components[mu].d
    }

    pub fn total(&self) -> usize {
        self.block_dims.values().sum()
    }

    pub fn max_level(&self) -> usize {
        self.block_dims.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn group_order(&self) -> usize {
        self.components.iter().filter(|c| c.group_like).count()
    }

    pub fn is_cosemisimple(&self) -> bool {
        self.max_level() == 0
    }
}

/// `L_τ(x) = Σ E_τ(x₁) x₂` as a matrix.
pub fn left_isotypic_projector<F: Field>(c: &CoalgebraData<F>, e_tau: &[F]) -> Matrix<F> {
    let n = c.dim();
    let mut m: Matrix<F> = Matrix::zeros(n, n);
    for i in 0..n {
        for (j, k, cjk) in c.terms(i) {
            if !e_tau[j].is_zero() {
                let v = m.get(k, i).plus(&cjk.times(&e_tau[j]));
                m.set(k, i, v);
            }
        }
    }
    m
}

/// `R_μ(x) = Σ x₁ E_μ(x₂)` as a matrix.
pub fn right_isotypic_projector<F: Field>(c: &CoalgebraData<F>, e_mu: &[F]) -> Matrix<F> {
    let n = c.dim();
    let mut m: Matrix<F> = Matrix::zeros(n, n);
    for i in 0..n {
        for (j, k, cjk) in c.terms(i) {
            if !e_mu[k].is_zero() {
                let v = m.get(j, i).plus(&cjk.times(&e_mu[k]));
                m.set(j, i, v);
            }
        }
    }
    m
}

/// Isotypic pieces `P^{τ,μ}_n` for `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isotypic<F: Field> {
    /// `(n, τ, μ) → P^{τ,μ}_n`, all pairs, `n = 1..=length`.
    pub pieces: BTreeMap<(usize, usize, usize), Subspace<F>>,
    /// A complement of `P^{τ,μ}_{n−1}` in `P^{τ,μ}_n` (one choice of `Q^{τ,μ}_n`).
    pub q_bases: BTreeMap<(usize, usize, usize), Vec<Vec<F>>>,
}

pub fn isotypic<F: Field>(
    c: &CoalgebraData<F>,
    central: &[Vec<F>],
    p_spaces: &[Subspace<F>],
) -> Result<Isotypic<F>, AnalysisError> {
    let n = c.dim();
    let lefts: Vec<Matrix<F>> = central.iter().map(|e| left_isotypic_projector(c, e)).collect();
    let rights: Vec<Matrix<F>> = central.iter().map(|e| right_isotypic_projector(c, e)).collect();
    let mut pieces = BTreeMap::new();
    let mut q_bases = BTreeMap::new();
    for (level, p) in p_spaces.iter().enumerate().skip(1) {
        let mut total = 0;
        for (tau, l) in lefts.iter().enumerate() {
            let lp = p.image(l);
            for (mu, r) in rights.iter().enumerate() {
                let piece = lp.image(r);
                total += piece.dim();
                let prev = if level == 1 { Subspace::zero(n) } else { pieces.get(&(level - 1, tau, mu)).cloned().unwrap() };
                if !prev.is_subspace_of(&piece) {
                    return Err(AnalysisError::InternalDisagreement {
                        stage: "isotypic".into(),
                        detail: format!("P^({tau},{mu})_{} not contained in level {level}", level - 1),
                    });
                }
                q_bases.insert((level, tau, mu), extend_basis(prev.basis(), &piece));
                pieces.insert((level, tau, mu), piece);
            }
        }
        if total != p.dim() {
            return Err(AnalysisError::InternalDisagreement {
                stage: "isotypic".into(),
                detail: format!("isotypic pieces of P_{level} sum to {total}, expected {}", p.dim()),
            });
        }
    }
    Ok(Isotypic { pieces, q_bases })
}

pub fn assemble_block_system<F: Field>(
    dim: usize,
    decomposition: &SimpleDecomposition<F>,
    iso: &Isotypic<F>,
) -> Result<BlockSystem, AnalysisError> {
    let components: Vec<ComponentLabel> = decomposition
        .components
        .iter()
        .enumerate()
        .map(|(index, c)| ComponentLabel { index, d: c.d, group_like: c.is_group_like })
        .collect();
    let mut block_dims = BTreeMap::new();
    for c in &components {
        *block_dims.entry((0, c.d, c.d)).or_insert(0) += c.d * c.d;
    }
    let mut q_multiplicities = BTreeMap::new();
    for (&(n, tau, mu), basis) in &iso.q_bases {
        let q = basis.len();
        if q == 0 {
            continue;
        }
        let (dt, dm) = (components[tau].d, components[mu].d);
        if q % (dt * dm) != 0 {
            return Err(AnalysisError::InternalDisagreement {
                stage: "block-system".into(),
                detail: format!("dim Q^({tau},{mu})_{n} = {q} is not divisible by {dt}·{dm}"),
            });
        }
        q_multiplicities.insert((n, tau, mu), q / (dt * dm));
        *block_dims.entry((n, dt, dm)).or_insert(0) += q;
    }
    let bs = BlockSystem { dim, components, q_multiplicities, block_dims };
    if bs.total() != dim {
        return Err(AnalysisError::InternalDisagreement {
            stage: "block-system".into(),
            detail: format!("blocks sum to {}, expected {dim}", bs.total()),
        });
    }
    Ok(bs)
}
