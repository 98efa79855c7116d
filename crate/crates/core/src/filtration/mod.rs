//! Coradical filtration, simple subcoalgebras, the projection `π`, the
//! `P_n` spaces and the block system of a concrete coalgebra.
//!
//! The pipeline is [`analyze`]; each stage is also exposed on its own.

mod blocks;
mod projection;
mod pspaces;
mod radical;
mod wedderburn;

pub use blocks::{
    assemble_block_system, isotypic, left_isotypic_projector, right_isotypic_projector, BlockSystem, ComponentLabel, Isotypic,
};
pub use projection::{coradical_projection, projection_failures, simple_subcoalgebras, Projection, SimpleComponent, SimpleDecomposition};
pub use pspaces::{p1_by_preimage, p_spaces, p_spaces_direct, p_spaces_recursive};
pub use radical::{c1_direct, coradical_filtration, jacobson_radical, radical_powers, FiltrationReport};
pub use wedderburn::{center, central_idempotents, minimal_polynomial, wedderburn_decompose, MatrixUnits, Quotient};

use thiserror::Error;

use crate::coalgebra::{validate_coalgebra, CoalgebraData};
use crate::exactlin::{extend_basis, Field, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("semisimple component {component} does not split over the working field (center dimension {center_dim})")]
    NonSplitComponent { component: usize, center_dim: usize },
    #[error("idempotent lifting did not converge for component {component} after {iterations} iterations")]
    LiftingFailed { component: usize, iterations: usize },
    #[error("internal disagreement in {stage}: {detail}")]
    InternalDisagreement { stage: String, detail: String },
    #[error("input is not a coalgebra: {0}")]
    InvalidCoalgebra(String),
}

/// Rows: the given vectors in order, completed by standard basis vectors.
pub(crate) fn adapted_basis<F: Field>(n: usize, parts: &[&[Vec<F>]]) -> Matrix<F> {
    let mut rows: Vec<Vec<F>> = parts.iter().flat_map(|p| p.iter().cloned()).collect();
    let added = extend_basis(&rows, &Subspace::full(n));
    rows.extend(added);
    Matrix::from_rows(rows)
}

/// Output of the full pipeline on one coalgebra.
#[derive(Clone, Debug)]
pub struct Analysis<F: Field> {
    pub filtration: FiltrationReport<F>,
    pub decomposition: SimpleDecomposition<F>,
    pub projection: Projection<F>,
    /// `P_0 = 0, P_1, …, P_length = I`.
    pub p_spaces: Vec<Subspace<F>>,
    pub isotypic: Isotypic<F>,
    pub block_system: BlockSystem,
}

impl<F: Field> Analysis<F> {
    /// `P^{τ,μ}_n`; zero for `n = 0` or past the filtration length.
    pub fn piece(&self, n: usize, tau: usize, mu: usize) -> Subspace<F> {
        let ambient = self.projection.pi.rows();
        if n == 0 {
            return Subspace::zero(ambient);
        }
        let top = self.p_spaces.len() - 1;
        self.isotypic.pieces.get(&(n.min(top), tau, mu)).cloned().unwrap_or_else(|| Subspace::zero(ambient))
    }
}

pub fn analyze<F: Field>(c: &CoalgebraData<F>) -> Result<Analysis<F>, AnalysisError> {
    let report = validate_coalgebra(c);
    if let Some(v) = report.violations.first() {
        return Err(AnalysisError::InvalidCoalgebra(format!("{} at {:?}", v.axiom, v.indices)));
    }
    let stage = projection::dual_stage(c)?;
    if !stage.filtration.c1_agrees {
        return Err(AnalysisError::InternalDisagreement {
            stage: "coradical-filtration".into(),
            detail: "C_1 from the radical differs from Δ⁻¹(C⊗C_0 + C_0⊗C)".into(),
        });
    }
    let projection = projection::projection_from(&stage)?;
    let failures = projection_failures(c, stage.filtration.coradical(), &projection);
    if !failures.is_empty() {
        return Err(AnalysisError::InternalDisagreement { stage: "projection".into(), detail: failures.join(", ") });
    }
    let p = p_spaces(c, &stage.filtration, &projection)?;
    let central: Vec<Vec<F>> = projection.lifted_units.iter().map(|u| u.central_idempotent.clone()).collect();
    let iso = isotypic(c, &central, &p)?;
    let block_system = assemble_block_system(c.dim(), &stage.decomposition, &iso)?;
    Ok(Analysis {
        filtration: stage.filtration,
        decomposition: stage.decomposition,
        projection,
        p_spaces: p,
        isotypic: iso,
        block_system,
    })
}

pub fn block_system<F: Field>(c: &CoalgebraData<F>) -> Result<BlockSystem, AnalysisError> {
    analyze(c).map(|a| a.block_system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{dual_group_algebra, group_algebra, sweedler, taft, FiniteGroup};
    use crate::exactlin::{Cyclotomic, Rational};
    use std::collections::BTreeMap;

    fn blocks(bs: &BlockSystem) -> BTreeMap<(usize, usize, usize), usize> {
        bs.block_dims.clone()
    }

    #[test]
    fn block_system_examples() {
        let sw = block_system(&sweedler().coalgebra).unwrap();
        assert_eq!(blocks(&sw), BTreeMap::from([((0, 1, 1), 2), ((1, 1, 1), 2)]));

        let t3 = block_system(&taft(3, &Cyclotomic::<3>::zeta()).unwrap().coalgebra).unwrap();
        assert_eq!(blocks(&t3), BTreeMap::from([((0, 1, 1), 3), ((1, 1, 1), 3), ((2, 1, 1), 3)]));

        let s3 = block_system(&dual_group_algebra::<Rational>(&FiniteGroup::symmetric3()).coalgebra).unwrap();
        assert_eq!(blocks(&s3), BTreeMap::from([((0, 1, 1), 2), ((0, 2, 2), 4)]));
    }

    #[test]
    fn p_space_examples() {
        let c = group_algebra::<Rational>(&FiniteGroup::cyclic(3)).coalgebra;
        let a = analyze(&c).unwrap();
        assert!(a.p_spaces.iter().all(Subspace::is_zero));

        let sw = sweedler().coalgebra;
        let a = analyze(&sw).unwrap();
        let dims: Vec<usize> = a.p_spaces.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 2]);
        assert_eq!(a.p_spaces[1], p1_by_preimage(&sw, a.filtration.coradical(), &a.projection.kernel_i));

        let t3 = taft(3, &Cyclotomic::<3>::zeta()).unwrap().coalgebra;
        let a = analyze(&t3).unwrap();
        let dims: Vec<usize> = a.p_spaces.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 3, 6]);
    }

    #[test]
    fn taft4_is_pointed_with_three_layers() {
        let t4 = taft(4, &Cyclotomic::<4>::zeta()).unwrap().coalgebra;
        let bs = block_system(&t4).unwrap();
        assert_eq!(bs.block_dims, BTreeMap::from([((0, 1, 1), 4), ((1, 1, 1), 4), ((2, 1, 1), 4), ((3, 1, 1), 4)]));
    }

    #[test]
    fn non_split_input_is_a_typed_error() {
        // k^{C4} has dual algebra Q[C4] = Q × Q × Q(i)
        let g = FiniteGroup::cyclic(4);
        let c = dual_group_algebra::<Rational>(&g).coalgebra;
        assert_eq!(c.dual_algebra(), group_algebra::<Rational>(&g).algebra);
        assert_eq!(analyze(&c).unwrap_err(), AnalysisError::NonSplitComponent { component: 2, center_dim: 2 });
        let c4 = dual_group_algebra::<Cyclotomic<4>>(&g).coalgebra;
        let a = analyze(&c4).unwrap();
        assert_eq!(a.decomposition.group_likes.len(), 4);
        assert_eq!(a.block_system.block_dims, BTreeMap::from([((0, 1, 1), 4)]));
    }

    #[test]
    fn non_pointed_triangular_dual() {
        use crate::coalgebra::samples::{dual_coalgebra, triangular_algebra};
        let c = dual_coalgebra(&triangular_algebra::<Rational>(&[2, 1]));
        let a = analyze(&c).unwrap();
        assert_eq!(a.decomposition.dims(), vec![1, 2]);
        let bs = &a.block_system;
        assert_eq!(bs.block(0, 1, 1), 1);
        assert_eq!(bs.block(0, 2, 2), 4);
        assert_eq!(bs.block(1, 2, 1) + bs.block(1, 1, 2), 2);
        assert_eq!(bs.total(), 7);
    }

    #[test]
    fn fuzzed_coalgebras_analyze() {
        for c in crate::coalgebra::samples::fuzz_coalgebras(1, 20, 6) {
            let a = analyze(&c).unwrap();
            assert_eq!(a.block_system.total(), c.dim());
        }
    }
}
