use crate::coalgebra::{Algebra, CoalgebraData};
use crate::exactlin::{Field, Matrix, Subspace};

use super::radical::{coradical_filtration, FiltrationReport};
use super::wedderburn::{wedderburn_decompose, MatrixUnits, Quotient};
use super::AnalysisError;

/// A simple subcoalgebra `D_τ` with its standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleComponent<F: Field> {
    pub subcoalgebra: Subspace<F>,
    pub d: usize,
    /// `e_{ij}` at index `i·d + j`, with `Δ(e_{ij}) = Σ_k e_{ik}⊗e_{kj}`.
    pub standard_basis: Vec<Vec<F>>,
    pub is_group_like: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleDecomposition<F: Field> {
    pub components: Vec<SimpleComponent<F>>,
    pub group_likes: Vec<Vec<F>>,
}

impl<F: Field> SimpleDecomposition<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.d).collect()
    }

    /// Index of the component whose subcoalgebra is `s`.
    pub fn find(&self, s: &Subspace<F>) -> Option<usize> {
        self.components.iter().position(|c| &c.subcoalgebra == s)
    }
}

/// Coalgebra projection `π: C → C_0` with kernel `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection<F: Field> {
    pub pi: Matrix<F>,
    pub kernel_i: Subspace<F>,
    /// Matrix units of a semisimple complement `S` of `J` in `C*`, one
    /// system per component, in the order of the decomposition.
    pub lifted_units: Vec<MatrixUnits<F>>,
}

impl<F: Field> Projection<F> {
    /// Lifted central idempotent of component `τ`, as a functional on `C`.
    pub fn central_idempotent(&self, tau: usize) -> &[F] {
        &self.lifted_units[tau].central_idempotent
    }
}

/// Everything derived from `C*` before the P_n stage.
#[derive(Clone, Debug)]
pub(crate) struct DualStage<F: Field> {
    pub algebra: Algebra<F>,
    pub filtration: FiltrationReport<F>,
    pub quotient: Quotient<F>,
    /// Matrix units of `A/J`, ordered like `decomposition.components`.
    pub units: Vec<MatrixUnits<F>>,
    pub decomposition: SimpleDecomposition<F>,
}

pub(crate) fn dual_stage<F: Field>(c: &CoalgebraData<F>) -> Result<DualStage<F>, AnalysisError> {
    let algebra = c.dual_algebra();
    let filtration = coradical_filtration(c);
    let j = filtration.radical().clone();
    let quotient = Quotient::new(&algebra, &j);
    let units = wedderburn_decompose(&quotient.algebra)?;

    // rows: representatives of all quotient matrix units, then J
    let n = c.dim();
    let mut rows: Vec<Vec<F>> = units.iter().flat_map(|u| u.units.iter().map(|e| quotient.lift(e))).collect();
    rows.extend(j.basis().iter().cloned());
    let inv = Matrix::from_rows(rows).inverse().ok_or_else(|| AnalysisError::InternalDisagreement {
        stage: "simple-subcoalgebras".into(),
        detail: "matrix units and radical do not span the dual algebra".into(),
    })?;
    let mut offset = 0;
    let mut comps: Vec<(SimpleComponent<F>, MatrixUnits<F>)> = Vec::new();
    for u in units {
        let dd = u.d * u.d;
        let standard_basis: Vec<Vec<F>> = (offset..offset + dd).map(|col| inv.column(col)).collect();
        offset += dd;
        let subcoalgebra = Subspace::span(n, standard_basis.iter().cloned());
        comps.push((SimpleComponent { subcoalgebra, d: u.d, standard_basis, is_group_like: u.d == 1 }, u));
    }
    comps.sort_by(|(a, _), (b, _)| (a.d, a.subcoalgebra.pivots()).cmp(&(b.d, b.subcoalgebra.pivots())));
    let (components, units): (Vec<_>, Vec<_>) = comps.into_iter().unzip();
    let group_likes = components.iter().filter(|s| s.is_group_like).map(|s| s.standard_basis[0].clone()).collect();
    Ok(DualStage { algebra, filtration, quotient, units, decomposition: SimpleDecomposition { components, group_likes } })
}

/// Simple subcoalgebras from the matrix units of `C*/J`.
pub fn simple_subcoalgebras<F: Field>(c: &CoalgebraData<F>) -> Result<SimpleDecomposition<F>, AnalysisError> {
    Ok(dual_stage(c)?.decomposition)
}

pub fn coradical_projection<F: Field>(c: &CoalgebraData<F>) -> Result<Projection<F>, AnalysisError> {
    let stage = dual_stage(c)?;
    projection_from(&stage)
}

/// Newton budget; each round squares the error's radical degree.
const NEWTON_BUDGET: usize = 64;

fn newton<F: Field>(a: &Algebra<F>, x: Vec<F>, component: usize) -> Result<Vec<F>, AnalysisError> {
    let mut e = x;
    for _ in 0..NEWTON_BUDGET {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = a.mul(&e2, &e);
        e = e2.iter().zip(&e3).map(|(p, q)| F::from_i64(3).times(p).minus(&F::from_i64(2).times(q))).collect();
    }
    Err(AnalysisError::LiftingFailed { component, iterations: NEWTON_BUDGET })
}

fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.minus(y)).collect()
}

/// Lifts the matrix units of `A/J` to a semisimple subalgebra of `A`.
pub(crate) fn lift_units<F: Field>(stage: &DualStage<F>) -> Result<Vec<MatrixUnits<F>>, AnalysisError> {
    let a = &stage.algebra;
    let q = &stage.quotient;
    let total: usize = stage.units.iter().map(|u| u.d).sum();
    let mut u = a.unit().to_vec();
    let mut count = 0;
    let mut diag: Vec<Vec<Vec<F>>> = Vec::new();
    for (tau, comp) in stage.units.iter().enumerate() {
        let mut es = Vec::with_capacity(comp.d);
        for i in 0..comp.d {
            count += 1;
            let e = if count == total {
                u.clone()
            } else {
                let rep = q.lift(comp.unit(i, i));
                newton(a, a.mul(&a.mul(&u, &rep), &u), tau)?
            };
            if q.project(&e) != comp.unit(i, i) {
                return Err(AnalysisError::LiftingFailed { component: tau, iterations: 0 });
            }
            u = sub(&u, &e);
            es.push(e);
        }
        diag.push(es);
    }

    let mut lifted = Vec::with_capacity(stage.units.len());
    for (tau, (comp, es)) in stage.units.iter().zip(diag).enumerate() {
        let d = comp.d;
        let e1 = &es[0];
        let mut row = vec![e1.clone()];
        let mut col = vec![e1.clone()];
        for j in 1..d {
            let x = a.mul(&a.mul(e1, &q.lift(comp.unit(0, j))), &es[j]);
            let y = a.mul(&a.mul(&es[j], &q.lift(comp.unit(j, 0))), e1);
            // (xy)^{-1} in the corner e1·A·e1, xy = e1 + nil
            let nil = sub(&a.mul(&x, &y), e1);
            let neg: Vec<F> = nil.iter().map(F::negate).collect();
            let mut inv = e1.clone();
            let mut term = e1.clone();
            let mut rounds = 0;
            loop {
                term = a.mul(&term, &neg);
                if term.iter().all(F::is_zero) {
                    break;
                }
                rounds += 1;
                if rounds > NEWTON_BUDGET {
                    return Err(AnalysisError::LiftingFailed { component: tau, iterations: rounds });
                }
                inv = inv.iter().zip(&term).map(|(p, t)| p.plus(t)).collect();
            }
            row.push(x);
            col.push(a.mul(&y, &inv));
        }
        let mut units = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                units.push(if i == 0 { row[j].clone() } else { a.mul(&col[i], &row[j]) });
            }
        }
        let mut central = vec![F::zero(); a.dim()];
        for (i, e) in es.iter().enumerate() {
            if units[i * d + i] != *e {
                return Err(AnalysisError::LiftingFailed { component: tau, iterations: 0 });
            }
            central = central.iter().zip(e).map(|(p, t)| p.plus(t)).collect();
        }
        lifted.push(MatrixUnits { d, central_idempotent: central, units });
    }
    Ok(lifted)
}

pub(crate) fn projection_from<F: Field>(stage: &DualStage<F>) -> Result<Projection<F>, AnalysisError> {
    let lifted_units = lift_units(stage)?;
    let n = stage.algebra.dim();
    let mut pi: Matrix<F> = Matrix::zeros(n, n);
    for (comp, lifted) in stage.decomposition.components.iter().zip(&lifted_units) {
        for (e, big_e) in comp.standard_basis.iter().zip(&lifted.units) {
            for r in 0..n {
                if e[r].is_zero() {
                    continue;
                }
                for col in 0..n {
                    if !big_e[col].is_zero() {
                        let v = pi.get(r, col).plus(&e[r].times(&big_e[col]));
                        pi.set(r, col, v);
                    }
                }
            }
        }
    }
    let s = Subspace::span(n, lifted_units.iter().flat_map(|u| u.units.iter().cloned()));
    Ok(Projection { pi, kernel_i: s.annihilator(), lifted_units })
}

/// Names of the projection axioms that fail; empty when `π` is a coalgebra
/// projection onto `C_0` with kernel `I` and `C = C_0 ⊕ I`.
pub fn projection_failures<F: Field>(c: &CoalgebraData<F>, c0: &Subspace<F>, p: &Projection<F>) -> Vec<&'static str> {
    let n = c.dim();
    let mut failures = Vec::new();
    if p.pi.mul(&p.pi) != p.pi {
        failures.push("idempotent");
    }
    let image = Subspace::span(n, (0..n).map(|j| p.pi.column(j)));
    if &image != c0 {
        failures.push("image");
    }
    if p.pi.kernel() != p.kernel_i {
        failures.push("kernel");
    }
    if c0.intersect(&p.kernel_i).map(|s| !s.is_zero()).unwrap_or(true) || c0.dim() + p.kernel_i.dim() != n {
        failures.push("complement");
    }
    for j in 0..n {
        let col = p.pi.column(j);
        if c.apply_counit(&col) != c.counit()[j] {
            failures.push("counit");
            break;
        }
    }
    let pit = p.pi.transpose();
    for j in 0..n {
        let col = p.pi.column(j);
        let lhs = c.comultiply(&col);
        // (π⊗π)Δ(e_j) as the matrix π X πᵀ
        let x = Matrix::from_fn(n, n, |s, t| c.delta(j, s, t).clone());
        let rhs = p.pi.mul(&x).mul(&pit);
        if lhs.as_slice() != rhs.entries() {
            failures.push("coalgebra-map");
            break;
        }
    }
    failures
}
