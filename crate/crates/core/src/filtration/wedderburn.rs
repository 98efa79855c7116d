use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalgebra::Algebra;
use crate::exactlin::{poly, Field, Matrix, Subspace};

use super::AnalysisError;

/// `A/J` on the non-pivot coordinates of `J`'s echelon basis.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub algebra: Algebra<F>,
    /// Coordinate of `A` carried by each quotient basis vector.
    pub coords: Vec<usize>,
    radical: Subspace<F>,
    ambient: usize,
}

impl<F: Field> Quotient<F> {
    pub fn new(a: &Algebra<F>, radical: &Subspace<F>) -> Self {
        let n = a.dim();
        let coords: Vec<usize> = (0..n).filter(|q| !radical.pivots().contains(q)).collect();
        let m = coords.len();
        let mut entries = Vec::new();
        for (x, &qa) in coords.iter().enumerate() {
            for (y, &qb) in coords.iter().enumerate() {
                let prod = a.mul(&a.basis_vector(qa), &a.basis_vector(qb));
                let red = radical.reduce(&prod);
                for (z, &qc) in coords.iter().enumerate() {
                    if !red[qc].is_zero() {
                        entries.push((x, y, z, red[qc].clone()));
                    }
                }
            }
        }
        let unit_red = radical.reduce(a.unit());
        let unit = coords.iter().map(|&q| unit_red[q].clone()).collect();
        let algebra = Algebra::from_entries(m, entries, unit).expect("quotient shapes");
        Quotient { algebra, coords, radical: radical.clone(), ambient: n }
    }

    /// Image in `A/J`.
    pub fn project(&self, x: &[F]) -> Vec<F> {
        let red = self.radical.reduce(x);
        self.coords.iter().map(|&q| red[q].clone()).collect()
    }

    /// The representative in `A` supported on the quotient coordinates.
    pub fn lift(&self, y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient];
        for (v, &q) in y.iter().zip(&self.coords) {
            out[q] = v.clone();
        }
        out
    }
}

/// One simple component `M_d(F)` of a split semisimple algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixUnits<F> {
    pub d: usize,
    pub central_idempotent: Vec<F>,
    /// `E_{ij}` at index `i·d + j`.
    pub units: Vec<Vec<F>>,
}

impl<F: Field> MatrixUnits<F> {
    pub fn unit(&self, i: usize, j: usize) -> &[F] {
        &self.units[i * self.d + j]
    }
}

/// Minimal polynomial of `x` in the algebra with identity `one` (a corner
/// idempotent is allowed), low degree first and monic.
pub fn minimal_polynomial<F: Field>(a: &Algebra<F>, one: &[F], x: &[F]) -> Vec<F> {
    let mut powers = vec![one.to_vec()];
    loop {
        let next = a.mul(powers.last().unwrap(), x);
        let m = Matrix::from_columns(a.dim(), &powers);
        if let Some(c) = m.solve(&next) {
            let mut p: Vec<F> = c.iter().map(F::negate).collect();
            p.push(F::one());
            return p;
        }
        powers.push(next);
    }
}

/// `p(x)` with `one` as the constant term.
pub fn eval_in<F: Field>(a: &Algebra<F>, one: &[F], p: &[F], x: &[F]) -> Vec<F> {
    let mut acc = vec![F::zero(); a.dim()];
    for c in p.iter().rev() {
        acc = a.mul(&acc, x);
        for (o, u) in acc.iter_mut().zip(one) {
            o.fma_assign(c, u);
        }
    }
    acc
}

fn scale<F: Field>(c: &F, v: &[F]) -> Vec<F> {
    v.iter().map(|x| c.times(x)).collect()
}

fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.minus(y)).collect()
}

fn is_zero<F: Field>(v: &[F]) -> bool {
    v.iter().all(F::is_zero)
}

pub fn center<F: Field>(a: &Algebra<F>) -> Subspace<F> {
    let m = a.dim();
    // rows of the linear conditions z ↦ (z b_i − b_i z)_k, accumulated in echelon form
    let mut conditions = Subspace::zero(m);
    for i in 0..m {
        let b = a.basis_vector(i);
        let cols: Vec<Vec<F>> = (0..m).map(|j| {
            let z = a.basis_vector(j);
            sub(&a.mul(&z, &b), &a.mul(&b, &z))
        }).collect();
        let rows = Matrix::from_columns(m, &cols);
        conditions = Subspace::span(m, conditions.basis().iter().cloned().chain((0..m).map(|r| rows.row(r).to_vec())));
    }
    conditions.annihilator()
}

/// Wedderburn decomposition of a semisimple algebra into split matrix
/// components, each with its central idempotent and matrix units.
pub fn wedderburn_decompose<F: Field>(a: &Algebra<F>) -> Result<Vec<MatrixUnits<F>>, AnalysisError> {
    let centrals = central_idempotents(a)?;
    let mut out = Vec::with_capacity(centrals.len());
    for (index, f) in centrals.into_iter().enumerate() {
        let comp_dim = Subspace::span(a.dim(), (0..a.dim()).map(|k| a.mul(&f, &a.basis_vector(k)))).dim();
        let prims = split_idempotent(a, &f).ok_or(AnalysisError::NonSplitComponent { component: index, center_dim: 1 })?;
        let d = prims.len();
        if d * d != comp_dim {
            return Err(AnalysisError::NonSplitComponent { component: index, center_dim: 1 });
        }
        let units = matrix_units(a, &prims).ok_or(AnalysisError::NonSplitComponent { component: index, center_dim: 1 })?;
        out.push(MatrixUnits { d, central_idempotent: f, units });
    }
    Ok(out)
}

/// Central primitive idempotents from the eigenvalues of a generic central
/// element. Fails when the center does not split.
pub fn central_idempotents<F: Field>(a: &Algebra<F>) -> Result<Vec<Vec<F>>, AnalysisError> {
    let z = center(a);
    let s = z.dim();
    let one = a.unit().to_vec();
    if s <= 1 {
        return Ok(if a.dim() == 0 { Vec::new() } else { vec![one] });
    }
    // y = Σ t^j z_j for t = 1, 2, …: all but finitely many t give degree s
    let mut chosen = None;
    for t in 1..=(4 * s as i64 + 8) {
        let tf = F::from_i64(t);
        let mut y = vec![F::zero(); a.dim()];
        let mut coef = F::one();
        for zj in z.basis() {
            coef = coef.times(&tf);
            for (o, v) in y.iter_mut().zip(zj) {
                o.fma_assign(&coef, v);
            }
        }
        let p = minimal_polynomial(a, &one, &y);
        if p.len() == s + 1 {
            chosen = Some((y, p));
            break;
        }
    }
    let (y, p) = chosen.expect("a generic central element exists");
    let roots = F::roots(&p);
    if roots.len() < s {
        return Err(AnalysisError::NonSplitComponent { component: roots.len(), center_dim: s - roots.len() });
    }
    Ok(roots
        .iter()
        .map(|lambda| {
            let (q, _) = poly::divrem(&p, &[lambda.negate(), F::one()]);
            let norm = poly::eval(&q, lambda).recip().expect("squarefree minimal polynomial");
            let q: Vec<F> = q.iter().map(|c| c.times(&norm)).collect();
            eval_in(a, &one, &q, &y)
        })
        .collect())
}

/// Splits an idempotent into primitive orthogonal idempotents using
/// generalized eigenspaces of elements of its corner. `None` when no tried
/// element splits a corner of dimension > 1.
fn split_idempotent<F: Field>(a: &Algebra<F>, e: &[F]) -> Option<Vec<Vec<F>>> {
    let m = a.dim();
    let corner: Vec<Vec<F>> = (0..m).map(|k| a.mul(&a.mul(e, &a.basis_vector(k)), e)).collect();
    let corner_dim = Subspace::span(m, corner.iter().cloned()).dim();
    if corner_dim == 1 {
        return Some(vec![e.to_vec()]);
    }
    let basis = Subspace::span(m, corner.iter().cloned());
    let combos = {
        let mut rng = ChaCha8Rng::seed_from_u64(corner_dim as u64);
        let basis = basis.basis().to_vec();
        (0..RANDOM_TRIES).map(move |_| {
            let mut z = vec![F::zero(); m];
            for b in &basis {
                let c = F::from_i64(rng.gen_range(-3..=3));
                for (o, x) in z.iter_mut().zip(b) {
                    o.fma_assign(&c, x);
                }
            }
            z
        })
    };
    let candidates = corner
        .iter()
        .cloned()
        .chain((0..m).flat_map(|k| (k + 1..m).map(move |l| (k, l))).map(|(k, l)| corner[k].iter().zip(&corner[l]).map(|(x, y)| x.plus(y)).collect()))
        .chain((0..m).flat_map(|k| (0..m).map(move |l| (k, l))).map(|(k, l)| a.mul(&corner[k], &corner[l])))
        .chain(combos);
    for z in candidates {
        if let Some(piece) = splitting_idempotent(a, e, &z, basis.basis()) {
            let rest = sub(e, &piece);
            let mut left = split_idempotent(a, &piece)?;
            left.extend(split_idempotent(a, &rest)?);
            return Some(left);
        }
    }
    None
}

/// Random integer combinations tried after the structured candidates.
const RANDOM_TRIES: usize = 4000;

/// A proper idempotent of the corner from `z`: directly from a generalized
/// eigenspace, or, when `z − λ` is nilpotent, from `(z − λ)·b` for a corner
/// element `b` making it non-nilpotent (it still has eigenvalue 0).
fn splitting_idempotent<F: Field>(a: &Algebra<F>, e: &[F], z: &[F], corner: &[Vec<F>]) -> Option<Vec<F>> {
    if let Some(i) = eigen_idempotent(a, e, z) {
        return Some(i);
    }
    let p = minimal_polynomial(a, e, z);
    if p.len() <= 2 {
        return None;
    }
    let roots = F::roots(&p);
    let lambda = roots.first()?;
    let nil: Vec<F> = z.iter().zip(e).map(|(x, u)| x.minus(&lambda.times(u))).collect();
    corner.iter().find_map(|b| eigen_idempotent(a, e, &a.mul(&nil, b)))
}

/// Idempotent projecting onto a generalized eigenspace of `z` in the corner
/// of `e`, when `z` has a rational eigenvalue and more than one eigenvalue.
fn eigen_idempotent<F: Field>(a: &Algebra<F>, e: &[F], z: &[F]) -> Option<Vec<F>> {
    if is_zero(z) {
        return None;
    }
    let p = minimal_polynomial(a, e, z);
    if p.len() <= 2 {
        return None;
    }
    let lambda = F::roots(&p).into_iter().next()?;
    let lin = vec![lambda.negate(), F::one()];
    let mut q = p.clone();
    let mut power = vec![F::one()];
    loop {
        let (quot, rem) = poly::divrem(&q, &lin);
        if !rem.is_empty() {
            break;
        }
        q = quot;
        power = poly::mul(&power, &lin);
    }
    if q.len() <= 1 {
        return None;
    }
    let (_, _, t) = poly::xgcd(&power, &q);
    let idem = eval_in(a, e, &poly::mul(&t, &q), z);
    (!is_zero(&idem) && idem != e).then_some(idem)
}

/// Matrix units from primitive orthogonal idempotents `p_1..p_d` of one
/// simple component.
fn matrix_units<F: Field>(a: &Algebra<F>, prims: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let d = prims.len();
    let m = a.dim();
    let p1 = &prims[0];
    let pivot = p1.iter().position(|x| !x.is_zero())?;
    let mut row = vec![p1.clone()];
    let mut col = vec![p1.clone()];
    for pj in &prims[1..] {
        let e1j = (0..m).map(|k| a.mul(&a.mul(p1, &a.basis_vector(k)), pj)).find(|v| !is_zero(v))?;
        let mut found = None;
        for k in 0..m {
            let w = a.mul(&a.mul(pj, &a.basis_vector(k)), p1);
            let prod = a.mul(&e1j, &w);
            let alpha = prod[pivot].div(&p1[pivot]);
            if !alpha.is_zero() && prod == scale(&alpha, p1) {
                found = Some(scale(&alpha.recip().unwrap(), &w));
                break;
            }
        }
        row.push(e1j);
        col.push(found?);
    }
    let mut units = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            units.push(if i == 0 { row[j].clone() } else { a.mul(&col[i], &row[j]) });
        }
    }
    for i in 0..d {
        if units[i * d + i] != prims[i] {
            return None;
        }
    }
    Some(units)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{dual_group_algebra, group_algebra, FiniteGroup};
    use crate::exactlin::{Cyclotomic, Rational};

    fn check_units<F: Field>(a: &Algebra<F>, comps: &[MatrixUnits<F>]) {
        let mut total = vec![F::zero(); a.dim()];
        for c in comps {
            for i in 0..c.d {
                for j in 0..c.d {
                    for k in 0..c.d {
                        for l in 0..c.d {
                            let prod = a.mul(c.unit(i, j), c.unit(k, l));
                            let expect = if j == k { c.unit(i, l).to_vec() } else { vec![F::zero(); a.dim()] };
                            assert_eq!(prod, expect);
                        }
                    }
                }
                total = total.iter().zip(c.unit(i, i)).map(|(x, y)| x.plus(y)).collect();
            }
        }
        assert_eq!(total, a.unit());
    }

    #[test]
    fn one_dimensional_algebra() {
        let a = Algebra::from_entries(1, [(0, 0, 0, Rational::from_i64(1))], vec![Rational::from_i64(1)]).unwrap();
        let comps = wedderburn_decompose(&a).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].d, 1);
        assert_eq!(comps[0].central_idempotent, vec![Rational::from_i64(1)]);
    }

    #[test]
    fn group_algebra_of_s3() {
        // k[S3] = dual algebra of the dual group algebra
        let a = dual_group_algebra::<Rational>(&FiniteGroup::symmetric3()).coalgebra.dual_algebra();
        let comps = wedderburn_decompose(&a).unwrap();
        let mut ds: Vec<usize> = comps.iter().map(|c| c.d).collect();
        ds.sort();
        assert_eq!(ds, vec![1, 1, 2]);
        check_units(&a, &comps);
    }

    #[test]
    fn group_algebra_of_c4_needs_i() {
        let g = FiniteGroup::cyclic(4);
        let a = dual_group_algebra::<Rational>(&g).coalgebra.dual_algebra();
        assert_eq!(wedderburn_decompose(&a), Err(AnalysisError::NonSplitComponent { component: 2, center_dim: 2 }));
        let a4 = dual_group_algebra::<Cyclotomic<4>>(&g).coalgebra.dual_algebra();
        let comps = wedderburn_decompose(&a4).unwrap();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.d == 1));
        check_units(&a4, &comps);
    }

    #[test]
    fn function_algebra_splits() {
        let a = group_algebra::<Rational>(&FiniteGroup::cyclic(2)).coalgebra.dual_algebra();
        let comps = wedderburn_decompose(&a).unwrap();
        assert_eq!(comps.len(), 2);
        check_units(&a, &comps);
    }

    #[test]
    fn full_matrix_algebra_splits() {
        // M_3(Q) by its standard structure constants
        let idx = |i: usize, j: usize| i * 3 + j;
        let mut entries = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                for l in 0..3 {
                    entries.push((idx(i, j), idx(j, l), idx(i, l), Rational::from_i64(1)));
                }
            }
        }
        let mut unit = vec![Rational::from_i64(0); 9];
        for i in 0..3 {
            unit[idx(i, i)] = Rational::from_i64(1);
        }
        let a = Algebra::from_entries(9, entries, unit).unwrap();
        let comps = wedderburn_decompose(&a).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].d, 3);
        check_units(&a, &comps);
    }
}
