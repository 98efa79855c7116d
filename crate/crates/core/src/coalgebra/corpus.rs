use crate::exactlin::{Cyclotomic, Field, Matrix, Rational};

use super::data::{Algebra, CoalgebraData, HopfData};
use super::group::FiniteGroup;
use super::validate::tensor_mul;
use super::{AnyStructure, CorpusError, Structure};

/// Scalar field a corpus member is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FieldChoice {
    #[default]
    Rational,
    Cyclotomic3,
    Cyclotomic4,
}

impl FieldChoice {
    /// `1` for Q, otherwise the cyclotomic order.
    pub fn from_order(order: usize) -> Option<Self> {
        match order {
            1 => Some(FieldChoice::Rational),
            3 => Some(FieldChoice::Cyclotomic3),
            4 => Some(FieldChoice::Cyclotomic4),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusItem {
    Sweedler,
    Taft(usize),
    GroupAlgebra(FiniteGroup),
    DualGroupAlgebra(FiniteGroup),
}

impl CorpusItem {
    pub fn expected_dim(&self) -> usize {
        match self {
            CorpusItem::Sweedler => 4,
            CorpusItem::Taft(n) => n * n,
            CorpusItem::GroupAlgebra(g) | CorpusItem::DualGroupAlgebra(g) => g.order(),
        }
    }
}

/// Builds a corpus member. Taft algebras pick the field containing their
/// root of unity; group algebras use `field`.
pub fn corpus(item: &CorpusItem, field: FieldChoice) -> Result<AnyStructure, CorpusError> {
    match item {
        CorpusItem::Sweedler => Ok(AnyStructure::Rational(Structure::Hopf(sweedler()))),
        CorpusItem::Taft(2) => Ok(AnyStructure::Rational(Structure::Hopf(sweedler()))),
        CorpusItem::Taft(3) => Ok(AnyStructure::Cyclotomic3(Structure::Hopf(taft(3, &Cyclotomic::<3>::zeta())?))),
        CorpusItem::Taft(4) => Ok(AnyStructure::Cyclotomic4(Structure::Hopf(taft(4, &Cyclotomic::<4>::zeta())?))),
        CorpusItem::Taft(n) => Err(CorpusError::UnsupportedParams(format!(
            "taft({n}) needs a primitive {n}-th root of unity; supported n are 2, 3, 4"
        ))),
        CorpusItem::GroupAlgebra(g) => Ok(match field {
            FieldChoice::Rational => AnyStructure::Rational(Structure::Hopf(group_algebra(g))),
            FieldChoice::Cyclotomic3 => AnyStructure::Cyclotomic3(Structure::Hopf(group_algebra(g))),
            FieldChoice::Cyclotomic4 => AnyStructure::Cyclotomic4(Structure::Hopf(group_algebra(g))),
        }),
        CorpusItem::DualGroupAlgebra(g) => Ok(match field {
            FieldChoice::Rational => AnyStructure::Rational(Structure::Hopf(dual_group_algebra(g))),
            FieldChoice::Cyclotomic3 => AnyStructure::Cyclotomic3(Structure::Hopf(dual_group_algebra(g))),
            FieldChoice::Cyclotomic4 => AnyStructure::Cyclotomic4(Structure::Hopf(dual_group_algebra(g))),
        }),
    }
}

/// Sweedler's 4-dimensional Hopf algebra: Taft(2) with ζ = −1.
pub fn sweedler() -> HopfData<Rational> {
    taft(2, &Rational::from_i64(-1)).expect("-1 is a primitive square root of unity")
}

/// Taft algebra of dimension n², generated by g, x with gⁿ = 1, xⁿ = 0,
/// x g = ζ g x, Δg = g⊗g, Δx = x⊗1 + g⊗x. Basis index `j·n + i` is `gⁱ xʲ`.
pub fn taft<F: Field>(n: usize, zeta: &F) -> Result<HopfData<F>, CorpusError> {
    if n < 2 || !zeta.pow(n as u64).is_one() || (1..n).any(|k| zeta.pow(k as u64).is_one()) {
        return Err(CorpusError::UnsupportedParams(format!("not a primitive {n}-th root of unity: {zeta}")));
    }
    let dim = n * n;
    let idx = |i: usize, j: usize| j * n + i;

    let mut mult = Vec::new();
    for (i, j, k, l) in (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |l| (i, j, k, l))))) {
        if j + l < n {
            mult.push((idx(i, j), idx(k, l), idx((i + k) % n, j + l), zeta.pow((j * k) as u64)));
        }
    }
    let mut unit = vec![F::zero(); dim];
    unit[idx(0, 0)] = F::one();
    let algebra = Algebra::from_entries(dim, mult, unit.clone()).expect("taft table");

    let e = |i: usize, j: usize| algebra.basis_vector(idx(i, j));
    let pure = |a: &[F], b: &[F]| -> Vec<F> { (0..dim * dim).map(|p| a[p / dim].times(&b[p % dim])).collect() };
    let delta_g = pure(&e(1, 0), &e(1, 0));
    let delta_x: Vec<F> = pure(&e(0, 1), &e(0, 0)).iter().zip(pure(&e(1, 0), &e(0, 1))).map(|(a, b)| a.plus(&b)).collect();

    let mut entries = Vec::new();
    let mut counit = vec![F::zero(); dim];
    let mut g_pow = pure(&unit, &unit);
    for i in 0..n {
        let mut d = g_pow.clone();
        for j in 0..n {
            for (p, c) in d.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                entries.push((idx(i, j), p / dim, p % dim, c.clone()));
            }
            d = tensor_mul(&algebra, &d, &delta_x);
        }
        counit[idx(i, 0)] = F::one();
        g_pow = tensor_mul(&algebra, &g_pow, &delta_g);
    }
    let coalgebra = CoalgebraData::from_entries(dim, entries, counit).expect("taft delta");

    // S(gⁱxʲ) = S(x)ʲ S(g)ⁱ
    let s_g = e(n - 1, 0);
    let s_x: Vec<F> = algebra.mul(&e(n - 1, 0), &e(0, 1)).iter().map(F::negate).collect();
    let mut cols = vec![Vec::new(); dim];
    for i in 0..n {
        for j in 0..n {
            cols[idx(i, j)] = algebra.mul(&algebra.power(&s_x, j), &algebra.power(&s_g, i));
        }
    }
    let antipode = Matrix::from_columns(dim, &cols);
    Ok(HopfData::new(coalgebra, algebra, antipode).expect("taft shapes"))
}

/// Group algebra k[G]: every group element is group-like.
pub fn group_algebra<F: Field>(g: &FiniteGroup) -> HopfData<F> {
    let n = g.order();
    let mult = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, g.mul(a, b), F::one()));
    let mut unit = vec![F::zero(); n];
    unit[g.identity()] = F::one();
    let algebra = Algebra::from_entries(n, mult, unit).expect("group table");
    let coalgebra = CoalgebraData::from_entries(n, (0..n).map(|a| (a, a, a, F::one())), vec![F::one(); n]).expect("group delta");
    let antipode = Matrix::from_fn(n, n, |i, j| if i == g.inverse(j) { F::one() } else { F::zero() });
    HopfData::new(coalgebra, algebra, antipode).expect("group algebra shapes")
}

/// Dual group algebra k^G on the delta functions δ_g.
pub fn dual_group_algebra<F: Field>(g: &FiniteGroup) -> HopfData<F> {
    let n = g.order();
    let delta = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (g.mul(a, b), a, b, F::one()));
    let mut counit = vec![F::zero(); n];
    counit[g.identity()] = F::one();
    let coalgebra = CoalgebraData::from_entries(n, delta, counit).expect("dual group delta");
    let algebra = Algebra::from_entries(n, (0..n).map(|a| (a, a, a, F::one())), vec![F::one(); n]).expect("dual group mult");
    let antipode = Matrix::from_fn(n, n, |i, j| if i == g.inverse(j) { F::one() } else { F::zero() });
    HopfData::new(coalgebra, algebra, antipode).expect("dual group algebra shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{validate_coalgebra, validate_hopf, Axiom};

    #[test]
    fn corpus_members_are_valid_hopf_algebras() {
        assert!(validate_hopf(&sweedler()).is_valid());
        assert!(validate_hopf(&taft(3, &Cyclotomic::<3>::zeta()).unwrap()).is_valid());
        assert!(validate_hopf(&taft(4, &Cyclotomic::<4>::zeta()).unwrap()).is_valid());
        for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::symmetric3()] {
            assert!(validate_hopf(&group_algebra::<Rational>(&g)).is_valid());
            assert!(validate_hopf(&dual_group_algebra::<Rational>(&g)).is_valid());
        }
    }

    #[test]
    fn advertised_dimensions() {
        for (item, field) in [
            (CorpusItem::Sweedler, FieldChoice::Rational),
            (CorpusItem::Taft(3), FieldChoice::Rational),
            (CorpusItem::Taft(4), FieldChoice::Rational),
            (CorpusItem::GroupAlgebra(FiniteGroup::cyclic(3)), FieldChoice::Rational),
            (CorpusItem::DualGroupAlgebra(FiniteGroup::symmetric3()), FieldChoice::Cyclotomic3),
        ] {
            assert_eq!(corpus(&item, field).unwrap().dim(), item.expected_dim());
        }
        assert!(matches!(corpus(&CorpusItem::Taft(5), FieldChoice::Rational), Err(CorpusError::UnsupportedParams(_))));
    }

    #[test]
    fn taft_rejects_non_primitive_root() {
        assert!(taft(2, &Rational::from_i64(1)).is_err());
    }

    #[test]
    fn sweedler_with_identity_antipode_fails() {
        let mut h = sweedler();
        h.antipode = Matrix::identity(4);
        let report = validate_hopf(&h);
        assert!(report.has(Axiom::AntipodeLeft) || report.has(Axiom::AntipodeRight));
        // the generator x is index 2
        assert!(report.violations.iter().any(|v| v.indices.first() == Some(&2)));
    }

    #[test]
    fn group_like_line_counit() {
        let c = CoalgebraData::from_entries(1, [(0, 0, 0, Rational::from_i64(1))], vec![Rational::from_i64(1)]).unwrap();
        assert!(validate_coalgebra(&c).is_valid());
        let bad = CoalgebraData::from_entries(1, [(0, 0, 0, Rational::from_i64(1))], vec![Rational::from_i64(2)]).unwrap();
        let report = validate_coalgebra(&bad);
        assert!(report.has(Axiom::CounitLeft));
        assert_eq!(report.violations[0].indices[0], 0);
    }
}
