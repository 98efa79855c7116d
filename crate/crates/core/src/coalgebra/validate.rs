use std::fmt;

use serde::Serialize;

use crate::exactlin::Field;

use super::data::{Algebra, CoalgebraData, HopfData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Coassociativity,
    CounitLeft,
    CounitRight,
    Associativity,
    UnitLeft,
    UnitRight,
    ComultiplicationMultiplicative,
    ComultiplicationUnit,
    CounitMultiplicative,
    CounitUnit,
    AntipodeLeft,
    AntipodeRight,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::CounitLeft => "counit-left",
            Axiom::CounitRight => "counit-right",
            Axiom::Associativity => "associativity",
            Axiom::UnitLeft => "unit-left",
            Axiom::UnitRight => "unit-right",
            Axiom::ComultiplicationMultiplicative => "comultiplication-multiplicative",
            Axiom::ComultiplicationUnit => "comultiplication-unit",
            Axiom::CounitMultiplicative => "counit-multiplicative",
            Axiom::CounitUnit => "counit-unit",
            Axiom::AntipodeLeft => "antipode-left",
            Axiom::AntipodeRight => "antipode-right",
        };
        f.write_str(s)
    }
}

/// One failed axiom instance. `indices` names the basis elements involved:
/// the input indices followed by the first output coordinate that differs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn push(&mut self, axiom: Axiom, indices: Vec<usize>) {
        self.violations.push(Violation { axiom, indices });
    }

    fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

fn first_diff<F: Field>(a: &[F], b: &[F]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Checks coassociativity and both counit laws on every basis element.
pub fn validate_coalgebra<F: Field>(c: &CoalgebraData<F>) -> ValidationReport {
    let n = c.dim();
    let mut report = ValidationReport::default();
    for i in 0..n {
        let mut lhs = vec![F::zero(); n * n * n];
        let mut rhs = vec![F::zero(); n * n * n];
        for (j, k, cjk) in c.terms(i) {
            // (Δ⊗id): Δ(e_j) ⊗ e_k
            for (a, b, cab) in c.terms(j) {
                lhs[(a * n + b) * n + k].fma_assign(cjk, cab);
            }
            // (id⊗Δ): e_j ⊗ Δ(e_k)
            for (a, b, cab) in c.terms(k) {
                rhs[(j * n + a) * n + b].fma_assign(cjk, cab);
            }
        }
        if let Some(p) = first_diff(&lhs, &rhs) {
            report.push(Axiom::Coassociativity, vec![i, p / (n * n), (p / n) % n, p % n]);
        }

        let mut left = vec![F::zero(); n];
        let mut right = vec![F::zero(); n];
        for (j, k, cjk) in c.terms(i) {
            left[k].fma_assign(&c.counit()[j], cjk);
            right[j].fma_assign(&c.counit()[k], cjk);
        }
        let e_i: Vec<F> = (0..n).map(|k| if k == i { F::one() } else { F::zero() }).collect();
        if let Some(p) = first_diff(&left, &e_i) {
            report.push(Axiom::CounitLeft, vec![i, p]);
        }
        if let Some(p) = first_diff(&right, &e_i) {
            report.push(Axiom::CounitRight, vec![i, p]);
        }
    }
    report
}

/// Associativity and unit laws of an algebra.
pub fn validate_algebra<F: Field>(a: &Algebra<F>) -> ValidationReport {
    let n = a.dim();
    let mut report = ValidationReport::default();
    let basis: Vec<Vec<F>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let prods: Vec<Vec<Vec<F>>> = (0..n).map(|i| (0..n).map(|j| a.mul(&basis[i], &basis[j])).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = a.mul(&prods[i][j], &basis[k]);
                let rhs = a.mul(&basis[i], &prods[j][k]);
                if let Some(p) = first_diff(&lhs, &rhs) {
                    report.push(Axiom::Associativity, vec![i, j, k, p]);
                }
            }
        }
        if let Some(p) = first_diff(&a.mul(a.unit(), &basis[i]), &basis[i]) {
            report.push(Axiom::UnitLeft, vec![i, p]);
        }
        if let Some(p) = first_diff(&a.mul(&basis[i], a.unit()), &basis[i]) {
            report.push(Axiom::UnitRight, vec![i, p]);
        }
    }
    report
}

/// Full Hopf check: coalgebra, algebra, bialgebra compatibility, antipode.
pub fn validate_hopf<F: Field>(h: &HopfData<F>) -> ValidationReport {
    let c = &h.coalgebra;
    let a = &h.algebra;
    let n = h.dim();
    let mut report = validate_coalgebra(c);
    report.merge(validate_algebra(a));

    let basis: Vec<Vec<F>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let deltas: Vec<Vec<F>> = basis.iter().map(|b| c.comultiply(b)).collect();

    // Δ(e_i e_j) = Δ(e_i) Δ(e_j) in H⊗H
    for i in 0..n {
        for j in 0..n {
            let lhs = c.comultiply(&a.mul(&basis[i], &basis[j]));
            let rhs = tensor_mul(a, &deltas[i], &deltas[j]);
            if let Some(p) = first_diff(&lhs, &rhs) {
                report.push(Axiom::ComultiplicationMultiplicative, vec![i, j, p / n, p % n]);
            }
            let e_ij = c.apply_counit(&a.mul(&basis[i], &basis[j]));
            if e_ij != c.counit()[i].times(&c.counit()[j]) {
                report.push(Axiom::CounitMultiplicative, vec![i, j]);
            }
        }
    }
    let unit = a.unit();
    let unit_tensor: Vec<F> = (0..n * n).map(|p| unit[p / n].times(&unit[p % n])).collect();
    if let Some(p) = first_diff(&c.comultiply(unit), &unit_tensor) {
        report.push(Axiom::ComultiplicationUnit, vec![p / n, p % n]);
    }
    if !c.apply_counit(unit).is_one() {
        report.push(Axiom::CounitUnit, vec![]);
    }

    // m(S⊗id)Δ = ηε = m(id⊗S)Δ
    let s_cols: Vec<Vec<F>> = (0..n).map(|j| h.antipode.column(j)).collect();
    for i in 0..n {
        let mut left = vec![F::zero(); n];
        let mut right = vec![F::zero(); n];
        for (j, k, cjk) in c.terms(i) {
            let l = a.mul(&s_cols[j], &basis[k]);
            let r = a.mul(&basis[j], &s_cols[k]);
            for p in 0..n {
                left[p].fma_assign(cjk, &l[p]);
                right[p].fma_assign(cjk, &r[p]);
            }
        }
        let target: Vec<F> = unit.iter().map(|u| u.times(&c.counit()[i])).collect();
        if let Some(p) = first_diff(&left, &target) {
            report.push(Axiom::AntipodeLeft, vec![i, p]);
        }
        if let Some(p) = first_diff(&right, &target) {
            report.push(Axiom::AntipodeRight, vec![i, p]);
        }
    }
    report
}

/// Product in `A ⊗ A`: `(a⊗b)(c⊗d) = ac ⊗ bd`, on coordinate vectors of length `n²`.
pub fn tensor_mul<F: Field>(a: &Algebra<F>, x: &[F], y: &[F]) -> Vec<F> {
    let n = a.dim();
    let mut out = vec![F::zero(); n * n];
    for (p, xp) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        let (i, j) = (p / n, p % n);
        for (q, yq) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (k, l) = (q / n, q % n);
            let coef = xp.times(yq);
            for (s, c1) in a.product_terms(i, k) {
                let c1 = coef.times(c1);
                for (t, c2) in a.product_terms(j, l) {
                    out[s * n + t].fma_assign(&c1, c2);
                }
            }
        }
    }
    out
}
