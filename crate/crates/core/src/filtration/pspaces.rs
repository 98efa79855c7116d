use crate::coalgebra::CoalgebraData;
use crate::exactlin::{extend_basis, Field, Matrix, Subspace};

use super::radical::{from_adapted, FiltrationReport};
use super::projection::Projection;
use super::AnalysisError;

/// `P_n = C_n ∩ I` for `n = 0..=length`.
pub fn p_spaces_direct<F: Field>(filtration: &FiltrationReport<F>, proj: &Projection<F>) -> Vec<Subspace<F>> {
    filtration
        .coradical_chain
        .iter()
        .enumerate()
        .map(|(n, cn)| if n == 0 { Subspace::zero(cn.ambient_dim()) } else { cn.intersect(&proj.kernel_i).expect("same ambient") })
        .collect()
}

/// `P_n` from the recursive definition
/// `P_n = {c : Δc − ρ_L(c) − ρ_R(c) ∈ Σ_{i<n} P_i ⊗ P_{n−i}}`,
/// continued until `P_n = I`.
///
/// Each level works in a basis `f` made of a basis of `C_0` followed by a
/// basis of `I` adapted to the flag `P_1 ⊆ … ⊆ P_{n−1}`. There `π` is the
/// coordinate projection onto the `C_0` part, so the `(p, q)` coefficient of
/// `Δc − ρ_L(c) − ρ_R(c)` is `Δ(c)_{pq}·(1 − [p ∈ C_0] − [q ∈ C_0])`, and the
/// target space is spanned by the `f_p⊗f_q` with `lev(p) + lev(q) ≤ n`.
pub fn p_spaces_recursive<F: Field>(c: &CoalgebraData<F>, c0: &Subspace<F>, proj: &Projection<F>) -> Vec<Subspace<F>> {
    let n = c.dim();
    let d0 = c0.dim();
    let mut spaces = vec![Subspace::zero(n)];
    let i_dim = proj.kernel_i.dim();
    while spaces.last().unwrap().dim() < i_dim && spaces.len() <= n + 1 {
        let level = spaces.len();
        let mut basis: Vec<Vec<F>> = c0.basis().to_vec();
        let mut lev: Vec<usize> = vec![0; d0];
        let mut flag: Vec<Vec<F>> = Vec::new();
        for (i, p) in spaces.iter().enumerate().skip(1) {
            let added = extend_basis(&flag, p);
            lev.extend(std::iter::repeat_n(i, added.len()));
            flag.extend(added);
        }
        let rest = extend_basis(&flag, &proj.kernel_i);
        lev.extend(std::iter::repeat_n(usize::MAX, rest.len()));
        flag.extend(rest);
        basis.extend(flag);
        let p = Matrix::from_rows(basis);
        let cp = c.change_basis(&p).expect("C_0 ⊕ I basis is invertible");

        let mut rows: Vec<Vec<F>> = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let both_c0 = s < d0 && t < d0;
                let both_i = s >= d0 && t >= d0;
                let in_target = both_i && lev[s].saturating_add(lev[t]) <= level;
                if both_c0 || (both_i && !in_target) {
                    rows.push((0..n).map(|i| cp.delta(i, s, t).clone()).collect());
                }
            }
        }
        let kernel = if rows.is_empty() { Subspace::full(n) } else { Matrix::from_rows(rows).kernel() };
        let next = from_adapted(&p, &kernel);
        let stalled = &next == spaces.last().unwrap();
        spaces.push(next);
        if stalled {
            break;
        }
    }
    spaces
}

/// Both computations of `P_n`, required to agree as subspaces.
pub fn p_spaces<F: Field>(
    c: &CoalgebraData<F>,
    filtration: &FiltrationReport<F>,
    proj: &Projection<F>,
) -> Result<Vec<Subspace<F>>, AnalysisError> {
    let direct = p_spaces_direct(filtration, proj);
    let recursive = p_spaces_recursive(c, filtration.coradical(), proj);
    if direct != recursive {
        let level = direct.iter().zip(&recursive).position(|(a, b)| a != b).unwrap_or(direct.len().min(recursive.len()));
        return Err(AnalysisError::InternalDisagreement {
            stage: "p-spaces".into(),
            detail: format!(
                "P_{level}: C_n ∩ I has dim {:?}, recursive definition has dim {:?}",
                direct.get(level).map(Subspace::dim),
                recursive.get(level).map(Subspace::dim)
            ),
        });
    }
    Ok(direct)
}

/// `P_1 = Δ⁻¹(C_0⊗I + I⊗C_0)` computed in the original basis, as a
/// definition-level oracle for tests.
pub fn p1_by_preimage<F: Field>(c: &CoalgebraData<F>, c0: &Subspace<F>, i: &Subspace<F>) -> Subspace<F> {
    let n = c.dim();
    let tensor = |a: &[F], b: &[F]| -> Vec<F> { (0..n * n).map(|p| a[p / n].times(&b[p % n])).collect() };
    let mut gens = Vec::new();
    for x in c0.basis() {
        for y in i.basis() {
            gens.push(tensor(x, y));
            gens.push(tensor(y, x));
        }
    }
    let target = Subspace::span(n * n, gens);
    Subspace::preimage(&c.delta_matrix(), &target)
}
