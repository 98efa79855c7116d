use std::collections::BTreeSet;

use crate::coalgebra::HopfData;
use crate::exactlin::{Field, Matrix, Subspace};
use crate::filtration::{Analysis, BlockSystem};

use super::{Checker, RuleId, RuleReport};

struct Action<F: Field> {
    label: String,
    matrix: Matrix<F>,
    /// The antipode reverses types: `(τ, μ) ↦ (Sμ, Sτ)`.
    reverses: bool,
}

fn join<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
    a.join(b).expect("same ambient space")
}

/// Left and right translation by every group-like and the antipode must
/// permute simple subcoalgebras, carry `P^{τ,μ}_n` onto the piece of the
/// translated type modulo `C_{n−1}`, and hence preserve blocks (the
/// antipode swapping `d1` and `d2`). Dimensions of the translated pieces
/// are read from `bs`, so a block system inconsistent with the algebra is
/// caught.
pub fn verify_cor1<F: Field>(h: &HopfData<F>, analysis: &Analysis<F>, bs: &BlockSystem) -> RuleReport {
    let comps = &analysis.decomposition.components;
    let mut ck = Checker::default();
    ck.check(bs.components.len() == comps.len(), || {
        format!("block system lists {} components, decomposition has {}", bs.components.len(), comps.len())
    });
    if ck.failed() {
        return ck.report(RuleId::Cor1);
    }

    let mut actions = Vec::new();
    for (idx, c) in comps.iter().enumerate().filter(|(_, c)| c.is_group_like) {
        let g = &c.standard_basis[0];
        actions.push(Action { label: format!("g{idx}·"), matrix: h.algebra.left_mult_matrix(g), reverses: false });
        actions.push(Action { label: format!("·g{idx}"), matrix: h.algebra.right_mult_matrix(g), reverses: false });
    }
    actions.push(Action { label: "S".into(), matrix: h.antipode.clone(), reverses: true });

    let length = analysis.filtration.length;
    let ambient = h.dim();
    let mut type_dims: BTreeSet<(usize, usize)> = BTreeSet::new();
    for t in comps {
        for m in comps {
            type_dims.insert((t.d, m.d));
        }
    }
    // B^{d1,d2}_n + C_{n−1}
    let block_space = |n: usize, d1: usize, d2: usize| -> Subspace<F> {
        if n == 0 {
            let parts = comps.iter().filter(|c| c.d == d1 && d1 == d2).flat_map(|c| c.subcoalgebra.basis().to_vec());
            return Subspace::span(ambient, parts);
        }
        let mut acc = analysis.filtration.level(n - 1).clone();
        for (tau, t) in comps.iter().enumerate() {
            for (mu, m) in comps.iter().enumerate() {
                if t.d == d1 && m.d == d2 {
                    acc = join(&acc, &analysis.piece(n, tau, mu));
                }
            }
        }
        acc
    };

    for act in &actions {
        let perm: Vec<Option<usize>> =
            comps.iter().map(|c| analysis.decomposition.find(&c.subcoalgebra.image(&act.matrix))).collect();
        for (tau, p) in perm.iter().enumerate() {
            ck.check(p.is_some(), || format!("{}(D_{tau}) is not a simple subcoalgebra", act.label));
        }
        if ck.failed() {
            break;
        }
        let target = |tau: usize, mu: usize| {
            let (a, b) = (perm[tau].unwrap(), perm[mu].unwrap());
            if act.reverses {
                (b, a)
            } else {
                (a, b)
            }
        };

        for n in 1..=length {
            let prev = analysis.filtration.level(n - 1);
            for tau in 0..comps.len() {
                for mu in 0..comps.len() {
                    let (t2, m2) = target(tau, mu);
                    let moved = join(prev, &analysis.piece(n, tau, mu).image(&act.matrix));
                    let expected = join(prev, &analysis.piece(n, t2, m2));
                    ck.check(moved == expected, || {
                        format!("{}P^({tau},{mu})_{n} differs from P^({t2},{m2})_{n} modulo C_{}", act.label, n - 1)
                    });
                    let (q, q2) = (bs.q_dim(n, tau, mu), bs.q_dim(n, t2, m2));
                    ck.check(q == q2, || format!("dim Q^({tau},{mu})_{n} = {q} but dim Q^({t2},{m2})_{n} = {q2} ({})", act.label));
                }
            }
        }

        for n in 0..=length {
            for &(d1, d2) in &type_dims {
                let b = block_space(n, d1, d2);
                let moved = if n == 0 { b.image(&act.matrix) } else { join(analysis.filtration.level(n - 1), &b.image(&act.matrix)) };
                let expected = if act.reverses { block_space(n, d2, d1) } else { b };
                ck.check(moved == expected, || {
                    let (e1, e2) = if act.reverses { (d2, d1) } else { (d1, d2) };
                    format!("{}B({n},{d1},{d2}) is not B({n},{e1},{e2})", act.label)
                });
            }
        }
    }
    ck.report(RuleId::Cor1)
}
