use crate::filtration::BlockSystem;

use super::{Checker, RuleId, RuleReport};

fn nonzero_blocks(bs: &BlockSystem) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
    bs.block_dims.iter().filter(|(_, &v)| v > 0).map(|(&(n, a, b), &v)| (n, a, b, v))
}

fn degrees(bs: &BlockSystem) -> Vec<usize> {
    let mut ds: Vec<usize> = bs.block_dims.keys().flat_map(|&(_, a, b)| [a, b]).collect();
    ds.sort_unstable();
    ds.dedup();
    ds
}

/// `|G(H)| = dim B^{1,1}_0` divides every block.
pub fn verify_cor2(bs: &BlockSystem) -> RuleReport {
    let g = bs.block(0, 1, 1);
    if g == 0 {
        return RuleReport::not_applicable(RuleId::Cor2, "no group-likes");
    }
    let mut ck = Checker::default();
    for (n, a, b, v) in nonzero_blocks(bs) {
        ck.check(v % g == 0, || format!("|G| = {g} does not divide dim B({n},{a},{b}) = {v}"));
    }
    ck.report(RuleId::Cor2)
}

/// Chains, symmetry and escalation (including the iterated form).
pub fn verify_cor3(bs: &BlockSystem) -> RuleReport {
    let ds = degrees(bs);
    let top = bs.max_level();
    let nz = |n: usize, a: usize, b: usize| bs.block(n, a, b) > 0;
    let mut ck = Checker::default();
    for (n, d1, d2, v) in nonzero_blocks(bs) {
        if n == 0 {
            continue;
        }
        for i in 1..n {
            ck.check(ds.iter().any(|&b| nz(i, d1, b) && nz(n - i, b, d2)), || {
                format!("B({n},{d1},{d2}) has no chain at i = {i}: no b with B({i},{d1},b) and B({},b,{d2}) nonzero", n - i)
            });
        }
        let mirrored = bs.block(n, d2, d1);
        ck.check(mirrored == v, || format!("dim B({n},{d1},{d2}) = {v} but dim B({n},{d2},{d1}) = {mirrored}"));
        if d1 != d2 {
            let above = |pred: &dyn Fn(usize, usize) -> bool| (n + 1..=top).any(|l| ds.iter().any(|&d| pred(l, d)));
            ck.check(above(&|l, d3| nz(l, d1, d3)), || format!("B({n},{d1},{d2}) escalates to no B(l,{d1},*) with l > {n}"));
            ck.check(above(&|l, d4| nz(l, d4, d2)), || format!("B({n},{d1},{d2}) escalates to no B(l,*,{d2}) with l > {n}"));
            for d in [d1, d2] {
                ck.check((n + 1..=top).any(|l| nz(l, d, d)), || {
                    format!("B({n},{d1},{d2}) nonzero but no B(l,{d},{d}) with l > {n}")
                });
            }
        }
    }
    ck.report(RuleId::Cor3)
}

/// `(m, l)`: largest and smallest `n ≥ 1` with `B^{1,1}_n ≠ 0`. Level 0 is
/// excluded since `B^{1,1}_0 ≠ 0` always and `l > 1` is asserted later.
fn max_min_11(bs: &BlockSystem) -> Option<(usize, usize)> {
    let levels: Vec<usize> = nonzero_blocks(bs).filter(|&(n, a, b, _)| n > 0 && a == 1 && b == 1).map(|(n, ..)| n).collect();
    Some((*levels.iter().max()?, *levels.iter().min()?))
}

/// The `cor4`, `prop3-1` and `prop3-2` reports, in that order.
///
/// `cor4` and `prop3-2` are gated on "non-cosemisimple and no nontrivial
/// skew-primitives", the latter detected as `B^{1,1}_1 = 0`. `prop3-1` is
/// gated on non-cosemisimplicity only.
pub fn verify_cor4_prop3(bs: &BlockSystem) -> Vec<RuleReport> {
    let cosemisimple = bs.is_cosemisimple();
    let skew = bs.block(1, 1, 1) > 0;
    let g = bs.block(0, 1, 1);
    let ds: Vec<usize> = degrees(bs).into_iter().filter(|&d| d > 1).collect();
    let nz = |n: usize, a: usize, b: usize| bs.block(n, a, b) > 0;
    let top = bs.max_level();
    let gated = !cosemisimple && !skew;
    let mm = max_min_11(bs);

    let cor4 = if !gated {
        RuleReport::not_applicable(RuleId::Cor4, if cosemisimple { "cosemisimple" } else { "has skew-primitives" })
    } else {
        let mut ck = Checker::default();
        ck.check(g > 0, || "B(0,1,1) = 0".into());
        ck.check(mm.is_some_and(|(m, _)| m > 1), || "no B(m,1,1) with m > 1".into());
        let six = ds.iter().any(|&d| nz(0, d, d) && nz(1, d, 1) && nz(1, 1, d) && (2..=top).any(|k| nz(k, d, d)));
        ck.check(six, || "no d > 1 with B(0,d,d), B(1,d,1), B(1,1,d) and some B(k,d,d), k > 1, all nonzero".into());
        ck.report(RuleId::Cor4)
    };

    let prop31 = if cosemisimple {
        RuleReport::not_applicable(RuleId::Prop3_1, "cosemisimple")
    } else {
        let mut ck = Checker::default();
        match mm {
            Some((m, _)) => {
                let v = bs.block(m, 1, 1);
                ck.check(v == g, || format!("dim B({m},1,1) = {v} but |G| = {g}"));
            }
            None => ck.check(false, || "no nonzero B(n,1,1)".into()),
        }
        ck.report(RuleId::Prop3_1)
    };

    let prop32 = match mm {
        Some((m, l)) if gated && l < m => {
            let mut ck = Checker::default();
            ck.check(l > 1, || format!("l = {l} but no skew-primitives forces l > 1"));
            let found = (l + 1..=top).any(|lp| {
                let lower = |d: usize, left: bool| {
                    ds.iter().any(|&e| if left { nz(lp - 1, d, e) } else { nz(lp - 1, e, d) })
                };
                ds.iter().any(|&d1| nz(lp, d1, 1) && lower(d1, true))
                    && ds.iter().any(|&d2| nz(lp, 1, d2) && lower(d2, false))
            });
            ck.check(found, || {
                format!("B(l,1,1) at l = {l} < m = {m} but no l' > l with B(l',d1,1), B(l',1,d2), B(l'-1,d1,d3), B(l'-1,d4,d2) nonzero, all d > 1")
            });
            ck.report(RuleId::Prop3_2)
        }
        _ => RuleReport::not_applicable(RuleId::Prop3_2, "gate closed or l = m"),
    };
    vec![cor4, prop31, prop32]
}

/// Per-type escalation: if `Q^{τ,μ}_n ≠ 0` with `d_τ ≠ d_μ` or
/// `dim Q^{τ,μ}_n ≠ d_τ²`, some `Q^{τ,E}_{n'}` with `n' > n` is nonzero.
/// The conclusion is unbounded in `n'`; it is checked within the computed
/// filtration, which is the whole coalgebra in finite dimension.
pub fn verify_prop1_3(bs: &BlockSystem) -> RuleReport {
    if bs.components.is_empty() {
        return RuleReport::not_applicable(RuleId::Prop1_3, "no component data");
    }
    let mut ck = Checker::default();
    for (&(n, tau, mu), &k) in &bs.q_multiplicities {
        if k == 0 {
            continue;
        }
        let (dt, dm) = (bs.components[tau].d, bs.components[mu].d);
        let q = k * dt * dm;
        if dt != dm || q != dt * dt {
            let escalates = bs.q_multiplicities.iter().any(|(&(n2, t2, _), &k2)| k2 > 0 && t2 == tau && n2 > n);
            ck.check(escalates, || format!("Q^({tau},{mu})_{n} has dim {q} but no Q^({tau},E)_n' with n' > {n}"));
        }
    }
    ck.report(RuleId::Prop1_3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::Verdict;

    fn minimal_form_22() -> BlockSystem {
        // L(2,2) laid out with k = m = 2
        BlockSystem::from_blocks([
            ((0, 1, 1), 2),
            ((0, 2, 2), 4),
            ((1, 2, 1), 4),
            ((1, 1, 2), 4),
            ((2, 1, 1), 2),
            ((2, 2, 2), 4),
        ])
    }

    #[test]
    fn minimal_form_satisfies_everything() {
        let bs = minimal_form_22();
        assert_eq!(verify_cor2(&bs).verdict, Verdict::Pass);
        assert_eq!(verify_cor3(&bs).verdict, Verdict::Pass);
        let r = verify_cor4_prop3(&bs);
        assert_eq!(r[0].verdict, Verdict::Pass);
        assert_eq!(r[1].verdict, Verdict::Pass);
        assert_eq!(r[2].verdict, Verdict::NotApplicable);
    }

    #[test]
    fn chain_negative_control() {
        let bs = BlockSystem::from_blocks([((0, 1, 1), 3), ((2, 1, 1), 3)]);
        let r = verify_cor3(&bs);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.unwrap().contains("B(2,1,1)"));
    }

    #[test]
    fn divisibility_and_symmetry_negative_controls() {
        let bs = BlockSystem::from_blocks([((0, 1, 1), 2), ((1, 1, 1), 3)]);
        assert_eq!(verify_cor2(&bs).verdict, Verdict::Fail);
        let bs = BlockSystem::from_blocks([((0, 1, 1), 2), ((0, 2, 2), 4), ((1, 2, 1), 4), ((2, 2, 2), 4)]);
        let r = verify_cor3(&bs);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.unwrap().contains("B(1,1,2)"));
    }

    #[test]
    fn prop3_negative_controls() {
        let mut blocks = minimal_form_22().block_dims;
        blocks.insert((2, 1, 1), 4);
        let r = verify_cor4_prop3(&BlockSystem::from_blocks(blocks.clone()));
        assert_eq!(r[1].verdict, Verdict::Fail);
        // B(1,1,d) missing: the six necessary blocks are incomplete
        blocks.insert((2, 1, 1), 2);
        blocks.remove(&(1, 1, 2));
        let r = verify_cor4_prop3(&BlockSystem::from_blocks(blocks));
        assert_eq!(r[0].verdict, Verdict::Fail);
        assert!(r[0].witness.is_some());
    }

    #[test]
    fn prop3_2_applies_when_l_below_m() {
        // L(2,2) plus a B(1,1)_2 at level 2 under m = 4, fed by level-3 d-blocks
        let bs = BlockSystem::from_blocks([
            ((0, 1, 1), 2),
            ((0, 2, 2), 4),
            ((1, 2, 1), 4),
            ((1, 1, 2), 4),
            ((2, 1, 1), 2),
            ((2, 2, 2), 4),
            ((3, 2, 1), 4),
            ((3, 1, 2), 4),
            ((4, 1, 1), 2),
            ((4, 2, 2), 4),
        ]);
        let r = verify_cor4_prop3(&bs);
        assert_eq!(r[2].verdict, Verdict::Pass);
        let mut broken = bs.block_dims.clone();
        broken.remove(&(3, 2, 1));
        broken.remove(&(3, 1, 2));
        let r = verify_cor4_prop3(&BlockSystem::from_blocks(broken));
        assert_eq!(r[2].verdict, Verdict::Fail);
    }

    #[test]
    fn gating() {
        let sweedler_like = BlockSystem::from_blocks([((0, 1, 1), 2), ((1, 1, 1), 2)]);
        let r = verify_cor4_prop3(&sweedler_like);
        assert_eq!(r[0].verdict, Verdict::NotApplicable);
        assert_eq!(r[1].verdict, Verdict::Pass);
        let cosemisimple = BlockSystem::from_blocks([((0, 1, 1), 3)]);
        assert!(verify_cor4_prop3(&cosemisimple).iter().all(|r| r.verdict == Verdict::NotApplicable));
    }
}
