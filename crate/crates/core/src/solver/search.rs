use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::no_skew_primitive_guard;
use super::profile::{check_profile, Profile};
use super::{lcm, quantum, Constraint, SearchOrder, SolverError, SolverOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    /// Block support of the pruned branch, e.g. `L0={1,2} L1={(1,2)}`.
    pub branch: String,
    pub constraint: Constraint,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Supports evaluated.
    pub nodes: u64,
    /// Pruned or rejected branches per first violated constraint.
    pub pruned: BTreeMap<Constraint, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub dim: u64,
    pub r: u64,
    pub sat: bool,
    pub certificate: Option<Profile>,
    /// First `trace_cap` pruned branches (UNSAT only).
    pub trace: Vec<TraceEntry>,
    /// Pruned branches not kept in `trace`.
    pub trace_omitted: u64,
    pub stats: SearchStats,
}

/// A support: which blocks are nonzero. Level-0 degrees `> 1` and, per
/// level `n ≥ 1`, unordered degree pairs `(a, b)` with `a ≤ b`.
struct Support<'a> {
    l0: &'a [u64],
    levels: &'a [Vec<(u64, u64)>],
}

impl Support<'_> {
    fn has(&self, n: usize, a: u64, b: u64) -> bool {
        if n == 0 {
            return a == b && (a == 1 || self.l0.contains(&a));
        }
        let (a, b) = (a.min(b), a.max(b));
        self.levels.get(n - 1).is_some_and(|lv| lv.contains(&(a, b)))
    }

    fn degrees(&self) -> impl Iterator<Item = u64> + '_ {
        std::iter::once(1).chain(self.l0.iter().copied())
    }

    fn describe(&self) -> String {
        let l0: Vec<String> = self.degrees().map(|d| d.to_string()).collect();
        let mut s = format!("L0={{{}}}", l0.join(","));
        for (i, lv) in self.levels.iter().enumerate() {
            let pairs: Vec<String> = lv.iter().map(|(a, b)| format!("({a},{b})")).collect();
            s.push_str(&format!(" L{}={{{}}}", i + 1, pairs.join(",")));
        }
        s
    }

    /// Chains for the blocks at level `n`, using only lower levels.
    fn chains_ok(&self, n: usize) -> bool {
        self.levels[n - 1].iter().all(|&(a, b)| {
            [(a, b), (b, a)].iter().all(|&(x, y)| (1..n).all(|i| self.degrees().any(|c| self.has(i, x, c) && self.has(n - i, c, y))))
        })
    }
}

struct Search {
    n: u64,
    r: u64,
    opts: SolverOptions,
    stats: SearchStats,
    trace: Vec<TraceEntry>,
    omitted: u64,
    found: Option<Profile>,
}

impl Search {
    fn cost(&self, n: usize, a: u64, b: u64) -> u64 {
        let q = quantum(n, a, b, self.r, self.opts.strict_level1_divisibility);
        if a == b {
            q
        } else {
            2 * q
        }
    }

    fn prune(&mut self, s: &Support, c: Constraint) {
        *self.stats.pruned.entry(c).or_insert(0) += 1;
        if self.trace.len() < self.opts.trace_cap {
            self.trace.push(TraceEntry { branch: s.describe(), constraint: c });
        } else {
            self.omitted += 1;
        }
    }

    /// Support-level S3–S8, then S9 by coin change over the free blocks.
    fn evaluate(&self, s: &Support) -> Result<Profile, Constraint> {
        let h = s.levels.len();
        if s.has(1, 1, 1) {
            return Err(Constraint::S3);
        }
        let ones: Vec<usize> = (1..=h).filter(|&n| s.has(n, 1, 1)).collect();
        let m = match ones.last() {
            Some(&m) if m > 1 => m,
            _ => return Err(Constraint::S4),
        };
        if !s.l0.iter().any(|&d| s.has(1, d, 1) && (2..=h).any(|k| s.has(k, d, d))) {
            return Err(Constraint::S4);
        }
        if self.opts.use_s6 {
            let mut ls: Vec<usize> = ones.iter().copied().filter(|&l| l > 1 && l < m).collect();
            if self.opts.s6_min_only && ones[0] < 2 {
                ls.clear();
            }
            if self.opts.s6_min_only {
                ls.truncate(1);
            }
            for l in ls {
                // the d1 and d2 halves coincide on a symmetric support
                let fed = (l + 1..=h)
                    .any(|lp| s.l0.iter().any(|&d| s.has(lp, d, 1) && s.l0.iter().any(|&e| s.has(lp - 1, d, e))));
                if !fed {
                    return Err(Constraint::S6);
                }
            }
        }
        if self.opts.use_s7 && !(2..=h).all(|n| s.chains_ok(n)) {
            return Err(Constraint::S7);
        }
        if self.opts.use_s8 {
            for (i, lv) in s.levels.iter().enumerate() {
                let n = i + 1;
                for &(a, b) in lv.iter().filter(|(a, b)| a != b) {
                    for x in [a, b] {
                        if !s.levels[n..].iter().any(|up| up.iter().any(|&(c, d)| c == x || d == x)) {
                            return Err(Constraint::S8);
                        }
                    }
                }
            }
        }

        // base assignment and the free increments
        let mut base = Profile::default();
        let mut coins: Vec<(u64, usize, u64, u64)> = Vec::new();
        base.add(0, 1, 1, self.r);
        for &d in s.l0 {
            let q = lcm(d * d, self.r);
            base.add(0, d, d, q);
            coins.push((q, 0, d, d));
        }
        for (i, lv) in s.levels.iter().enumerate() {
            let n = i + 1;
            for &(a, b) in lv {
                let q = quantum(n, a, b, self.r, self.opts.strict_level1_divisibility);
                base.add(n, a, b, q);
                if a != b {
                    base.add(n, b, a, q);
                }
                if !(n == m && a == 1 && b == 1) {
                    coins.push((self.cost(n, a, b), n, a, b));
                }
            }
        }
        let spent = base.total();
        if spent > self.n {
            return Err(Constraint::S9);
        }
        let rem = (self.n - spent) as usize;
        // reach[x] = index of a coin finishing x
        let mut reach: Vec<Option<usize>> = vec![None; rem + 1];
        let mut ok = vec![false; rem + 1];
        ok[0] = true;
        for x in 1..=rem {
            for (ci, &(c, ..)) in coins.iter().enumerate() {
                let c = c as usize;
                if c <= x && ok[x - c] {
                    ok[x] = true;
                    reach[x] = Some(ci);
                    break;
                }
            }
        }
        if !ok[rem] {
            return Err(Constraint::S9);
        }
        let mut x = rem;
        while x > 0 {
            let (c, n, a, b) = coins[reach[x].expect("reachable")];
            if a == b {
                base.add(n, a, b, c);
            } else {
                base.add(n, a, b, c / 2);
                base.add(n, b, a, c / 2);
            }
            x -= c as usize;
        }
        Ok(base)
    }

    fn dfs(&mut self, l0: &[u64], levels: &mut Vec<Vec<(u64, u64)>>, spent: u64) {
        if self.found.is_some() {
            return;
        }
        if !levels.is_empty() {
            self.stats.nodes += 1;
            let s = Support { l0, levels };
            match self.evaluate(&s) {
                Ok(p) => match check_profile(&p, self.n, self.r, &self.opts) {
                    Ok(()) => {
                        self.found = Some(p);
                        return;
                    }
                    Err(v) => panic!("search produced a certificate rejected by the checker: {v:?} for {p}"),
                },
                Err(c) => self.prune(&s, c),
            }
        }
        let n = levels.len() + 1;
        let mut degrees: Vec<u64> = std::iter::once(1).chain(l0.iter().copied()).collect();
        if self.opts.order == SearchOrder::Descending {
            degrees.reverse();
        }
        let mut types = Vec::new();
        for (i, &a) in degrees.iter().enumerate() {
            for &b in &degrees[i..] {
                let t = (a.min(b), a.max(b));
                if n == 1 && t == (1, 1) {
                    continue;
                }
                if spent + self.cost(n, t.0, t.1) <= self.n {
                    types.push(t);
                }
            }
        }
        if types.is_empty() {
            // nothing fits in the remaining budget
            self.prune(&Support { l0, levels }, Constraint::S9);
            return;
        }
        let mut chosen = Vec::new();
        self.subsets(l0, levels, &types, 0, &mut chosen, spent);
    }

    fn subsets(
        &mut self,
        l0: &[u64],
        levels: &mut Vec<Vec<(u64, u64)>>,
        types: &[(u64, u64)],
        i: usize,
        chosen: &mut Vec<(u64, u64)>,
        spent: u64,
    ) {
        if self.found.is_some() {
            return;
        }
        if i == types.len() {
            if chosen.is_empty() {
                return;
            }
            let mut level = chosen.clone();
            level.sort_unstable();
            levels.push(level);
            let n = levels.len();
            let s = Support { l0, levels };
            if self.opts.use_s7 && n >= 2 && !s.chains_ok(n) {
                // lower levels are fixed from here on, so this never recovers
                self.prune(&s, Constraint::S7);
            } else {
                self.dfs(l0, levels, spent);
            }
            levels.pop();
            return;
        }
        let (a, b) = types[i];
        let c = self.cost(levels.len() + 1, a, b);
        if spent + c <= self.n {
            chosen.push((a, b));
            self.subsets(l0, levels, types, i + 1, chosen, spent + c);
            chosen.pop();
        }
        self.subsets(l0, levels, types, i + 1, chosen, spent);
    }
}

pub fn feasible(n: u64, r: u64) -> Result<Verdict, SolverError> {
    feasible_with(n, r, &SolverOptions::default())
}

/// Exhaustive search over supports: level-0 degree sets `⊆ [2, ⌊√N⌋]`,
/// then contiguous nonempty levels, each at most `N/r` deep since every
/// block costs at least `r`. Every certificate is re-checked by
/// [`check_profile`].
pub fn feasible_with(n: u64, r: u64, opts: &SolverOptions) -> Result<Verdict, SolverError> {
    if r == 0 || n == 0 {
        return Err(SolverError::ZeroArgument);
    }
    if !n.is_multiple_of(r) {
        return Err(SolverError::InvalidInput(format!("group order {r} does not divide {n}")));
    }
    let mut ds: Vec<u64> = (2..).take_while(|d| d * d <= n).collect();
    if opts.order == SearchOrder::Descending {
        ds.reverse();
    }
    let mut search =
        Search { n, r, opts: *opts, stats: SearchStats::default(), trace: Vec::new(), omitted: 0, found: None };

    let mut l0_sets: Vec<(Vec<u64>, u64)> = Vec::new();
    for mask in 1u64..(1u64 << ds.len()) {
        let set: Vec<u64> = ds.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d).collect();
        let cost = r + set.iter().map(|&d| lcm(d * d, r)).sum::<u64>();
        if cost <= n {
            l0_sets.push((set, cost));
        }
    }
    // smaller sets first, then by position in `ds`
    l0_sets.sort_by_key(|(set, _)| (set.len(), set.iter().map(|d| ds.iter().position(|x| x == d).unwrap()).collect::<Vec<_>>()));
    if l0_sets.is_empty() {
        let s = Support { l0: &[], levels: &[] };
        search.prune(&s, Constraint::S4);
    }
    for (set, cost) in &l0_sets {
        search.dfs(set, &mut Vec::new(), *cost);
        if search.found.is_some() {
            break;
        }
    }
    let sat = search.found.is_some();
    let (trace, omitted) = if sat { (Vec::new(), 0) } else { (search.trace, search.omitted) };
    Ok(Verdict { dim: n, r, sat, certificate: search.found, trace, trace_omitted: omitted, stats: search.stats })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub t: u64,
    pub dim: u64,
    pub guard: bool,
    pub verdict: Verdict,
}

pub fn sweep(r: u64, t_max: u64) -> Result<Vec<SweepRow>, SolverError> {
    sweep_with(r, t_max, &SolverOptions::default(), None)
}

/// Rows for `N = t·r`, `t ∈ [1, t_max]`, ascending in `t` whatever the
/// number of worker threads.
pub fn sweep_with(r: u64, t_max: u64, opts: &SolverOptions, jobs: Option<usize>) -> Result<Vec<SweepRow>, SolverError> {
    if r == 0 {
        return Err(SolverError::ZeroArgument);
    }
    let run = || {
        (1..=t_max)
            .into_par_iter()
            .map(|t| {
                let dim = t * r;
                Ok(SweepRow { t, dim, guard: no_skew_primitive_guard(dim, r)?, verdict: feasible_with(dim, r, opts)? })
            })
            .collect::<Result<Vec<_>, SolverError>>()
    };
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| SolverError::InvalidInput(e.to_string()))?
            .install(run),
        None => run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_form_is_found() {
        let v = feasible(20, 2).unwrap();
        assert!(v.sat);
        let p = v.certificate.unwrap();
        assert_eq!(p.get(1, 2, 1), 4);
        assert_eq!(p.get(2, 1, 1), 2);
        assert_eq!(p.get(2, 2, 2), 4);
    }

    #[test]
    fn small_unsat_has_a_trace() {
        let v = feasible(22, 2).unwrap();
        assert!(!v.sat);
        assert!(!v.trace.is_empty());
        let v = feasible(4, 2).unwrap();
        assert!(!v.sat && v.trace[0].constraint == Constraint::S4);
    }

    #[test]
    fn exception_at_95_uses_a_level_zero_5_block() {
        let v = feasible(95, 5).unwrap();
        assert!(v.sat);
        assert_eq!(v.certificate.unwrap().get(0, 5, 5), 25);
    }

    #[test]
    fn bad_input() {
        assert!(matches!(feasible(7, 2), Err(SolverError::InvalidInput(_))));
        assert_eq!(feasible(4, 0), Err(SolverError::ZeroArgument));
    }
}
