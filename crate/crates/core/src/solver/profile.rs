use std::collections::{BTreeMap, BTreeSet};

use serde::{Serialize, Serializer};

use super::{lcm, quantum, Constraint, SolverOptions};

/// Nonzero block dimensions `(n, d1, d2) → dim`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Profile {
    pub entries: BTreeMap<(usize, u64, u64), u64>,
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            level: usize,
            d1: u64,
            d2: u64,
            dim: u64,
        }
        s.collect_seq(self.entries.iter().map(|(&(level, d1, d2), &dim)| Entry { level, d1, d2, dim }))
    }
}

impl Profile {
    pub fn get(&self, n: usize, a: u64, b: u64) -> u64 {
        self.entries.get(&(n, a, b)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, n: usize, a: u64, b: u64, v: u64) {
        if v > 0 {
            *self.entries.entry((n, a, b)).or_insert(0) += v;
        }
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn max_level(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(&(n, a, b), v)| format!("B({n},{a},{b})={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileViolation {
    pub constraint: Constraint,
    pub detail: String,
}

/// Checks `p` against S0–S9 directly from their statements. Shares no code
/// with the search beyond the divisibility quantum.
pub fn check_profile(p: &Profile, n_total: u64, r: u64, opts: &SolverOptions) -> Result<(), ProfileViolation> {
    let fail = |constraint, detail: String| Err(ProfileViolation { constraint, detail });
    let nz = |n: usize, a: u64, b: u64| p.get(n, a, b) > 0;
    let top = p.max_level();
    let degrees: BTreeSet<u64> = p.entries.keys().flat_map(|&(_, a, b)| [a, b]).collect();

    if let Some((k, _)) = p.entries.iter().find(|(_, &v)| v == 0) {
        return fail(Constraint::S9, format!("zero entry stored at {k:?}"));
    }

    // S0
    if p.get(0, 1, 1) != r {
        return fail(Constraint::S0, format!("B(0,1,1) = {} != r = {r}", p.get(0, 1, 1)));
    }
    for (&(n, a, b), &v) in &p.entries {
        if n == 0 && a != b {
            return fail(Constraint::S0, format!("off-diagonal level-0 block B(0,{a},{b})"));
        }
        if n == 0 && a > 1 && v % lcm(a * a, r) != 0 {
            return fail(Constraint::S0, format!("lcm({a}^2,{r}) does not divide B(0,{a},{a}) = {v}"));
        }
        if n > 0 {
            for d in [a, b] {
                if d > 1 && !nz(0, d, d) {
                    return fail(Constraint::S0, format!("B({n},{a},{b}) uses degree {d} but B(0,{d},{d}) = 0"));
                }
            }
        }
    }

    // S1
    for (&(n, a, b), &v) in p.entries.iter().filter(|(k, _)| k.0 > 0) {
        let q = quantum(n, a, b, r, opts.strict_level1_divisibility);
        if v % q != 0 {
            return fail(Constraint::S1, format!("{q} does not divide B({n},{a},{b}) = {v}"));
        }
    }

    // S2
    for (&(n, a, b), &v) in &p.entries {
        if p.get(n, b, a) != v {
            return fail(Constraint::S2, format!("B({n},{a},{b}) = {v} but B({n},{b},{a}) = {}", p.get(n, b, a)));
        }
    }

    // S3
    if nz(1, 1, 1) {
        return fail(Constraint::S3, "B(1,1,1) > 0".into());
    }

    // S4
    let ones: Vec<usize> = (1..=top).filter(|&n| nz(n, 1, 1)).collect();
    let Some(&m) = ones.last() else {
        return fail(Constraint::S4, "no B(m,1,1) with m >= 1".into());
    };
    if m < 2 {
        return fail(Constraint::S4, "no B(m,1,1) with m > 1".into());
    }
    let necessary = degrees.iter().filter(|&&d| d > 1).any(|&d| nz(0, d, d) && nz(1, d, 1) && (2..=top).any(|k| nz(k, d, d)));
    if !necessary {
        return fail(Constraint::S4, "no d > 1 with B(0,d,d), B(1,d,1) and some B(k,d,d), k > 1".into());
    }

    // S5
    if p.get(m, 1, 1) != r {
        return fail(Constraint::S5, format!("B({m},1,1) = {} != r = {r}", p.get(m, 1, 1)));
    }

    // S6
    if opts.use_s6 {
        let mut ls: Vec<usize> = ones.iter().copied().filter(|&l| l > 1 && l < m).collect();
        if opts.s6_min_only {
            ls.truncate(1);
            if ones[0] < 2 {
                ls.clear();
            }
        }
        let big: Vec<u64> = degrees.iter().copied().filter(|&d| d > 1).collect();
        for l in ls {
            let fed = (l + 1..=top).any(|lp| {
                big.iter().any(|&d1| nz(lp, d1, 1) && big.iter().any(|&d3| nz(lp - 1, d1, d3)))
                    && big.iter().any(|&d2| nz(lp, 1, d2) && big.iter().any(|&d4| nz(lp - 1, d4, d2)))
            });
            if !fed {
                return fail(Constraint::S6, format!("B({l},1,1) with 1 < {l} < m = {m} is not fed from a higher level"));
            }
        }
    }

    // S7
    if opts.use_s7 {
        for &(n, a, b) in p.entries.keys().filter(|k| k.0 > 1) {
            for i in 1..n {
                if !degrees.iter().any(|&c| nz(i, a, c) && nz(n - i, c, b)) {
                    return fail(Constraint::S7, format!("B({n},{a},{b}) has no chain through level {i}"));
                }
            }
        }
    }

    // S8
    if opts.use_s8 {
        for &(n, a, b) in p.entries.keys().filter(|k| k.0 > 0 && k.1 != k.2) {
            let left = (n + 1..=top).any(|l| degrees.iter().any(|&d3| nz(l, a, d3)));
            let right = (n + 1..=top).any(|l| degrees.iter().any(|&d4| nz(l, d4, b)));
            if !left || !right {
                return fail(Constraint::S8, format!("B({n},{a},{b}) does not escalate"));
            }
        }
    }

    // S9
    if p.total() != n_total {
        return fail(Constraint::S9, format!("entries sum to {} != {n_total}", p.total()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l22() -> Profile {
        let mut p = Profile::default();
        for (k, v) in [((0, 1, 1), 2), ((0, 2, 2), 4), ((1, 2, 1), 4), ((1, 1, 2), 4), ((2, 1, 1), 2), ((2, 2, 2), 4)] {
            p.add(k.0, k.1, k.2, v);
        }
        p
    }

    #[test]
    fn minimal_form_is_valid() {
        assert_eq!(check_profile(&l22(), 20, 2, &SolverOptions::default()), Ok(()));
    }

    #[test]
    fn each_constraint_can_fail() {
        let opts = SolverOptions::default();
        let id = |p: &Profile, n| check_profile(p, n, 2, &opts).unwrap_err().constraint;
        let mut p = l22();
        p.add(0, 1, 1, 2);
        assert_eq!(id(&p, 22), Constraint::S0);
        let mut p = l22();
        p.add(1, 2, 1, 1);
        assert_eq!(id(&p, 21), Constraint::S1);
        let mut p = l22();
        p.add(1, 2, 1, 4);
        assert_eq!(id(&p, 24), Constraint::S2);
        let mut p = l22();
        p.add(1, 1, 1, 2);
        assert_eq!(id(&p, 22), Constraint::S3);
        let mut p = l22();
        p.entries.remove(&(2, 2, 2));
        assert_eq!(id(&p, 16), Constraint::S4);
        let mut p = l22();
        p.add(2, 1, 1, 2);
        assert_eq!(id(&p, 22), Constraint::S5);
        assert_eq!(id(&l22(), 22), Constraint::S9);
    }
}
