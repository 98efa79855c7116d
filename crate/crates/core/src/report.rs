//! Serializable summaries and plain-text renderings of analysis results,
//! rule reports and solver verdicts. Text and machine output are built from
//! the same summary values, so they always carry the same numbers.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use crate::exactlin::Field;
use crate::filtration::{Analysis, BlockSystem};
use crate::rules::{RuleReport, Verdict as RuleVerdict};
use crate::solver::{Bounds, SweepRow, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockEntry {
    pub level: usize,
    pub d1: usize,
    pub d2: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityEntry {
    pub level: usize,
    pub tau: usize,
    pub mu: usize,
    pub multiplicity: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentEntry {
    pub index: usize,
    pub d: usize,
    pub group_like: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSystemSummary {
    pub dim: usize,
    pub blocks: Vec<BlockEntry>,
    pub multiplicities: Vec<MultiplicityEntry>,
}

impl BlockSystemSummary {
    pub fn new(bs: &BlockSystem) -> Self {
        let blocks = bs.block_dims.iter().map(|(&(level, d1, d2), &dim)| BlockEntry { level, d1, d2, dim }).collect();
        let multiplicities = bs
            .q_multiplicities
            .iter()
            .map(|(&(level, tau, mu), &multiplicity)| MultiplicityEntry {
                level,
                tau,
                mu,
                multiplicity,
                dim: bs.q_dim(level, tau, mu),
            })
            .collect();
        BlockSystemSummary { dim: bs.dim, blocks, multiplicities }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisSummary {
    pub dim: usize,
    pub length: usize,
    pub coradical_dims: Vec<usize>,
    pub radical_power_dims: Vec<usize>,
    pub p_space_dims: Vec<usize>,
    pub simple_subcoalgebras: Vec<ComponentEntry>,
    pub group_likes: usize,
    pub block_system: BlockSystemSummary,
}

impl AnalysisSummary {
    pub fn new<F: Field>(a: &Analysis<F>) -> Self {
        let bs = &a.block_system;
        AnalysisSummary {
            dim: bs.dim,
            length: a.filtration.length,
            coradical_dims: a.filtration.dims(),
            radical_power_dims: a.filtration.radical_powers.iter().map(|s| s.dim()).collect(),
            p_space_dims: a.p_spaces.iter().map(|s| s.dim()).collect(),
            simple_subcoalgebras: bs
                .components
                .iter()
                .map(|c| ComponentEntry { index: c.index, d: c.d, group_like: c.group_like })
                .collect(),
            group_likes: bs.group_order(),
            block_system: BlockSystemSummary::new(bs),
        }
    }
}

fn list(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Level-by-degree table of block dimensions; `.` marks a zero block.
pub fn block_table(bs: &BlockSystem) -> String {
    let pairs: BTreeSet<(usize, usize)> = bs.block_dims.keys().map(|&(_, a, b)| (a, b)).collect();
    let headers: Vec<String> = pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
    let width = headers.iter().map(String::len).chain(bs.block_dims.values().map(|v| v.to_string().len())).max().unwrap_or(1);
    let mut out = String::new();
    let _ = write!(out, "{:>5}", "n");
    for h in &headers {
        let _ = write!(out, "  {h:>width$}");
    }
    out.push('\n');
    for n in 0..=bs.max_level() {
        let _ = write!(out, "{n:>5}");
        for &(a, b) in &pairs {
            let v = bs.block(n, a, b);
            let cell = if v == 0 { ".".to_string() } else { v.to_string() };
            let _ = write!(out, "  {cell:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn analysis_text(s: &AnalysisSummary, bs: &BlockSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dimension: {}", s.dim);
    let _ = writeln!(out, "coradical filtration dims: {}", list(&s.coradical_dims));
    let _ = writeln!(out, "radical power dims: {}", list(&s.radical_power_dims));
    let _ = writeln!(out, "length: {}", s.length);
    let _ = writeln!(out, "P_n dims: {}", list(&s.p_space_dims));
    let ds: Vec<usize> = s.simple_subcoalgebras.iter().map(|c| c.d).collect();
    let _ = writeln!(out, "simple subcoalgebras: {} (d = {}), group-likes: {}", ds.len(), list(&ds), s.group_likes);
    let _ = writeln!(out, "blocks:");
    for b in &s.block_system.blocks {
        let _ = writeln!(out, "  B({},{},{}) = {}", b.level, b.d1, b.d2, b.dim);
    }
    let _ = writeln!(out, "multiplicities:");
    for m in &s.block_system.multiplicities {
        let _ = writeln!(out, "  Q({},{},{}) = {} x {}", m.level, m.tau, m.mu, m.multiplicity, m.dim / m.multiplicity.max(1));
    }
    let _ = writeln!(out, "block table:");
    out.push_str(&block_table(bs));
    out
}

pub fn rules_text(reports: &[RuleReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = match r.verdict {
            RuleVerdict::Pass => "pass",
            RuleVerdict::Fail => "FAIL",
            RuleVerdict::NotApplicable => "n/a",
        };
        let _ = write!(out, "{:<8} {:<5} checks={}", r.rule.name(), verdict, r.checks);
        if let Some(w) = &r.witness {
            let _ = write!(out, "  witness: {w}");
        }
        if let Some(n) = &r.note {
            let _ = write!(out, "  ({n})");
        }
        out.push('\n');
    }
    out
}

pub fn bounds_text(b: &Bounds) -> String {
    let ties: Vec<String> = b.ties.iter().map(|d| d.to_string()).collect();
    format!("r = {}: bound {} at d = {} (minimizing d: {})\n", b.r, b.value, b.argmin_d, ties.join(", "))
}

pub fn verdict_text(v: &Verdict, guard: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "N = {}, r = {}: {}", v.dim, v.r, if v.sat { "SAT" } else { "UNSAT" });
    let _ = writeln!(out, "no-skew-primitive guard gcd(r, N/r) = 1: {guard}");
    let pruned: Vec<String> = v.stats.pruned.iter().map(|(c, k)| format!("{c}:{k}")).collect();
    let _ = writeln!(out, "nodes: {}  pruned: {}", v.stats.nodes, pruned.join(" "));
    if let Some(p) = &v.certificate {
        let _ = writeln!(out, "certificate:");
        for (&(n, a, b), d) in &p.entries {
            let _ = writeln!(out, "  B({n},{a},{b}) = {d}");
        }
    } else {
        let _ = writeln!(out, "trace ({} shown, {} omitted):", v.trace.len(), v.trace_omitted);
        for t in &v.trace {
            let _ = writeln!(out, "  {}  {}", t.constraint, t.branch);
        }
    }
    out
}

pub fn sweep_text(r: u64, rows: &[SweepRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>4} {:>6} {:>6} {:>6}  certificate", "t", "N", "result", "guard");
    for row in rows {
        let cert = row.verdict.certificate.as_ref().map(|p| p.to_string()).unwrap_or_default();
        let result = if row.verdict.sat { "SAT" } else { "UNSAT" };
        let line = format!("{:>4} {:>6} {:>6} {:>6}  {cert}", row.t, row.dim, result, row.guard);
        let _ = writeln!(out, "{}", line.trim_end());
    }
    let unsat: Vec<String> = rows.iter().filter(|r| !r.verdict.sat).map(|r| r.t.to_string()).collect();
    let _ = writeln!(out, "r = {r}: UNSAT at t = {}", unsat.join(","));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_layout() {
        let bs = BlockSystem::from_blocks([((0, 1, 1), 2), ((1, 1, 1), 2)]);
        assert_eq!(block_table(&bs), "    n  (1,1)\n    0      2\n    1      2\n");
    }
}
