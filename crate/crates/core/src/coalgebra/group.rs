use super::StructureError;

/// Finite group given by its multiplication table: `table[a * order + b]` is
/// the index of `a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    name: String,
}

impl FiniteGroup {
    /// Checks closure, associativity, identity and inverses.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<usize>) -> Result<Self, StructureError> {
        let bad = |msg: &str| Err(StructureError::InvalidGroup(msg.to_string()));
        if order == 0 || table.len() != order * order {
            return bad("table must be order x order");
        }
        if table.iter().any(|&x| x >= order) {
            return bad("table entry out of range");
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return bad("not associative");
                    }
                }
            }
        }
        let Some(identity) = (0..order).find(|&e| (0..order).all(|a| mul(e, a) == a && mul(a, e) == a)) else {
            return bad("no identity");
        };
        let mut inverses = Vec::with_capacity(order);
        for a in 0..order {
            match (0..order).find(|&b| mul(a, b) == identity) {
                Some(b) => inverses.push(b),
                None => return bad("missing inverse"),
            }
        }
        Ok(FiniteGroup { order, table, identity, inverses, name: name.into() })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|p| (p / n + p % n) % n).collect();
        Self::from_table(format!("cyclic({n})"), n, table).expect("cyclic group table")
    }

    /// S3 with elements 0 = e, 1 = r, 2 = r², 3 = s, 4 = sr, 5 = sr².
    pub fn symmetric3() -> Self {
        // encode r^i as (0, i) and s r^i as (1, i); r s = s r^{-1}
        let decode = |x: usize| (x / 3, x % 3);
        let encode = |(f, i): (usize, usize)| f * 3 + i;
        let mut table = vec![0; 36];
        for a in 0..6 {
            for b in 0..6 {
                let (fa, ia) = decode(a);
                let (fb, ib) = decode(b);
                // s^fa r^ia s^fb r^ib = s^(fa+fb) r^(±ia + ib)
                let ia = if fb == 1 { (3 - ia) % 3 } else { ia };
                table[a * 6 + b] = encode(((fa + fb) % 2, (ia + ib) % 3));
            }
        }
        Self::from_table("s3", 6, table).expect("S3 table")
    }

    /// Parses `cyclic(n)`, `cyclic:n`, `c<n>` or `s3`.
    pub fn by_name(name: &str) -> Option<Self> {
        let lower = name.trim().to_ascii_lowercase();
        if lower == "s3" {
            return Some(Self::symmetric3());
        }
        let digits = lower
            .strip_prefix("cyclic(")
            .and_then(|s| s.strip_suffix(')'))
            .or_else(|| lower.strip_prefix("cyclic:"))
            .or_else(|| lower.strip_prefix('c'))?;
        let n: usize = digits.parse().ok()?;
        (n >= 1).then(|| Self::cyclic(n))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }
}
