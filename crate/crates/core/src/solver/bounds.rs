use serde::Serialize;

use super::{lcm, SolverError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub r: u64,
    pub value: u64,
    /// Smallest minimizing `d`.
    pub argmin_d: u64,
    /// Every minimizing `d`, ascending.
    pub ties: Vec<u64>,
}

/// Dimension of the basic block `L_{r,d1,d2}`.
pub fn basic_block_dim(r: u64, d1: u64, d2: u64) -> Result<u64, SolverError> {
    if r == 0 || d1 == 0 || d2 == 0 {
        return Err(SolverError::ZeroArgument);
    }
    Ok(match (d1, d2) {
        (1, 1) => r,
        (1, d) | (d, 1) => 2 * d * r,
        _ => lcm(d1 * d2, r),
    })
}

/// `dim L(r, d) = 2f(r,1,1) + 2f(r,d,d) + f(r,d,1) = (2d+2)r + 2lcm(d²,r)`.
pub fn minimal_form_dim(r: u64, d: u64) -> Result<u64, SolverError> {
    if d < 2 {
        return Err(SolverError::InvalidInput(format!("minimal form needs d > 1, got {d}")));
    }
    Ok(2 * basic_block_dim(r, 1, 1)? + 2 * basic_block_dim(r, d, d)? + basic_block_dim(r, d, 1)?)
}

/// Minimum of `minimal_form_dim(r, d)` over `d > 1`. Since the value is at
/// least `2d²`, the search stops once `2d²` exceeds the `d = 2` value.
pub fn theorem1_bound(r: u64) -> Result<Bounds, SolverError> {
    if r == 0 {
        return Err(SolverError::ZeroArgument);
    }
    let cap = minimal_form_dim(r, 2)?;
    let mut best = cap;
    let mut ties = vec![2];
    let mut d = 3;
    while 2 * d * d <= cap {
        let v = minimal_form_dim(r, d)?;
        if v < best {
            best = v;
            ties = vec![d];
        } else if v == best {
            ties.push(d);
        }
        d += 1;
    }
    Ok(Bounds { r, value: best, argmin_d: ties[0], ties })
}

/// `gcd(r, N/r) = 1`, under which a Hopf algebra of dimension `N` with
/// `|G| = r` has no nontrivial skew-primitives.
pub fn no_skew_primitive_guard(n: u64, r: u64) -> Result<bool, SolverError> {
    if r == 0 || !n.is_multiple_of(r) {
        return Err(SolverError::InvalidInput(format!("group order {r} does not divide {n}")));
    }
    Ok(num_integer::gcd(r, n / r) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(basic_block_dim(3, 1, 1), Ok(3));
        assert_eq!(basic_block_dim(3, 2, 1), Ok(12));
        assert_eq!(basic_block_dim(5, 5, 5), Ok(25));
        assert_eq!(basic_block_dim(0, 1, 1), Err(SolverError::ZeroArgument));
        assert_eq!(minimal_form_dim(3, 2), Ok(42));
        assert_eq!(minimal_form_dim(3, 4), Ok(126));
        assert_eq!(minimal_form_dim(2, 2), Ok(20));
        let b = theorem1_bound(3).unwrap();
        assert_eq!((b.value, b.argmin_d, b.ties), (42, 2, vec![2, 3]));
        assert_eq!(theorem1_bound(2).unwrap().value, 20);
        assert_eq!(theorem1_bound(1).unwrap().value, 14);
        assert_eq!(no_skew_primitive_guard(60, 5), Ok(true));
        assert_eq!(no_skew_primitive_guard(36, 3), Ok(false));
        assert_eq!(no_skew_primitive_guard(30, 15), Ok(true));
        assert!(no_skew_primitive_guard(31, 5).is_err());
    }
}
