//! Size bounds. Exceeding a bound is a hard error, never silent truncation.

use std::sync::OnceLock;

/// Largest symmetric group rank for which group algebra elements may be
/// densified (8! = 40320 terms).
pub const MAX_GROUP_T: usize = 8;

/// Default bound on `t = |lambda|` for the highest-weight-vector builders.
pub const DEFAULT_CONSTRUCTION_T: usize = 6;

/// Monomial-space cap for the brute-force kernel oracles.
pub const MAX_BRUTE_FORCE_MONOMIALS: usize = 200_000;

/// Character table bound on `t`.
pub const MAX_CHARACTER_T: usize = 10;

/// Size bounds for the nilpotent-cone brute-force oracle.
pub const MAX_NILCONE_N: usize = 4;
pub const MAX_NILCONE_D: usize = 6;

static CONSTRUCTION_T: OnceLock<usize> = OnceLock::new();

/// Bound on `t` for the polynomial constructions. `HWV_MAX_T` overrides the
/// default; read once per process.
pub fn max_construction_t() -> usize {
    *CONSTRUCTION_T.get_or_init(|| {
        std::env::var("HWV_MAX_T")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_CONSTRUCTION_T)
    })
}
