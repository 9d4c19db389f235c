//! Computation limits shared by every module.

/// Caps and the seed for generic choices. Every computation that could
/// run away checks one of these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest truncation degree tried by the colength engine.
    pub degree_cap: u32,
    /// Largest `t`-precision tried for Puiseux expansions.
    pub precision_cap: usize,
    /// Seed for generic coordinate changes and random suites.
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_cap: 200,
            precision_cap: 4096,
            seed: 20240601,
        }
    }
}
