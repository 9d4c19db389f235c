mod checks;
mod foliation;
mod multiplicity;
mod profile;

pub use foliation::{is_invariant, Cofactor, LocalFoliation};
pub use multiplicity::{
    branch_multiplicities, mult_along_branch, mult_along_branch_identity, mult_along_curve,
    mult_along_divisor, SepDivisor,
};
pub use profile::{
    chi, curve_data, gsv, gsv_polar, polar_numbers, profile, theta_residual, Chi, CurveData, CurveProfile,
    PieceData, PieceFoliation,
};
pub use checks::{
    adjunction_suite, check_almiron, check_branch_sum_inequality, check_chi_sign, check_coroq,
    check_divisor_split, check_iguales, check_milnor_order, check_prop1, check_ratio_bound,
    check_tjurina_positive, curve_checks, divisor_checks, divisor_profile, DivisorProfile,
    IdentityVerdict, Relation, Status,
};
