//! Numerical semigroups, their quotients, and quotient-rank certificates.

mod budget;
mod error;
pub mod explore;
pub mod families;
pub mod quotient;
pub mod rank;
mod semigroup;

#[cfg(test)]
mod oracle;

pub use budget::SearchBudget;
pub use error::{Error, Result};
pub use families::FamilyInstance;
pub use quotient::{
    add, quotient, quotient_sum_coprime, quotient_sum_superset, scale, verify_rep, QuotientRep,
};
pub use rank::{quotient_rank_bounds, RankBounds, RankCertificate};
pub use semigroup::{GeneratorList, NumericalSemigroup, MAX_APERY_LEN};
