//! Exhaustive checker for finite categories, monads on them, and the
//! double- and triple-category constructions built from Kleisli arrows,
//! split monos, and split epis.
//!
//! Everything is a closed table: categories store their full composition
//! tables, monads their unit and multiplication components, and every law
//! is checked by enumeration. All values are immutable after construction
//! and every operation is a pure function.

pub mod corpus;
pub mod double;
pub mod enumerate;
pub mod fincat;
pub mod io;
pub mod iterate;
pub mod monad;
pub mod nerve;
pub mod report;

pub use fincat::{FinCat, Functor, MorId, NatTrans, ObjId};
pub use monad::{DistributiveLaw, KlTwoCell, Monad, MonadMorphism, MonadTwoCell};
pub use report::{Finding, Report, Status, ValidationReport};
