//! Multiplicities of K-types of tempered (and standard) representations of
//! a family of real reductive matrix groups, computed two independent ways:
//!
//! * a geometric pipeline that evaluates the moment map of the relevant
//!   coadjoint orbit / homogeneous space G/H, solves the moment-fiber
//!   equation numerically, and applies a finite-group character criterion at
//!   point reduced spaces;
//! * classical branching oracles (Frobenius reciprocity for induced
//!   representations, Blattner's formula for discrete series, Kostant
//!   partition machinery for compact groups).
//!
//! Supported groups: SL(2,R), SL(2,C), SU(p,1) for p <= 3, SO0(p,1) for
//! p <= 4, and SO0(2,2). SU(2,2) is available for structure-level dimension
//! counts only.

pub mod cyclo;
pub mod exact;
pub mod lie;
pub mod moment;
pub mod numeric;
pub mod oracle;
pub mod params;
pub mod reduction;
