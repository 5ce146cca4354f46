//! Exceptional roots of Alexander polynomials of trigonal curves: a
//! resultant sieve over the Burau representation, coset enumeration of
//! universal subgroups and genus filtering of their skeletons.

pub mod burau;
pub mod exactalg;
pub mod intersect;
pub mod sieve;
pub mod skeleton;
pub mod table;
pub mod typesys;
