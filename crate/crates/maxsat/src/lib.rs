//! MAX-k-SAT as a fitness landscape.
//!
//! A formula over `N` boolean variables in conjunctive normal form defines a
//! landscape on bit strings of length `N`: the fitness of an assignment is
//! the number of clauses it satisfies. Because that count is an integer,
//! neutral moves (flips that leave fitness unchanged) are exact, which makes
//! these landscapes the standard benchmark for neutrality measures.
//!
//! The crate provides:
//!
//! * [`CnfFormula`] and [`Literal`], a validated clause representation;
//! * [`InstanceSpec`], seeded generation of uniform random instances;
//! * DIMACS CNF reading and writing ([`read_dimacs`], [`write_dimacs`]);
//! * [`MaxSatLandscape`], which implements the landscape traits with an
//!   occurrence-list cursor so one-flip evaluation costs O(clauses touched)
//!   instead of O(total literals).

mod dimacs;
mod formula;
mod generate;
mod landscape;

pub use dimacs::{read_dimacs, write_dimacs, DimacsError};
pub use formula::{CnfFormula, Literal, MaxSatError};
pub use generate::InstanceSpec;
pub use landscape::MaxSatLandscape;
