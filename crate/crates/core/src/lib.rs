pub mod arith;
pub mod classify;
pub mod dynkin;
pub mod error;
pub mod lattice;
pub mod rootsys;
pub mod slnm;
pub mod verify;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, CartanType, RootSystem, TypeLetter, Weight};
