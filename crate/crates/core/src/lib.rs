pub mod class;
pub mod cli;
pub mod dynkin;
pub mod error;
pub mod field;
pub mod hall;
pub mod linalg;
pub mod orbits;
pub mod poly;
pub mod repkit;
