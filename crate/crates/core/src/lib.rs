pub mod algebra;
pub mod campaign;
pub mod cyclic;
pub mod error;
pub mod group;
pub mod iso;
pub mod lie;
pub mod properties;
pub mod report;
pub mod units;
pub mod subspace;
pub mod table;
pub mod wreath;
