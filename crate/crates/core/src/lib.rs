//! Nilpotent pairs, dual pairs and excellent sheets in semisimple Lie
//! algebras, computed with exact rational arithmetic.

pub mod catalog;
pub mod lie;
pub mod linalg;
pub mod pairs;
pub mod partition;
pub mod roots;
