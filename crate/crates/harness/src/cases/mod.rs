//! Registered identity cases, grouped by the function family they exercise.

pub mod fox_wright;
pub mod lerch;
pub mod mathieu;
