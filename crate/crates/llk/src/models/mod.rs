//! The three concrete models: FinSet, finite coherence spaces, and the
//! relational model with a degree-truncated multiset exponential.

pub mod coh;
pub mod common;
pub mod finset;
pub mod rel;

/// JSON description of an object, for report artifacts.
pub trait ModelObj: crate::cat::Cat {
    fn describe(&self, o: &Self::O) -> serde_json::Value;
}
pub mod hosts;
