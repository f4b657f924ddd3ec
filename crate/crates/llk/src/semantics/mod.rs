//! Interpretation (to come).
