//! Summability (to come).
