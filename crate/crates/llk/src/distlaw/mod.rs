//! Distributive laws (to come).
