//! Cut elimination (to come).
