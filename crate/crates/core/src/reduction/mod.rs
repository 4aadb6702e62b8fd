//! Reduction pipeline (in progress).
