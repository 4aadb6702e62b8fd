//! Classical oracles (in progress).
