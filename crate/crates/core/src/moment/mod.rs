//! Moment-map geometry (in progress).
