//! Acceptance criteria for the workspace live in `tests/acceptance.rs`:
//!
//! ```text
//! cargo test -p cylinder-verification --test acceptance
//! ```
//!
//! The target prints one PASS/FAIL line per criterion and exits nonzero if
//! any criterion fails.
