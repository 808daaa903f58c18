//! Benchmark-only crate; see benches/transform.rs.
