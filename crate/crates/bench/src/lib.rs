//! Benchmarks live in benches/; see `cargo bench -p lrc-bench`.
