//! Criterion benchmarks for `qkak-core`; see `benches/`.
