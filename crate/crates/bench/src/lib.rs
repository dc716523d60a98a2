//! Criterion benchmarks for `recipsum-core`; see `benches/`.
