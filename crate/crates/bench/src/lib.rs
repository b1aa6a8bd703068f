//! Criterion benchmarks for series-order scaling; see `benches/`.
