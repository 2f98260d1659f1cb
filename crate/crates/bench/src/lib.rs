//! Criterion benchmarks for spinor-core live under `benches/`.
