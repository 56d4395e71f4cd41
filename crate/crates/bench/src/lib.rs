//! Criterion benchmarks for `resilat`; see `benches/`.
