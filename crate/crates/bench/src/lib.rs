//! Benchmarks for the cherednik kernel live in `benches/`.
