//! Benchmarks for the exact kernels, the construction routes and the check suite live under `benches/`.
