//! Criterion benchmarks for the resultant and rich-point counting kernels.
