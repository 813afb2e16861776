#pragma once

namespace pas {

// Execution policy for the data-parallel kernels.  Every kernel has a plain
// serial path that produces bit-identical results to the OpenMP path; tests
// compare the two and the benchmark tool measures them against each other.
enum class Exec { serial, openmp };

int max_threads();
void set_threads(int n);  // n <= 0 restores the OpenMP default

}  // namespace pas
