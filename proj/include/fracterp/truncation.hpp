#pragma once

#include <cstddef>
#include <stdexcept>

namespace fracterp {

// Stopping rule for every infinite series in the library: hard term cap plus
// a tail window (the series is declared converged once `tail_window`
// consecutive terms fall below `abs_tol`).
struct TruncationPolicy {
  int max_terms = 200;
  double abs_tol = 1e-12;
  int tail_window = 3;

  void validate() const {
    if (max_terms < 1) throw std::invalid_argument("TruncationPolicy: max_terms must be >= 1");
    if (tail_window < 1) throw std::invalid_argument("TruncationPolicy: tail_window must be >= 1");
    if (abs_tol < 0.0) throw std::invalid_argument("TruncationPolicy: abs_tol must be >= 0");
  }
};

// Convergence diagnostics attached to a truncated-series result. A result is
// always produced; `converged == false` means the tail estimate was still
// above the policy tolerance when the term cap was reached.
struct Convergence {
  bool converged = true;
  int terms_used = 0;
  double tail_estimate = 0.0;
};

template <typename T>
struct SeriesResult {
  T value{};
  Convergence diag{};
};

}  // namespace fracterp
