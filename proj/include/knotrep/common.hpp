#pragma once
// Shared basic types: error hierarchy, side tags, resource budgets.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotrep {

using cdouble = std::complex<double>;

// Thrown on malformed or unsupported input (bad PD code, multi-component
// braid closure, inconsistent orientation, ...).  CLI exit code 1.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a numeric stage fails to converge.  CLI exit code 2.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a symbolic stage exceeds its resource budget.  CLI exit code 3.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which side of an edge a region (or a label) sits on, relative to the
// edge orientation.
enum class Side : uint8_t { L, R };

inline char side_char(Side s) { return s == Side::L ? 'L' : 'R'; }
inline Side side_other(Side s) { return s == Side::L ? Side::R : Side::L; }

// Resource budget for symbolic computation.  Coefficient growth and term
// counts are checked inside polynomial multiplication and resultants.
struct Budget {
  std::size_t max_terms = 1u << 16;  // per polynomial
  long max_coeff_bits = 4096;        // per coefficient
};

// Process-wide budget used by the polynomial layer; the CLI overrides it
// from --budget-terms / --budget-bits.
Budget& global_budget();

}  // namespace knotrep
