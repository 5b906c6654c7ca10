#pragma once

#include <vector>

#include "redlab/ring.hpp"

namespace redlab {

/// Dense row-major rational matrix used by the feasibility kernel.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Decides whether {x >= 0 : A x = b} is non-empty, exactly.
///
/// Phase-one simplex with one artificial variable per row and Bland's
/// smallest-index rule, so the pivot sequence is deterministic and
/// terminates.  Rows with negative right-hand side are negated first.
bool standard_form_feasible(const RationalMatrix& a, std::vector<Rational> b);

/// Whether e ∈ conv(points) + R_{>=0}^d.
bool in_upper_hull(std::span<const ExponentVector> points, const ExponentVector& e);

}  // namespace redlab
