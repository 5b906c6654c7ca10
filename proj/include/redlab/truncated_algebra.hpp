#pragma once

// Exact linear algebra in the Artinian quotient
//
//     A = Q[x_1..x_d] / ((f) + m^N)
//
// and the verification engine built on it.  Every ideal statement is
// reduced to subspace membership in A and lifted back to the local ring
// with Nakayama's lemma:
//
//   * if m^{d0} ⊆ b (in the local ring R/(f)) and N >= d0, then a ⊆ b iff
//     the image of a in A lies in the image of b;
//   * if m^{d0} ⊆ a and N >= d0 + 1, then a ⊆ b + m a + m^N ⊆ b + m a, so
//     a ⊆ b.

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "redlab/ring.hpp"

namespace redlab {

/// Sparse coordinate vector: (column, coefficient) pairs with strictly
/// increasing columns and no zero coefficients.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// Subspace of Q^n kept in echelon form.  The pivot of a row is its highest
/// column and is normalized to 1; no two rows share a pivot.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }

  /// Remainder of v after eliminating every pivot column; canonical for the
  /// coset v + span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  /// Adds v to the span.  Returns the new (reduced, normalized) row, or
  /// nullopt when v was already a member.
  std::optional<SparseVector> insert(const SparseVector& v);

  /// Rows sorted by increasing pivot column.
  std::vector<SparseVector> echelon_rows() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<std::int32_t> pivot_row_;
};

class TruncatedAlgebra;

/// Image of an ideal in A, stored as its preimage in Q[x]/m^N (which always
/// contains the relation subspace).
class IdealImage {
 public:
  const Subspace& span() const { return span_; }
  /// dim_Q of the image inside A.
  std::size_t dimension() const { return span_.dimension() - relation_rank_; }
  bool contains(const PolyElement& p) const;
  bool contains(const SparseVector& v) const { return span_.contains(v); }

 private:
  friend class TruncatedAlgebra;
  IdealImage(const TruncatedAlgebra* algebra, Subspace span, std::size_t relation_rank)
      : algebra_(algebra), span_(std::move(span)), relation_rank_(relation_rank) {}

  const TruncatedAlgebra* algebra_;
  Subspace span_;
  std::size_t relation_rank_;
};

class TruncatedAlgebra {
 public:
  /// Throws ConfigurationError for order 0 and HypothesisError for a zero
  /// relation or one with non-zero constant term.
  static TruncatedAlgebra build(std::size_t nvars, unsigned order,
                                std::optional<PolyElement> relation = std::nullopt);

  std::size_t nvars() const { return nvars_; }
  unsigned truncation_order() const { return order_; }
  const std::optional<PolyElement>& relation() const { return relation_; }

  /// Monomials of degree < N sorted by (degree, lex).
  const std::vector<ExponentVector>& basis() const { return basis_; }
  std::optional<std::uint32_t> index_of(const ExponentVector& e) const;
  const Subspace& relation_subspace() const { return relation_span_; }
  /// dim_Q A
  std::size_t dimension() const { return basis_.size() - relation_span_.dimension(); }

  /// Coordinates of the part of p of degree < N.
  SparseVector truncate(const PolyElement& p) const;
  /// Truncation followed by reduction modulo the relation subspace.
  SparseVector normal_form(const PolyElement& p) const;
  PolyElement to_poly(const SparseVector& v) const;
  /// x_var * v with terms of degree >= N dropped.
  SparseVector multiply_by_variable(const SparseVector& v, std::size_t var) const;

  /// Image in A of the ideal generated by gens (together with (f)).
  IdealImage ideal_image(std::span<const PolyElement> gens) const;

 private:
  TruncatedAlgebra() = default;
  Subspace close_under_variables(Subspace start, std::vector<SparseVector> seeds) const;

  std::size_t nvars_ = 0;
  unsigned order_ = 0;
  std::optional<PolyElement> relation_;
  std::vector<ExponentVector> basis_;
  std::unordered_map<ExponentVector, std::uint32_t, ExponentVectorHash> index_;
  std::vector<std::vector<std::int32_t>> shift_;  // shift_[var][col], -1 when truncated
  Subspace relation_span_;
};

/// {x_i * g : i, g}
std::vector<PolyElement> times_maximal_ideal(std::span<const PolyElement> gens, std::size_t nvars);

/// Outcome of a containment or equation check.  `unreached` lists indices of
/// generators that failed membership (empty on success).
struct Verdict {
  bool holds = false;
  unsigned truncation_order = 0;
  unsigned d0 = 0;
  std::vector<std::size_t> unreached;
};

/// a ⊆ b by the Nakayama pattern; d0_a must satisfy m^{d0_a} ⊆ (a) in the
/// local ring and A must have N >= d0_a + 1.
Verdict verify_containment(const TruncatedAlgebra& algebra, std::span<const PolyElement> a_gens,
                           std::span<const PolyElement> b_gens, unsigned d0_a);

/// a ⊆ b where m^{d0_b} ⊆ (b); needs N >= d0_b.
Verdict verify_containment_in_primary(const TruncatedAlgebra& algebra,
                                      std::span<const PolyElement> a_gens,
                                      std::span<const PolyElement> b_gens, unsigned d0_b);

/// m^degree ⊆ (a), certified from m^degree ⊆ a + m^{degree+1}.  Needs
/// N >= degree + 1.
bool verify_m_power(const TruncatedAlgebra& algebra, std::span<const PolyElement> a_gens,
                    unsigned degree);

/// Smallest d <= cap with m^d ⊆ (a) in Q[x]/(f) localized at the origin,
/// found by running verify_m_power for d = 0, 1, 2, ...
std::optional<unsigned> find_m_power(std::size_t nvars, const std::optional<PolyElement>& relation,
                                     std::span<const PolyElement> a_gens, unsigned cap);

/// One summand (x_1, ..., x_r) * (ideal_gens) of a reduction equation.
struct Summand {
  std::vector<PolyElement> elements;
  std::vector<PolyElement> ideal_gens;
};

/// Certifies target = sum_i (elements_i) * (ideal_i) in the local ring.
/// d0 must satisfy m^{d0} ⊆ (target); A needs N >= d0 + 1.  Throws
/// InvalidSummandError when a summand element is a unit or some product
/// falls outside the target.
Verdict verify_reduction_equation(const TruncatedAlgebra& algebra,
                                  std::span<const PolyElement> target_gens,
                                  std::span<const Summand> summands, unsigned d0);

/// dim (gens)/m(gens) in the local ring; needs N >= d0 + 2.
std::size_t mu_in_quotient(const TruncatedAlgebra& algebra, std::span<const PolyElement> gens,
                           unsigned d0);

}  // namespace redlab
