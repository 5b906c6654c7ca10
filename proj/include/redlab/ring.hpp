#pragma once

// Exact arithmetic substrate: exponent vectors, grading multi-indices and
// sparse polynomials with arbitrary-precision rational coefficients.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "redlab/errors.hpp"

namespace redlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Fixed-length vector of non-negative integers.  The tag keeps exponent
/// vectors (length = number of variables) and grading indices (length =
/// number of ideals in a multigraded family) from being mixed up.
template <class Tag>
class IndexVector {
 public:
  using value_type = std::uint32_t;

  IndexVector() = default;
  explicit IndexVector(std::size_t length) : entries_(length, 0) {}
  IndexVector(std::initializer_list<value_type> init) : entries_(init) {}
  explicit IndexVector(std::vector<value_type> entries) : entries_(std::move(entries)) {}

  static IndexVector unit(std::size_t length, std::size_t i) {
    IndexVector v(length);
    v.entries_.at(i) = 1;
    return v;
  }

  std::size_t size() const { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const value_type* data() const { return entries_.data(); }
  std::span<const value_type> span() const { return entries_; }
  const std::vector<value_type>& entries() const { return entries_; }

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto e : entries_) s += e;
    return s;
  }

  /// Componentwise partial order.
  bool dominated_by(const IndexVector& other) const {
    check_length(other);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] > other.entries_[i]) return false;
    return true;
  }

  IndexVector operator+(const IndexVector& other) const {
    check_length(other);
    IndexVector out(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
    return out;
  }

  // Lexicographic, first entry most significant.  Only meaningful for equal
  // lengths; lex_compare() is the checked entry point.
  auto operator<=>(const IndexVector&) const = default;
  bool operator==(const IndexVector&) const = default;

  void check_length(const IndexVector& other) const {
    if (other.size() != size())
      throw DimensionError("length mismatch: " + std::to_string(size()) + " vs " +
                           std::to_string(other.size()));
  }

 private:
  std::vector<value_type> entries_;
};

struct ExponentTag {};
struct GradingTag {};

using ExponentVector = IndexVector<ExponentTag>;
using MultiIndex = IndexVector<GradingTag>;

ExponentVector mono_mul(const ExponentVector& a, const ExponentVector& b);
std::uint64_t total_degree(const ExponentVector& a);
std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b);
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

/// Every exponent vector of total degree exactly `degree` in `nvars`
/// variables, in descending lexicographic order.
std::vector<ExponentVector> monomials_of_degree(std::size_t nvars, unsigned degree);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& e) const noexcept;
};

template <class Tag>
std::ostream& operator<<(std::ostream& os, const IndexVector<Tag>& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

/// Sparse polynomial in a fixed number of variables with exact rational
/// coefficients.  Terms are kept in a lex-ordered map with no zero entries.
class PolyElement {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  PolyElement() = default;
  explicit PolyElement(std::size_t nvars) : nvars_(nvars) {}

  static PolyElement constant(std::size_t nvars, const Rational& c);
  static PolyElement monomial(const ExponentVector& e, const Rational& c = 1);
  static PolyElement from_terms(std::size_t nvars, const std::vector<std::pair<ExponentVector, Rational>>& terms);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const ExponentVector& e) const;
  Rational constant_term() const;
  /// Smallest total degree of a term; undefined for zero.
  std::uint64_t order() const;
  bool is_monomial() const;

  void add_term(const ExponentVector& e, const Rational& c);

  PolyElement operator+(const PolyElement& other) const;
  PolyElement operator-(const PolyElement& other) const;
  PolyElement operator-() const;
  PolyElement operator*(const PolyElement& other) const;
  PolyElement scaled(const Rational& c) const;
  PolyElement shifted(const ExponentVector& e) const;

  bool operator==(const PolyElement& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

 private:
  void check_dims(const PolyElement& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

PolyElement poly_mul(const PolyElement& p, const PolyElement& q);

/// Human-readable rendering, e.g. "x^4 + 1/2*x*y^2".
std::string to_string(const PolyElement& p, const std::vector<std::string>& names);
std::string monomial_string(const ExponentVector& e, const std::vector<std::string>& names);
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace redlab
