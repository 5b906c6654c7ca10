#pragma once

// N^s-graded filtrations {I_n} of m-primary ideals, evaluated lazily with
// cached generators, m-power degrees and generator counts, plus the
// fiber-cone generator-degree scan.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redlab/monomial_ideal.hpp"
#include "redlab/ring.hpp"
#include "redlab/truncated_algebra.hpp"

namespace redlab {

/// Q[x_1..x_d] or the hypersurface Q[x_1..x_d]/(f), localized at the origin.
struct Ring {
  std::size_t nvars = 0;
  std::vector<std::string> names;
  std::optional<PolyElement> relation;

  static Ring polynomial(std::size_t nvars);
  static Ring hypersurface(std::size_t nvars, PolyElement f);
  /// Checks name count, relation arity and the zero-constant-term condition.
  void validate() const;

  bool operator==(const Ring&) const = default;
};

/// Generators of one piece I_n.  An empty list is the zero ideal.
struct Piece {
  std::vector<PolyElement> gens;
  std::optional<MonomialIdeal> monomial;  // set when every generator is a monomial

  bool is_zero() const { return gens.empty(); }
};

/// Default cap on the incremental m-power search in quotient rings.
inline constexpr unsigned kDefaultMPowerCap = 12;

class Filtration {
 public:
  enum class Kind { powers, closure_powers, table };

  /// I_n = I_1^{n_1} ... I_s^{n_s}.
  static Filtration powers(Ring ring, std::vector<MonomialIdeal> ideals);
  /// I_n = integral closure of I^n; polynomial rings only.
  static Filtration closure_powers(Ring ring, MonomialIdeal ideal);
  /// Explicit pieces for every non-zero degree of the box [0, limit].  The
  /// filtration axioms are verified on the stored range at construction;
  /// every piece must be m-primary.
  static Filtration table(Ring ring, std::map<MultiIndex, std::vector<PolyElement>> pieces,
                          MultiIndex limit, unsigned m_power_cap = kDefaultMPowerCap);

  Kind kind() const { return kind_; }
  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  /// Upper corner of the stored box for tables.
  const std::optional<MultiIndex>& limit() const { return limit_; }
  const std::vector<MonomialIdeal>& base_ideals() const { return base_; }
  const std::map<MultiIndex, std::vector<PolyElement>>& table_pieces() const { return table_; }
  unsigned m_power_cap() const { return m_power_cap_; }
  void set_m_power_cap(unsigned cap) { m_power_cap_ = cap; }

  /// True when pieces are monomial and there is no relation, so ideal
  /// questions reduce to exponent combinatorics.
  bool combinatorial() const;

  /// I_n.  Degree 0 is the unit ideal.
  const Piece& piece(const MultiIndex& n) const;
  /// I_{n - e_i}; the zero ideal when n_i = 0.
  Piece shifted_piece(const MultiIndex& n, std::size_t i) const;
  /// Least d with m^d ⊆ I_n.  HypothesisError when I_n is not m-primary (or
  /// the quotient-ring search exceeds the cap).
  unsigned m_power_degree(const MultiIndex& n) const;
  /// mu(I_n) in the local ring.
  Integer mu(const MultiIndex& n) const;

  /// Shared truncated algebra of the given order over this ring.
  const TruncatedAlgebra& algebra(unsigned order) const;

 private:
  Filtration() = default;
  void check_degree(const MultiIndex& n) const;
  void validate_table() const;

  Kind kind_ = Kind::powers;
  Ring ring_;
  std::size_t rank_ = 0;
  std::vector<MonomialIdeal> base_;
  std::map<MultiIndex, std::vector<PolyElement>> table_;
  std::optional<MultiIndex> limit_;
  unsigned m_power_cap_ = kDefaultMPowerCap;

  // Evaluation caches.  Not synchronized: one filtration per thread.
  mutable std::map<MultiIndex, Piece> pieces_;
  mutable std::map<MultiIndex, unsigned> d0_;
  mutable std::map<MultiIndex, Integer> mu_;
  mutable std::map<unsigned, std::unique_ptr<TruncatedAlgebra>> algebras_;
};

/// Which engine decides fiber-cone generator degrees.
enum class Route { automatic, subspace };

/// Result of scanning a box for degrees where F(F) needs new generators
/// over the fiber cone of (I_{e_1}, ..., I_{e_s}).
struct FiberConeDegrees {
  std::vector<MultiIndex> degrees;  // always contains 0
  MultiIndex a_bar;                 // componentwise max of degrees
  bool boundary_warning = false;    // a generator sits on the outer face of the box
};

/// True when I_n ≠ sum_i I_{e_i} I_{n-e_i} + m I_n, i.e. F_n is not spanned
/// by products from lower degrees.  Requires |n| >= 1.
bool is_fibercone_generator_degree(const Filtration& f, const MultiIndex& n, Route route = Route::automatic);

FiberConeDegrees fibercone_gen_degrees(const Filtration& f, const MultiIndex& box,
                                       Route route = Route::automatic);

}  // namespace redlab
