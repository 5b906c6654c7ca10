#include "redlab/filtration.hpp"

#include <algorithm>
#include <sstream>

#include "redlab/es_bounds.hpp"

namespace redlab {

namespace {

std::string degree_string(const MultiIndex& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

std::optional<MonomialIdeal> monomial_view(const std::vector<PolyElement>& gens, std::size_t nvars) {
  std::vector<ExponentVector> exps;
  for (const auto& g : gens) {
    if (!g.is_monomial()) return std::nullopt;
    exps.push_back(g.terms().begin()->first);
  }
  return MonomialIdeal::minimalize(exps, nvars);
}

Piece piece_from_monomial(const MonomialIdeal& ideal) { return Piece{ideal.as_polys(), ideal}; }

std::vector<PolyElement> pairwise_products(const std::vector<PolyElement>& a, const std::vector<PolyElement>& b) {
  std::vector<PolyElement> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

}  // namespace

Ring Ring::polynomial(std::size_t nvars) { return Ring{nvars, default_variable_names(nvars), std::nullopt}; }

Ring Ring::hypersurface(std::size_t nvars, PolyElement f) {
  Ring r{nvars, default_variable_names(nvars), std::move(f)};
  r.validate();
  return r;
}

void Ring::validate() const {
  if (nvars == 0) throw DimensionError("ring needs at least one variable");
  if (names.size() != nvars)
    throw DimensionError(std::to_string(names.size()) + " variable names for " + std::to_string(nvars) +
                         " variables");
  if (relation) {
    if (relation->nvars() != nvars) throw DimensionError("hypersurface relation has the wrong number of variables");
    if (relation->is_zero()) throw HypothesisError("hypersurface relation is zero");
    if (relation->constant_term() != 0)
      throw HypothesisError("hypersurface relation has a non-zero constant term (unit relation)");
  }
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Filtration Filtration::powers(Ring ring, std::vector<MonomialIdeal> ideals) {
  ring.validate();
  if (ideals.empty()) throw DimensionError("a power filtration needs at least one ideal");
  for (const auto& i : ideals)
    if (i.nvars() != ring.nvars) throw DimensionError("ideal and ring have different variable counts");
  Filtration f;
  f.kind_ = Kind::powers;
  f.ring_ = std::move(ring);
  f.rank_ = ideals.size();
  f.base_ = std::move(ideals);
  return f;
}

Filtration Filtration::closure_powers(Ring ring, MonomialIdeal ideal) {
  ring.validate();
  if (ring.relation)
    throw UnsupportedError("integral closure filtrations are computed only in polynomial rings");
  if (ideal.nvars() != ring.nvars) throw DimensionError("ideal and ring have different variable counts");
  if (ideal.is_zero()) throw HypothesisError("closure filtration of the zero ideal");
  Filtration f;
  f.kind_ = Kind::closure_powers;
  f.ring_ = std::move(ring);
  f.rank_ = 1;
  f.base_ = {std::move(ideal)};
  return f;
}

Filtration Filtration::table(Ring ring, std::map<MultiIndex, std::vector<PolyElement>> pieces, MultiIndex limit,
                             unsigned m_power_cap) {
  ring.validate();
  if (limit.size() == 0) throw DimensionError("table limit has no components");
  Filtration f;
  f.kind_ = Kind::table;
  f.ring_ = std::move(ring);
  f.rank_ = limit.size();
  f.limit_ = limit;
  f.m_power_cap_ = m_power_cap;
  for (auto& [n, gens] : pieces) {
    if (n.size() != f.rank_) throw DimensionError("table degree " + degree_string(n) + " has the wrong length");
    if (!n.dominated_by(limit))
      throw ConfigurationError("table degree " + degree_string(n) + " lies outside the declared limit");
    for (const auto& g : gens)
      if (g.nvars() != f.ring_.nvars)
        throw DimensionError("generator of I_" + degree_string(n) + " has the wrong number of variables");
  }
  for (const auto& n : box_points(limit)) {
    if (n.total() == 0) continue;
    if (!pieces.count(n)) throw ConfigurationError("table is missing the piece of degree " + degree_string(n));
  }
  f.table_ = std::move(pieces);
  f.validate_table();
  return f;
}

// Checks I_n ⊆ I_{n-e_i} and I_a I_b ⊆ I_{a+b} over the stored box; also
// forces every piece to be m-primary through m_power_degree.
void Filtration::validate_table() const {
  const auto points = box_points(*limit_);
  for (const auto& n : points)
    if (n.total() > 0) (void)m_power_degree(n);

  auto contained = [&](const std::vector<PolyElement>& a, const MultiIndex& target) {
    const Piece& t = piece(target);
    if (combinatorial()) {
      auto am = monomial_view(a, ring_.nvars);
      if (am) return contains_ideal(*t.monomial, *am);
    }
    const unsigned d0 = m_power_degree(target);
    return verify_containment_in_primary(algebra(std::max(d0, 1u)), a, t.gens, d0).holds;
  };

  for (const auto& n : points) {
    if (n.total() == 0) continue;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (n[i] == 0) continue;
      MultiIndex lower = n;
      --lower[i];
      if (lower.total() == 0) continue;
      if (!contained(piece(n).gens, lower))
        throw HypothesisError("table is not decreasing: I_" + degree_string(n) + " is not inside I_" +
                              degree_string(lower));
    }
  }
  for (const auto& a : points) {
    if (a.total() == 0) continue;
    for (const auto& b : points) {
      if (b.total() == 0 || b < a) continue;
      const MultiIndex s = a + b;
      if (!s.dominated_by(*limit_)) continue;
      if (!contained(pairwise_products(piece(a).gens, piece(b).gens), s))
        throw HypothesisError("table is not multiplicative: I_" + degree_string(a) + " I_" + degree_string(b) +
                              " is not inside I_" + degree_string(s));
    }
  }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

bool Filtration::combinatorial() const {
  if (ring_.relation) return false;
  if (kind_ != Kind::table) return true;
  return std::all_of(table_.begin(), table_.end(),
                     [](const auto& kv) {
                       return std::all_of(kv.second.begin(), kv.second.end(),
                                          [](const PolyElement& g) { return g.is_monomial(); });
                     });
}

void Filtration::check_degree(const MultiIndex& n) const {
  if (n.size() != rank_)
    throw DimensionError("degree " + degree_string(n) + " for a filtration of rank " + std::to_string(rank_));
  if (limit_ && !n.dominated_by(*limit_))
    throw ConfigurationError("degree " + degree_string(n) + " lies beyond the stored table (limit " +
                             degree_string(*limit_) + ")");
}

const Piece& Filtration::piece(const MultiIndex& n) const {
  check_degree(n);
  if (auto it = pieces_.find(n); it != pieces_.end()) return it->second;
  Piece p;
  if (n.total() == 0) {
    p = piece_from_monomial(MonomialIdeal::unit(ring_.nvars));
  } else {
    switch (kind_) {
      case Kind::powers:
        p = piece_from_monomial(multi_power(base_, n));
        break;
      case Kind::closure_powers:
        p = piece_from_monomial(integral_closure(power(base_.front(), n[0])));
        break;
      case Kind::table:
        p.gens = table_.at(n);
        p.monomial = monomial_view(p.gens, ring_.nvars);
        break;
    }
  }
  return pieces_.emplace(n, std::move(p)).first->second;
}

Piece Filtration::shifted_piece(const MultiIndex& n, std::size_t i) const {
  if (i >= rank_) throw DimensionError("shift index out of range");
  if (n[i] == 0) return Piece{{}, MonomialIdeal::zero(ring_.nvars)};
  MultiIndex lower = n;
  --lower[i];
  return piece(lower);
}

unsigned Filtration::m_power_degree(const MultiIndex& n) const {
  if (auto it = d0_.find(n); it != d0_.end()) return it->second;
  const Piece& p = piece(n);
  if (p.is_zero()) throw HypothesisError("I_" + degree_string(n) + " is the zero ideal");
  unsigned d0 = 0;
  if (!ring_.relation && p.monomial) {
    d0 = m_power_inside(*p.monomial);
  } else {
    auto found = find_m_power(ring_.nvars, ring_.relation, p.gens, m_power_cap_);
    if (!found)
      throw HypothesisError("no power m^d with d <= " + std::to_string(m_power_cap_) + " lies in I_" +
                            degree_string(n) + " (not m-primary, or raise the cap)");
    d0 = *found;
  }
  d0_.emplace(n, d0);
  return d0;
}

Integer Filtration::mu(const MultiIndex& n) const {
  if (auto it = mu_.find(n); it != mu_.end()) return it->second;
  const Piece& p = piece(n);
  Integer value = 0;
  if (p.is_zero()) {
    value = 0;
  } else if (!ring_.relation && p.monomial) {
    value = static_cast<unsigned long>(redlab::mu(*p.monomial));
  } else {
    const unsigned d0 = m_power_degree(n);
    value = static_cast<unsigned long>(mu_in_quotient(algebra(d0 + 2), p.gens, d0));
  }
  mu_.emplace(n, value);
  return value;
}

const TruncatedAlgebra& Filtration::algebra(unsigned order) const {
  auto& slot = algebras_[order];
  if (!slot) slot = std::make_unique<TruncatedAlgebra>(TruncatedAlgebra::build(ring_.nvars, order, ring_.relation));
  return *slot;
}

// ---------------------------------------------------------------------------
// Fiber cone
// ---------------------------------------------------------------------------

bool is_fibercone_generator_degree(const Filtration& f, const MultiIndex& n, Route route) {
  if (n.total() == 0) throw DimensionError("fiber-cone generator test needs a degree with |n| >= 1");
  const Piece& target = f.piece(n);
  if (target.is_zero()) return false;
  const std::size_t d = f.ring().nvars;

  if (route == Route::automatic && f.combinatorial()) {
    MonomialIdeal lower = product(MonomialIdeal::maximal(d), *target.monomial);
    for (std::size_t i = 0; i < f.rank(); ++i) {
      if (n[i] == 0) continue;
      const Piece base = f.piece(MultiIndex::unit(f.rank(), i));
      const Piece rest = f.shifted_piece(n, i);
      lower = sum(lower, product(*base.monomial, *rest.monomial));
    }
    return !contains_ideal(lower, *target.monomial);
  }

  std::vector<PolyElement> lower;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (n[i] == 0) continue;
    const Piece base = f.piece(MultiIndex::unit(f.rank(), i));
    const Piece rest = f.shifted_piece(n, i);
    auto prods = pairwise_products(base.gens, rest.gens);
    lower.insert(lower.end(), prods.begin(), prods.end());
  }
  const unsigned d0 = f.m_power_degree(n);
  // verify_containment adds m * I_n to the right-hand side itself.
  return !verify_containment(f.algebra(d0 + 1), target.gens, lower, d0).holds;
}

FiberConeDegrees fibercone_gen_degrees(const Filtration& f, const MultiIndex& box, Route route) {
  if (box.size() != f.rank()) throw DimensionError("box and filtration rank differ");
  FiberConeDegrees out;
  out.degrees.emplace_back(f.rank());
  out.a_bar = MultiIndex(f.rank());
  for (const auto& n : box_points(box)) {
    if (n.total() == 0) continue;
    if (!is_fibercone_generator_degree(f, n, route)) continue;
    out.degrees.push_back(n);
    for (std::size_t i = 0; i < f.rank(); ++i) {
      out.a_bar[i] = std::max(out.a_bar[i], n[i]);
      if (n[i] == box[i]) out.boundary_warning = true;
    }
  }
  return out;
}

}  // namespace redlab
