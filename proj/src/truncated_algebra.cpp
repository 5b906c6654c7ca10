#include "redlab/truncated_algebra.hpp"

#include <algorithm>
#include <deque>

namespace redlab {

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), pivot_row_(ambient, -1) {}

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (v.empty()) return {};
  const std::uint32_t top = v.back().first;
  if (top >= ambient_) throw DimensionError("vector exceeds ambient dimension");
  std::vector<Rational> dense(top + 1);
  for (const auto& [c, x] : v) dense[c] = x;
  for (std::int64_t c = top; c >= 0; --c) {
    if (sgn(dense[c]) == 0) continue;
    const std::int32_t r = pivot_row_[c];
    if (r < 0) continue;
    const Rational f = dense[c];
    for (const auto& [cc, x] : rows_[r]) dense[cc] -= f * x;
  }
  SparseVector out;
  for (std::uint32_t c = 0; c <= top; ++c)
    if (sgn(dense[c]) != 0) out.emplace_back(c, std::move(dense[c]));
  return out;
}

bool Subspace::contains(const SparseVector& v) const {
  if (v.empty()) return true;
  const std::uint32_t top = v.back().first;
  if (top >= ambient_) throw DimensionError("vector exceeds ambient dimension");
  std::vector<Rational> dense(top + 1);
  for (const auto& [c, x] : v) dense[c] = x;
  for (std::int64_t c = top; c >= 0; --c) {
    if (sgn(dense[c]) == 0) continue;
    const std::int32_t r = pivot_row_[c];
    // A surviving entry with no pivot below the already-cleared columns
    // cannot be removed by any remaining row.
    if (r < 0) return false;
    const Rational f = dense[c];
    for (const auto& [cc, x] : rows_[r]) dense[cc] -= f * x;
  }
  return true;
}

std::optional<SparseVector> Subspace::insert(const SparseVector& v) {
  SparseVector row = reduce(v);
  if (row.empty()) return std::nullopt;
  const Rational lead = row.back().second;
  if (lead != 1)
    for (auto& [c, x] : row) x /= lead;
  pivot_row_[row.back().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(row);
  return row;
}

std::vector<SparseVector> Subspace::echelon_rows() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (std::size_t c = 0; c < ambient_; ++c)
    if (pivot_row_[c] >= 0) out.push_back(rows_[pivot_row_[c]]);
  return out;
}

// ---------------------------------------------------------------------------
// TruncatedAlgebra
// ---------------------------------------------------------------------------

bool IdealImage::contains(const PolyElement& p) const { return span_.contains(algebra_->truncate(p)); }

TruncatedAlgebra TruncatedAlgebra::build(std::size_t nvars, unsigned order,
                                         std::optional<PolyElement> relation) {
  if (order == 0) throw ConfigurationError("truncation order must be at least 1");
  if (relation) {
    if (relation->nvars() != nvars)
      throw DimensionError("relation has " + std::to_string(relation->nvars()) + " variables, ring has " +
                           std::to_string(nvars));
    if (relation->is_zero()) throw HypothesisError("hypersurface relation is zero");
    if (relation->constant_term() != 0)
      throw HypothesisError("hypersurface relation has a non-zero constant term (unit relation)");
  }

  TruncatedAlgebra a;
  a.nvars_ = nvars;
  a.order_ = order;
  a.relation_ = std::move(relation);
  for (unsigned deg = 0; deg < order; ++deg) {
    auto mons = monomials_of_degree(nvars, deg);
    std::reverse(mons.begin(), mons.end());
    a.basis_.insert(a.basis_.end(), mons.begin(), mons.end());
  }
  for (std::uint32_t i = 0; i < a.basis_.size(); ++i) a.index_.emplace(a.basis_[i], i);

  a.shift_.assign(nvars, std::vector<std::int32_t>(a.basis_.size(), -1));
  for (std::size_t v = 0; v < nvars; ++v) {
    const auto unit = ExponentVector::unit(nvars, v);
    for (std::uint32_t i = 0; i < a.basis_.size(); ++i)
      if (auto j = a.index_of(a.basis_[i] + unit)) a.shift_[v][i] = static_cast<std::int32_t>(*j);
  }

  a.relation_span_ = Subspace(a.basis_.size());
  if (a.relation_) a.relation_span_ = a.close_under_variables(a.relation_span_, {a.truncate(*a.relation_)});
  return a;
}

std::optional<std::uint32_t> TruncatedAlgebra::index_of(const ExponentVector& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector TruncatedAlgebra::truncate(const PolyElement& p) const {
  if (p.nvars() != nvars_)
    throw DimensionError("polynomial has " + std::to_string(p.nvars()) + " variables, algebra has " +
                         std::to_string(nvars_));
  SparseVector out;
  for (const auto& [e, c] : p.terms()) {
    if (e.total() >= order_) continue;
    out.emplace_back(index_.at(e), c);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

SparseVector TruncatedAlgebra::normal_form(const PolyElement& p) const {
  return relation_span_.reduce(truncate(p));
}

PolyElement TruncatedAlgebra::to_poly(const SparseVector& v) const {
  PolyElement p(nvars_);
  for (const auto& [c, x] : v) p.add_term(basis_.at(c), x);
  return p;
}

SparseVector TruncatedAlgebra::multiply_by_variable(const SparseVector& v, std::size_t var) const {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) {
    const std::int32_t j = shift_.at(var)[c];
    if (j >= 0) out.emplace_back(static_cast<std::uint32_t>(j), x);
  }
  // Multiplying by a variable preserves (degree, lex) order among survivors.
  return out;
}

Subspace TruncatedAlgebra::close_under_variables(Subspace span, std::vector<SparseVector> seeds) const {
  // The span of the inserted rows is closed under every x_i once each new
  // row's products have been processed; the starting span must already be
  // closed (it is either empty or an earlier closure).
  std::deque<SparseVector> queue(std::make_move_iterator(seeds.begin()), std::make_move_iterator(seeds.end()));
  while (!queue.empty()) {
    SparseVector v = std::move(queue.front());
    queue.pop_front();
    auto row = span.insert(v);
    if (!row) continue;
    for (std::size_t var = 0; var < nvars_; ++var) {
      auto next = multiply_by_variable(*row, var);
      if (!next.empty()) queue.push_back(std::move(next));
    }
  }
  return span;
}

IdealImage TruncatedAlgebra::ideal_image(std::span<const PolyElement> gens) const {
  std::vector<SparseVector> seeds;
  seeds.reserve(gens.size());
  for (const auto& g : gens) seeds.push_back(truncate(g));
  return IdealImage(this, close_under_variables(relation_span_, std::move(seeds)), relation_span_.dimension());
}

// ---------------------------------------------------------------------------
// Verification engine
// ---------------------------------------------------------------------------

std::vector<PolyElement> times_maximal_ideal(std::span<const PolyElement> gens, std::size_t nvars) {
  std::vector<PolyElement> out;
  out.reserve(gens.size() * nvars);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < nvars; ++v) out.push_back(g.shifted(ExponentVector::unit(nvars, v)));
  return out;
}

namespace {

void require_order(const TruncatedAlgebra& algebra, unsigned needed, const char* what) {
  if (algebra.truncation_order() < needed)
    throw ConfigurationError(std::string(what) + " needs truncation order >= " + std::to_string(needed) +
                             ", algebra has " + std::to_string(algebra.truncation_order()));
}

std::vector<std::size_t> missing_members(const IdealImage& image, std::span<const PolyElement> gens) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!image.contains(gens[i])) out.push_back(i);
  return out;
}

}  // namespace

Verdict verify_containment(const TruncatedAlgebra& algebra, std::span<const PolyElement> a_gens,
                           std::span<const PolyElement> b_gens, unsigned d0_a) {
  require_order(algebra, d0_a + 1, "Nakayama containment check");
  std::vector<PolyElement> combined(b_gens.begin(), b_gens.end());
  auto shifted = times_maximal_ideal(a_gens, algebra.nvars());
  combined.insert(combined.end(), shifted.begin(), shifted.end());
  const auto image = algebra.ideal_image(combined);
  Verdict v{false, algebra.truncation_order(), d0_a, missing_members(image, a_gens)};
  v.holds = v.unreached.empty();
  return v;
}

Verdict verify_containment_in_primary(const TruncatedAlgebra& algebra,
                                      std::span<const PolyElement> a_gens,
                                      std::span<const PolyElement> b_gens, unsigned d0_b) {
  require_order(algebra, std::max(d0_b, 1u), "containment into an m-primary ideal");
  const auto image = algebra.ideal_image(b_gens);
  Verdict v{false, algebra.truncation_order(), d0_b, missing_members(image, a_gens)};
  v.holds = v.unreached.empty();
  return v;
}

bool verify_m_power(const TruncatedAlgebra& algebra, std::span<const PolyElement> a_gens, unsigned degree) {
  require_order(algebra, degree + 1, "m-power check");
  const auto image = algebra.ideal_image(a_gens);
  for (const auto& u : monomials_of_degree(algebra.nvars(), degree))
    if (!image.contains(PolyElement::monomial(u))) return false;
  return true;
}

std::optional<unsigned> find_m_power(std::size_t nvars, const std::optional<PolyElement>& relation,
                                     std::span<const PolyElement> a_gens, unsigned cap) {
  for (unsigned d = 0; d <= cap; ++d) {
    const auto algebra = TruncatedAlgebra::build(nvars, d + 1, relation);
    if (verify_m_power(algebra, a_gens, d)) return d;
  }
  return std::nullopt;
}

Verdict verify_reduction_equation(const TruncatedAlgebra& algebra,
                                  std::span<const PolyElement> target_gens,
                                  std::span<const Summand> summands, unsigned d0) {
  if (summands.empty()) throw InvalidSummandError("reduction equation has no summands");
  for (const auto& s : summands) {
    for (const auto& x : s.elements) {
      if (x.is_zero()) throw InvalidSummandError("summand element is zero");
      if (x.constant_term() != 0)
        throw InvalidSummandError("summand element is a unit; reduction elements must lie in m");
    }
  }
  require_order(algebra, d0 + 1, "reduction equation check");

  std::vector<PolyElement> products;
  for (const auto& s : summands)
    for (const auto& x : s.elements)
      for (const auto& g : s.ideal_gens) products.push_back(x * g);

  // The sum of products must sit inside the target; m^{d0} ⊆ target and
  // N > d0 make this image test exact.
  {
    const auto target_image = algebra.ideal_image(target_gens);
    auto outside = missing_members(target_image, products);
    if (!outside.empty())
      throw InvalidSummandError(std::to_string(outside.size()) +
                                " summand product(s) fall outside the target ideal");
  }

  std::vector<PolyElement> combined = products;
  auto shifted = times_maximal_ideal(target_gens, algebra.nvars());
  combined.insert(combined.end(), shifted.begin(), shifted.end());
  const auto image = algebra.ideal_image(combined);
  Verdict v{false, algebra.truncation_order(), d0, missing_members(image, target_gens)};
  v.holds = v.unreached.empty();
  return v;
}

std::size_t mu_in_quotient(const TruncatedAlgebra& algebra, std::span<const PolyElement> gens, unsigned d0) {
  require_order(algebra, d0 + 2, "generator count in the quotient ring");
  const auto full = algebra.ideal_image(gens);
  const auto shifted = times_maximal_ideal(gens, algebra.nvars());
  const auto inner = algebra.ideal_image(shifted);
  return full.dimension() - inner.dimension();
}

}  // namespace redlab
