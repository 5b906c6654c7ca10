#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exps minimal(Exps raw) {
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.entries() < b.entries(); });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  Exps out;
  for (const auto& g : raw) {
    bool redundant = false;
    for (const auto& h : raw)
      if (!(h == g) && oracle::divides(h, g)) redundant = true;
    if (!redundant) out.push_back(g);
  }
  return out;
}

bool member(const Exps& gens, const ExponentVector& u) {
  return std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return oracle::divides(g, u); });
}

bool contains(const Exps& a, const Exps& b) {
  return std::all_of(b.begin(), b.end(), [&](const auto& g) { return member(a, g); });
}

Exps product(const Exps& a, const Exps& b) {
  Exps raw;
  for (const auto& g : a)
    for (const auto& h : b) {
      ExponentVector s(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] + h[i];
      raw.push_back(s);
    }
  return minimal(std::move(raw));
}

Exps monomials(std::size_t nvars, unsigned degree) {
  Exps out;
  ExponentVector e(nvars);
  // Odometer over [0, degree]^nvars, keeping exact-degree vectors.
  while (true) {
    std::uint64_t t = 0;
    for (auto v : e) t += v;
    if (t == degree) out.push_back(e);
    std::size_t i = 0;
    while (i < nvars && e[i] == degree) e[i++] = 0;
    if (i == nvars) break;
    ++e[i];
  }
  return out;
}

unsigned m_power(const Exps& gens, std::size_t nvars, unsigned cap) {
  for (unsigned d = 0; d <= cap; ++d) {
    const auto mons = monomials(nvars, d);
    if (std::all_of(mons.begin(), mons.end(), [&](const auto& u) { return member(gens, u); })) return d;
  }
  return cap + 1;
}

bool power_membership(const Exps& gens, const ExponentVector& e, unsigned max_k) {
  for (unsigned k = 1; k <= max_k; ++k) {
    ExponentVector target(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) target[i] = e[i] * k;
    // Products of j generators that still divide target.
    std::set<std::vector<std::uint32_t>> layer{std::vector<std::uint32_t>(e.size(), 0)};
    for (unsigned j = 0; j < k && !layer.empty(); ++j) {
      std::set<std::vector<std::uint32_t>> next;
      for (const auto& s : layer)
        for (const auto& g : gens) {
          std::vector<std::uint32_t> t(s);
          bool fits = true;
          for (std::size_t i = 0; i < t.size() && fits; ++i) {
            t[i] += g[i];
            fits = t[i] <= target[i];
          }
          if (fits) next.insert(std::move(t));
        }
      layer = std::move(next);
    }
    if (!layer.empty()) return true;
  }
  return false;
}

Integer factorial_binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  auto fact = [](unsigned m) {
    Integer f = 1;
    for (unsigned i = 2; i <= m; ++i) f *= i;
    return f;
  };
  return fact(n) / (fact(r) * fact(n - r));
}

std::size_t dense_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

Exps random_gens(std::mt19937_64& rng, std::size_t nvars, unsigned max_exp, unsigned max_gens, bool m_primary) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp), count(1, max_gens), pure(1, std::max(1u, max_exp));
  Exps raw;
  const unsigned k = count(rng);
  for (unsigned j = 0; j < k; ++j) {
    ExponentVector e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) e[i] = exp(rng);
    raw.push_back(e);
  }
  if (m_primary)
    for (std::size_t i = 0; i < nvars; ++i) {
      ExponentVector e(nvars);
      e[i] = pure(rng);
      raw.push_back(e);
    }
  return minimal(std::move(raw));
}

Exps random_bounded_degree(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, unsigned extra) {
  std::uniform_int_distribution<unsigned> pure(1, max_degree), deg(1, max_degree);
  Exps raw;
  for (std::size_t i = 0; i < nvars; ++i) {
    ExponentVector e(nvars);
    e[i] = pure(rng);
    raw.push_back(e);
  }
  for (unsigned j = 0; j < extra; ++j) {
    const auto all = monomials(nvars, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    raw.push_back(all[pick(rng)]);
  }
  return minimal(std::move(raw));
}

redlab::MonomialIdeal to_ideal(const Exps& gens, std::size_t nvars) {
  return redlab::MonomialIdeal::minimalize(std::span<const ExponentVector>(gens), nvars);
}

}  // namespace oracle
