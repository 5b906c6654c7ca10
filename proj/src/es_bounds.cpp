#include "redlab/es_bounds.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace redlab {

Integer binomial(unsigned long n, unsigned long r) {
  if (r > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

Integer es_bound(const MultiIndex& n, const MultiIndex& r) {
  n.check_length(r);
  Integer out = 1;
  for (std::size_t i = 0; i < n.size(); ++i) out *= binomial(n[i] + r[i], r[i]);
  return out;
}

ESBoundReport es_check(const Integer& mu_value, const MultiIndex& n, const MultiIndex& r) {
  ESBoundReport report{n, r, mu_value, es_bound(n, r), false};
  report.triggered = report.mu_value < report.bound;
  return report;
}

std::vector<MultiIndex> box_points(const MultiIndex& n_max) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n_max.size());
  while (true) {
    out.push_back(cur);
    std::size_t i = n_max.size();
    bool advanced = false;
    while (i-- > 0) {
      if (cur[i] < n_max[i]) {
        ++cur[i];
        advanced = true;
        break;
      }
      cur[i] = 0;
    }
    if (!advanced) return out;
  }
}

std::vector<MultiIndex> first_n_for_r(const MuEvaluator& evaluator, const MultiIndex& r,
                                      const MultiIndex& n_max) {
  r.check_length(n_max);
  std::vector<MultiIndex> triggered;
  for (const auto& n : box_points(n_max)) {
    if (n.total() == 0) continue;
    if (es_check(evaluator(n), n, r).triggered) triggered.push_back(n);
  }
  std::vector<MultiIndex> minimal;
  for (const auto& n : triggered) {
    bool dominated = std::any_of(triggered.begin(), triggered.end(), [&](const MultiIndex& m) {
      return m != n && m.dominated_by(n);
    });
    if (!dominated) minimal.push_back(n);
  }
  return minimal;
}

ContractedJrv contracted_jrv(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (!is_contracted(i)) throw HypothesisError("first ideal is not contracted (mu != order + 1)");
  if (!is_contracted(j)) throw HypothesisError("second ideal is not contracted (mu != order + 1)");
  const auto alpha = static_cast<unsigned>(order(i));
  const auto beta = static_cast<unsigned>(order(j));
  MultiIndex vec{2 * beta - 1, 2 * alpha - 1};
  const std::array<MonomialIdeal, 2> family{i, j};
  auto report = es_check(Integer(static_cast<unsigned long>(mu(multi_power(family, vec)))), vec,
                         MultiIndex{1, 1});
  // (m - beta + 1)(n - alpha + 1) - (alpha - 1)(beta - 1) = alpha + beta - 1 > 0
  // guarantees the bound; a miss here means the ideals were not contracted.
  if (!report.triggered)
    throw std::logic_error("contracted joint reduction vector failed its own bound check");
  return {vec, report};
}

}  // namespace redlab
