#pragma once

#include <functional>
#include <vector>

#include "redlab/monomial_ideal.hpp"
#include "redlab/ring.hpp"

namespace redlab {

/// Outcome of comparing a generator count against the product of binomials
/// prod_i C(n_i + r_i, r_i).
struct ESBoundReport {
  MultiIndex n;
  MultiIndex r;
  Integer mu_value;
  Integer bound;
  bool triggered = false;  // mu_value < bound
};

/// C(n, r); zero when r > n.
Integer binomial(unsigned long n, unsigned long r);
Integer es_bound(const MultiIndex& n, const MultiIndex& r);
ESBoundReport es_check(const Integer& mu_value, const MultiIndex& n, const MultiIndex& r);

/// Generator count of the filtration piece at a multidegree.
using MuEvaluator = std::function<Integer(const MultiIndex&)>;

/// Componentwise-minimal degrees n in the box [0, n_max] with |n| >= 1 at
/// which the bound is beaten, in lex order.
std::vector<MultiIndex> first_n_for_r(const MuEvaluator& evaluator, const MultiIndex& r,
                                      const MultiIndex& n_max);

struct ContractedJrv {
  MultiIndex vector;       // (2 o(J) - 1, 2 o(I) - 1)
  ESBoundReport report;    // check of mu(I^m J^n) against (m+1)(n+1)
};

/// Joint reduction vector for two contracted ideals of k[x,y].  Throws
/// HypothesisError when either ideal is not m-primary and contracted.
ContractedJrv contracted_jrv(const MonomialIdeal& i, const MonomialIdeal& j);

/// Every lattice point of the box [0, n_max], last coordinate fastest.
std::vector<MultiIndex> box_points(const MultiIndex& n_max);

}  // namespace redlab
