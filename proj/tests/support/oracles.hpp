#pragma once

// Brute-force reference computations for tests.  None of these call into the
// library's ideal arithmetic, so agreement is evidence rather than tautology.

#include <cstdint>
#include <random>
#include <vector>

#include "redlab/monomial_ideal.hpp"
#include "redlab/ring.hpp"

namespace oracle {

using redlab::ExponentVector;
using redlab::Integer;
using redlab::Rational;

using Exps = std::vector<ExponentVector>;

bool divides(const ExponentVector& a, const ExponentVector& b);
/// Minimal elements under divisibility, sorted lexicographically, duplicates dropped.
Exps minimal(Exps raw);
/// Some generator divides u.
bool member(const Exps& gens, const ExponentVector& u);
/// Every generator of b lies in (a).
bool contains(const Exps& a, const Exps& b);
/// Minimal generators of (a)(b) by explicit pairwise products.
Exps product(const Exps& a, const Exps& b);
/// Smallest d with every monomial of degree d in (gens), searching up to cap;
/// returns cap + 1 when none is found.
unsigned m_power(const Exps& gens, std::size_t nvars, unsigned cap = 40);
/// Every exponent vector of the given total degree.
Exps monomials(std::size_t nvars, unsigned degree);
/// Whether x^{k e} lies in (gens)^k for some 1 <= k <= max_k.
bool power_membership(const Exps& gens, const ExponentVector& e, unsigned max_k);
/// n! / (r! (n-r)!) from factorials; zero when r > n.
Integer factorial_binomial(unsigned n, unsigned r);
/// Rank of a dense rational matrix by textbook elimination.
std::size_t dense_rank(std::vector<std::vector<Rational>> rows);

/// Random monomial generators with exponents in [0, max_exp]; with
/// m_primary set, a pure power of every variable is added.
Exps random_gens(std::mt19937_64& rng, std::size_t nvars, unsigned max_exp, unsigned max_gens, bool m_primary);
/// Random m-primary generators of total degree <= max_degree.
Exps random_bounded_degree(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, unsigned extra);

redlab::MonomialIdeal to_ideal(const Exps& gens, std::size_t nvars);

}  // namespace oracle
