#include "properties.hpp"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "redlab/es_bounds.hpp"
#include "redlab/filtration.hpp"
#include "redlab/io.hpp"
#include "redlab/monomial_ideal.hpp"
#include "redlab/reduction_search.hpp"
#include "redlab/registry.hpp"
#include "redlab/truncated_algebra.hpp"

namespace props {

using namespace redlab;

namespace {

std::string show(const oracle::Exps& gens) {
  std::ostringstream os;
  for (const auto& g : gens) os << g;
  return os.str();
}

std::vector<ReductionCertificate> registry_certificates() {
  std::vector<ReductionCertificate> all;
  for (const auto& rec : registry()) {
    auto run = rec.run(RegistryOptions{});
    for (auto& c : run.certificates) all.push_back(std::move(c));
  }
  return all;
}

}  // namespace

Outcome np_membership_vs_power_oracle(std::uint64_t seed, unsigned ideals, unsigned max_k) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < ideals; ++t) {
    const std::size_t nvars = t % 2 ? 3 : 2;
    const auto gens = oracle::random_gens(rng, nvars, nvars == 2 ? 4 : 3, 4, false);
    const auto ideal = oracle::to_ideal(gens, nvars);
    ExponentVector box(nvars);
    for (const auto& g : gens)
      for (std::size_t i = 0; i < nvars; ++i) box[i] = std::max(box[i], g[i]);
    ExponentVector e(nvars);
    while (true) {
      ++out.cases;
      const bool lib = np_membership(ideal, e);
      const bool ref = oracle::power_membership(gens, e, max_k);
      if (lib != ref) {
        ++out.failures;
        std::ostringstream os;
        os << "ideal " << show(gens) << " point " << e << ": np_membership " << lib << ", power oracle " << ref;
        out.log.push_back(os.str());
      }
      std::size_t i = 0;
      while (i < nvars && e[i] == box[i]) e[i++] = 0;
      if (i == nvars) break;
      ++e[i];
    }
  }
  return out;
}

Outcome containment_vs_monomial(std::uint64_t seed, unsigned pairs) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < pairs; ++t) {
    const std::size_t nvars = 1 + t % 3;
    const auto a = oracle::random_gens(rng, nvars, 3, 4, true);
    // b is sometimes a sub- or super-ideal of a so both verdicts occur.
    oracle::Exps b;
    switch (t % 4) {
      case 0: b = oracle::random_gens(rng, nvars, 3, 4, false); break;
      case 1: b = oracle::random_gens(rng, nvars, 2, 3, true); break;
      case 2: {
        b = a;
        const auto more = oracle::random_gens(rng, nvars, 2, 2, false);
        b.insert(b.end(), more.begin(), more.end());
        b = oracle::minimal(std::move(b));
        break;
      }
      default: b = oracle::product(a, oracle::random_gens(rng, nvars, 1, 2, false)); break;
    }
    const unsigned d0 = oracle::m_power(a, nvars);
    const bool expected = oracle::contains(b, a);
    const auto ai = oracle::to_ideal(a, nvars).as_polys();
    const auto bi = oracle::to_ideal(b, nvars).as_polys();
    for (unsigned extra : {1u, 3u}) {
      ++out.cases;
      const auto alg = TruncatedAlgebra::build(nvars, d0 + extra);
      const bool got = verify_containment(alg, ai, bi, d0).holds;
      const bool mono = contains_ideal(oracle::to_ideal(b, nvars), oracle::to_ideal(a, nvars));
      if (got != expected || mono != expected) {
        ++out.failures;
        std::ostringstream os;
        os << "a " << show(a) << " b " << show(b) << " N=" << d0 + extra << ": truncated " << got << ", monomial "
           << mono << ", oracle " << expected;
        out.log.push_back(os.str());
      }
    }
  }
  return out;
}

Outcome registry_truncation_stability() {
  Outcome out;
  for (auto cert : registry_certificates()) {
    ++out.cases;
    const bool base = replay(cert).holds;
    cert.truncation_order += 2;
    const bool raised = replay(cert).holds;
    if (base != raised || base != cert.verified) {
      ++out.failures;
      std::ostringstream os;
      os << to_string(cert.kind) << " at n=" << cert.n << ": recorded " << cert.verified << ", N " << base
         << ", N+2 " << raised;
      out.log.push_back(os.str());
    }
  }
  return out;
}

Outcome pascal_identity(unsigned max_n) {
  Outcome out;
  for (unsigned n = 0; n <= max_n; ++n) {
    for (unsigned r = 0; r <= n + 1; ++r) {
      ++out.cases;
      Integer expected;
      if (r > n)
        expected = 0;
      else if (r == 0 || r == n)
        expected = 1;
      else
        expected = binomial(n - 1, r) + binomial(n - 1, r - 1);
      if (binomial(n, r) != expected) {
        ++out.failures;
        out.log.push_back("C(" + std::to_string(n) + "," + std::to_string(r) + ") = " + binomial(n, r).get_str());
      }
    }
  }
  return out;
}

Outcome certificate_replay_determinism() {
  Outcome out;
  const auto first = registry_certificates();
  const auto second = registry_certificates();
  ++out.cases;
  if (first != second) {
    ++out.failures;
    out.log.push_back("two registry runs with the same seed produced different certificates");
  }
  for (const auto& cert : first) {
    ++out.cases;
    const auto text = serialize(cert);
    const auto parsed = parse_certificate(text);
    const auto v1 = replay(parsed), v2 = replay(parsed);
    const bool ok = parsed == cert && serialize(parsed) == text && v1.holds == cert.verified &&
                    v2.holds == v1.holds && v1.unreached == cert.unreached && v2.unreached == v1.unreached &&
                    v1.truncation_order == cert.truncation_order;
    if (!ok) {
      ++out.failures;
      std::ostringstream os;
      os << to_string(cert.kind) << " at n=" << cert.n << " did not replay identically";
      out.log.push_back(os.str());
    }
  }
  return out;
}

Outcome es_success(std::uint64_t seed, unsigned instances) {
  Outcome out;
  std::mt19937_64 rng(seed);
  unsigned drawn = 0;
  while (out.cases < instances && drawn < 20 * instances) {
    ++drawn;
    std::uniform_int_distribution<unsigned> extra(0, 3);
    const auto gens = oracle::random_bounded_degree(rng, 2, 4, extra(rng));
    const auto ideal = oracle::to_ideal(gens, 2);
    const auto f = Filtration::powers(Ring::polynomial(2), {ideal});
    std::optional<std::pair<unsigned, unsigned>> gate;
    for (unsigned n = 1; n <= 3 && !gate; ++n)
      for (unsigned r = 1; r <= 2 && !gate; ++r)
        if (es_check(f.mu(MultiIndex{n}), MultiIndex{n}, MultiIndex{r}).triggered) gate = {{n, r}};
    if (!gate) continue;
    ++out.cases;
    GeneralElementSampler sampler(seed + drawn, kDefaultCoeffBound, kDefaultAttempts);
    std::ostringstream os;
    os << "ideal " << show(gens) << " n=" << gate->first << " r=" << gate->second << ": ";
    try {
      const auto cert = find_reduction(f, gate->first, gate->second, sampler);
      if (!cert.verified) {
        ++out.failures;
        out.log.push_back(os.str() + "attempts exhausted");
      }
    } catch (const std::exception& e) {
      ++out.failures;
      out.log.push_back(os.str() + e.what());
    }
  }
  return out;
}

}  // namespace props
