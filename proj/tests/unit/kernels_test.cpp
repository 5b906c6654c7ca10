#include <random>

#include "doctest.h"
#include "redlab/errors.hpp"
#include "redlab/kernels.hpp"
#include "redlab/ring.hpp"

using namespace redlab;
namespace k = redlab::kernels;

namespace {

std::vector<ExponentVector> random_set(std::mt19937_64& rng, std::size_t nvars, std::size_t count) {
  std::uniform_int_distribution<std::uint32_t> exp(0, 6);
  std::vector<ExponentVector> out;
  for (std::size_t j = 0; j < count; ++j) {
    ExponentVector e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) e[i] = exp(rng);
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar variant is always available and listed first") {
    const auto isas = k::available_isas();
    REQUIRE_FALSE(isas.empty());
    CHECK(isas.front() == k::Isa::scalar);
    CHECK(k::isa_name(k::Isa::scalar) == "scalar");
  }

  TEST_CASE("every available variant matches the scalar reference") {
    std::mt19937_64 rng(99);
    const auto& ref = k::table(k::Isa::scalar);
    for (auto isa : k::available_isas()) {
      CAPTURE(k::isa_name(isa));
      const auto& t = k::table(isa);
      for (std::size_t count : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 100u}) {
        for (std::size_t nvars : {1u, 2u, 3u, 5u}) {
          const auto set = random_set(rng, nvars, count);
          const k::PackedMonomials packed(set);
          const auto target = random_set(rng, nvars, 1).front();
          std::vector<std::uint8_t> a(packed.stride()), b(packed.stride());
          ref.divisor_mask(packed.row(0), packed.stride(), count, nvars, target.data(), a.data());
          t.divisor_mask(packed.row(0), packed.stride(), count, nvars, target.data(), b.data());
          for (std::size_t j = 0; j < count; ++j) {
            CHECK(a[j] == b[j]);
            CHECK(bool(a[j]) == divides(set[j], target));
          }
          std::vector<std::uint32_t> da(packed.stride()), db(packed.stride());
          for (std::uint32_t value : {0u, 3u, 1000u}) {
            ref.add_scalar(packed.row(0), count, value, da.data());
            t.add_scalar(packed.row(0), count, value, db.data());
            for (std::size_t j = 0; j < count; ++j) CHECK(da[j] == db[j]);
            ref.max_scalar(packed.row(0), count, value, da.data());
            t.max_scalar(packed.row(0), count, value, db.data());
            for (std::size_t j = 0; j < count; ++j) CHECK(da[j] == db[j]);
          }
        }
      }
    }
  }

  TEST_CASE("wrappers agree with per-monomial arithmetic") {
    std::mt19937_64 rng(5);
    const auto set = random_set(rng, 3, 21);
    const k::PackedMonomials packed(set);
    const ExponentVector shift{1, 0, 2};
    const auto prod = k::multiply_all(packed, shift);
    const auto lcms = k::lcm_all(packed, shift);
    REQUIRE(prod.size() == set.size());
    for (std::size_t j = 0; j < set.size(); ++j) {
      CHECK(packed.at(j) == set[j]);
      CHECK(prod.at(j) == mono_mul(set[j], shift));
      CHECK(lcms.at(j) == lcm(set[j], shift));
    }
    const ExponentVector target{6, 6, 6};
    CHECK(k::any_divides(packed, target));
    CHECK_FALSE(k::any_divides(k::PackedMonomials(3, 0), target));
  }

  TEST_CASE("unavailable variant is reported") {
    const auto isas = k::available_isas();
    for (auto isa : {k::Isa::avx2, k::Isa::neon})
      if (std::find(isas.begin(), isas.end(), isa) == isas.end()) CHECK_THROWS_AS(k::table(isa), UnsupportedError);
  }
}
