#pragma once

// Batch kernels over packed monomial sets.  Monomials are stored
// structure-of-arrays: row v holds the exponent of variable v for every
// monomial, so the inner loops run across monomials and vectorize.
//
// Every kernel has a scalar reference and (where the target supports it)
// AVX2 and NEON variants.  The active variant is chosen once at startup from
// the running CPU; REDLAB_KERNELS=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "redlab/ring.hpp"

namespace redlab::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Variants available on this build + CPU, scalar first.
std::vector<Isa> available_isas();

/// The dispatched variant.
Isa active_isa();

class PackedMonomials {
 public:
  PackedMonomials() = default;
  PackedMonomials(std::size_t nvars, std::size_t capacity);
  explicit PackedMonomials(std::span<const ExponentVector> monomials);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return count_; }
  std::size_t stride() const { return stride_; }

  void push_back(const ExponentVector& e);
  ExponentVector at(std::size_t j) const;

  const std::uint32_t* row(std::size_t var) const { return data_.data() + var * stride_; }
  std::uint32_t* row(std::size_t var) { return data_.data() + var * stride_; }

 private:
  void grow(std::size_t min_capacity);

  std::size_t nvars_ = 0;
  std::size_t count_ = 0;
  std::size_t stride_ = 0;  // capacity, padded to a multiple of 8
  std::vector<std::uint32_t> data_;
};

// Raw kernel signatures.  `rows` points at nvars rows of length `stride`.
using DivisorMaskFn = void (*)(const std::uint32_t* rows, std::size_t stride, std::size_t count,
                               std::size_t nvars, const std::uint32_t* target, std::uint8_t* mask);
using RowBinaryFn = void (*)(const std::uint32_t* src, std::size_t count, std::uint32_t value,
                             std::uint32_t* dst);

struct KernelTable {
  Isa isa;
  DivisorMaskFn divisor_mask;  // mask[j] = 1 iff monomial j divides target
  RowBinaryFn add_scalar;      // dst[j] = src[j] + value
  RowBinaryFn max_scalar;      // dst[j] = max(src[j], value)
};

/// Kernel table for a specific variant; throws UnsupportedError if the
/// variant is not available here.
const KernelTable& table(Isa isa);
const KernelTable& active();

// Convenience wrappers over the active table.
std::vector<std::uint8_t> divisor_mask(const PackedMonomials& set, const ExponentVector& target);
bool any_divides(const PackedMonomials& set, const ExponentVector& target);

/// { m * shift : m in set }
PackedMonomials multiply_all(const PackedMonomials& set, const ExponentVector& shift);
/// { lcm(m, other) : m in set }
PackedMonomials lcm_all(const PackedMonomials& set, const ExponentVector& other);

}  // namespace redlab::kernels
