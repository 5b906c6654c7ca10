#include "redlab/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#define REDLAB_X86 1
#include <immintrin.h>
#else
#define REDLAB_X86 0
#endif

#if defined(__aarch64__)
#define REDLAB_NEON 1
#include <arm_neon.h>
#else
#define REDLAB_NEON 0
#endif

namespace redlab::kernels {

namespace {

constexpr std::size_t kLanes = 8;

std::size_t padded(std::size_t n) { return (n + kLanes - 1) / kLanes * kLanes; }

// ---------------------------------------------------------------------------
// Scalar reference
// ---------------------------------------------------------------------------

void divisor_mask_scalar(const std::uint32_t* rows, std::size_t stride, std::size_t count,
                         std::size_t nvars, const std::uint32_t* target, std::uint8_t* mask) {
  for (std::size_t j = 0; j < count; ++j) mask[j] = 1;
  for (std::size_t v = 0; v < nvars; ++v) {
    const std::uint32_t* r = rows + v * stride;
    const std::uint32_t t = target[v];
    for (std::size_t j = 0; j < count; ++j) mask[j] &= static_cast<std::uint8_t>(r[j] <= t);
  }
}

void add_scalar_scalar(const std::uint32_t* src, std::size_t count, std::uint32_t value,
                       std::uint32_t* dst) {
  for (std::size_t j = 0; j < count; ++j) dst[j] = src[j] + value;
}

void max_scalar_scalar(const std::uint32_t* src, std::size_t count, std::uint32_t value,
                       std::uint32_t* dst) {
  for (std::size_t j = 0; j < count; ++j) dst[j] = std::max(src[j], value);
}

// ---------------------------------------------------------------------------
// AVX2
// ---------------------------------------------------------------------------

#if REDLAB_X86

__attribute__((target("avx2"))) void divisor_mask_avx2(const std::uint32_t* rows,
                                                       std::size_t stride, std::size_t count,
                                                       std::size_t nvars,
                                                       const std::uint32_t* target,
                                                       std::uint8_t* mask) {
  std::size_t j = 0;
  for (; j + kLanes <= count; j += kLanes) {
    __m256i acc = _mm256_set1_epi32(-1);
    for (std::size_t v = 0; v < nvars; ++v) {
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + v * stride + j));
      const __m256i t = _mm256_set1_epi32(static_cast<int>(target[v]));
      // unsigned x <= t  <=>  max(x, t) == t
      acc = _mm256_and_si256(acc, _mm256_cmpeq_epi32(_mm256_max_epu32(x, t), t));
    }
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(acc));
    for (std::size_t k = 0; k < kLanes; ++k) mask[j + k] = static_cast<std::uint8_t>((bits >> k) & 1);
  }
  if (j < count) {
    // Tail: rows are padded to the lane width, so run the scalar loop on the
    // remainder only.
    for (std::size_t k = j; k < count; ++k) {
      std::uint8_t ok = 1;
      for (std::size_t v = 0; v < nvars; ++v) ok &= static_cast<std::uint8_t>(rows[v * stride + k] <= target[v]);
      mask[k] = ok;
    }
  }
}

__attribute__((target("avx2"))) void add_scalar_avx2(const std::uint32_t* src, std::size_t count,
                                                     std::uint32_t value, std::uint32_t* dst) {
  const __m256i t = _mm256_set1_epi32(static_cast<int>(value));
  std::size_t j = 0;
  for (; j + kLanes <= count; j += kLanes) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_add_epi32(x, t));
  }
  for (; j < count; ++j) dst[j] = src[j] + value;
}

__attribute__((target("avx2"))) void max_scalar_avx2(const std::uint32_t* src, std::size_t count,
                                                     std::uint32_t value, std::uint32_t* dst) {
  const __m256i t = _mm256_set1_epi32(static_cast<int>(value));
  std::size_t j = 0;
  for (; j + kLanes <= count; j += kLanes) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_max_epu32(x, t));
  }
  for (; j < count; ++j) dst[j] = std::max(src[j], value);
}

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

#endif

// ---------------------------------------------------------------------------
// NEON
// ---------------------------------------------------------------------------

#if REDLAB_NEON

void divisor_mask_neon(const std::uint32_t* rows, std::size_t stride, std::size_t count,
                       std::size_t nvars, const std::uint32_t* target, std::uint8_t* mask) {
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    uint32x4_t acc = vdupq_n_u32(0xffffffffu);
    for (std::size_t v = 0; v < nvars; ++v) {
      const uint32x4_t x = vld1q_u32(rows + v * stride + j);
      acc = vandq_u32(acc, vcleq_u32(x, vdupq_n_u32(target[v])));
    }
    std::uint32_t lanes[4];
    vst1q_u32(lanes, acc);
    for (std::size_t k = 0; k < 4; ++k) mask[j + k] = lanes[k] ? 1 : 0;
  }
  for (; j < count; ++j) {
    std::uint8_t ok = 1;
    for (std::size_t v = 0; v < nvars; ++v) ok &= static_cast<std::uint8_t>(rows[v * stride + j] <= target[v]);
    mask[j] = ok;
  }
}

void add_scalar_neon(const std::uint32_t* src, std::size_t count, std::uint32_t value,
                     std::uint32_t* dst) {
  const uint32x4_t t = vdupq_n_u32(value);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) vst1q_u32(dst + j, vaddq_u32(vld1q_u32(src + j), t));
  for (; j < count; ++j) dst[j] = src[j] + value;
}

void max_scalar_neon(const std::uint32_t* src, std::size_t count, std::uint32_t value,
                     std::uint32_t* dst) {
  const uint32x4_t t = vdupq_n_u32(value);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) vst1q_u32(dst + j, vmaxq_u32(vld1q_u32(src + j), t));
  for (; j < count; ++j) dst[j] = std::max(src[j], value);
}

#endif

const KernelTable kScalarTable{Isa::scalar, divisor_mask_scalar, add_scalar_scalar, max_scalar_scalar};
#if REDLAB_X86
const KernelTable kAvx2Table{Isa::avx2, divisor_mask_avx2, add_scalar_avx2, max_scalar_avx2};
#endif
#if REDLAB_NEON
const KernelTable kNeonTable{Isa::neon, divisor_mask_neon, add_scalar_neon, max_scalar_neon};
#endif

const KernelTable& select_table() {
  const char* forced = std::getenv("REDLAB_KERNELS");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return kScalarTable;
#if REDLAB_X86
  if (cpu_has_avx2()) return kAvx2Table;
#endif
#if REDLAB_NEON
  return kNeonTable;
#endif
  return kScalarTable;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
#if REDLAB_X86
  if (cpu_has_avx2()) out.push_back(Isa::avx2);
#endif
#if REDLAB_NEON
  out.push_back(Isa::neon);
#endif
  return out;
}

const KernelTable& table(Isa isa) {
  switch (isa) {
    case Isa::scalar: return kScalarTable;
    case Isa::avx2:
#if REDLAB_X86
      if (cpu_has_avx2()) return kAvx2Table;
#endif
      break;
    case Isa::neon:
#if REDLAB_NEON
      return kNeonTable;
#endif
      break;
  }
  throw UnsupportedError("kernel variant " + std::string(isa_name(isa)) + " not available");
}

const KernelTable& active() {
  static const KernelTable& t = select_table();
  return t;
}

Isa active_isa() { return active().isa; }

PackedMonomials::PackedMonomials(std::size_t nvars, std::size_t capacity)
    : nvars_(nvars), stride_(padded(std::max<std::size_t>(capacity, 1))),
      data_(nvars * stride_, 0) {}

PackedMonomials::PackedMonomials(std::span<const ExponentVector> monomials)
    : PackedMonomials(monomials.empty() ? 0 : monomials.front().size(), monomials.size()) {
  for (const auto& m : monomials) push_back(m);
}

void PackedMonomials::grow(std::size_t min_capacity) {
  std::size_t new_stride = padded(std::max(min_capacity, stride_ * 2));
  std::vector<std::uint32_t> fresh(nvars_ * new_stride, 0);
  for (std::size_t v = 0; v < nvars_; ++v)
    std::copy_n(data_.data() + v * stride_, count_, fresh.data() + v * new_stride);
  data_ = std::move(fresh);
  stride_ = new_stride;
}

void PackedMonomials::push_back(const ExponentVector& e) {
  if (count_ == 0 && data_.empty() && nvars_ == 0) {
    nvars_ = e.size();
    stride_ = kLanes;
    data_.assign(nvars_ * stride_, 0);
  }
  if (e.size() != nvars_) throw DimensionError("packed monomial length mismatch");
  if (count_ == stride_) grow(count_ + 1);
  for (std::size_t v = 0; v < nvars_; ++v) data_[v * stride_ + count_] = e[v];
  ++count_;
}

ExponentVector PackedMonomials::at(std::size_t j) const {
  ExponentVector e(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) e[v] = data_[v * stride_ + j];
  return e;
}

std::vector<std::uint8_t> divisor_mask(const PackedMonomials& set, const ExponentVector& target) {
  if (set.size() > 0 && target.size() != set.nvars()) throw DimensionError("target length mismatch");
  std::vector<std::uint8_t> mask(set.size());
  if (set.size() == 0) return mask;
  active().divisor_mask(set.row(0), set.stride(), set.size(), set.nvars(), target.data(), mask.data());
  return mask;
}

bool any_divides(const PackedMonomials& set, const ExponentVector& target) {
  auto mask = divisor_mask(set, target);
  return std::find(mask.begin(), mask.end(), 1) != mask.end();
}

PackedMonomials multiply_all(const PackedMonomials& set, const ExponentVector& shift) {
  if (set.size() > 0 && shift.size() != set.nvars()) throw DimensionError("shift length mismatch");
  PackedMonomials out(set.nvars(), set.size());
  for (std::size_t j = 0; j < set.size(); ++j) out.push_back(ExponentVector(set.nvars()));
  for (std::size_t v = 0; v < set.nvars(); ++v)
    active().add_scalar(set.row(v), set.size(), shift[v], out.row(v));
  return out;
}

PackedMonomials lcm_all(const PackedMonomials& set, const ExponentVector& other) {
  if (set.size() > 0 && other.size() != set.nvars()) throw DimensionError("lcm length mismatch");
  PackedMonomials out(set.nvars(), set.size());
  for (std::size_t j = 0; j < set.size(); ++j) out.push_back(ExponentVector(set.nvars()));
  for (std::size_t v = 0; v < set.nvars(); ++v)
    active().max_scalar(set.row(v), set.size(), other[v], out.row(v));
  return out;
}

}  // namespace redlab::kernels
