#pragma once
// Data-parallel inner loops with a scalar reference and ISA-specific
// variants. The public entry points dispatch at runtime; the per-ISA
// namespaces are exposed so tests can pit each variant against the
// reference.

#include <cstdint>
#include <span>
#include <string_view>

namespace m2v::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
/// True when the variant was compiled in and the running CPU supports it.
bool isa_supported(Isa isa);
/// Best supported ISA, unless overridden by force_isa() or the
/// M2V_FORCE_ISA environment variable ("scalar", "avx2", "neon").
Isa active_isa();
/// Pins dispatch to one ISA; throws std::invalid_argument if unsupported.
void force_isa(Isa isa);
void reset_isa();

/// Number of z in [0, modulus) with a2*z^2 + a1*z + a0 = 0 (mod modulus).
/// Coefficients must already be reduced into [0, modulus); modulus <= 2^31.
/// Vector variants handle power-of-two moduli; other moduli always take the
/// scalar path.
std::uint64_t count_quadratic_roots(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0,
                                    std::uint64_t modulus);

/// Sum of a[i]*b[i] over the common length, accumulated in int64.
/// The caller guarantees the exact sum and every partial sum fit in int64.
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

namespace scalar {
std::uint64_t count_quadratic_roots(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0,
                                    std::uint64_t modulus);
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
}  // namespace scalar

namespace avx2 {
std::uint64_t count_quadratic_roots(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0,
                                    std::uint64_t modulus);
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
}  // namespace avx2

namespace neon {
std::uint64_t count_quadratic_roots(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0,
                                    std::uint64_t modulus);
std::int64_t dot_i32(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
}  // namespace neon

}  // namespace m2v::simd
