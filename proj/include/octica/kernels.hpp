#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace octica::kernels {

enum class Isa { Scalar, Avx2 };

// Best instruction set supported by this CPU.
Isa detect_isa();
// Instruction set used by the dispatching entry points; defaults to detect_isa().
Isa active_isa();
// Override for tests; requesting Avx2 on a CPU without it falls back to Scalar.
void set_isa(Isa isa);
const char* isa_name(Isa isa);

using Perm64 = std::array<std::uint8_t, 64>;

// out[i] = a[b[i]] for permutations of {0..63}.
void compose_perm64_scalar(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out);
void compose_perm64_avx2(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out);
void compose_perm64(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out);

// For count vectors stored coordinate-major (xs[k * count + t] is coordinate k of vector t),
// q_out[t] = x^T gram x and l_out[t] = lin . x, with gram an n x n row-major matrix.
// Callers must ensure forms_fit_int32 for the inputs.
void eval_forms_scalar(const std::int32_t* gram, const std::int32_t* lin, int n, const std::int32_t* xs,
                       std::size_t count, std::int32_t* q_out, std::int32_t* l_out);
void eval_forms_avx2(const std::int32_t* gram, const std::int32_t* lin, int n, const std::int32_t* xs,
                     std::size_t count, std::int32_t* q_out, std::int32_t* l_out);
void eval_forms(const std::int32_t* gram, const std::int32_t* lin, int n, const std::int32_t* xs, std::size_t count,
                std::int32_t* q_out, std::int32_t* l_out);

// True when every intermediate of eval_forms stays inside int32 for coordinates bounded by box.
bool forms_fit_int32(std::int64_t max_abs_gram, std::int64_t max_abs_lin, int n, std::int64_t box);

}  // namespace octica::kernels
