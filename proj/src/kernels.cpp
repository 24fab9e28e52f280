#include "octica/kernels.hpp"

#include <atomic>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define OCTICA_X86 1
#endif

namespace octica::kernels {

namespace {

std::atomic<int> g_isa{-1};

}  // namespace

Isa detect_isa()
{
#ifdef OCTICA_X86
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

Isa active_isa()
{
    int v = g_isa.load(std::memory_order_relaxed);
    if (v < 0) {
        v = static_cast<int>(detect_isa());
        g_isa.store(v, std::memory_order_relaxed);
    }
    return static_cast<Isa>(v);
}

void set_isa(Isa isa)
{
    if (isa == Isa::Avx2 && detect_isa() != Isa::Avx2) isa = Isa::Scalar;
    g_isa.store(static_cast<int>(isa), std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void compose_perm64_scalar(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out)
{
    for (int i = 0; i < 64; ++i) out[i] = a[b[i]];
}

#ifdef OCTICA_X86
__attribute__((target("avx2"))) void compose_perm64_avx2(const std::uint8_t* a, const std::uint8_t* b,
                                                         std::uint8_t* out)
{
    // Table lookup of 64 entries: pshufb covers 16 at a time within a lane, so
    // look up in each 16-byte quarter of a and keep the quarter selected by b >> 4.
    __m256i tab[4];
    for (int q = 0; q < 4; ++q)
        tab[q] = _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + 16 * q)));
    const __m256i low = _mm256_set1_epi8(0x0f);
    for (int half = 0; half < 2; ++half) {
        __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 32 * half));
        __m256i lo = _mm256_and_si256(idx, low);
        __m256i quarter = _mm256_and_si256(_mm256_srli_epi16(idx, 4), low);
        __m256i res = _mm256_setzero_si256();
        for (int q = 0; q < 4; ++q) {
            __m256i hit = _mm256_cmpeq_epi8(quarter, _mm256_set1_epi8(static_cast<char>(q)));
            res = _mm256_blendv_epi8(res, _mm256_shuffle_epi8(tab[q], lo), hit);
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 32 * half), res);
    }
}
#else
void compose_perm64_avx2(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out)
{
    compose_perm64_scalar(a, b, out);
}
#endif

void compose_perm64(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out)
{
    if (active_isa() == Isa::Avx2)
        compose_perm64_avx2(a, b, out);
    else
        compose_perm64_scalar(a, b, out);
}

void eval_forms_scalar(const std::int32_t* gram, const std::int32_t* lin, int n, const std::int32_t* xs,
                       std::size_t count, std::int32_t* q_out, std::int32_t* l_out)
{
    for (std::size_t t = 0; t < count; ++t) {
        std::int32_t q = 0, l = 0;
        for (int i = 0; i < n; ++i) {
            std::int32_t xi = xs[i * count + t];
            std::int32_t row = 0;
            for (int j = 0; j < n; ++j) row += gram[i * n + j] * xs[j * count + t];
            q += xi * row;
            l += lin[i] * xi;
        }
        q_out[t] = q;
        l_out[t] = l;
    }
}

#ifdef OCTICA_X86
__attribute__((target("avx2"))) void eval_forms_avx2(const std::int32_t* gram, const std::int32_t* lin, int n,
                                                     const std::int32_t* xs, std::size_t count,
                                                     std::int32_t* q_out, std::int32_t* l_out)
{
    constexpr int kMaxRank = 16;
    if (n > kMaxRank) {
        eval_forms_scalar(gram, lin, n, xs, count, q_out, l_out);
        return;
    }
    std::size_t t = 0;
    for (; t + 8 <= count; t += 8) {
        __m256i x[kMaxRank];
        for (int k = 0; k < n; ++k) x[k] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + k * count + t));
        __m256i q = _mm256_setzero_si256();
        __m256i l = _mm256_setzero_si256();
        for (int i = 0; i < n; ++i) {
            __m256i row = _mm256_setzero_si256();
            for (int j = 0; j < n; ++j)
                row = _mm256_add_epi32(row, _mm256_mullo_epi32(_mm256_set1_epi32(gram[i * n + j]), x[j]));
            q = _mm256_add_epi32(q, _mm256_mullo_epi32(x[i], row));
            l = _mm256_add_epi32(l, _mm256_mullo_epi32(_mm256_set1_epi32(lin[i]), x[i]));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(q_out + t), q);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(l_out + t), l);
    }
    for (; t < count; ++t) {
        std::int32_t qv = 0, lv = 0;
        for (int i = 0; i < n; ++i) {
            std::int32_t xi = xs[i * count + t];
            std::int32_t row = 0;
            for (int j = 0; j < n; ++j) row += gram[i * n + j] * xs[j * count + t];
            qv += xi * row;
            lv += lin[i] * xi;
        }
        q_out[t] = qv;
        l_out[t] = lv;
    }
}
#else
void eval_forms_avx2(const std::int32_t* gram, const std::int32_t* lin, int n, const std::int32_t* xs,
                     std::size_t count, std::int32_t* q_out, std::int32_t* l_out)
{
    eval_forms_scalar(gram, lin, n, xs, count, q_out, l_out);
}
#endif

void eval_forms(const std::int32_t* gram, const std::int32_t* lin, int n, const std::int32_t* xs, std::size_t count,
                std::int32_t* q_out, std::int32_t* l_out)
{
    if (active_isa() == Isa::Avx2)
        eval_forms_avx2(gram, lin, n, xs, count, q_out, l_out);
    else
        eval_forms_scalar(gram, lin, n, xs, count, q_out, l_out);
}

bool forms_fit_int32(std::int64_t max_abs_gram, std::int64_t max_abs_lin, int n, std::int64_t box)
{
    const std::int64_t limit = (std::int64_t{1} << 31) - 1;
    if (n <= 0 || box < 0 || max_abs_gram < 0 || max_abs_lin < 0) return false;
    if (box > (1 << 15) || max_abs_gram > (1 << 20) || max_abs_lin > (1 << 20) || n > 64) return false;
    std::int64_t row = max_abs_gram * box * n;
    std::int64_t q = row * box * n;
    std::int64_t l = max_abs_lin * box * n;
    return row <= limit && q <= limit && l <= limit;
}

}  // namespace octica::kernels
