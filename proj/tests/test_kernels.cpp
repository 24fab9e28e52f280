#include "octica/kernels.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace octica::kernels;

TEST_CASE("permutation composition: avx2 equals scalar")
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 1000; ++t) {
        Perm64 a, b, s, v, d;
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        compose_perm64_scalar(a.data(), b.data(), s.data());
        for (int i = 0; i < 64; ++i) REQUIRE(s[i] == a[b[i]]);
        if (detect_isa() == Isa::Avx2) {
            compose_perm64_avx2(a.data(), b.data(), v.data());
            CHECK(v == s);
        }
        compose_perm64(a.data(), b.data(), d.data());
        CHECK(d == s);
    }
}

TEST_CASE("quadratic form evaluation: avx2 equals scalar")
{
    std::mt19937_64 rng(2);
    for (int n : {1, 3, 6, 8}) {
        for (std::size_t count : {1u, 7u, 8u, 9u, 1000u}) {
            std::uniform_int_distribution<int> d(-20, 20);
            std::vector<std::int32_t> gram(n * n), lin(n), xs(n * count), q1(count), l1(count), q2(count), l2(count);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) gram[i * n + j] = gram[j * n + i] = d(rng);
            for (auto& x : lin) x = d(rng);
            for (auto& x : xs) x = d(rng);
            REQUIRE(forms_fit_int32(20, 20, n, 20));
            eval_forms_scalar(gram.data(), lin.data(), n, xs.data(), count, q1.data(), l1.data());
            for (std::size_t t = 0; t < count; ++t) {
                long q = 0, l = 0;
                for (int i = 0; i < n; ++i) {
                    l += long(lin[i]) * xs[i * count + t];
                    for (int j = 0; j < n; ++j) q += long(gram[i * n + j]) * xs[i * count + t] * xs[j * count + t];
                }
                REQUIRE(q1[t] == q);
                REQUIRE(l1[t] == l);
            }
            if (detect_isa() == Isa::Avx2) {
                eval_forms_avx2(gram.data(), lin.data(), n, xs.data(), count, q2.data(), l2.data());
                CHECK(q1 == q2);
                CHECK(l1 == l2);
            }
        }
    }
    CHECK_FALSE(forms_fit_int32(1 << 20, 1 << 20, 8, 1 << 10));
}

TEST_CASE("dispatch override")
{
    Isa before = active_isa();
    set_isa(Isa::Scalar);
    CHECK(active_isa() == Isa::Scalar);
    set_isa(Isa::Avx2);
    CHECK(active_isa() == detect_isa());
    set_isa(before);
    CHECK(std::string(isa_name(Isa::Scalar)) == "scalar");
}
