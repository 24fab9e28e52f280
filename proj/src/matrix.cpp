#include "octica/matrix.hpp"

namespace octica {

GMat conj(const GMat& m)
{
    return m.map([](const GaussInt& z) { return z.conj(); });
}

GMat adjoint(const GMat& m) { return conj(m).transpose(); }

GVec conj(const GVec& v)
{
    GVec r(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k].conj();
    return r;
}

GRatMat to_gauss_rat(const GMat& m)
{
    return m.map([](const GaussInt& z) { return GaussRat(z); });
}

ExtMat to_ext(const GMat& m)
{
    return m.map([](const GaussInt& z) { return ExtScalar(z); });
}

namespace {

// Bareiss elimination; div(a, b) must be exact division.
template <class T, class Div>
T bareiss(Matrix<T> a, Div div)
{
    if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1L);
    T sign(1L), prev(1L);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == T(0L)) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == T(0L)) ++p;
            if (p == n) return T(0L);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                T t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = div(t, prev);
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace

GaussInt det(const GMat& m)
{
    return bareiss(m, [](const GaussInt& a, const GaussInt& b) { return exact_div(a, b); });
}

Int det(const IntMat& m)
{
    return bareiss(m, [](const Int& a, const Int& b) {
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    });
}

GMat inverse_integral(const GMat& m)
{
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    auto sol = solve_linear(to_gauss_rat(m), GRatMat::identity(n));
    if (!sol.consistent || sol.rank != n) throw std::domain_error("matrix is singular");
    GMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = sol.particular(i, j).to_gauss_int();
    return inv;
}

}  // namespace octica
