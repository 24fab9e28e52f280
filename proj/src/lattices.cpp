#include "octica/lattices.hpp"

namespace octica {

IntMat realify(const GMat& m)
{
    const std::size_t r = m.rows(), c = m.cols();
    IntMat out(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const GaussInt& z = m(i, j);
            out(i, j) = z.re();
            out(i, j + c) = -z.im();
            out(i + r, j) = z.im();
            out(i + r, j + c) = z.re();
        }
    return out;
}

IntMat realify_anti(const GMat& c)
{
    IntMat out = realify(c);
    const std::size_t n = c.cols();
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = n; j < 2 * n; ++j) out(i, j) = -out(i, j);
    return out;
}

IntVec to_real(const GVec& v)
{
    IntVec r(2 * v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        r[k] = v[k].re();
        r[k + v.size()] = v[k].im();
    }
    return r;
}

GVec from_real(const IntVec& v)
{
    if (v.size() % 2) throw std::invalid_argument("odd-length real vector");
    const std::size_t n = v.size() / 2;
    GVec g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = GaussInt(v[k], v[k + n]);
    return g;
}

HermitianLattice HermitianLattice::make(const GMat& gram)
{
    if (!gram.square()) throw std::invalid_argument("Gram matrix must be square");
    const std::size_t n = gram.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (gram(i, j) != gram(j, i).conj())
                throw NonHermitian(i, j,
                                   "Gram matrix is not Hermitian at (" + std::to_string(i) + "," + std::to_string(j) +
                                       "): " + gram(i, j).str() + " vs conj of " + gram(j, i).str());
    HermitianLattice L;
    L.gram_ = gram;
    // Re h on (a + i b, c + i d) for G = P + i Q is the symmetric matrix [[P, -Q], [Q, P]].
    L.real_ = realify(gram);
    Signature s = octica::signature(L.real_);
    L.sig_ = Signature{s.pos / 2, s.neg / 2, s.zero / 2};
    return L;
}

GaussInt HermitianLattice::inner(const GVec& v, const GVec& w) const
{
    if (v.size() != rank() || w.size() != rank()) throw std::invalid_argument("vector length does not match rank");
    GaussInt total;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (v[i].is_zero()) continue;
        GaussInt row;
        for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * w[j];
        total += v[i].conj() * row;
    }
    return total;
}

Int HermitianLattice::q_norm(const GVec& v) const
{
    GaussInt h = inner(v, v);
    if (!h.is_real()) throw std::logic_error("Hermitian norm is not real");
    return h.re();
}

Verdict check_isometry(const HermitianLattice& L, const GMat& a)
{
    if (a.rows() != L.rank() || a.cols() != L.rank()) return Verdict::fail("shape mismatch");
    GMat g = adjoint(a) * L.gram() * a;
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j)
            if (g(i, j) != L.gram()(i, j))
                return Verdict::fail("A*GA differs from G at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (!det(a).is_unit()) return Verdict::fail("determinant " + det(a).str() + " is not a unit");
    return Verdict::pass();
}

Verdict check_anti_isometry(const HermitianLattice& L, const GMat& c)
{
    if (c.rows() != L.rank() || c.cols() != L.rank()) return Verdict::fail("shape mismatch");
    // h(C conj x, C conj y) = x^T C^* G C conj(y) must equal conj(x^* G y) = x^T conj(G) conj(y).
    GMat g = adjoint(c) * L.gram() * c;
    GMat target = conj(L.gram());
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j)
            if (g(i, j) != target(i, j))
                return Verdict::fail("h(chi e" + std::to_string(i) + ", chi e" + std::to_string(j) +
                                     ") is not conj h(e" + std::to_string(i) + ", e" + std::to_string(j) + ")");
    if (!det(c).is_unit()) return Verdict::fail("determinant " + det(c).str() + " is not a unit");
    return Verdict::pass();
}

Verdict check_anti_involution(const HermitianLattice& L, const GMat& c)
{
    Verdict v = check_anti_isometry(L, c);
    if (!v) return v;
    if (c * conj(c) != GMat::identity(L.rank())) return Verdict::fail("C conj(C) is not the identity");
    return Verdict::pass();
}

GMat compose_anti(const GMat& a, const GMat& c) { return a * c; }

GMat scale_anti(const GMat& c, const GaussInt& u)
{
    if (!u.is_unit()) throw std::invalid_argument("scale_anti needs a unit, got " + u.str());
    return u * c;
}

GMat conjugate_anti(const GMat& a, const GMat& c) { return a * c * conj(inverse_integral(a)); }

GVec apply_anti(const GMat& c, const GVec& v) { return c * conj(v); }

}  // namespace octica
