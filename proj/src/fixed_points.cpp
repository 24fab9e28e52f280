#include "octica/fixed_points.hpp"

namespace octica {

GVec ZLattice::ambient(const IntVec& x) const
{
    if (!embedding) throw std::logic_error("lattice has no embedding");
    GVec v(embedding->rows());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += GaussInt(x[j]) * (*embedding)(i, j);
    }
    return v;
}

ZLattice make_zlattice(const IntMat& gram)
{
    if (!gram.square()) throw std::invalid_argument("Gram matrix must be square");
    if (gram != gram.transpose()) throw std::invalid_argument("Gram matrix must be symmetric");
    return ZLattice{gram, std::nullopt};
}

IntMat fixed_real_kernel(const GMat& c)
{
    IntMat r = realify_anti(c);
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= 1;
    return integer_kernel(r);
}

IntMat gram_of(const HermitianLattice& L, const GMat& b)
{
    GMat g = adjoint(b) * L.gram() * b;
    IntMat out(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (!g(i, j).is_real())
                throw std::logic_error("h is not real on the given vectors at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
            out(i, j) = g(i, j).re();
        }
    return out;
}

ZLattice fix_lattice(const HermitianLattice& L, const GMat& c)
{
    Verdict v = check_anti_involution(L, c);
    if (!v) throw std::invalid_argument("not an involutive anti-isometry: " + v.reason);
    IntMat k = fixed_real_kernel(c);
    GMat emb(L.rank(), k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j) {
        GVec g = from_real(k.col(j));
        for (std::size_t i = 0; i < L.rank(); ++i) emb(i, j) = g[i];
    }
    return ZLattice{gram_of(L, emb), emb};
}

Int sublattice_index(const IntMat& outer, const IntMat& inner)
{
    if (outer.rows() != inner.rows()) throw std::invalid_argument("ambient dimension mismatch");
    if (inner.cols() != outer.cols() || rank_int(inner) != inner.cols())
        throw std::invalid_argument("inner basis is not of full rank in the outer lattice");
    IntMat coords(outer.cols(), inner.cols());
    for (std::size_t j = 0; j < inner.cols(); ++j) {
        auto c = integral_coords(outer, inner.col(j));
        if (!c) throw std::invalid_argument("vector " + std::to_string(j) + " does not lie in the outer lattice");
        coords.set_col(j, *c);
    }
    return abs(det(coords));
}

BasisReport verify_basis(const HermitianLattice& L, const GMat& c, const GMat& b, const IntMat& l)
{
    BasisReport rep;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        GVec col = b.col(j);
        if (apply_anti(c, col) != col) {
            rep.fixed = false;
            rep.problems.push_back("column " + std::to_string(j + 1) + " is not fixed");
        }
    }
    GMat g = adjoint(b) * L.gram() * b;
    if (g.rows() != l.rows() || g.cols() != l.cols()) {
        rep.gram_matches = false;
        rep.problems.push_back("Gram shape mismatch");
    } else {
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                if (g(i, j) != GaussInt(l(i, j))) {
                    rep.gram_matches = false;
                    rep.problems.push_back("Gram entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                           ") is " + g(i, j).str() + ", expected " + l(i, j).get_str());
                }
    }
    if (!rep.fixed) {
        rep.full_index = false;
        return rep;
    }
    IntMat outer = fixed_real_kernel(c);
    IntMat inner(2 * b.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) inner.set_col(j, to_real(b.col(j)));
    try {
        rep.index = sublattice_index(outer, inner);
        rep.full_index = rep.index == 1;
        if (!rep.full_index) rep.problems.push_back("basis spans a sublattice of index " + rep.index.get_str());
    } catch (const std::invalid_argument& e) {
        rep.full_index = false;
        rep.problems.push_back(e.what());
    }
    return rep;
}

}  // namespace octica
