#include "octica/cusp_cone.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace octica {

namespace {

bool gmat_less(const GMat& a, const GMat& b)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    return false;
}

struct GMatLess {
    bool operator()(const GMat& a, const GMat& b) const { return gmat_less(a, b); }
};

std::size_t find_sorted(const std::vector<GMat>& v, const GMat& a)
{
    auto it = std::lower_bound(v.begin(), v.end(), a, gmat_less);
    if (it == v.end() || *it != a) return v.size();
    return static_cast<std::size_t>(it - v.begin());
}

int definite_sign(const HermitianLattice& L)
{
    const int n = static_cast<int>(L.rank());
    if (L.signature().neg == n) return -1;
    if (L.signature().pos == n) return 1;
    throw std::invalid_argument("lattice is not definite (signature " + L.signature().str() + ")");
}

}  // namespace

std::ptrdiff_t FiniteIsometryGroup::index_of(const GMat& a) const
{
    std::size_t k = find_sorted(elements, a);
    return k == elements.size() ? -1 : static_cast<std::ptrdiff_t>(k);
}

std::vector<GVec> vectors_of_norm(const HermitianLattice& L, const Int& target)
{
    const int s = definite_sign(L);
    if (target == 0 || sgn(target) != s) return {};
    IntMat P = L.real_form();
    if (s < 0)
        for (std::size_t i = 0; i < P.rows(); ++i)
            for (std::size_t j = 0; j < P.cols(); ++j) P(i, j) = -P(i, j);
    std::vector<GVec> out;
    for (const auto& x : short_vectors(P, abs(target))) {
        GVec v = from_real(x);
        if (L.q_norm(v) == target) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FiniteIsometryGroup enumerate_isometries(const HermitianLattice& L)
{
    definite_sign(L);
    const std::size_t n = L.rank();
    std::vector<std::vector<GVec>> cands(n);
    for (std::size_t j = 0; j < n; ++j) cands[j] = vectors_of_norm(L, L.gram()(j, j).re());
    FiniteIsometryGroup G;
    GMat A(n, n);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
            if (det(A).is_unit()) G.elements.push_back(A);
            return;
        }
        for (const auto& v : cands[j]) {
            bool ok = true;
            for (std::size_t k = 0; k < j && ok; ++k)
                if (L.inner(A.col(k), v) != L.gram()(k, j)) ok = false;
            if (!ok) continue;
            A.set_col(j, v);
            rec(j + 1);
        }
    };
    rec(0);
    std::sort(G.elements.begin(), G.elements.end(), gmat_less);
    return G;
}

Verdict check_group_closure(const FiniteIsometryGroup& G)
{
    if (G.elements.empty()) return Verdict::fail("empty group");
    if (!G.contains(GMat::identity(G.elements[0].rows()))) return Verdict::fail("identity missing");
    for (const auto& a : G.elements) {
        if (!G.contains(inverse_integral(a))) return Verdict::fail("not closed under inverses");
        for (const auto& b : G.elements)
            if (!G.contains(a * b)) return Verdict::fail("not closed under composition");
    }
    return Verdict::pass();
}

std::vector<GMat> enumerate_anti_involutions(const HermitianLattice& L, const FiniteIsometryGroup& G,
                                             const GMat& kappa)
{
    Verdict v = check_anti_involution(L, kappa);
    if (!v) throw std::invalid_argument("seed is not an involutive anti-isometry: " + v.reason);
    const GMat id = GMat::identity(L.rank());
    std::vector<GMat> out;
    for (const auto& a : G.elements) {
        GMat c = compose_anti(a, kappa);
        if (c * conj(c) == id) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), gmat_less);
    return out;
}

Int max_entry_norm(const FiniteIsometryGroup& G)
{
    Int m = 0;
    for (const auto& a : G.elements)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, a(i, j).norm());
    return m;
}

std::vector<GMat> anti_involutions_brute_force(const HermitianLattice& L, const Int& max_norm)
{
    if (L.rank() != 2) throw std::invalid_argument("brute-force search is for rank 2");
    std::vector<GaussInt> entries;
    Int r = isqrt(max_norm);
    for (Int a = -r; a <= r; ++a)
        for (Int b = -r; b <= r; ++b)
            if (a * a + b * b <= max_norm) entries.emplace_back(a, b);
    const GMat id = GMat::identity(2);
    std::vector<GMat> out;
    GMat c(2, 2);
    for (const auto& x : entries)
        for (const auto& y : entries)
            for (const auto& z : entries)
                for (const auto& w : entries) {
                    c(0, 0) = x;
                    c(0, 1) = y;
                    c(1, 0) = z;
                    c(1, 1) = w;
                    if (c * conj(c) != id) continue;
                    if (check_anti_involution(L, c)) out.push_back(c);
                }
    std::sort(out.begin(), out.end(), gmat_less);
    return out;
}

std::vector<std::vector<GMat>> conjugacy_classes(const FiniteIsometryGroup& G, const std::vector<GMat>& antis)
{
    std::vector<GMat> sorted = antis;
    std::sort(sorted.begin(), sorted.end(), gmat_less);
    std::vector<GMat> inverses;
    for (const auto& a : G.elements) inverses.push_back(inverse_integral(a));
    std::vector<bool> seen(sorted.size(), false);
    std::vector<std::vector<GMat>> classes;
    for (std::size_t s = 0; s < sorted.size(); ++s) {
        if (seen[s]) continue;
        std::set<GMat, GMatLess> orbit;
        for (std::size_t k = 0; k < G.elements.size(); ++k)
            orbit.insert(G.elements[k] * sorted[s] * conj(inverses[k]));
        std::vector<GMat> cls(orbit.begin(), orbit.end());
        for (const auto& c : cls) {
            std::size_t idx = find_sorted(sorted, c);
            if (idx == sorted.size()) throw std::logic_error("conjugate of an anti-involution is missing from the list");
            seen[idx] = true;
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::size_t class_of(const std::vector<std::vector<GMat>>& classes, const GMat& kappa)
{
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (find_sorted(classes[k], kappa) < classes[k].size()) return k;
    return classes.size();
}

WedgeQuotient wedge_quotient(const HermitianLattice& L, const FiniteIsometryGroup& G, const GMat& kappa)
{
    WedgeQuotient w;
    w.kappa = kappa;
    w.fix = fix_lattice(L, kappa);
    const GMat& B = *w.fix.embedding;
    IntMat F(2 * L.rank(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) F.set_col(j, to_real(B.col(j)));
    std::set<IntMat, std::function<bool(const IntMat&, const IntMat&)>> image(
        [](const IntMat& a, const IntMat& b) { return a.str() < b.str(); });
    for (const auto& a : G.elements) {
        IntMat M(B.cols(), B.cols());
        bool stab = true;
        for (std::size_t j = 0; j < B.cols() && stab; ++j) {
            GVec img = a * B.col(j);
            if (apply_anti(kappa, img) != img) {
                stab = false;
                break;
            }
            auto c = integral_coords(F, to_real(img));
            if (!c) throw std::logic_error("fixed vector outside the fixed lattice");
            M.set_col(j, *c);
        }
        if (!stab) continue;
        ++w.stabilizer;
        image.insert(M);
    }
    w.image_order = image.size();
    const IntMat id = IntMat::identity(B.cols());
    std::size_t max_rot_order = 0;
    for (const auto& M : image) {
        if (det(M) != 1) continue;
        ++w.rotations;
        IntMat p = M;
        std::size_t ord = 1;
        while (p != id && ord <= image.size()) {
            p = p * M;
            ++ord;
        }
        max_rot_order = std::max(max_rot_order, ord);
    }
    w.dihedral = B.cols() == 2 && w.rotations * 2 == w.image_order && max_rot_order == w.rotations;
    if (!w.dihedral)
        throw std::runtime_error("stabilizer image of order " + std::to_string(w.image_order) + " is not dihedral");
    w.m = w.rotations;
    w.angle = Rat(1, static_cast<long>(w.m));
    return w;
}

Rat cos2(const HermitianLattice& L, const GVec& e, const GVec& f)
{
    Int ef = L.inner(e, f).re();
    Rat c(ef * ef, L.q_norm(e) * L.q_norm(f));
    c.canonicalize();
    return c;
}

std::optional<Rat> cos2_pi_over(std::size_t m)
{
    switch (m) {
    case 1: return Rat(1);
    case 2: return Rat(0);
    case 3: return Rat(1, 4);
    case 4: return Rat(1, 2);
    case 6: return Rat(3, 4);
    default: return std::nullopt;
    }
}

GluedCone glue_cone(const FiniteIsometryGroup& G, const WedgeQuotient& w1, const WedgeQuotient& w3, const GVec& u1,
                    const GVec& u2, const GVec& v1, const GVec& v2)
{
    GluedCone c;
    GVec v3 = v1 + v2;
    auto glue = [&](const std::string& from, const GVec& a, const std::string& to, const GVec& b) {
        EdgeGluing g{from, to, a, b, {}};
        for (std::size_t k = 0; k < G.elements.size(); ++k)
            if (G.elements[k] * a == b) g.witnesses.push_back(k);
        if (g.witnesses.empty()) throw std::runtime_error("no isometry maps " + from + " to " + to);
        c.gluings.push_back(std::move(g));
    };
    glue("v3", v3, "u1", u1);
    glue("v2", v2, "u2", u2);
    c.total_angle = w1.angle + w3.angle;
    c.orbifold_point = is_orbifold_angle(c.total_angle);
    return c;
}

bool is_orbifold_angle(const Rat& angle) { return angle > 0 && angle.get_num() == 1; }

}  // namespace octica
