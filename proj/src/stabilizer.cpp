#include "octica/stabilizer.hpp"

#include <sstream>

namespace octica {

const char* stab_type_name(StabType t) { return t == StabType::I ? "I" : "II"; }

StabElement classify_stab_element(const HermitianLattice& L, const GMat& chi, const GMat& A)
{
    Verdict iso = check_isometry(L, A);
    if (!iso) throw std::invalid_argument("not an isometry: " + iso.reason);
    ZLattice F = fix_lattice(L, chi);
    std::optional<GaussInt> beta;
    for (std::size_t j = 0; j < F.embedding->cols(); ++j) {
        GVec w = A * F.embedding->col(j);
        GVec cw = apply_anti(chi, w);
        std::size_t k = 0;
        while (k < w.size() && w[k].is_zero()) ++k;
        if (k == w.size()) throw std::logic_error("isometry maps a basis vector to zero");
        if (!divides(w[k], cw[k])) throw std::domain_error("A does not stabilize Fix(chi): no scalar on column " +
                                                          std::to_string(j + 1));
        GaussInt b = exact_div(cw[k], w[k]);
        if (!b.is_unit() || scale(b, w) != cw)
            throw std::domain_error("A does not stabilize Fix(chi) on column " + std::to_string(j + 1));
        if (beta && *beta != b) throw std::domain_error("beta is not constant on Fix(chi)");
        beta = b;
    }
    StabElement e;
    e.A = A;
    e.beta = *beta;
    e.type = beta->is_real() ? StabType::I : StabType::II;
    return e;
}

std::vector<ExtScalar> scale_factors(const std::vector<Int>& norms, const std::vector<std::size_t>& pairing)
{
    if (pairing.size() != norms.size()) throw std::invalid_argument("pairing length does not match the roots");
    std::vector<ExtScalar> mu(norms.size());
    for (std::size_t j = 0; j < norms.size(); ++j) {
        if (pairing[j] >= norms.size()) throw std::invalid_argument("malformed pairing");
        Rat r(2 * norms[j], norms[pairing[j]]);
        r.canonicalize();
        if (!sqrt_in_ext(r, mu[j]))
            throw std::invalid_argument("scale factor sqrt(" + r.get_str() + ") for root " + std::to_string(j + 1) +
                                        " is not in Q(sqrt 2)");
    }
    return mu;
}

namespace {

ExtMat roots_matrix(const std::vector<GVec>& roots)
{
    const std::size_t n = roots.front().size();
    ExtMat X(n, roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j)
        for (std::size_t c = 0; c < n; ++c) X(c, j) = ExtScalar(roots[j][c]);
    return X;
}

// Primitive integer vector proportional to v, first nonzero entry positive; empty if v is not rational up to scale.
std::optional<IntVec> primitive_rational(const std::vector<ExtScalar>& v)
{
    std::size_t k = 0;
    while (k < v.size() && v[k].is_zero()) ++k;
    if (k == v.size()) return std::nullopt;
    ExtScalar lead = v[k];
    std::vector<Rat> q;
    for (const auto& x : v) {
        ExtScalar y = x / lead;
        if (!y.in_base_field() || !y.a().is_rational()) return std::nullopt;
        q.push_back(y.a().re());
    }
    Int l = 1;
    for (const auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    IntVec out;
    for (const auto& x : q) {
        Rat s = x * l;
        out.push_back(s.get_num());
    }
    Int g = content(out);
    for (auto& x : out) x /= g;
    return out;
}

void explain_inconsistency(const AmbientRoots& roots, const std::vector<std::size_t>& pairing,
                           const std::vector<ExtScalar>& mu, int sign, TypeTwoAttempt& at)
{
    const std::size_t k = roots.coords.size();
    // sum_j y_j (1-i) r_j = 0 forces sum_j y_j eps mu_j r_s(j) = 0.
    std::vector<ExtScalar> f(k);
    for (std::size_t j = 0; j < k; ++j) f[pairing[j]] += at.certificate[j] * ExtScalar(sign) * mu[j];
    auto dep = solve_linear(roots_matrix(roots.coords), ExtMat(roots.coords.front().size(), 0)).kernel;
    if (dep.size() == 1) {
        const auto& d = dep.front();
        std::size_t last = k;
        for (std::size_t j = 0; j < k; ++j)
            if (!d[j].is_zero()) last = j;
        if (last < k) {
            ExtScalar t = f[last] / d[last];
            for (std::size_t j = 0; j < k; ++j) f[j] -= t * d[j];
        }
    }
    if (auto g = primitive_rational(f)) at.relation = relation_str(*g, roots.labels);
}

}  // namespace

TypeTwoResult solve_type_two(const HermitianLattice& L, const AmbientRoots& roots,
                             const std::vector<std::size_t>& pairing)
{
    if (roots.coords.empty()) throw std::invalid_argument("no roots given");
    const std::size_t k = roots.coords.size(), n = L.rank();
    for (const auto& r : roots.coords)
        if (r.size() != n) throw std::invalid_argument("root length does not match the lattice rank");
    for (std::size_t j = 0; j < k; ++j)
        if (pairing.size() != k || pairing[j] >= k || pairing[pairing[j]] != j)
            throw std::invalid_argument("pairing is not an involution of the roots");
    TypeTwoResult res;
    res.pairing = pairing;
    std::vector<Int> norms;
    for (const auto& r : roots.coords) norms.push_back(L.q_norm(r));
    res.mu = scale_factors(norms, pairing);

    // Rows j: ((1-i) r_j)^T T^T = (eps mu_j r_s(j))^T.
    ExtMat A(k, n);
    const GaussInt one_minus_i(1, -1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < n; ++c) A(j, c) = ExtScalar(one_minus_i * roots.coords[j][c]);
    for (int sign : {1, -1}) {
        TypeTwoAttempt at;
        at.sign = sign;
        ExtMat B(k, n);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < n; ++c)
                B(j, c) = ExtScalar(sign) * res.mu[j] * ExtScalar(roots.coords[pairing[j]][c]);
        auto sol = solve_linear(A, B);
        at.consistent = sol.consistent;
        if (!sol.consistent) {
            at.certificate = sol.certificate;
            explain_inconsistency(roots, pairing, res.mu, sign, at);
            at.note = "inconsistent";
        } else if (!sol.kernel.empty()) {
            at.note = "roots do not span; T is not determined";
        } else {
            ExtMat Tt = sol.particular;
            bool integral = true;
            for (std::size_t a = 0; a < n && integral; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!Tt(a, b).is_gauss_int()) {
                        integral = false;
                        break;
                    }
            at.integral = integral;
            if (!integral) {
                at.note = "unique solution is not Gaussian-integral";
            } else {
                GMat T(n, n);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) T(a, b) = Tt(b, a).to_gauss_int();
                Verdict iso = check_isometry(L, T);
                at.isometry = static_cast<bool>(iso);
                at.note = iso ? "witness" : "integral solution is not an isometry: " + iso.reason;
                at.T = T;
                if (iso && !res.witness) {
                    res.witness = T;
                    res.witness_sign = sign;
                }
            }
        }
        res.attempts.push_back(std::move(at));
    }
    return res;
}

Verdict verify_type_two_witness(const HermitianLattice& L, const AmbientRoots& roots,
                                const std::vector<std::size_t>& pairing, const GMat& T, int sign)
{
    Verdict iso = check_isometry(L, T);
    if (!iso) return iso;
    std::vector<Int> norms;
    for (const auto& r : roots.coords) norms.push_back(L.q_norm(r));
    auto mu = scale_factors(norms, pairing);
    ExtMat Te = to_ext(T);
    const ExtScalar one_minus_i(GaussInt(1, -1));
    for (std::size_t j = 0; j < roots.coords.size(); ++j) {
        std::vector<ExtScalar> r(roots.coords[j].begin(), roots.coords[j].end());
        std::vector<ExtScalar> lhs = scale(one_minus_i, Te * r);
        std::vector<ExtScalar> rhs;
        for (const auto& c : roots.coords[pairing[j]]) rhs.push_back(ExtScalar(sign) * mu[j] * ExtScalar(c));
        if (lhs != rhs) return Verdict::fail("condition for root " + roots.labels[j] + " fails");
    }
    GMat sq = T * T;
    GaussInt u = sq(0, 0);
    if (!u.is_unit() || sq != u * GMat::identity(L.rank())) return Verdict::fail("T^2 is not a unit scalar");
    return Verdict::pass();
}

bool maps_fix_to_fix_i(const GMat& chi, const GMat& T)
{
    IntMat fix = fixed_real_kernel(chi);
    IntMat fix_i = fixed_real_kernel(scale_anti(chi, GaussInt::i()));
    IntMat image = realify(T) * fix;
    try {
        return sublattice_index(fix_i, image) == 1;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<std::vector<std::size_t>> diagram_involutions(const CoxeterDiagram& d)
{
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : diagram_symmetries(d, false))
        if (s.is_involution()) out.push_back(s.perm);
    return out;
}

StabStructure stab_structure(const HermitianLattice& L, const AmbientRoots& roots)
{
    StabStructure st;
    for (const auto& s : diagram_involutions(roots.diagram)) {
        TypeTwoResult r = solve_type_two(L, roots, s);
        if (r.witness && !st.witness) {
            st.witness = r.witness;
            st.semidirect = true;
        }
        st.tried.push_back(std::move(r));
    }
    return st;
}

WallReport discriminant_walls(const HermitianLattice& L, const std::vector<GVec>& roots)
{
    WallReport rep;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const GVec& r = roots[j];
        bool divisible = true;
        for (const auto& c : r)
            if (!divisible_by_one_plus_i(c)) divisible = false;
        if (!divisible) continue;
        GVec w;
        GaussInt g;
        for (const auto& c : r) {
            w.push_back(div_one_plus_i(c));
            g = gcd(g, w.back());
        }
        if (!g.is_unit() || L.q_norm(w) != -2) continue;
        rep.walls.push_back(j);
        rep.w.push_back(w);
    }
    rep.count = rep.walls.size();
    return rep;
}

std::string relation_str(const IntVec& coeffs, const std::vector<std::string>& labels)
{
    auto side = [&](int sgn) {
        std::string s;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            Int c = coeffs[j] * sgn;
            if (c <= 0) continue;
            if (!s.empty()) s += " + ";
            if (c != 1) s += c.get_str() + " ";
            s += j < labels.size() ? labels[j] : "r" + std::to_string(j + 1);
        }
        return s.empty() ? std::string("0") : s;
    };
    return side(1) + " = " + side(-1);
}

}  // namespace octica
