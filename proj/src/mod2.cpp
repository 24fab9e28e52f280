#include "octica/mod2.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace octica {

F2Map F2Map::identity(int n)
{
    F2Map f;
    f.dim = n;
    for (int k = 0; k < n; ++k) f.cols[k] = static_cast<F2Vec>(1u << k);
    return f;
}

F2Vec F2Map::apply(F2Vec x) const
{
    F2Vec y = 0;
    for (int k = 0; k < dim; ++k)
        if (x >> k & 1) y ^= cols[k];
    return y;
}

F2Map F2Map::compose(const F2Map& o) const
{
    F2Map f;
    f.dim = dim;
    for (int k = 0; k < dim; ++k) f.cols[k] = apply(o.cols[k]);
    return f;
}

std::string F2Map::str() const
{
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < dim; ++r) {
        os << (r ? ", " : "") << "[";
        for (int c = 0; c < dim; ++c) os << (c ? ", " : "") << ((cols[c] >> r) & 1);
        os << "]";
    }
    os << "]";
    return os.str();
}

int F2QuadraticSpace::count_norm_one() const
{
    return static_cast<int>(std::count(q.begin(), q.end(), 1));
}

F2Vec reduce_vector(const GVec& v)
{
    if (v.size() > 8) throw std::invalid_argument("reduction supports rank at most 8");
    F2Vec x = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!divisible_by_one_plus_i(v[k])) x |= static_cast<F2Vec>(1u << k);
    return x;
}

GVec lift_vector(F2Vec x, std::size_t n)
{
    GVec v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = GaussInt((x >> k) & 1 ? 1L : 0L);
    return v;
}

namespace {

int q_of_lift(const HermitianLattice& L, const GVec& v)
{
    Int h = L.q_norm(v);
    if (!mpz_even_p(h.get_mpz_t())) throw std::domain_error("h(x, x) is odd on a lift; q is undefined");
    Int half = h / 2;
    return mpz_odd_p(half.get_mpz_t()) ? 1 : 0;
}

}  // namespace

F2QuadraticSpace quadratic_space(const HermitianLattice& L)
{
    const std::size_t n = L.rank();
    if (n > 6) throw std::invalid_argument("quadratic space supports rank at most 6");
    F2QuadraticSpace V;
    V.dim = static_cast<int>(n);
    V.q.resize(std::size_t{1} << n);
    for (std::size_t x = 0; x < V.q.size(); ++x) V.q[x] = static_cast<std::uint8_t>(q_of_lift(L, lift_vector(x, n)));
    return V;
}

Verdict check_q_well_defined(const HermitianLattice& L)
{
    const std::size_t n = L.rank();
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
        GVec v = lift_vector(x, n);
        int base = q_of_lift(L, v);
        for (std::size_t k = 0; k < n; ++k)
            for (const GaussInt& u : {one_plus_i, GaussInt::i() * one_plus_i}) {
                GVec w = v;
                w[k] += u;
                if (q_of_lift(L, w) != base)
                    return Verdict::fail("q changes on lift of vector " + std::to_string(x) + " along coordinate " +
                                         std::to_string(k + 1));
            }
    }
    return Verdict::pass();
}

Verdict check_polar_form(const F2QuadraticSpace& V)
{
    const F2Vec n = static_cast<F2Vec>(V.size() - 1);
    for (unsigned x = 0; x < V.size(); ++x)
        for (unsigned y = 0; y < V.size(); ++y) {
            if (V.polar(x, y) != V.polar(y, x)) return Verdict::fail("polar form not symmetric");
            for (unsigned z = 0; z < V.size(); ++z)
                if (V.polar(x ^ y, z) != (V.polar(x, z) ^ V.polar(y, z)))
                    return Verdict::fail("polar form not bilinear");
        }
    for (unsigned x = 1; x <= n; ++x) {
        bool radical = true;
        for (unsigned y = 0; y < V.size() && radical; ++y)
            if (V.polar(x, y)) radical = false;
        if (radical) return Verdict::fail("polar form is degenerate at vector " + std::to_string(x));
    }
    return Verdict::pass();
}

F2Map reduce_matrix(const GMat& m)
{
    if (!m.square() || m.rows() > 8) throw std::invalid_argument("reduction needs a square matrix of size <= 8");
    F2Map f;
    f.dim = static_cast<int>(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) f.cols[j] = reduce_vector(m.col(j));
    return f;
}

F2Map induced_involution(const GMat& chi)
{
    F2Map f = reduce_matrix(chi);
    if (!(f.compose(f) == F2Map::identity(f.dim))) throw std::invalid_argument("reduction is not an involution");
    return f;
}

bool preserves_q(const F2QuadraticSpace& V, const F2Map& f)
{
    for (unsigned x = 0; x < V.size(); ++x)
        if (V.q[f.apply(static_cast<F2Vec>(x))] != V.q[x]) return false;
    return true;
}

F2Map inverse(const F2Map& f)
{
    F2Map g;
    g.dim = f.dim;
    const unsigned n = 1u << f.dim;
    std::vector<int> pre(n, -1);
    for (unsigned x = 0; x < n; ++x) {
        F2Vec y = f.apply(static_cast<F2Vec>(x));
        if (pre[y] >= 0) throw std::invalid_argument("F2 map is not invertible");
        pre[y] = static_cast<int>(x);
    }
    for (int k = 0; k < f.dim; ++k) g.cols[k] = static_cast<F2Vec>(pre[1u << k]);
    return g;
}

std::string InvolutionInvariants::str() const
{
    return "(" + std::to_string(dim_fix) + "," + std::to_string(norm_one_fixed) + ")";
}

InvolutionInvariants involution_invariants(const F2QuadraticSpace& V, const F2Map& phi)
{
    if (!(phi.compose(phi) == F2Map::identity(phi.dim))) throw std::invalid_argument("map is not an involution");
    InvolutionInvariants inv;
    int fixed = 0;
    for (unsigned x = 0; x < V.size(); ++x)
        if (phi.apply(static_cast<F2Vec>(x)) == x) {
            ++fixed;
            if (V.q[x]) ++inv.norm_one_fixed;
        }
    while ((1 << inv.dim_fix) < fixed) ++inv.dim_fix;
    return inv;
}

WClass canonical_class(std::uint8_t s)
{
    if (s == 0 || s == 0xff) return 0;
    return (s & 1) ? s : static_cast<WClass>(~s & 0xff);
}

WClass w_add(WClass a, WClass b) { return canonical_class(static_cast<std::uint8_t>(a ^ b)); }

int w_q(WClass a) { return (popcount8(a) / 2) & 1; }

std::vector<WClass> all_w_classes()
{
    std::vector<WClass> out;
    for (unsigned s = 0; s < 256; ++s)
        if (popcount8(s) % 2 == 0 && canonical_class(static_cast<std::uint8_t>(s)) == s) out.push_back(static_cast<WClass>(s));
    return out;
}

namespace {

std::uint8_t apply_involution(std::uint8_t s, int t)
{
    // tau = (1 2)(3 4)... with t transpositions on bits 0..2t-1
    std::uint8_t out = s;
    for (int k = 0; k < t; ++k) {
        unsigned a = (s >> (2 * k)) & 1, b = (s >> (2 * k + 1)) & 1;
        out = static_cast<std::uint8_t>((out & ~(3u << (2 * k))) | (b << (2 * k)) | (a << (2 * k + 1)));
    }
    return out;
}

}  // namespace

S8Invariants s8_invariants(int t)
{
    if (t < 0 || t > 4) throw std::invalid_argument("an involution of P8 has 0 to 4 transpositions");
    S8Invariants r;
    r.transpositions = t;
    for (unsigned s = 0; s < 256; ++s) {
        if (popcount8(s) % 2) continue;
        if (apply_involution(static_cast<std::uint8_t>(s), t) == s) ++r.fixed_subsets;
    }
    for (WClass c : all_w_classes()) {
        if (canonical_class(apply_involution(c, t)) != c) continue;
        ++r.fixed_classes;
        if (w_q(c)) ++r.inv.norm_one_fixed;
    }
    while ((1 << r.inv.dim_fix) < r.fixed_classes) ++r.inv.dim_fix;
    return r;
}

S8Invariants s8_invariants_from_cycle_type(const std::string& cycles)
{
    std::vector<int> parts;
    if (!cycles.empty() && cycles[0] == '(') {
        std::vector<bool> seen(9, false);
        std::size_t i = 0;
        while (i < cycles.size()) {
            if (cycles[i] != '(') throw std::invalid_argument("malformed cycle type '" + cycles + "'");
            std::size_t close = cycles.find(')', i);
            if (close == std::string::npos) throw std::invalid_argument("malformed cycle type '" + cycles + "'");
            std::string body = cycles.substr(i + 1, close - i - 1);
            if (body.empty()) throw std::invalid_argument("malformed cycle type '" + cycles + "'");
            for (char ch : body) {
                if (ch < '1' || ch > '8' || seen[ch - '0'])
                    throw std::invalid_argument("malformed cycle type '" + cycles + "'");
                seen[ch - '0'] = true;
            }
            parts.push_back(static_cast<int>(body.size()));
            i = close + 1;
        }
        int moved = 0;
        for (int p : parts) moved += p;
        for (int k = moved; k < 8; ++k) parts.push_back(1);
    } else {
        std::stringstream ss(cycles);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                parts.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed cycle type '" + cycles + "'");
            }
        }
    }
    int total = 0, twos = 0;
    for (int p : parts) {
        if (p != 1 && p != 2) throw std::invalid_argument("cycle type must use only 1s and 2s: '" + cycles + "'");
        total += p;
        if (p == 2) ++twos;
    }
    if (total != 8) throw std::invalid_argument("cycle type must partition 8: '" + cycles + "'");
    return s8_invariants(twos);
}

const char* octic_type_name(OcticType t)
{
    switch (t) {
    case OcticType::Type0: return "type 0";
    case OcticType::Type1: return "type 1";
    case OcticType::Type2: return "type 2";
    case OcticType::Type3: return "type 3";
    case OcticType::Type4OrAntipodal: return "type 4 or antipodal";
    }
    return "?";
}

OcticType classify_octic_type(const InvolutionInvariants& inv)
{
    if (inv == InvolutionInvariants{6, 28}) return OcticType::Type0;
    if (inv == InvolutionInvariants{5, 16}) return OcticType::Type1;
    if (inv == InvolutionInvariants{4, 8}) return OcticType::Type2;
    if (inv == InvolutionInvariants{3, 4}) return OcticType::Type3;
    if (inv == InvolutionInvariants{4, 4}) return OcticType::Type4OrAntipodal;
    throw std::domain_error("invariants " + inv.str() + " match no row of the table");
}

WBijection build_w_bijection(const F2QuadraticSpace& V)
{
    if (V.dim != 6) throw std::invalid_argument("the W-model needs a 6-dimensional space");
    std::vector<F2Vec> ones;
    for (unsigned x = 0; x < V.size(); ++x)
        if (V.q[x]) ones.push_back(static_cast<F2Vec>(x));
    // Images of {1,j} for j = 2..8: q = 1, pairwise polar 1, summing to 0.
    std::vector<F2Vec> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (chosen.size() == 7) {
            F2Vec sum = 0;
            for (F2Vec a : chosen) sum ^= a;
            return sum == 0;
        }
        for (std::size_t k = start; k < ones.size(); ++k) {
            bool ok = true;
            for (F2Vec a : chosen)
                if (!V.polar(a, ones[k])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(ones[k]);
            if (rec(k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(0)) throw std::runtime_error("no W-model labeling exists for this quadratic space");
    WBijection b;
    for (int j = 1; j < 8; ++j) b.a[j] = chosen[j - 1];
    b.to_v.fill(0);
    b.to_w.fill(0);
    std::vector<bool> hit(64, false);
    for (WClass c : all_w_classes()) {
        F2Vec v = 0;
        if (c != 0)
            for (int j = 1; j < 8; ++j)
                if (c >> j & 1) v ^= b.a[j];
        b.to_v[c] = v;
        if (hit[v]) throw std::runtime_error("W-model labeling is not injective");
        hit[v] = true;
        b.to_w[v] = c;
    }
    return b;
}

Verdict check_w_bijection(const F2QuadraticSpace& V, const WBijection& b)
{
    auto classes = all_w_classes();
    if (classes.size() != 64) return Verdict::fail("W has " + std::to_string(classes.size()) + " classes");
    std::vector<bool> hit(V.size(), false);
    for (WClass c : classes) {
        F2Vec v = b.to_v[c];
        if (hit[v]) return Verdict::fail("not injective");
        hit[v] = true;
        if (V.q[v] != w_q(c)) return Verdict::fail("q does not match half-cardinality");
        for (WClass d : classes)
            if (b.to_v[w_add(c, d)] != (v ^ b.to_v[d])) return Verdict::fail("not additive");
    }
    return Verdict::pass();
}

Perm64 to_perm(const F2Map& f)
{
    if (f.dim != 6) throw std::invalid_argument("permutation form needs dimension 6");
    Perm64 p{};
    for (unsigned x = 0; x < 64; ++x) p[x] = f.apply(static_cast<F2Vec>(x));
    return p;
}

std::vector<F2Map> transvections(const F2QuadraticSpace& V)
{
    std::vector<F2Map> out;
    for (unsigned v = 0; v < V.size(); ++v) {
        if (!V.q[v]) continue;
        F2Map t;
        t.dim = V.dim;
        for (int k = 0; k < V.dim; ++k) {
            F2Vec e = static_cast<F2Vec>(1u << k);
            t.cols[k] = V.polar(e, static_cast<F2Vec>(v)) ? static_cast<F2Vec>(e ^ v) : e;
        }
        out.push_back(t);
    }
    return out;
}

std::vector<F2Map> transported_s8_generators(const WBijection& b)
{
    std::vector<F2Map> out;
    for (int k = 0; k < 7; ++k) {
        F2Map f;
        f.dim = 6;
        for (int j = 0; j < 6; ++j) {
            WClass c = b.to_w[1u << j];
            unsigned lo = (c >> k) & 1, hi = (c >> (k + 1)) & 1;
            std::uint8_t s = static_cast<std::uint8_t>((c & ~(3u << k)) | (hi << k) | (lo << (k + 1)));
            f.cols[j] = b.to_v[canonical_class(s)];
        }
        out.push_back(f);
    }
    return out;
}

namespace {

// A linear permutation is determined by the images of the six unit vectors.
std::uint64_t perm_key(const Perm64& p)
{
    std::uint64_t key = 0;
    for (int k = 0; k < 6; ++k) key |= static_cast<std::uint64_t>(p[1u << k]) << (6 * k);
    return key;
}

}  // namespace

bool PermGroup::contains(const Perm64& p) const
{
    return std::find(elements.begin(), elements.end(), p) != elements.end();
}

PermGroup generate_group(const std::vector<F2Map>& gens)
{
    std::vector<Perm64> g;
    for (const auto& f : gens) g.push_back(to_perm(f));
    PermGroup G;
    Perm64 id{};
    for (unsigned x = 0; x < 64; ++x) id[x] = static_cast<std::uint8_t>(x);
    std::unordered_set<std::uint64_t> seen{perm_key(id)};
    G.elements.push_back(id);
    for (std::size_t head = 0; head < G.elements.size(); ++head) {
        for (const auto& s : g) {
            Perm64 h;
            kernels::compose_perm64(s.data(), G.elements[head].data(), h.data());
            if (seen.insert(perm_key(h)).second) G.elements.push_back(h);
        }
    }
    return G;
}

OvqReport o_vq_report(const F2QuadraticSpace& V)
{
    OvqReport r;
    r.norm_one = V.count_norm_one();
    auto gens = transvections(V);
    r.generators_preserve_q = std::all_of(gens.begin(), gens.end(), [&](const F2Map& f) { return preserves_q(V, f); });
    PermGroup O = generate_group(gens);
    r.order = O.order();
    WBijection b = build_w_bijection(V);
    PermGroup S = generate_group(transported_s8_generators(b));
    r.transported_order = S.order();
    std::unordered_set<std::uint64_t> keys;
    for (const auto& p : O.elements) keys.insert(perm_key(p));
    r.transported_inside = std::all_of(S.elements.begin(), S.elements.end(),
                                       [&](const Perm64& p) { return keys.count(perm_key(p)) > 0; });
    r.equal = r.transported_inside && r.order == r.transported_order;
    return r;
}

}  // namespace octica
