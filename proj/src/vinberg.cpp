#include "octica/vinberg.hpp"

#include "octica/kernels.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace octica {

namespace {

Int max_abs_norm(const std::vector<Int>& norms)
{
    if (norms.empty()) throw std::invalid_argument("allowed root norms must be nonempty");
    Int m = 0;
    for (const auto& n : norms) {
        if (n >= 0) throw std::invalid_argument("root norms must be negative, got " + n.get_str());
        if (-n > m) m = -n;
    }
    return m;
}

bool allowed(const std::vector<Int>& norms, const Int& q)
{
    return std::find(norms.begin(), norms.end(), q) != norms.end();
}

// P(x) = 2 (x, v0)^2 - q(v0) q(x), positive definite when v0 is time-like.
IntMat height_form(const ZLattice& L, const IntVec& v0, Int& q0)
{
    q0 = L.norm(v0);
    if (q0 <= 0) throw std::invalid_argument("v0 is not time-like (q(v0) = " + q0.get_str() + ")");
    IntVec lv = L.gram * v0;
    const std::size_t n = L.rank();
    IntMat P(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) P(i, j) = 2 * lv[i] * lv[j] - q0 * L.gram(i, j);
    return P;
}

Int height_bound_value(const std::vector<Int>& norms, const Rat& h, const Int& q0)
{
    // height(r) <= h and q(r) = -m give P(r) = m (2 height + q0) <= max m (2 h + q0).
    return floor_rat(Rat(max_abs_norm(norms)) * (2 * h + Rat(q0)));
}

bool root_less(const Root& a, const Root& b)
{
    if (a.height != b.height) return a.height < b.height;
    if (a.norm != b.norm) return a.norm > b.norm;
    return a.coords < b.coords;
}

std::optional<Root> make_root(const ZLattice& L, const IntVec& x, const std::vector<Int>& norms, const IntVec& v0,
                              const Rat& h)
{
    Int q = L.norm(x);
    if (!allowed(norms, q)) return std::nullopt;
    if (!is_crystallographic_root(L, x, norms)) return std::nullopt;
    Int k = L.inner(x, v0);
    if (k > 0) return std::nullopt;
    Rat height(k * k, -q);
    height.canonicalize();
    if (height > h) return std::nullopt;
    return Root{x, q, height};
}

}  // namespace

bool is_crystallographic_root(const ZLattice& L, const IntVec& r, const std::vector<Int>& norms)
{
    Int q = L.norm(r);
    if (q >= 0 || !allowed(norms, q)) return false;
    if (content(r) != 1) return false;
    IntVec lr = L.gram * r;
    for (const auto& s : lr) {
        Int t = 2 * s;
        if (!mpz_divisible_p(t.get_mpz_t(), q.get_mpz_t())) return false;
    }
    return true;
}

IntVec choose_v0(const ZLattice& L)
{
    const std::size_t n = L.rank();
    IntVec e(n, Int(0));
    e[0] = 1;
    if (L.norm(e) > 0) return e;
    for (long box = 1; box <= 6; ++box) {
        std::optional<IntVec> best;
        Int best_q, best_l1;
        IntVec x(n, Int(-box));
        while (true) {
            Int q = L.norm(x);
            if (q > 0) {
                Int l1 = 0;
                for (const auto& c : x) l1 += abs(c);
                IntVec neg(x.size());
                for (std::size_t i = 0; i < n; ++i) neg[i] = -x[i];
                bool better = !best || q < best_q || (q == best_q && l1 < best_l1);
                if (!better && best && q == best_q && l1 == best_l1) {
                    IntVec bneg(n);
                    for (std::size_t i = 0; i < n; ++i) bneg[i] = -(*best)[i];
                    better = neg < bneg;
                }
                if (better) {
                    best = x;
                    best_q = q;
                    best_l1 = l1;
                }
            }
            std::size_t k = 0;
            while (k < n && x[k] == box) x[k++] = -box;
            if (k == n) break;
            ++x[k];
        }
        if (best) return *best;
    }
    throw std::invalid_argument("no time-like vector found; the form is not Lorentzian");
}

std::vector<Root> enumerate_roots(const ZLattice& L, const std::vector<Int>& norms, const Rat& height_bound,
                                  const IntVec& v0)
{
    Int q0;
    IntMat P = height_form(L, v0, q0);
    Int bound = height_bound_value(norms, height_bound, q0);
    std::vector<Root> out;
    enumerate_short(P, bound, [&](const IntVec& x) {
        if (auto r = make_root(L, x, norms, v0, height_bound)) out.push_back(std::move(*r));
        return true;
    });
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

Int root_box_bound(const ZLattice& L, const std::vector<Int>& norms, const Rat& height_bound, const IntVec& v0)
{
    Int q0;
    IntMat P = height_form(L, v0, q0);
    return coordinate_bound(P, height_bound_value(norms, height_bound, q0));
}

std::vector<Root> enumerate_roots_box(const ZLattice& L, const std::vector<Int>& norms, const Rat& height_bound,
                                      const IntVec& v0, long box)
{
    const int n = static_cast<int>(L.rank());
    Int q0 = L.norm(v0);
    if (q0 <= 0) throw std::invalid_argument("v0 is not time-like");
    IntVec lv = L.gram * v0;
    std::int64_t max_g = 0, max_l = 0;
    std::vector<std::int32_t> gram(n * n), lin(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Int& g = L.gram(i, j);
            if (!g.fits_sint_p()) throw std::invalid_argument("Gram entry too large for the box kernel");
            gram[i * n + j] = static_cast<std::int32_t>(g.get_si());
            max_g = std::max<std::int64_t>(max_g, std::abs(g.get_si()));
        }
        if (!lv[i].fits_sint_p()) throw std::invalid_argument("v0 too large for the box kernel");
        lin[i] = static_cast<std::int32_t>(lv[i].get_si());
        max_l = std::max<std::int64_t>(max_l, std::abs(lv[i].get_si()));
    }
    if (!kernels::forms_fit_int32(max_g, max_l, n, box))
        throw std::invalid_argument("box too large for 32-bit evaluation");

    constexpr std::size_t kChunk = 4096;
    std::vector<std::int32_t> xs(n * kChunk), qv(kChunk), lvv(kChunk);
    std::vector<std::int32_t> cur(n, static_cast<std::int32_t>(-box));
    std::vector<Root> out;
    bool done = false;
    while (!done) {
        std::size_t count = 0;
        while (count < kChunk && !done) {
            for (int k = 0; k < n; ++k) xs[k * kChunk + count] = cur[k];
            ++count;
            int k = 0;
            while (k < n && cur[k] == box) cur[k++] = static_cast<std::int32_t>(-box);
            if (k == n)
                done = true;
            else
                ++cur[k];
        }
        // The kernel reads coordinate-major data with stride = count, so compact when short.
        if (count < kChunk)
            for (int k = 1; k < n; ++k)
                std::copy(xs.begin() + k * kChunk, xs.begin() + k * kChunk + count, xs.begin() + k * count);
        kernels::eval_forms(gram.data(), lin.data(), n, xs.data(), count, qv.data(), lvv.data());
        const std::size_t stride = count < kChunk ? count : kChunk;
        for (std::size_t t = 0; t < count; ++t) {
            std::int32_t q = qv[t], l = lvv[t];
            if (q >= 0 || l > 0) continue;
            if (!allowed(norms, Int(q))) continue;
            Rat h(Int(static_cast<long>(l) * l), Int(-q));
            h.canonicalize();
            if (h > height_bound) continue;
            IntVec x(n);
            for (int k = 0; k < n; ++k) x[k] = xs[k * stride + t];
            if (auto r = make_root(L, x, norms, v0, height_bound)) out.push_back(std::move(*r));
        }
    }
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

StopRule StopRule::parse(const std::string& s)
{
    StopRule r;
    if (s == "volume") {
        r.kind = Volume;
        return r;
    }
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad stop rule '" + s + "'");
    std::string key = s.substr(0, colon), val = s.substr(colon + 1);
    try {
        if (key == "expected") {
            r.kind = Expected;
            long k = std::stol(val);
            if (k <= 0) throw std::invalid_argument("expected count must be positive");
            r.expected = static_cast<std::size_t>(k);
            return r;
        }
        if (key == "height") {
            r.kind = Height;
            r.height = Rat(val);
            r.height.canonicalize();
            if (r.height < 0) throw std::invalid_argument("height must be nonnegative");
            return r;
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad stop rule '" + s + "'");
    }
    throw std::invalid_argument("bad stop rule '" + s + "'");
}

std::string StopRule::str() const
{
    switch (kind) {
    case Expected: return "expected:" + std::to_string(expected);
    case Height: return "height:" + height.get_str();
    case Volume: break;
    }
    return "volume";
}

namespace {

// Generic functional on v0-perp used to pick the chamber of the height-zero roots.
IntVec generic_perp(const ZLattice& L, const IntVec& v0, int salt)
{
    const std::size_t n = L.rank();
    IntVec x(n);
    Int p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = p + 3 * Int(static_cast<long>(i * i)) + 1 + salt;
        p *= 10 + salt;
    }
    Int q0 = L.norm(v0), c = L.inner(x, v0);
    IntVec w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = q0 * x[i] - c * v0[i];
    return w;
}

std::vector<Root> chamber_at_height_zero(const ZLattice& L, const std::vector<Root>& zero, const IntVec& v0)
{
    for (int salt = 0; salt < 16; ++salt) {
        IntVec w = generic_perp(L, v0, salt);
        std::vector<std::pair<Rat, Root>> cands;
        std::set<IntVec> seen;
        bool generic = true;
        for (const auto& r : zero) {
            Int s = L.inner(r.coords, w);
            if (s == 0) {
                generic = false;
                break;
            }
            Root rr = r;
            if (s > 0) {
                for (auto& c : rr.coords) c = -c;
                s = -s;
            }
            if (!seen.insert(rr.coords).second) continue;
            Rat key(s * s, -rr.norm);
            key.canonicalize();
            cands.emplace_back(key, std::move(rr));
        }
        if (!generic) continue;
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second.coords < b.second.coords;
        });
        std::vector<Root> acc;
        for (auto& [key, r] : cands) {
            bool ok = true;
            for (const auto& a : acc)
                if (L.inner(r.coords, a.coords) < 0) {
                    ok = false;
                    break;
                }
            if (ok) acc.push_back(r);
        }
        return acc;
    }
    throw std::runtime_error("could not find a generic functional for the height-zero roots");
}

}  // namespace

VinbergResult fundamental_roots(const ZLattice& L, const std::vector<Int>& norms, const IntVec& v0,
                                const StopRule& stop, const Rat& ceiling)
{
    VinbergResult res;
    res.v0 = v0;
    const std::size_t dim = L.rank() - 1;
    auto stop_met = [&]() {
        if (stop.kind == StopRule::Expected) return res.roots.size() >= stop.expected;
        if (stop.kind == StopRule::Volume) {
            CoxeterDiagram d = coxeter_diagram(L, res.roots);
            return finite_volume_check(d, dim);
        }
        return false;
    };
    Rat processed = -1;
    Rat cap = 1;
    if (stop.kind == StopRule::Height && stop.height < cap) cap = stop.height;
    while (true) {
        std::vector<Root> cands = enumerate_roots(L, norms, cap, v0);
        if (processed < 0) {
            std::vector<Root> zero;
            for (const auto& r : cands)
                if (r.height == 0) zero.push_back(r);
            res.roots = chamber_at_height_zero(L, zero, v0);
            processed = 0;
            if (stop_met()) {
                res.stopped = true;
                break;
            }
        }
        for (const auto& r : cands) {
            if (r.height <= processed) continue;
            bool ok = true;
            for (const auto& a : res.roots)
                if (L.inner(r.coords, a.coords) < 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            res.roots.push_back(r);
            res.last_height = r.height;
            if (stop_met()) {
                res.stopped = true;
                break;
            }
        }
        if (res.stopped) break;
        processed = cap;
        res.last_height = cap;
        if (stop.kind == StopRule::Height && cap >= stop.height) {
            res.stopped = true;
            break;
        }
        if (cap >= ceiling) {
            std::ostringstream os;
            os << "Vinberg algorithm reached height " << cap.get_str() << " with " << res.roots.size()
               << " roots without meeting stop rule " << stop.str();
            throw std::runtime_error(os.str());
        }
        cap *= 2;
        if (cap > ceiling) cap = ceiling;
        if (stop.kind == StopRule::Height && cap > stop.height) cap = stop.height;
    }
    res.finite_volume = finite_volume_check(coxeter_diagram(L, res.roots), dim);
    return res;
}

Bond bond_for(const Rat& c)
{
    if (c == 0) return Bond::None;
    if (c == Rat(1, 4)) return Bond::Single;
    if (c == Rat(1, 2)) return Bond::Double;
    if (c == Rat(3, 4)) return Bond::Triple;
    if (c == 1) return Bond::Parallel;
    if (c > 1) return Bond::Ultraparallel;
    throw IllegalAngle(c);
}

Rat angle_invariant(const ZLattice& L, const IntVec& a, const IntVec& b)
{
    Int ab = L.inner(a, b);
    Rat c(ab * ab, L.norm(a) * L.norm(b));
    c.canonicalize();
    return c;
}

CoxeterDiagram coxeter_diagram(const ZLattice& L, const std::vector<Root>& roots)
{
    CoxeterDiagram d;
    d.resize(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        d.labels[i] = "r" + std::to_string(i + 1);
        d.norms[i] = roots[i].norm;
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            Bond b = bond_for(angle_invariant(L, roots[i].coords, roots[j].coords));
            if (b != Bond::None) d.set_bond(i, j, b);
        }
    return d;
}

bool DiagramSymmetry::is_identity() const
{
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) return false;
    return true;
}

bool DiagramSymmetry::is_involution() const
{
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[perm[i]] != i) return false;
    return !is_identity();
}

namespace {

std::vector<std::size_t> bond_profile(const CoxeterDiagram& d, std::size_t i)
{
    std::vector<std::size_t> p(6, 0);
    for (std::size_t j = 0; j < d.size(); ++j)
        if (j != i) ++p[static_cast<std::size_t>(d.bond(i, j))];
    return p;
}

void match_nodes(const CoxeterDiagram& a, const CoxeterDiagram& b, bool respect_norms, bool first_only,
                 std::vector<std::vector<std::size_t>>& out)
{
    const std::size_t n = a.size();
    if (b.size() != n) return;
    std::vector<std::vector<std::size_t>> pa(n), pb(n);
    for (std::size_t i = 0; i < n; ++i) {
        pa[i] = bond_profile(a, i);
        pb[i] = bond_profile(b, i);
    }
    std::vector<std::size_t> phi(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == n) {
            out.push_back(phi);
            return first_only;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || pa[i] != pb[j]) continue;
            if (respect_norms && a.norms[i] != b.norms[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                if (a.bond(i, k) != b.bond(j, phi[k])) ok = false;
            if (!ok) continue;
            used[j] = true;
            phi[i] = j;
            if (rec(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    rec(0);
}

}  // namespace

std::vector<DiagramSymmetry> diagram_symmetries(const CoxeterDiagram& d, bool respect_norms)
{
    std::vector<std::vector<std::size_t>> perms;
    match_nodes(d, d, respect_norms, false, perms);
    std::vector<DiagramSymmetry> out;
    for (auto& p : perms) {
        DiagramSymmetry s{std::move(p), true};
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d.norms[i] != d.norms[s.perm[i]]) s.respects_norms = false;
        out.push_back(std::move(s));
    }
    return out;
}

std::optional<std::vector<std::size_t>> diagram_isomorphism(const CoxeterDiagram& a, const CoxeterDiagram& b,
                                                            bool respect_norms)
{
    std::vector<std::vector<std::size_t>> perms;
    match_nodes(a, b, respect_norms, true, perms);
    if (perms.empty()) return std::nullopt;
    return perms.front();
}

namespace {

struct Local {
    std::vector<std::size_t> nodes;
    std::vector<std::vector<std::pair<std::size_t, Bond>>> adj;  // local indices
    std::size_t edges = 0;
    std::map<Bond, std::size_t> counts;
};

Local localize(const CoxeterDiagram& d, const std::vector<std::size_t>& nodes)
{
    Local l;
    l.nodes = nodes;
    l.adj.resize(nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            Bond t = d.bond(nodes[a], nodes[b]);
            if (t == Bond::None) continue;
            l.adj[a].push_back({b, t});
            l.adj[b].push_back({a, t});
            ++l.edges;
            ++l.counts[t];
        }
    return l;
}

// Walks from start away from prev; returns the bond labels along the arm.
std::vector<Bond> arm(const Local& l, std::size_t prev, std::size_t start, Bond first)
{
    std::vector<Bond> labels{first};
    std::size_t cur = start;
    while (l.adj[cur].size() == 2) {
        std::size_t next = l.adj[cur][0].first == prev ? 1 : 0;
        prev = cur;
        labels.push_back(l.adj[cur][next].second);
        cur = l.adj[cur][next].first;
    }
    return labels;
}

bool all_single(const std::vector<Bond>& v)
{
    return std::all_of(v.begin(), v.end(), [](Bond b) { return b == Bond::Single; });
}

std::string path_type(const std::vector<Bond>& path)
{
    const std::size_t k = path.size() + 1;
    std::size_t doubles = 0, triples = 0;
    for (Bond b : path) {
        if (b == Bond::Double) ++doubles;
        if (b == Bond::Triple) ++triples;
    }
    auto is = [&](std::vector<Bond> pat) {
        if (pat == path) return true;
        std::reverse(pat.begin(), pat.end());
        return pat == path;
    };
    const Bond S = Bond::Single, D = Bond::Double, T = Bond::Triple;
    if (triples) {
        if (is({T})) return "G2";
        if (is({S, T})) return "G2~";
        return "";
    }
    if (doubles == 0) return "A" + std::to_string(k);
    if (doubles == 1) {
        if (path.front() == D || path.back() == D) return "B" + std::to_string(k);
        if (is({S, D, S})) return "F4";
        if (is({S, S, D, S})) return "F4~";
        return "";
    }
    if (doubles == 2 && path.front() == D && path.back() == D && path.size() >= 2) {
        bool inner_single = true;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (path[i] != S) inner_single = false;
        if (inner_single) return "C" + std::to_string(k - 1) + "~";
    }
    return "";
}

}  // namespace

std::string connected_type(const CoxeterDiagram& d, const std::vector<std::size_t>& nodes)
{
    const std::size_t k = nodes.size();
    if (k == 0) return "";
    if (k == 1) return "A1";
    Local l = localize(d, nodes);
    if (l.counts[Bond::Ultraparallel]) return "";
    if (l.counts[Bond::Parallel]) return (k == 2 && l.edges == 1) ? "A1~" : "";
    if (l.edges == k) {
        // one cycle: only the affine A type
        bool cycle = l.counts[Bond::Single] == k;
        for (const auto& a : l.adj)
            if (a.size() != 2) cycle = false;
        return cycle && k >= 3 ? "A" + std::to_string(k - 1) + "~" : "";
    }
    if (l.edges != k - 1) return "";
    std::vector<std::size_t> branch;
    for (std::size_t a = 0; a < k; ++a)
        if (l.adj[a].size() >= 3) branch.push_back(a);
    if (branch.empty()) {
        std::size_t end = 0;
        while (l.adj[end].size() != 1) ++end;
        std::vector<Bond> path = arm(l, end, l.adj[end][0].first, l.adj[end][0].second);
        return path_type(path);
    }
    if (l.counts[Bond::Triple]) return "";
    if (branch.size() == 1) {
        std::size_t c = branch[0];
        if (l.adj[c].size() == 4) {
            bool star = k == 5 && l.counts[Bond::Single] == 4;
            return star ? "D4~" : "";
        }
        if (l.adj[c].size() != 3) return "";
        std::vector<std::vector<Bond>> arms;
        for (const auto& [nb, t] : l.adj[c]) arms.push_back(arm(l, c, nb, t));
        std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::size_t a = arms[0].size(), b = arms[1].size(), cl = arms[2].size();
        if (l.counts[Bond::Double] == 0) {
            if (a == 1 && b == 1) return "D" + std::to_string(cl + 3);
            if (a == 1 && b == 2 && cl == 2) return "E6";
            if (a == 1 && b == 2 && cl == 3) return "E7";
            if (a == 1 && b == 2 && cl == 4) return "E8";
            if (a == 2 && b == 2 && cl == 2) return "E6~";
            if (a == 1 && b == 3 && cl == 3) return "E7~";
            if (a == 1 && b == 2 && cl == 5) return "E8~";
            return "";
        }
        if (l.counts[Bond::Double] == 1) {
            // affine B: a fork at one end, the double bond at the far end of the third arm
            std::vector<std::vector<Bond>> single_arms, other;
            for (auto& x : arms) (all_single(x) && x.size() == 1 ? single_arms : other).push_back(x);
            if (single_arms.size() >= 2 && other.size() <= 1) {
                const std::vector<Bond>& long_arm = other.empty() ? single_arms.back() : other[0];
                bool shape = long_arm.back() == Bond::Double;
                for (std::size_t i = 0; i + 1 < long_arm.size(); ++i)
                    if (long_arm[i] != Bond::Single) shape = false;
                if (shape) return "B" + std::to_string(k - 1) + "~";
            }
            return "";
        }
        return "";
    }
    if (branch.size() == 2 && l.counts[Bond::Single] == l.edges && k >= 6) {
        for (std::size_t c : branch) {
            if (l.adj[c].size() != 3) return "";
            std::size_t leaves = 0;
            for (const auto& [nb, t] : l.adj[c])
                if (l.adj[nb].size() == 1) ++leaves;
            if (leaves != 2) return "";
        }
        return "D" + std::to_string(k - 1) + "~";
    }
    return "";
}

namespace {

std::vector<std::vector<std::size_t>> components(const CoxeterDiagram& d, const std::vector<std::size_t>& nodes)
{
    std::vector<std::vector<std::size_t>> comps;
    std::vector<bool> seen(nodes.size(), false);
    for (std::size_t s = 0; s < nodes.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            comp.push_back(nodes[a]);
            for (std::size_t b = 0; b < nodes.size(); ++b)
                if (!seen[b] && d.bond(nodes[a], nodes[b]) != Bond::None) {
                    seen[b] = true;
                    stack.push_back(b);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

Subdiagram classify_subdiagram(const CoxeterDiagram& d, const std::vector<std::size_t>& nodes)
{
    Subdiagram s;
    s.nodes = nodes;
    if (nodes.empty()) {
        s.kind = SubKind::Elliptic;
        return s;
    }
    auto comps = components(d, nodes);
    bool elliptic = true, parabolic = true;
    std::vector<std::string> types;
    for (const auto& c : comps) {
        std::string t = connected_type(d, c);
        types.push_back(t.empty() ? "?" : t);
        bool affine = !t.empty() && t.back() == '~';
        if (t.empty() || affine) elliptic = false;
        if (!affine) parabolic = false;
    }
    std::sort(types.begin(), types.end());
    for (std::size_t i = 0; i < types.size(); ++i) s.type += (i ? "+" : "") + types[i];
    if (elliptic) {
        s.kind = SubKind::Elliptic;
        s.rank = nodes.size();
    } else if (parabolic) {
        s.kind = SubKind::Parabolic;
        s.rank = nodes.size() - comps.size();
    }
    return s;
}

SubKind classify_by_gram(const ZLattice& L, const std::vector<Root>& roots, const std::vector<std::size_t>& nodes)
{
    if (nodes.empty()) return SubKind::Elliptic;
    CoxeterDiagram d = coxeter_diagram(L, roots);
    auto comps = components(d, nodes);
    bool elliptic = true, parabolic = true;
    for (const auto& c : comps) {
        IntMat g(c.size(), c.size());
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = 0; b < c.size(); ++b) g(a, b) = -L.inner(roots[c[a]].coords, roots[c[b]].coords);
        Signature s = signature(g);
        const int k = static_cast<int>(c.size());
        if (!(s.pos == k)) elliptic = false;
        if (!(s.neg == 0 && s.zero == 1 && s.pos == k - 1)) parabolic = false;
    }
    if (elliptic) return SubKind::Elliptic;
    if (parabolic) return SubKind::Parabolic;
    return SubKind::Other;
}

VolumeReport finite_volume_report(const CoxeterDiagram& d, std::size_t n)
{
    VolumeReport rep;
    const std::size_t k = d.size();
    if (k > 24) throw std::invalid_argument("diagram too large for subset enumeration");
    std::vector<Subdiagram> subs(std::size_t{1} << k);
    for (std::size_t mask = 0; mask < subs.size(); ++mask) {
        std::vector<std::size_t> nodes;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) nodes.push_back(i);
        subs[mask] = classify_subdiagram(d, nodes);
    }
    auto top = [&](const Subdiagram& s) {
        return (s.kind == SubKind::Elliptic && s.rank == n) || (s.kind == SubKind::Parabolic && s.rank + 1 == n);
    };
    for (const auto& s : subs)
        if (top(s)) ++rep.vertices;
    for (std::size_t mask = 0; mask < subs.size(); ++mask) {
        const Subdiagram& s = subs[mask];
        if (s.kind != SubKind::Elliptic || s.rank + 1 != n) continue;
        ++rep.edges_checked;
        std::size_t ext = 0;
        for (std::size_t sup = 0; sup < subs.size(); ++sup)
            if ((sup & mask) == mask && sup != mask && top(subs[sup])) ++ext;
        if (ext != 2) {
            std::string names;
            for (std::size_t i : s.nodes) names += (names.empty() ? "" : ",") + d.labels[i];
            rep.failures.push_back("edge {" + names + "} (" + s.type + ") has " + std::to_string(ext) + " ends");
        }
    }
    rep.finite = rep.vertices > 0 && rep.failures.empty();
    return rep;
}

bool finite_volume_check(const CoxeterDiagram& d, std::size_t n) { return finite_volume_report(d, n).finite; }

std::string render_dot(const CoxeterDiagram& d, const std::string& name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < d.size(); ++i)
        os << "  " << d.labels[i] << " [label=\"" << d.labels[i] << "\\n" << d.norms[i].get_str() << "\"];\n";
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const char* attr = nullptr;
            switch (d.bond(i, j)) {
            case Bond::None: break;
            case Bond::Single: attr = "style=solid"; break;
            case Bond::Double: attr = "color=\"black:black\""; break;
            case Bond::Triple: attr = "color=\"black:black:black\""; break;
            case Bond::Parallel: attr = "label=\"inf\""; break;
            case Bond::Ultraparallel: attr = "style=dashed"; break;
            }
            if (attr) os << "  " << d.labels[i] << " -- " << d.labels[j] << " [" << attr << "];\n";
        }
    os << "}\n";
    return os.str();
}

std::string render_ascii(const CoxeterDiagram& d, const std::string& name)
{
    std::ostringstream os;
    std::size_t edges = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d.bond(i, j) != Bond::None) ++edges;
    os << name << ": " << d.size() << " nodes, " << edges << " bonds\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        Int marks = -d.norms[i] / 2;
        os << "  " << d.labels[i] << "  norm " << d.norms[i].get_str() << "  marks " << marks.get_str() << "\n";
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const char* sym = nullptr;
            switch (d.bond(i, j)) {
            case Bond::None: break;
            case Bond::Single: sym = "---"; break;
            case Bond::Double: sym = "==="; break;
            case Bond::Triple: sym = "=-="; break;
            case Bond::Parallel: sym = "-oo-"; break;
            case Bond::Ultraparallel: sym = "..."; break;
            }
            if (sym) os << "  " << d.labels[i] << " " << sym << " " << d.labels[j] << "  " << bond_name(d.bond(i, j)) << "\n";
        }
    return os.str();
}

}  // namespace octica
