#include "octica/report.hpp"

#include "octica/analysis.hpp"
#include "octica/cusp_cone.hpp"
#include "octica/kernels.hpp"
#include "octica/mod2.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace octica {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ")
{
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
    return s;
}

}  // namespace

bool Report::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t Report::passed() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

nlohmann::json Report::to_json(bool timing) const
{
    nlohmann::json j;
    j["report"] = "verify-all";
    j["checksum"] = checksum;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e{{"id", c.id},          {"group", c.group},       {"criterion", criterion_of(c.group)},
                         {"topic", c.topic},    {"expected", c.expected}, {"computed", c.computed},
                         {"pass", c.pass}};
        if (timing) e["ms"] = c.ms;
        j["checks"].push_back(std::move(e));
    }
    j["passed"] = passed();
    j["total"] = checks.size();
    j["verdict"] = pass() ? "pass" : "fail";
    return j;
}

Report Report::from_json(const nlohmann::json& j)
{
    Report r;
    r.checksum = j.at("checksum").get<std::string>();
    for (const auto& e : j.at("checks")) {
        CheckResult c;
        c.id = e.at("id").get<std::string>();
        c.group = e.at("group").get<std::string>();
        c.topic = e.at("topic").get<std::string>();
        c.expected = e.at("expected").get<std::string>();
        c.computed = e.at("computed").get<std::string>();
        c.pass = e.at("pass").get<bool>();
        if (e.contains("ms")) c.ms = e.at("ms").get<double>();
        r.checks.push_back(std::move(c));
    }
    return r;
}

std::string Report::text(bool timing) const
{
    std::ostringstream os;
    os << "data checksum: " << checksum << "\n";
    std::string group;
    for (const auto& c : checks) {
        if (c.group != group) {
            group = c.group;
            os << "\n[" << group << "] criterion " << criterion_of(group) << "\n";
        }
        os << (c.pass ? "  PASS " : "  FAIL ") << c.id << ": " << c.topic << "\n";
        os << "       expected: " << c.expected << "\n";
        os << "       computed: " << c.computed << "\n";
        if (timing) os << "       time: " << std::fixed << std::setprecision(1) << c.ms << " ms\n";
    }
    os << "\n" << passed() << "/" << checks.size() << " checks passed: " << (pass() ? "PASS" : "FAIL") << "\n";
    std::vector<std::string> failed;
    for (const auto& c : checks)
        if (!c.pass) failed.push_back(c.id);
    if (!failed.empty()) os << "failing checks: " << join(failed) << "\n";
    return os.str();
}

const std::vector<std::string>& check_groups()
{
    static const std::vector<std::string> g{"fix", "vinberg", "roots", "mod2", "ovq", "type2", "wall", "cone", "props"};
    return g;
}

int criterion_of(const std::string& group)
{
    const auto& g = check_groups();
    auto it = std::find(g.begin(), g.end(), group);
    if (it == g.end()) throw std::invalid_argument("unknown check group '" + group + "'");
    return static_cast<int>(it - g.begin()) + 1;
}

namespace {

struct Outcome {
    bool pass = false;
    std::string expected;
    std::string computed;
};

struct Context {
    const DataFile& pd;
    Analysis analysis;
    explicit Context(const DataFile& p) : pd(p), analysis(p) {}
};

struct Check {
    std::string id, group, topic;
    std::function<Outcome(Context&)> run;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string li(int i) { return "L" + std::to_string(i); }

const std::size_t kNodeCounts[5] = {6, 7, 7, 8, 6};
const char* kPhiInv[5] = {"(6,28)", "(5,16)", "(4,8)", "(3,4)", "(4,4)"};

std::vector<Check> fix_checks()
{
    std::vector<Check> out;
    out.push_back({"fix.lattices", "fix", "Hermitian lattices are well formed with the expected signatures",
                   [](Context& c) {
                       auto lam = c.pd.lambda();
                       auto lz = c.pd.lz();
                       bool even = true;
                       for (std::size_t k = 0; k < lam.rank(); ++k)
                           if (!mpz_even_p(lam.gram()(k, k).re().get_mpz_t())) even = false;
                       Outcome o;
                       o.expected = "lambda rank 6 signature (1,5) even diagonal; lz signature (0,2)";
                       o.computed = "lambda rank " + std::to_string(lam.rank()) + " signature " + lam.signature().str() +
                                    " even diagonal " + yes(even) + "; lz signature " + lz.signature().str();
                       o.pass = lam.rank() == 6 && lam.signature() == Signature{1, 5, 0} && even &&
                                lz.signature() == Signature{0, 2, 0};
                       return o;
                   }});
    for (int i = 0; i < 5; ++i) {
        out.push_back({"fix.chi" + std::to_string(i), "fix",
                       "chi" + std::to_string(i) + " is an involutive anti-isometry and equals A" + std::to_string(i) +
                           " composed with chiII",
                       [i](Context& c) {
                           auto lam = c.pd.lambda();
                           Verdict anti = check_anti_involution(lam, c.pd.chi(i));
                           Verdict iso = check_isometry(lam, c.pd.iso(i));
                           bool comp = compose_anti(c.pd.iso(i), c.pd.chi_ii()) == c.pd.chi(i);
                           Outcome o;
                           o.expected = "anti-involution yes; A isometry yes; composition matches yes";
                           o.computed = "anti-involution " + yes(anti.ok) + (anti ? "" : " (" + anti.reason + ")") +
                                        "; A isometry " + yes(iso.ok) + (iso ? "" : " (" + iso.reason + ")") +
                                        "; composition matches " + yes(comp);
                           o.pass = anti.ok && iso.ok && comp;
                           return o;
                       }});
    }
    for (int i = 0; i < 5; ++i) {
        out.push_back({"fix.basis." + li(i), "fix",
                       "columns of B" + std::to_string(i) + " are fixed, have Gram " + li(i) + " and span Fix(chi" +
                           std::to_string(i) + ")",
                       [i](Context& c) {
                           auto rep = verify_basis(c.pd.lambda(), c.pd.chi(i), c.pd.basis(i), c.pd.gram(i));
                           Outcome o;
                           o.expected = "fixed yes; Gram exact yes; index 1";
                           o.computed = "fixed " + yes(rep.fixed) + "; Gram exact " + yes(rep.gram_matches) +
                                        "; index " + (rep.fixed ? rep.index.get_str() : "n/a");
                           if (!rep.problems.empty()) o.computed += " [" + join(rep.problems, "; ") + "]";
                           o.pass = rep.ok();
                           return o;
                       }});
    }
    for (int i = 0; i < 5; ++i) {
        out.push_back({"fix.lattice." + li(i), "fix",
                       "Fix(chi" + std::to_string(i) + ") has rank 6 and signature (1,5)", [i](Context& c) {
                           ZLattice F = fix_lattice(c.pd.lambda(), c.pd.chi(i));
                           Signature s = signature(F.gram);
                           Outcome o;
                           o.expected = "rank 6 signature (1,5)";
                           o.computed = "rank " + std::to_string(F.rank()) + " signature " + s.str();
                           o.pass = F.rank() == 6 && s == Signature{1, 5, 0};
                           return o;
                       }});
    }
    return out;
}

std::vector<Check> vinberg_checks()
{
    std::vector<Check> out;
    for (int i = 0; i < 5; ++i) {
        out.push_back({"vinberg." + li(i), "vinberg",
                       "Vinberg diagram of " + li(i) + " matches the transcribed diagram and has finite volume",
                       [i](Context& c) {
                           const auto& run = c.analysis.vinberg(i);
                           bool iso = diagram_isomorphism(c.pd.diagram(i), run.diagram, true).has_value();
                           Outcome o;
                           o.expected = std::to_string(kNodeCounts[i]) + " roots; isomorphic yes; finite volume yes";
                           o.computed = std::to_string(run.result.roots.size()) + " roots; isomorphic " + yes(iso) +
                                        "; finite volume " + yes(run.result.finite_volume) + "; last height " +
                                        run.result.last_height.get_str();
                           o.pass = run.result.roots.size() == kNodeCounts[i] && iso && run.result.finite_volume;
                           return o;
                       }});
    }
    for (int i = 0; i < 5; ++i) {
        out.push_back({"vinberg." + li(i) + ".symmetries", "vinberg",
                       "diagram symmetries of " + li(i) + " with and without norms", [i](Context& c) {
                           const auto& d = c.analysis.vinberg(i).diagram;
                           auto with = diagram_symmetries(d, true);
                           auto without = diagram_symmetries(d, false);
                           std::size_t nontrivial = 0, involutions = 0;
                           for (const auto& s : without)
                               if (!s.is_identity()) {
                                   ++nontrivial;
                                   if (s.is_involution()) ++involutions;
                               }
                           const std::size_t want = (i == 2 || i == 3) ? 1 : 0;
                           Outcome o;
                           o.expected = "with norms: identity only; without norms: " + std::to_string(want) +
                                        " nontrivial, all involutions";
                           o.computed = "with norms: " + std::to_string(with.size()) +
                                        " symmetries; without norms: " + std::to_string(nontrivial) +
                                        " nontrivial, " + std::to_string(involutions) + " involutions";
                           o.pass = with.size() == 1 && with[0].is_identity() && nontrivial == want &&
                                    involutions == want;
                           return o;
                       }});
    }
    out.push_back({"vinberg.bonds", "vinberg", "special bonds of the L1 and L3 diagrams", [](Context& c) {
                       const auto& d1 = c.analysis.vinberg(1).diagram;
                       const auto& d3 = c.analysis.vinberg(3).diagram;
                       Outcome o;
                       o.expected = "L1: 1 parallel, 1 double; L3: 1 ultraparallel, 2 parallel";
                       o.computed = "L1: " + std::to_string(d1.count(Bond::Parallel)) + " parallel, " +
                                    std::to_string(d1.count(Bond::Double)) + " double; L3: " +
                                    std::to_string(d3.count(Bond::Ultraparallel)) + " ultraparallel, " +
                                    std::to_string(d3.count(Bond::Parallel)) + " parallel";
                       o.pass = d1.count(Bond::Parallel) == 1 && d1.count(Bond::Double) == 1 &&
                                d3.count(Bond::Ultraparallel) == 1 && d3.count(Bond::Parallel) == 2;
                       return o;
                   }});
    out.push_back({"vinberg.walls", "vinberg",
                   "every positive-height root up to the last processed height is accepted or cut off by an accepted "
                   "mirror",
                   [](Context& c) {
                       std::vector<std::string> parts;
                       bool ok = true;
                       for (int i = 0; i < 5; ++i) {
                           const auto& run = c.analysis.vinberg(i);
                           const auto& acc = run.result.roots;
                           auto all = enumerate_roots(run.lattice, run.norms, run.result.last_height, run.result.v0);
                           std::size_t missed = 0, checked = 0;
                           for (const auto& r : all) {
                               if (r.height == 0) continue;
                               ++checked;
                               bool accepted = std::any_of(acc.begin(), acc.end(),
                                                           [&](const Root& a) { return a.coords == r.coords; });
                               bool cut = std::any_of(acc.begin(), acc.end(), [&](const Root& a) {
                                   return run.lattice.inner(a.coords, r.coords) < 0;
                               });
                               if (!accepted && !cut) ++missed;
                           }
                           for (std::size_t a = 0; a < acc.size(); ++a)
                               for (std::size_t b = a + 1; b < acc.size(); ++b)
                                   if (run.lattice.inner(acc[a].coords, acc[b].coords) < 0) ++missed;
                           ok = ok && missed == 0;
                           parts.push_back(li(i) + " " + std::to_string(checked) + " roots, " + std::to_string(missed) +
                                           " missed");
                       }
                       Outcome o;
                       o.expected = "0 missed for each lattice";
                       o.computed = join(parts, "; ");
                       o.pass = ok;
                       return o;
                   }});
    return out;
}

std::vector<Check> roots_checks()
{
    std::vector<Check> out;
    out.push_back({"roots.L2.relation", "roots", "dependency r7 = r2 + 2 r3 - r4 - r5 + r6 among the L2 roots",
                   [](Context& c) {
                       RootTable t = c.pd.roots(2);
                       Outcome o;
                       o.expected = "r7 = r2 + 2 r3 - r4 - r5 + r6";
                       if (t.coords.size() != 7) {
                           o.computed = std::to_string(t.coords.size()) + " roots transcribed";
                           return o;
                       }
                       IntVec rhs = t.coords[1];
                       for (std::size_t k = 0; k < rhs.size(); ++k)
                           rhs[k] += 2 * t.coords[2][k] - t.coords[3][k] - t.coords[4][k] + t.coords[5][k];
                       o.pass = rhs == t.coords[6];
                       o.computed = o.pass ? "holds" : "r7 = " + vec_str(t.coords[6]) + ", right side " + vec_str(rhs);
                       return o;
                   }});
    for (int i : {2, 3}) {
        out.push_back({"roots." + li(i) + ".table", "roots",
                       "transcribed " + li(i) + " roots are crystallographic and span the transcribed diagram",
                       [i](Context& c) {
                           ZLattice L = embedded_lattice(c.pd, i);
                           RootTable t = c.pd.roots(i);
                           auto norms = allowed_norms(c.pd, i);
                           std::size_t crys = 0;
                           for (const auto& r : t.coords)
                               if (is_crystallographic_root(L, r, norms)) ++crys;
                           AmbientRoots ar = ambient_from_data(c.pd, i);
                           bool same = ar.diagram.norms == c.pd.diagram(i).norms &&
                                       ar.diagram.bonds == c.pd.diagram(i).bonds;
                           Outcome o;
                           o.expected = std::to_string(kNodeCounts[i]) + " crystallographic roots; diagram equal yes";
                           o.computed = std::to_string(crys) + "/" + std::to_string(t.coords.size()) +
                                        " crystallographic roots; diagram equal " + yes(same);
                           o.pass = crys == kNodeCounts[i] && t.coords.size() == kNodeCounts[i] && same;
                           return o;
                       }});
    }
    return out;
}

std::vector<Check> mod2_checks()
{
    std::vector<Check> out;
    out.push_back({"mod2.q", "mod2", "q on V is well defined with a nondegenerate polar form", [](Context& c) {
                       auto lam = c.pd.lambda();
                       Verdict wd = check_q_well_defined(lam);
                       Verdict pf = check_polar_form(quadratic_space(lam));
                       Outcome o;
                       o.expected = "well defined yes; polar form bilinear nondegenerate yes";
                       o.computed = "well defined " + yes(wd.ok) + "; polar form bilinear nondegenerate " + yes(pf.ok);
                       o.pass = wd.ok && pf.ok;
                       return o;
                   }});
    for (int i = 0; i < 5; ++i) {
        out.push_back({"mod2.phi" + std::to_string(i), "mod2",
                       "invariants (dim Fix, norm-one fixed) of the reduction of chi" + std::to_string(i),
                       [i](Context& c) {
                           auto V = quadratic_space(c.pd.lambda());
                           F2Map phi = induced_involution(c.pd.chi(i));
                           auto inv = involution_invariants(V, phi);
                           Outcome o;
                           o.expected = kPhiInv[i];
                           o.computed = inv.str() + ", preserves q " + yes(preserves_q(V, phi));
                           o.pass = inv.str() == kPhiInv[i] && preserves_q(V, phi);
                           return o;
                       }});
    }
    out.push_back({"mod2.s8", "mod2", "invariants of involutions of P8 on the W-model", [](Context& c) {
                       (void)c;
                       std::vector<std::string> parts;
                       bool ok = true;
                       for (int t = 0; t <= 4; ++t) {
                           auto s = s8_invariants(t);
                           parts.push_back(s.inv.str());
                           ok = ok && s.inv.str() == kPhiInv[t];
                       }
                       auto tau6 = s8_invariants_from_cycle_type("(12)");
                       ok = ok && tau6.fixed_subsets == 64 && tau6.fixed_classes == 32;
                       Outcome o;
                       o.expected = "(6,28) (5,16) (4,8) (3,4) (4,4); one transposition fixes 2 x 32 subsets";
                       o.computed = join(parts, " ") + "; one transposition fixes " +
                                    std::to_string(tau6.fixed_subsets) + " = 2 x " +
                                    std::to_string(tau6.fixed_subsets / 2) + " subsets";
                       o.pass = ok;
                       return o;
                   }});
    out.push_back({"mod2.types", "mod2", "octic types from the invariants, with the (4,4) ambiguity", [](Context& c) {
                       auto V = quadratic_space(c.pd.lambda());
                       std::vector<std::string> parts;
                       bool ok = true;
                       for (int i = 0; i < 5; ++i) {
                           auto t = classify_octic_type(involution_invariants(V, induced_involution(c.pd.chi(i))));
                           parts.push_back(octic_type_name(t));
                           ok = ok && static_cast<int>(t) == i;
                       }
                       Outcome o;
                       o.expected = "type 0, type 1, type 2, type 3, type 4 or antipodal";
                       o.computed = join(parts);
                       o.pass = ok;
                       return o;
                   }});
    out.push_back({"mod2.equivariance", "mod2", "reduction commutes with conjugation by isometries", [](Context& c) {
                       std::size_t pairs = 0, bad = 0;
                       for (int a = 0; a < 5; ++a)
                           for (int k = 0; k < 5; ++k) {
                               GMat A = c.pd.iso(a);
                               GMat chi = c.pd.chi(k);
                               F2Map lhs = induced_involution(conjugate_anti(A, chi));
                               F2Map ra = reduce_matrix(A);
                               F2Map rhs = ra.compose(induced_involution(chi)).compose(inverse(ra));
                               ++pairs;
                               if (!(lhs == rhs)) ++bad;
                           }
                       Outcome o;
                       o.expected = "25 pairs agree";
                       o.computed = std::to_string(pairs - bad) + " pairs agree";
                       o.pass = bad == 0 && pairs == 25;
                       return o;
                   }});
    return out;
}

std::vector<Check> ovq_checks()
{
    std::vector<Check> out;
    out.push_back({"ovq.norm_one", "ovq", "vectors with q = 1", [](Context& c) {
                       auto V = quadratic_space(c.pd.lambda());
                       Outcome o;
                       o.expected = "28";
                       o.computed = std::to_string(V.count_norm_one());
                       o.pass = V.count_norm_one() == 28;
                       return o;
                   }});
    out.push_back({"ovq.group", "ovq", "O(V,q) from transvections against the transported S8", [](Context& c) {
                       auto V = quadratic_space(c.pd.lambda());
                       auto b = build_w_bijection(V);
                       Verdict wb = check_w_bijection(V, b);
                       auto r = o_vq_report(V);
                       Outcome o;
                       o.expected = "order 40320; generators preserve q; W-model bijection valid; transported S8 equal";
                       o.computed = "order " + std::to_string(r.order) + "; generators preserve q " +
                                    yes(r.generators_preserve_q) + "; W-model bijection valid " + yes(wb.ok) +
                                    "; transported S8 order " + std::to_string(r.transported_order) + " equal " +
                                    yes(r.equal);
                       o.pass = r.order == 40320 && r.generators_preserve_q && wb.ok && r.equal;
                       return o;
                   }});
    return out;
}

std::string verdicts(Context& c, bool computed_chamber)
{
    std::vector<std::string> parts;
    for (int i = 0; i < 5; ++i) {
        const auto& run = c.analysis.vinberg(i);
        AmbientRoots ar = computed_chamber ? ambient_from_run(run) : ambient_roots(c.pd, i, run);
        parts.push_back(stab_structure(c.pd.lambda(), ar).str());
    }
    return join(parts, "/");
}

std::vector<Check> type2_checks()
{
    std::vector<Check> out;
    out.push_back({"type2.chi2", "type2", "no type II element for chi2, with the forced relation", [](Context& c) {
                       AmbientRoots ar = ambient_from_data(c.pd, 2);
                       auto inv = diagram_involutions(ar.diagram);
                       Outcome o;
                       o.expected = "one symmetry; inconsistent for both signs; relation 2 r3 = r4";
                       if (inv.size() != 1) {
                           o.computed = std::to_string(inv.size()) + " symmetries";
                           return o;
                       }
                       auto r = solve_type_two(c.pd.lambda(), ar, inv[0]);
                       std::vector<std::string> parts;
                       bool ok = !r.witness;
                       for (const auto& a : r.attempts) {
                           parts.push_back(std::string(a.sign > 0 ? "+" : "-") + ": " + a.note +
                                           (a.relation.empty() ? "" : ", " + a.relation));
                           ok = ok && !a.consistent && a.relation == "2 r3 = r4";
                       }
                       o.computed = "one symmetry; " + join(parts, "; ");
                       o.pass = ok;
                       return o;
                   }});
    out.push_back({"type2.chi3", "type2", "type II witness for chi3", [](Context& c) {
                       auto lam = c.pd.lambda();
                       AmbientRoots ar = ambient_from_data(c.pd, 3);
                       auto inv = diagram_involutions(ar.diagram);
                       Outcome o;
                       o.expected = "witness verified; projective order two; maps Fix(chi) onto Fix(i chi); type II";
                       if (inv.size() != 1) {
                           o.computed = std::to_string(inv.size()) + " symmetries";
                           return o;
                       }
                       auto r = solve_type_two(lam, ar, inv[0]);
                       if (!r.witness) {
                           o.computed = "no witness";
                           return o;
                       }
                       const GMat& T = *r.witness;
                       Verdict v = verify_type_two_witness(lam, ar, inv[0], T, r.witness_sign);
                       bool onto = maps_fix_to_fix_i(c.pd.chi(3), T) ||
                                   maps_fix_to_fix_i(c.pd.chi(3), GaussInt::i() * T);
                       StabType t = classify_stab_element(lam, c.pd.chi(3), T).type;
                       o.computed = std::string("witness verified ") + yes(v.ok) + (v ? "" : " (" + v.reason + ")") +
                                    "; projective order two " + yes(v.ok) + "; maps Fix(chi) onto Fix(i chi) " +
                                    yes(onto) + "; type " + stab_type_name(t);
                       o.pass = v.ok && onto && t == StabType::II;
                       return o;
                   }});
    out.push_back({"type2.structure", "type2", "stabilizer structure for chi0..chi4", [](Context& c) {
                       Outcome o;
                       o.expected = "equal/equal/equal/semidirect/equal";
                       o.computed = verdicts(c, false);
                       o.pass = o.computed == o.expected;
                       return o;
                   }});
    out.push_back({"type2.computed_chamber", "type2", "same structure from the computed fundamental roots",
                   [](Context& c) {
                       Outcome o;
                       o.expected = "equal/equal/equal/semidirect/equal";
                       o.computed = verdicts(c, true);
                       o.pass = o.computed == o.expected;
                       return o;
                   }});
    out.push_back({"type2.composition", "type2", "types compose like Z/2 on stabilizer samples", [](Context& c) {
                       auto lam = c.pd.lambda();
                       AmbientRoots ar = ambient_from_data(c.pd, 3);
                       auto inv = diagram_involutions(ar.diagram);
                       Outcome o;
                       o.expected = "all products and inverses follow the law";
                       if (inv.size() != 1) {
                           o.computed = "no symmetry";
                           return o;
                       }
                       auto r = solve_type_two(lam, ar, inv[0]);
                       if (!r.witness) {
                           o.computed = "no witness";
                           return o;
                       }
                       const GMat& T = *r.witness;
                       const GMat I = GMat::identity(6);
                       std::vector<GMat> samples{I, GaussInt::i() * I, T, GaussInt::i() * T, T * T, T * T * T};
                       std::size_t n = 0, bad = 0;
                       for (const auto& a : samples) {
                           StabType ta = classify_stab_element(lam, c.pd.chi(3), a).type;
                           if (classify_stab_element(lam, c.pd.chi(3), inverse_integral(a)).type != ta) ++bad;
                           for (const auto& b : samples) {
                               StabType tb = classify_stab_element(lam, c.pd.chi(3), b).type;
                               StabType tab = classify_stab_element(lam, c.pd.chi(3), a * b).type;
                               ++n;
                               if ((tab == StabType::I) != (ta == tb)) ++bad;
                           }
                       }
                       o.computed = std::to_string(n - bad) + "/" + std::to_string(n) + " products follow the law";
                       o.pass = bad == 0;
                       if (o.pass) o.computed = "all products and inverses follow the law";
                       return o;
                   }});
    return out;
}

std::vector<Check> wall_checks()
{
    std::vector<Check> out;
    out.push_back({"wall.L4", "wall", "fundamental roots of L4 of the form (1+i)w with w primitive of norm -2",
                   [](Context& c) {
                       AmbientRoots ar = ambient_from_run(c.analysis.vinberg(4));
                       auto rep = discriminant_walls(c.pd.lambda(), ar.coords);
                       Outcome o;
                       o.expected = "exactly 1";
                       o.computed = std::to_string(rep.count);
                       if (rep.count) o.computed += " (w = " + vec_str(rep.w[0]) + ")";
                       o.pass = rep.count == 1;
                       return o;
                   }});
    out.push_back({"wall.L0", "wall", "same scan on L0 (informational)", [](Context& c) {
                       AmbientRoots ar = ambient_from_run(c.analysis.vinberg(0));
                       auto rep = discriminant_walls(c.pd.lambda(), ar.coords);
                       Outcome o;
                       o.expected = "any count";
                       o.computed = std::to_string(rep.count);
                       o.pass = true;
                       return o;
                   }});
    return out;
}

struct Cone {
    HermitianLattice lz;
    FiniteIsometryGroup G;
    std::vector<GMat> antis;
    std::vector<std::vector<GMat>> classes;
};

Cone make_cone(const DataFile& pd)
{
    Cone c{pd.lz(), {}, {}, {}};
    c.G = enumerate_isometries(c.lz);
    c.antis = enumerate_anti_involutions(c.lz, c.G, pd.cusp_matrix("kappa1"));
    c.classes = conjugacy_classes(c.G, c.antis);
    return c;
}

GMat two_columns(const GVec& a, const GVec& b) { return GMat::from_columns({a, b}); }

std::vector<Check> cone_checks()
{
    std::vector<Check> out;
    out.push_back({"cone.isometries", "cone", "isometry group of Lz", [](Context& c) {
                       auto lz = c.pd.lz();
                       auto G = enumerate_isometries(lz);
                       Verdict cl = check_group_closure(G);
                       std::size_t bad = 0;
                       for (const auto& a : G.elements)
                           if (!check_isometry(lz, a)) ++bad;
                       bool pm = G.contains(GMat::identity(2)) && G.contains(GaussInt(-1) * GMat::identity(2));
                       Outcome o;
                       o.expected = "96 elements; closed yes; contains +-identity yes";
                       o.computed = std::to_string(G.order()) + " elements; closed " + yes(cl.ok && bad == 0) +
                                    "; contains +-identity " + yes(pm);
                       o.pass = G.order() == 96 && cl.ok && bad == 0 && pm;
                       return o;
                   }});
    out.push_back({"cone.anti_involutions", "cone", "involutive anti-isometries of Lz", [](Context& c) {
                       Cone k = make_cone(c.pd);
                       auto bf = anti_involutions_brute_force(k.lz, max_entry_norm(k.G));
                       auto has = [&](const char* n) {
                           return std::find(k.antis.begin(), k.antis.end(), c.pd.cusp_matrix(n)) != k.antis.end();
                       };
                       Outcome o;
                       o.expected = "36; kappa1 and kappa3 listed; brute force agrees";
                       o.computed = std::to_string(k.antis.size()) + "; kappa1 and kappa3 listed " +
                                    yes(has("kappa1") && has("kappa3")) + "; brute force " + std::to_string(bf.size()) +
                                    " agrees " + yes(bf == k.antis);
                       o.pass = k.antis.size() == 36 && has("kappa1") && has("kappa3") && bf == k.antis;
                       return o;
                   }});
    out.push_back({"cone.classes", "cone", "conjugacy classes of anti-involutions", [](Context& c) {
                       Cone k = make_cone(c.pd);
                       std::size_t c1 = class_of(k.classes, c.pd.cusp_matrix("kappa1"));
                       std::size_t c3 = class_of(k.classes, c.pd.cusp_matrix("kappa3"));
                       std::vector<std::string> sizes;
                       for (const auto& cl : k.classes) sizes.push_back(std::to_string(cl.size()));
                       Int d1 = det(fix_lattice(k.lz, c.pd.cusp_matrix("kappa1")).gram);
                       Int d3 = det(fix_lattice(k.lz, c.pd.cusp_matrix("kappa3")).gram);
                       Outcome o;
                       o.expected = "2 classes of sizes 24, 12; kappa1 and kappa3 apart; Fix determinants 8 and 4";
                       o.computed = std::to_string(k.classes.size()) + " classes of sizes " + join(sizes) +
                                    "; kappa1 and kappa3 apart " + yes(c1 != c3) + "; Fix determinants " +
                                    d1.get_str() + " and " + d3.get_str();
                       o.pass = k.classes.size() == 2 && join(sizes) == "24, 12" && c1 != c3 && c1 < 2 && c3 < 2 &&
                                d1 == 8 && d3 == 4;
                       return o;
                   }});
    out.push_back({"cone.fix", "cone", "fixed planes of kappa1 and kappa3 with their transcribed bases",
                   [](Context& c) {
                       auto lz = c.pd.lz();
                       auto r1 = verify_basis(lz, c.pd.cusp_matrix("kappa1"),
                                              two_columns(c.pd.cusp_vector("u1"), c.pd.cusp_vector("u2")),
                                              IntMat{{-4, 0}, {0, -2}});
                       auto r3 = verify_basis(lz, c.pd.cusp_matrix("kappa3"),
                                              two_columns(c.pd.cusp_vector("v1"), c.pd.cusp_vector("v2")),
                                              IntMat{{-2, 0}, {0, -2}});
                       Outcome o;
                       o.expected = "u1, u2 basis with Gram diag(-4,-2); v1, v2 basis with Gram diag(-2,-2)";
                       o.computed = std::string("u1, u2 ") + (r1.ok() ? "basis with Gram diag(-4,-2)" : join(r1.problems, "; ")) +
                                    "; v1, v2 " + (r3.ok() ? "basis with Gram diag(-2,-2)" : join(r3.problems, "; "));
                       o.pass = r1.ok() && r3.ok();
                       return o;
                   }});
    out.push_back({"cone.wedges", "cone", "wedge quotients of the fixed planes, constant on conjugacy classes",
                   [](Context& c) {
                       Cone k = make_cone(c.pd);
                       auto w1 = wedge_quotient(k.lz, k.G, c.pd.cusp_matrix("kappa1"));
                       auto w3 = wedge_quotient(k.lz, k.G, c.pd.cusp_matrix("kappa3"));
                       std::size_t c1 = class_of(k.classes, c.pd.cusp_matrix("kappa1"));
                       bool invariant = true;
                       for (std::size_t cl = 0; cl < k.classes.size(); ++cl)
                           for (const auto& kap : k.classes[cl]) {
                               Rat want = cl == c1 ? w1.angle : w3.angle;
                               if (wedge_quotient(k.lz, k.G, kap).angle != want) invariant = false;
                           }
                       Outcome o;
                       o.expected = "kappa1 image order 4 angle 1/2 pi; kappa3 image order 8 angle 1/4 pi; invariant yes";
                       o.computed = "kappa1 image order " + std::to_string(w1.image_order) + " angle " +
                                    w1.angle.get_str() + " pi; kappa3 image order " + std::to_string(w3.image_order) +
                                    " angle " + w3.angle.get_str() + " pi; invariant " + yes(invariant);
                       o.pass = w1.image_order == 4 && w1.angle == Rat(1, 2) && w3.image_order == 8 &&
                                w3.angle == Rat(1, 4) && invariant;
                       return o;
                   }});
    out.push_back({"cone.edges", "cone", "edge vectors meet at the wedge angles", [](Context& c) {
                       auto lz = c.pd.lz();
                       GVec u1 = c.pd.cusp_vector("u1"), u2 = c.pd.cusp_vector("u2");
                       GVec v2 = c.pd.cusp_vector("v2"), v3 = c.pd.cusp_vector("v1") + v2;
                       Rat a = cos2(lz, u1, u2), b = cos2(lz, v2, v3);
                       Outcome o;
                       o.expected = "cos^2(u1,u2) = 0 = cos^2(pi/2); cos^2(v2,v3) = 1/2 = cos^2(pi/4)";
                       o.computed = "cos^2(u1,u2) = " + a.get_str() + "; cos^2(v2,v3) = " + b.get_str();
                       o.pass = a == *cos2_pi_over(2) && b == *cos2_pi_over(4);
                       return o;
                   }});
    out.push_back({"cone.gluing", "cone", "edge identifications by isometries of Lz", [](Context& c) {
                       Cone k = make_cone(c.pd);
                       auto w1 = wedge_quotient(k.lz, k.G, c.pd.cusp_matrix("kappa1"));
                       auto w3 = wedge_quotient(k.lz, k.G, c.pd.cusp_matrix("kappa3"));
                       auto cone = glue_cone(k.G, w1, w3, c.pd.cusp_vector("u1"), c.pd.cusp_vector("u2"),
                                             c.pd.cusp_vector("v1"), c.pd.cusp_vector("v2"));
                       auto idx1 = k.G.index_of(c.pd.cusp_matrix("A1"));
                       auto idx2 = k.G.index_of(c.pd.cusp_matrix("A2"));
                       auto among = [](const EdgeGluing& g, std::ptrdiff_t idx) {
                           return idx >= 0 && std::find(g.witnesses.begin(), g.witnesses.end(),
                                                        static_cast<std::size_t>(idx)) != g.witnesses.end();
                       };
                       bool a1 = among(cone.gluings[0], idx1), a2 = among(cone.gluings[1], idx2);
                       Outcome o;
                       o.expected = "A1 v3 = u1 yes; A2 v2 = u2 yes";
                       o.computed = "A1 v3 = u1 " + yes(a1) + " (" + std::to_string(cone.gluings[0].witnesses.size()) +
                                    " witnesses); A2 v2 = u2 " + yes(a2) + " (" +
                                    std::to_string(cone.gluings[1].witnesses.size()) + " witnesses)";
                       o.pass = a1 && a2;
                       return o;
                   }});
    out.push_back({"cone.angle", "cone", "total cone angle and the orbifold test", [](Context& c) {
                       Cone k = make_cone(c.pd);
                       auto w1 = wedge_quotient(k.lz, k.G, c.pd.cusp_matrix("kappa1"));
                       auto w3 = wedge_quotient(k.lz, k.G, c.pd.cusp_matrix("kappa3"));
                       auto cone = glue_cone(k.G, w1, w3, c.pd.cusp_vector("u1"), c.pd.cusp_vector("u2"),
                                             c.pd.cusp_vector("v1"), c.pd.cusp_vector("v2"));
                       Outcome o;
                       o.expected = "3/4 pi; not of the form pi/k";
                       o.computed = cone.total_angle.get_str() + " pi; " +
                                    (cone.orbifold_point ? "of the form pi/k" : "not of the form pi/k");
                       o.pass = cone.total_angle == Rat(3, 4) && !cone.orbifold_point;
                       return o;
                   }});
    return out;
}

GVec random_gvec(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<long> d(-5, 5);
    GVec v(n);
    for (auto& x : v) x = GaussInt(d(rng), d(rng));
    return v;
}

std::vector<Check> props_checks()
{
    std::vector<Check> out;
    out.push_back({"props.hermitian", "props", "Hermitian symmetry and sesquilinearity on 1000 random pairs",
                   [](Context& c) {
                       std::mt19937_64 rng(20240601);
                       std::size_t bad = 0;
                       for (const auto& L : {c.pd.lambda(), c.pd.lz()})
                           for (int t = 0; t < 1000; ++t) {
                               GVec x = random_gvec(rng, L.rank()), y = random_gvec(rng, L.rank());
                               GaussInt s = random_gvec(rng, 1)[0];
                               if (L.inner(x, y) != L.inner(y, x).conj()) ++bad;
                               if (L.inner(x, scale(s, y)) != s * L.inner(x, y)) ++bad;
                               if (L.inner(scale(s, x), y) != s.conj() * L.inner(x, y)) ++bad;
                           }
                       Outcome o;
                       o.expected = "0 violations in 2000 samples";
                       o.computed = std::to_string(bad) + " violations in 2000 samples";
                       o.pass = bad == 0;
                       return o;
                   }});
    out.push_back({"props.anti_isometry", "props", "anti-isometry and involution axioms on 1000 random pairs per map",
                   [](Context& c) {
                       std::mt19937_64 rng(20240602);
                       auto lam = c.pd.lambda();
                       std::vector<GMat> maps;
                       for (int i = 0; i < 5; ++i) maps.push_back(c.pd.chi(i));
                       maps.push_back(c.pd.chi_ii());
                       std::size_t bad = 0;
                       for (const auto& m : maps)
                           for (int t = 0; t < 1000; ++t) {
                               GVec x = random_gvec(rng, 6), y = random_gvec(rng, 6);
                               GVec cx = apply_anti(m, x), cy = apply_anti(m, y);
                               if (lam.inner(cx, cy) != lam.inner(x, y).conj()) ++bad;
                               if (apply_anti(m, cx) != x) ++bad;
                           }
                       Outcome o;
                       o.expected = "0 violations in 6000 samples";
                       o.computed = std::to_string(bad) + " violations in 6000 samples";
                       o.pass = bad == 0;
                       return o;
                   }});
    out.push_back({"props.enumeration", "props", "root enumeration of L0 to height 1 against the boxed search",
                   [](Context& c) {
                       ZLattice L = make_zlattice(c.pd.gram(0));
                       auto norms = allowed_norms(c.pd, 0);
                       IntVec v0 = choose_v0(L);
                       auto fast = enumerate_roots(L, norms, Rat(1), v0);
                       Int box = root_box_bound(L, norms, Rat(1), v0);
                       auto slow = enumerate_roots_box(L, norms, Rat(1), v0, box.get_si());
                       bool same = fast.size() == slow.size();
                       for (std::size_t k = 0; same && k < fast.size(); ++k)
                           same = fast[k].coords == slow[k].coords && fast[k].height == slow[k].height;
                       Outcome o;
                       o.expected = "identical root lists";
                       o.computed = std::to_string(fast.size()) + " roots by short vectors, " +
                                    std::to_string(slow.size()) + " in the box of radius " + box.get_str() +
                                    (same ? ", identical" : ", different");
                       o.pass = same && !fast.empty();
                       if (o.pass) o.computed = "identical root lists (" + std::to_string(fast.size()) + " roots, box radius " + box.get_str() + ")";
                       return o;
                   }});
    out.push_back({"props.determinism", "props", "repeated Vinberg runs give identical roots and DOT output",
                   [](Context& c) {
                       auto a = run_vinberg(c.pd, 1), b = run_vinberg(c.pd, 1);
                       bool same = render_dot(a.diagram, "L1") == render_dot(b.diagram, "L1");
                       for (std::size_t k = 0; same && k < a.result.roots.size(); ++k)
                           same = a.result.roots[k].coords == b.result.roots[k].coords;
                       Outcome o;
                       o.expected = "identical";
                       o.computed = same ? "identical" : "different";
                       o.pass = same;
                       return o;
                   }});
    out.push_back({"props.kernels", "props", "vectorized kernels agree with the scalar reference", [](Context& c) {
                       (void)c;
                       std::mt19937_64 rng(20240603);
                       std::size_t bad = 0;
                       for (int t = 0; t < 200; ++t) {
                           kernels::Perm64 a, b, o1, o2;
                           for (int k = 0; k < 64; ++k) a[k] = b[k] = static_cast<std::uint8_t>(k);
                           std::shuffle(a.begin(), a.end(), rng);
                           std::shuffle(b.begin(), b.end(), rng);
                           kernels::compose_perm64_scalar(a.data(), b.data(), o1.data());
                           kernels::compose_perm64_avx2(a.data(), b.data(), o2.data());
                           if (o1 != o2) ++bad;
                       }
                       const int n = 6;
                       const std::size_t count = 1000;
                       std::uniform_int_distribution<int> d(-9, 9);
                       std::vector<std::int32_t> gram(n * n), lin(n), xs(n * count), q1(count), l1(count), q2(count),
                           l2(count);
                       for (int i = 0; i < n; ++i)
                           for (int j = i; j < n; ++j) gram[i * n + j] = gram[j * n + i] = d(rng);
                       for (auto& x : lin) x = d(rng);
                       for (auto& x : xs) x = d(rng);
                       kernels::eval_forms_scalar(gram.data(), lin.data(), n, xs.data(), count, q1.data(), l1.data());
                       kernels::eval_forms_avx2(gram.data(), lin.data(), n, xs.data(), count, q2.data(), l2.data());
                       if (q1 != q2 || l1 != l2) ++bad;
                       Outcome o;
                       o.expected = "0 mismatches";
                       o.computed = std::to_string(bad) + " mismatches (active " + kernels::isa_name(kernels::active_isa()) + ")";
                       o.pass = bad == 0;
                       if (o.pass) o.computed = "0 mismatches";
                       return o;
                   }});
    return out;
}

std::vector<Check> all_checks()
{
    std::vector<Check> out;
    for (auto&& part : {fix_checks(), vinberg_checks(), roots_checks(), mod2_checks(), ovq_checks(), type2_checks(),
                        wall_checks(), cone_checks(), props_checks()})
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace

Report run_checks(const DataFile& pd, const std::vector<std::string>& groups, unsigned threads)
{
    for (const auto& g : groups) criterion_of(g);
    std::vector<Check> checks;
    for (auto& c : all_checks())
        if (groups.empty() || std::find(groups.begin(), groups.end(), c.group) != groups.end())
            checks.push_back(std::move(c));
    Report rep;
    rep.checksum = pd.checksum();
    rep.checks.resize(checks.size());
    Context ctx(pd);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < checks.size(); k = next++) {
            CheckResult& r = rep.checks[k];
            r.id = checks[k].id;
            r.group = checks[k].group;
            r.topic = checks[k].topic;
            auto t0 = std::chrono::steady_clock::now();
            try {
                Outcome o = checks[k].run(ctx);
                r.pass = o.pass;
                r.expected = o.expected;
                r.computed = o.computed;
            } catch (const std::exception& e) {
                r.pass = false;
                r.expected = "no error";
                r.computed = std::string("error: ") + e.what();
            }
            r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(checks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rep;
}

}  // namespace octica
