#include "octica/cli.hpp"

#include "octica/analysis.hpp"
#include "octica/cusp_cone.hpp"
#include "octica/mod2.hpp"
#include "octica/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace octica {

namespace {

using nlohmann::json;

const char* const kDescription =
    "Exact computations on the Gaussian-integer Lorentzian lattice of rank 6: fixed lattices of anti-involutions, "
    "Vinberg diagrams, mod-2 invariants, type II stabilizer elements and the cuspidal cone angle.";

const char* const kExitStatus =
    "Exit status: 0 success, 1 a check failed, 2 bad arguments or data, 3 internal error.";

struct Options {
    std::string data;
    bool json = false;
    unsigned threads = 1;
    bool man = false;
    std::string name = "lambda";
    int chi = 0;
    std::string lattice;
    std::string stop = "volume";
    std::string format = "ascii";
    std::vector<long> norms;
    bool transcribed = false;
    std::vector<std::string> only;
    bool timing = false;
};

struct Commands {
    CLI::App* lattice = nullptr;
    CLI::App* lattice_show = nullptr;
    CLI::App* fix = nullptr;
    CLI::App* vinberg = nullptr;
    CLI::App* diagram = nullptr;
    CLI::App* mod2 = nullptr;
    CLI::App* s8 = nullptr;
    CLI::App* type2 = nullptr;
    CLI::App* cone = nullptr;
    CLI::App* verify = nullptr;
};

Commands build_app(CLI::App& app, Options& o)
{
    app.description(kDescription);
    app.footer(kExitStatus);
    app.fallthrough();
    app.require_subcommand(0, 1);
    app.add_option("--data", o.data, "Data file (default: the bundled paper_data.json)")->type_name("PATH");
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_option("--threads", o.threads, "Worker threads for verify-all")
        ->type_name("1..256")
        ->check(CLI::Range(1u, 256u).description(""));
    app.add_flag("--man", o.man, "Print the manual page")->group("");

    Commands c;
    c.lattice = app.add_subcommand("lattice", "Inspect the bundled lattices and matrices");
    c.lattice->require_subcommand(1);
    c.lattice_show = c.lattice->add_subcommand("show", "Print a named lattice or matrix");
    c.lattice_show
        ->add_option("name", o.name,
                     "lambda, lz, chi0..chi4, chiII, A0..A4, B0..B4 or L0..L4 (default: lambda)")
        ->type_name("NAME");

    auto chi_option = [&](CLI::App* sub) {
        sub->add_option("--chi", o.chi, "Index of the anti-involution chi_i")
            ->type_name("0..4")
            ->required()
            ->check(CLI::Range(0, 4).description(""));
    };
    auto lattice_option = [&](CLI::App* sub) {
        sub->add_option("--lattice", o.lattice, "L0..L4 or a JSON file {\"rank\": n, \"gram\": [...]}")
            ->type_name("NAME|FILE")
            ->required();
        sub->add_option("--format", o.format, "Output format (default: ascii)")
            ->type_name("dot|json|ascii")
            ->check(CLI::IsMember({"dot", "json", "ascii"}).description(""));
        sub->add_option("--norms", o.norms,
                        "Root norms for a file lattice, e.g. -2,-4 (default: negative divisors of 2|det|)")
            ->type_name("LIST")
            ->delimiter(',');
    };

    c.fix = app.add_subcommand("fix", "Fixed lattice of chi_i with its verification against B_i and L_i");
    chi_option(c.fix);

    c.vinberg = app.add_subcommand("vinberg", "Run Vinberg's algorithm and print the fundamental roots");
    lattice_option(c.vinberg);
    c.vinberg->add_option("--stop", o.stop, "Stop rule (default: volume)")->type_name("expected:K|volume|height:H");

    c.diagram = app.add_subcommand(
        "diagram", "Coxeter diagram of the computed chamber, labeled like the transcribed diagram when they match");
    lattice_option(c.diagram);
    c.diagram->add_flag("--transcribed", o.transcribed, "Render the transcribed diagram instead");

    c.mod2 = app.add_subcommand("mod2", "Mod-2 invariants and octic type of chi_i");
    chi_option(c.mod2);

    c.s8 = app.add_subcommand("s8-table", "Invariants of involutions of S8 acting on the W-model");

    c.type2 = app.add_subcommand("type2", "Search for type II stabilizer elements of chi_i");
    chi_option(c.type2);

    c.cone = app.add_subcommand("cone-angle", "Cone angle of the cusp built from the lattice Lz");

    c.verify = app.add_subcommand("verify-all", "Run every reproduction check");
    c.verify->add_option("--only", o.only, "Comma-separated check groups")
        ->type_name("fix,vinberg,roots,mod2,ovq,type2,wall,cone,props")
        ->delimiter(',');
    c.verify->add_flag("--timing", o.timing, "Include per-check run times (not byte-stable)");
    return c;
}

// Text helpers

json jint(const Int& z)
{
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

std::string yes(bool b) { return b ? "yes" : "no"; }

template <class M>
std::string grid(const M& m, const std::string& indent = "  ")
{
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::ostringstream os;
            os << m(i, j);
            cells[i][j] = os.str();
            width[j] = std::max(width[j], cells[i][j].size());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << cells[i][j];
        os << "]\n";
    }
    return os.str();
}

json signature_json(const Signature& s) { return json::array({s.pos, s.neg, s.zero}); }

json lattice_json(const GMat& g) { return json{{"rank", g.rows()}, {"gram", gmat_to_json(g)}}; }
json lattice_json(const IntMat& g) { return json{{"rank", g.rows()}, {"gram", intmat_to_json(g)}}; }

std::string header(const DataFile& pd) { return "data checksum: " + pd.checksum() + "\n"; }

json base_json(const DataFile& pd, const std::string& command)
{
    return json{{"command", command}, {"checksum", pd.checksum()}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int lattice_index(const std::string& name)
{
    if (name.size() == 2 && name[0] == 'L' && name[1] >= '0' && name[1] <= '4') return name[1] - '0';
    return -1;
}

// lattice show

int cmd_lattice_show(const DataFile& pd, const Options& o, std::ostream& out)
{
    const std::string& n = o.name;
    if (!pd.has_builtin(n)) {
        std::string names;
        for (const auto& b : DataFile::builtin_names()) names += " " + b;
        throw DataError("unknown name '" + n + "'; known names:" + names);
    }
    json j = base_json(pd, "lattice show");
    j["name"] = n;
    std::ostringstream os;
    os << header(pd);
    if (n == "lambda" || n == "lz") {
        HermitianLattice L = n == "lambda" ? pd.lambda() : pd.lz();
        GaussInt d = det(L.gram());
        j["kind"] = "hermitian lattice";
        j["lattice"] = lattice_json(L.gram());
        j["signature"] = signature_json(L.signature());
        j["determinant"] = gauss_to_json(d);
        os << n << ": Hermitian lattice over Z[i], rank " << L.rank() << ", signature " << L.signature().str()
           << ", determinant " << d << "\nGram matrix:\n"
           << grid(L.gram());
    } else if (int i = lattice_index(n); i >= 0) {
        IntMat g = pd.gram(i);
        Signature s = signature(g);
        j["kind"] = "integral lattice";
        j["lattice"] = lattice_json(g);
        j["signature"] = signature_json(s);
        j["determinant"] = jint(det(g));
        os << n << ": integral symmetric lattice, rank " << g.rows() << ", signature " << s.str() << ", determinant "
           << det(g) << "\nGram matrix:\n"
           << grid(g);
    } else {
        GMat m = n == "chiII"   ? pd.chi_ii()
                 : n[0] == 'c' ? pd.chi(n.back() - '0')
                 : n[0] == 'A' ? pd.iso(n.back() - '0')
                               : pd.basis(n.back() - '0');
        std::string kind = n[0] == 'c' ? "anti-isometry v -> M conj(v)"
                           : n[0] == 'A' ? "isometry v -> M v"
                                         : "basis, one vector per column";
        j["kind"] = kind;
        j["matrix"] = gmat_to_json(m);
        os << n << ": " << kind << "\n" << grid(m);
    }
    if (o.json)
        emit(out, j);
    else
        out << os.str();
    return ExitOk;
}

// fix

int cmd_fix(const DataFile& pd, const Options& o, std::ostream& out)
{
    const int i = o.chi;
    HermitianLattice lam = pd.lambda();
    GMat chi = pd.chi(i);
    Verdict anti = check_anti_involution(lam, chi);
    if (!anti) throw DataError("chi" + std::to_string(i) + " is not an involutive anti-isometry: " + anti.reason);
    ZLattice F = fix_lattice(lam, chi);
    Signature s = signature(F.gram);
    BasisReport rep = verify_basis(lam, chi, pd.basis(i), pd.gram(i));
    const bool pass = rep.ok() && F.rank() == 6 && s == Signature{1, 5, 0};
    if (o.json) {
        json j = base_json(pd, "fix");
        j["chi"] = i;
        j["anti_involution"] = true;
        j["rank"] = F.rank();
        j["signature"] = signature_json(s);
        j["determinant"] = jint(det(F.gram));
        j["basis"] = gmat_to_json(*F.embedding);
        j["lattice"] = lattice_json(F.gram);
        j["transcribed"] = json{{"fixed", rep.fixed},
                                {"gram_matches", rep.gram_matches},
                                {"index", rep.fixed ? jint(rep.index) : json(nullptr)},
                                {"problems", rep.problems}};
        j["pass"] = pass;
        emit(out, j);
    } else {
        out << header(pd) << "Fix(chi" << i << "): rank " << F.rank() << ", signature " << s.str()
            << ", determinant " << det(F.gram) << "\n"
            << "Hermite basis, one vector per column:\n"
            << grid(*F.embedding) << "Gram matrix:\n"
            << grid(F.gram) << "transcribed basis B" << i << ": fixed " << yes(rep.fixed) << ", Gram equals L" << i
            << " " << yes(rep.gram_matches) << ", index " << (rep.fixed ? rep.index.get_str() : "n/a") << "\n";
        for (const auto& p : rep.problems) out << "  problem: " << p << "\n";
        out << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? ExitOk : ExitCheckFailed;
}

// vinberg and diagram

struct LatticeInput {
    std::string name;
    int index = -1;
    ZLattice lattice;
    std::vector<Int> norms;
};

std::vector<Int> default_norms(const IntMat& g)
{
    Int d = abs(det(g));
    if (d == 0) throw DataError("lattice is degenerate");
    Int m = 2 * d;
    std::vector<Int> out;
    for (Int k = 1; k * k <= m; ++k)
        if (m % k == 0) {
            out.push_back(-k);
            if (k * k != m) out.push_back(-(m / k));
        }
    std::sort(out.begin(), out.end(), [](const Int& a, const Int& b) { return a > b; });
    return out;
}

LatticeInput resolve_lattice(const DataFile& pd, const Options& o)
{
    LatticeInput in;
    if (int i = lattice_index(o.lattice); i >= 0) {
        in.name = o.lattice;
        in.index = i;
        in.lattice = embedded_lattice(pd, i);
        in.norms = allowed_norms(pd, i);
    } else if (pd.has_builtin(o.lattice)) {
        throw DataError("'" + o.lattice + "' is not a hyperbolic integral lattice; use L0..L4 or a file");
    } else {
        std::ifstream f(o.lattice);
        if (!f) throw DataError("unknown lattice '" + o.lattice + "' (not L0..L4 and no such file)");
        json j;
        try {
            j = json::parse(f);
        } catch (const json::exception& e) {
            throw DataError("malformed lattice file " + o.lattice + ": " + e.what());
        }
        GMat g = lattice_gram_from_json(j);
        IntMat r(g.rows(), g.cols());
        for (std::size_t a = 0; a < g.rows(); ++a)
            for (std::size_t b = 0; b < g.cols(); ++b) {
                if (g(a, b).im() != 0) throw DataError("lattice file Gram matrix must be real");
                r(a, b) = g(a, b).re();
            }
        if (r != r.transpose()) throw DataError("lattice file Gram matrix is not symmetric");
        in.name = "lattice";
        in.lattice = make_zlattice(r);
        if (j.contains("norms"))
            for (const auto& x : j.at("norms")) in.norms.push_back(Int(x.get<long>()));
    }
    Signature s = signature(in.lattice.gram);
    if (s.pos != 1 || s.zero != 0 || s.neg < 1)
        throw DataError("lattice " + in.name + " has signature " + s.str() + ", expected (1,n)");
    if (!o.norms.empty()) {
        in.norms.clear();
        for (long x : o.norms) {
            if (x >= 0) throw DataError("root norms must be negative");
            in.norms.push_back(Int(x));
        }
        std::sort(in.norms.begin(), in.norms.end(), [](const Int& a, const Int& b) { return a > b; });
        in.norms.erase(std::unique(in.norms.begin(), in.norms.end()), in.norms.end());
    }
    if (in.norms.empty()) in.norms = default_norms(in.lattice.gram);
    return in;
}

StopRule parse_stop(const std::string& s)
{
    try {
        return StopRule::parse(s);
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
}

json roots_json(const std::vector<Root>& roots, const std::vector<std::string>& labels)
{
    json a = json::array();
    for (std::size_t k = 0; k < roots.size(); ++k)
        a.push_back(json{{"label", labels[k]},
                         {"coords", intvec_to_json(roots[k].coords)},
                         {"norm", jint(roots[k].norm)},
                         {"height", roots[k].height.get_str()}});
    return a;
}

std::string render(const DataFile& pd, const CoxeterDiagram& d, const std::string& name, const std::string& format)
{
    if (format == "dot") return "// data checksum: " + pd.checksum() + "\n" + render_dot(d, name);
    return header(pd) + render_ascii(d, name);
}

int cmd_vinberg(const DataFile& pd, const Options& o, std::ostream& out)
{
    StopRule stop = parse_stop(o.stop);
    LatticeInput in = resolve_lattice(pd, o);
    VinbergResult res = fundamental_roots(in.lattice, in.norms, choose_v0(in.lattice), stop);
    CoxeterDiagram d = coxeter_diagram(in.lattice, res.roots);
    const std::string format = o.json ? "json" : o.format;
    if (format == "json") {
        json j = base_json(pd, "vinberg");
        j["lattice"] = in.name;
        j["gram"] = lattice_json(in.lattice.gram);
        json norms = json::array();
        for (const auto& q : in.norms) norms.push_back(jint(q));
        j["norms"] = norms;
        j["stop"] = stop.str();
        j["v0"] = intvec_to_json(res.v0);
        j["roots"] = roots_json(res.roots, d.labels);
        j["last_height"] = res.last_height.get_str();
        j["stopped"] = res.stopped;
        j["finite_volume"] = res.finite_volume;
        j["diagram"] = diagram_to_json(d);
        emit(out, j);
        return ExitOk;
    }
    if (format == "dot") {
        out << render(pd, d, in.name, format);
        return ExitOk;
    }
    out << header(pd) << in.name << ": v0 = " << vec_str(res.v0) << ", stop " << stop.str() << ", last height "
        << res.last_height.get_str() << ", finite volume " << yes(res.finite_volume) << "\n";
    for (std::size_t k = 0; k < res.roots.size(); ++k)
        out << "  " << d.labels[k] << "  norm " << res.roots[k].norm << "  height " << res.roots[k].height.get_str()
            << "  " << vec_str(res.roots[k].coords) << "\n";
    out << render_ascii(d, in.name);
    return ExitOk;
}

int cmd_diagram(const DataFile& pd, const Options& o, std::ostream& out)
{
    LatticeInput in = resolve_lattice(pd, o);
    CoxeterDiagram d;
    if (o.transcribed) {
        if (in.index < 0) throw DataError("--transcribed needs one of L0..L4");
        d = pd.diagram(in.index);
    } else if (in.index >= 0) {
        d = align_to_data(pd, in.index, run_vinberg(pd, in.index)).diagram;
    } else {
        auto res = fundamental_roots(in.lattice, in.norms, choose_v0(in.lattice), StopRule{});
        d = coxeter_diagram(in.lattice, res.roots);
    }
    const std::string format = o.json ? "json" : o.format;
    if (format == "json") {
        json j = base_json(pd, "diagram");
        j["lattice"] = in.name;
        j["source"] = o.transcribed ? "transcribed" : "computed";
        j["diagram"] = diagram_to_json(d);
        emit(out, j);
    } else {
        out << render(pd, d, in.name, format);
    }
    return ExitOk;
}

// mod2 and s8-table

int cmd_mod2(const DataFile& pd, const Options& o, std::ostream& out)
{
    const int i = o.chi;
    auto V = quadratic_space(pd.lambda());
    F2Map phi = induced_involution(pd.chi(i));
    bool pq = preserves_q(V, phi);
    auto inv = involution_invariants(V, phi);
    std::string type;
    bool classified = true;
    try {
        type = octic_type_name(classify_octic_type(inv));
    } catch (const std::domain_error&) {
        type = "unclassified";
        classified = false;
    }
    const bool pass = pq && classified;
    if (o.json) {
        json j = base_json(pd, "mod2");
        j["chi"] = i;
        j["dim_v"] = V.dim;
        j["norm_one_total"] = V.count_norm_one();
        j["phi"] = json::parse(phi.str());
        j["preserves_q"] = pq;
        j["dim_fix"] = inv.dim_fix;
        j["norm_one_fixed"] = inv.norm_one_fixed;
        j["type"] = type;
        j["pass"] = pass;
        emit(out, j);
    } else {
        out << header(pd) << "V = Lambda/(1+i)Lambda: dimension " << V.dim << ", " << V.count_norm_one()
            << " vectors with q = 1\n"
            << "phi" << i << " (reduction of chi" << i << "), rows over F2:\n";
        for (int r = 0; r < phi.dim; ++r) {
            out << "  [";
            for (int c = 0; c < phi.dim; ++c) out << (c ? " " : "") << ((phi.cols[c] >> r) & 1);
            out << "]\n";
        }
        out << "preserves q: " << yes(pq) << "\n"
            << "dim Fix: " << inv.dim_fix << "\n"
            << "norm-one fixed vectors: " << inv.norm_one_fixed << "\n"
            << "invariants: " << inv.str() << "\n"
            << "octic type: " << type << "\n";
    }
    return pass ? ExitOk : ExitCheckFailed;
}

int cmd_s8(const DataFile& pd, const Options& o, std::ostream& out)
{
    std::vector<S8Invariants> rows;
    for (int t = 0; t <= 4; ++t) rows.push_back(s8_invariants(t));
    if (o.json) {
        json j = base_json(pd, "s8-table");
        j["rows"] = json::array();
        for (const auto& r : rows) {
            std::string type;
            try {
                type = octic_type_name(classify_octic_type(r.inv));
            } catch (const std::domain_error&) {
                type = "unclassified";
            }
            j["rows"].push_back(json{{"transpositions", r.transpositions},
                                     {"fixed_subsets", r.fixed_subsets},
                                     {"fixed_classes", r.fixed_classes},
                                     {"dim_fix", r.inv.dim_fix},
                                     {"norm_one_fixed", r.inv.norm_one_fixed},
                                     {"type", type}});
        }
        emit(out, j);
        return ExitOk;
    }
    out << header(pd) << "involutions of P8 with t transpositions acting on even subsets modulo complement\n"
        << "  t  fixed subsets  fixed classes  dim Fix  norm-one fixed  type\n";
    for (const auto& r : rows) {
        std::string type;
        try {
            type = octic_type_name(classify_octic_type(r.inv));
        } catch (const std::domain_error&) {
            type = "unclassified";
        }
        out << "  " << r.transpositions << "  " << std::setw(13) << r.fixed_subsets << "  " << std::setw(13)
            << r.fixed_classes << "  " << std::setw(7) << r.inv.dim_fix << "  " << std::setw(14)
            << r.inv.norm_one_fixed << "  " << type << "\n";
    }
    return ExitOk;
}

// type2

std::string pairing_str(const std::vector<std::size_t>& p, const std::vector<std::string>& labels)
{
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] > k) s += (s.empty() ? "" : " ") + std::string("(") + labels[k] + " " + labels[p[k]] + ")";
    return s.empty() ? "identity" : s;
}

int cmd_type2(const DataFile& pd, const Options& o, std::ostream& out)
{
    const int i = o.chi;
    HermitianLattice lam = pd.lambda();
    AmbientRoots ar = pd.has_roots(i) ? ambient_from_data(pd, i) : ambient_from_run(run_vinberg(pd, i));
    const std::string source = pd.has_roots(i) ? "transcribed roots" : "computed chamber";
    StabStructure st = stab_structure(lam, ar);
    std::optional<StabType> wtype;
    if (st.witness) wtype = classify_stab_element(lam, pd.chi(i), *st.witness).type;
    if (o.json) {
        json j = base_json(pd, "type2");
        j["chi"] = i;
        j["roots"] = source;
        j["structure"] = st.str();
        j["involutions"] = json::array();
        for (const auto& r : st.tried) {
            json e{{"pairing", pairing_str(r.pairing, ar.labels)}, {"mu", json::array()}, {"attempts", json::array()}};
            for (const auto& m : r.mu) e["mu"].push_back(ext_to_json(m));
            for (const auto& a : r.attempts) {
                json t{{"sign", a.sign},         {"consistent", a.consistent}, {"integral", a.integral},
                       {"isometry", a.isometry}, {"note", a.note},             {"relation", a.relation}};
                if (a.T) t["T"] = gmat_to_json(*a.T);
                t["certificate"] = json::array();
                for (const auto& c : a.certificate) t["certificate"].push_back(ext_to_json(c));
                e["attempts"].push_back(std::move(t));
            }
            j["involutions"].push_back(std::move(e));
        }
        if (st.witness) {
            j["witness"] = gmat_to_json(*st.witness);
            j["witness_type"] = stab_type_name(*wtype);
        } else {
            j["witness"] = nullptr;
        }
        emit(out, j);
        return ExitOk;
    }
    out << header(pd) << "chi" << i << " with " << source << " (" << ar.labels.size() << " roots)\n"
        << "nontrivial diagram involutions ignoring norms: " << st.tried.size() << "\n";
    for (const auto& r : st.tried) {
        out << "involution " << pairing_str(r.pairing, ar.labels) << "\n  mu:";
        for (const auto& m : r.mu) out << " " << m;
        out << "\n";
        for (const auto& a : r.attempts) {
            out << "  sign " << (a.sign > 0 ? "+1" : "-1") << ": " << a.note;
            if (!a.relation.empty()) out << "; forced relation " << a.relation;
            out << "\n";
            if (a.T) out << grid(*a.T, "    ");
        }
    }
    if (st.witness) out << "type II witness, classified as type " << stab_type_name(*wtype) << "\n";
    out << "structure: " << st.str() << "\n";
    return ExitOk;
}

// cone-angle

int cmd_cone(const DataFile& pd, const Options& o, std::ostream& out)
{
    HermitianLattice lz = pd.lz();
    FiniteIsometryGroup G = enumerate_isometries(lz);
    GMat k1 = pd.cusp_matrix("kappa1"), k3 = pd.cusp_matrix("kappa3");
    auto antis = enumerate_anti_involutions(lz, G, k1);
    auto classes = conjugacy_classes(G, antis);
    auto w1 = wedge_quotient(lz, G, k1);
    auto w3 = wedge_quotient(lz, G, k3);
    GVec u1 = pd.cusp_vector("u1"), u2 = pd.cusp_vector("u2"), v1 = pd.cusp_vector("v1"), v2 = pd.cusp_vector("v2");
    GluedCone cone = glue_cone(G, w1, w3, u1, u2, v1, v2);
    auto idx = [&](const char* n) { return G.index_of(pd.cusp_matrix(n)); };
    const std::string angle = cone.total_angle.get_str() + " π";
    if (o.json) {
        json j = base_json(pd, "cone-angle");
        j["isometries"] = G.order();
        j["anti_involutions"] = antis.size();
        json cl = json::array();
        for (const auto& c : classes) cl.push_back(c.size());
        j["class_sizes"] = cl;
        j["class_of"] = json{{"kappa1", class_of(classes, k1)}, {"kappa3", class_of(classes, k3)}};
        auto wj = [&](const WedgeQuotient& w, const GVec& a, const GVec& b) {
            GMat m = GMat::from_columns({a, b});
            return json{{"fix_basis", gmat_to_json(m)},
                        {"fix_gram", intmat_to_json(gram_of(lz, m))},
                        {"basis_verified", verify_basis(lz, w.kappa, m, gram_of(lz, m)).ok()},
                        {"stabilizer", w.stabilizer},
                        {"image_order", w.image_order},
                        {"m", w.m},
                        {"angle", w.angle.get_str() + " π"}};
        };
        j["wedges"] = json{{"kappa1", wj(w1, u1, u2)}, {"kappa3", wj(w3, v1, v2)}};
        j["gluings"] = json::array();
        for (const auto& g : cone.gluings)
            j["gluings"].push_back(json{{"from", g.from}, {"to", g.to}, {"witnesses", g.witnesses}});
        j["A1_index"] = idx("A1");
        j["A2_index"] = idx("A2");
        j["total_angle"] = angle;
        j["orbifold_point"] = cone.orbifold_point;
        emit(out, j);
        return ExitOk;
    }
    out << header(pd) << "|Isom(Lz)| = " << G.order() << "\n"
        << "involutive anti-isometries: " << antis.size() << "\n"
        << "conjugacy classes: " << classes.size() << " of sizes";
    for (const auto& c : classes) out << " " << c.size();
    out << "; kappa1 in class " << class_of(classes, k1) << ", kappa3 in class " << class_of(classes, k3) << "\n";
    for (const auto* w : {&w1, &w3}) {
        const bool first = w == &w1;
        GMat b = GMat::from_columns(first ? std::vector<GVec>{u1, u2} : std::vector<GVec>{v1, v2});
        BasisReport rep = verify_basis(lz, w->kappa, b, gram_of(lz, b));
        out << (first ? "kappa1: basis u1, u2" : "kappa3: basis v1, v2") << " of Fix "
            << (rep.ok() ? "verified" : "NOT verified") << ", Gram\n"
            << grid(gram_of(lz, b)) << "  stabilizer " << w->stabilizer << ", image dihedral of order "
            << w->image_order << ", wedge angle " << w->angle.get_str() << " π\n";
    }
    out << "cos^2(u1,u2) = " << cos2(lz, u1, u2).get_str() << ", cos^2(v2,v1+v2) = " << cos2(lz, v2, v1 + v2).get_str()
        << "\n";
    for (const auto& g : cone.gluings) {
        out << "gluing " << g.from << " -> " << g.to << ": witnesses";
        for (auto w : g.witnesses) out << " #" << w;
        out << "\n";
    }
    out << "A1 = #" << idx("A1") << ", A2 = #" << idx("A2") << " in the sorted group\n"
        << "cone angle: " << angle << "\n"
        << (cone.orbifold_point ? "of the form π/k: orbifold point" : "not of the form π/k: not a Riemannian orbifold point")
        << "\n";
    return ExitOk;
}

// verify-all

int cmd_verify(const DataFile& pd, const Options& o, std::ostream& out)
{
    for (const auto& g : o.only) {
        const auto& all = check_groups();
        if (std::find(all.begin(), all.end(), g) == all.end()) {
            std::string names;
            for (const auto& a : all) names += " " + a;
            throw DataError("unknown check group '" + g + "'; groups:" + names);
        }
    }
    Report r = run_checks(pd, o.only, o.threads);
    if (o.json)
        emit(out, r.to_json(o.timing));
    else
        out << r.text(o.timing);
    return r.pass() ? ExitOk : ExitCheckFailed;
}

// man page

std::string roff(const std::string& s)
{
    std::string r;
    for (char c : s) {
        if (c == '\\')
            r += "\\e";
        else if (c == '-')
            r += "\\-";
        else
            r += c;
    }
    if (!r.empty() && (r[0] == '.' || r[0] == '\'')) r = "\\&" + r;
    return r;
}

void man_options(const CLI::App* app, std::ostringstream& os, bool with_help)
{
    for (const CLI::Option* opt : app->get_options()) {
        if (opt->get_group().empty()) continue;
        if (!with_help && opt == app->get_help_ptr()) continue;
        os << ".TP\n";
        if (opt->nonpositional())
            os << "\\fB" << roff(opt->get_name(false, true)) << "\\fR";
        else
            os << "\\fI" << roff(opt->get_name(true)) << "\\fR";
        if (opt->nonpositional() && opt->get_expected_max() != 0 && !opt->get_type_name().empty())
            os << " \\fI" << roff(opt->get_type_name()) << "\\fR";
        os << "\n" << roff(opt->get_description()) << (opt->get_required() ? " (required)" : "") << "\n";
    }
}

void man_commands(const CLI::App* app, const std::string& prefix, std::ostringstream& os)
{
    for (const CLI::App* sub : app->get_subcommands([](const CLI::App*) { return true; })) {
        const std::string name = prefix + sub->get_name();
        os << ".SS \"" << roff(name) << "\"\n" << roff(sub->get_description()) << "\n";
        man_options(sub, os, false);
        man_commands(sub, name + " ", os);
    }
}

std::string make_man(const CLI::App& app)
{
    std::ostringstream os;
    os << ".TH OCTICA 1 \"\" \"octica\" \"User Commands\"\n"
       << ".SH NAME\noctica \\- exact lattice computations for real octic moduli\n"
       << ".SH SYNOPSIS\n\\fBoctica\\fR [\\fIoptions\\fR] \\fIcommand\\fR [\\fIcommand options\\fR]\n"
       << ".SH DESCRIPTION\n"
       << roff(app.get_description()) << "\n"
       << "Every report starts with the checksum of the data file. Output is byte\\-identical across runs.\n"
       << ".SH OPTIONS\nGlobal options may appear before or after the command.\n";
    man_options(&app, os, true);
    os << ".SH COMMANDS\n";
    man_commands(&app, "", os);
    os << ".SH EXIT STATUS\n" << roff(app.get_footer()) << "\n";
    return os.str();
}

}  // namespace

std::string man_page()
{
    CLI::App app{"", "octica"};
    Options o;
    build_app(app, o);
    return make_man(app);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"", "octica"};
    Options o;
    Commands c = build_app(app, o);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return ExitDataError;
    }
    if (o.man) {
        out << make_man(app);
        return ExitOk;
    }
    try {
        if (app.get_subcommands().empty()) {
            out << app.help();
            return ExitOk;
        }
        DataFile pd = DataFile::load(o.data.empty() ? DataFile::default_path() : o.data);
        if (c.lattice_show->parsed()) return cmd_lattice_show(pd, o, out);
        if (c.fix->parsed()) return cmd_fix(pd, o, out);
        if (c.vinberg->parsed()) return cmd_vinberg(pd, o, out);
        if (c.diagram->parsed()) return cmd_diagram(pd, o, out);
        if (c.mod2->parsed()) return cmd_mod2(pd, o, out);
        if (c.s8->parsed()) return cmd_s8(pd, o, out);
        if (c.type2->parsed()) return cmd_type2(pd, o, out);
        if (c.cone->parsed()) return cmd_cone(pd, o, out);
        if (c.verify->parsed()) return cmd_verify(pd, o, out);
        err << "error: no command\n";
        return ExitDataError;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return ExitDataError;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return ExitInternal;
    } catch (const std::runtime_error& e) {
        err << "failed: " << e.what() << "\n";
        return ExitCheckFailed;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return ExitInternal;
    }
}

}  // namespace octica
