#include "octica/data_file.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#ifndef OCTICA_DATA_PATH
#define OCTICA_DATA_PATH "paper_data.json"
#endif

namespace octica {

using nlohmann::json;

const char* bond_name(Bond b)
{
    switch (b) {
    case Bond::None: return "none";
    case Bond::Single: return "single";
    case Bond::Double: return "double";
    case Bond::Triple: return "triple";
    case Bond::Parallel: return "parallel";
    case Bond::Ultraparallel: return "ultraparallel";
    }
    return "none";
}

Bond bond_from_name(const std::string& s)
{
    for (Bond b : {Bond::None, Bond::Single, Bond::Double, Bond::Triple, Bond::Parallel, Bond::Ultraparallel})
        if (s == bond_name(b)) return b;
    throw DataError("unknown bond type '" + s + "'");
}

void CoxeterDiagram::resize(std::size_t n)
{
    labels.resize(n);
    norms.resize(n);
    bonds.assign(n, std::vector<Bond>(n, Bond::None));
}

void CoxeterDiagram::set_bond(std::size_t i, std::size_t j, Bond b)
{
    if (i == j) throw std::invalid_argument("loop bond");
    bonds.at(i).at(j) = b;
    bonds.at(j).at(i) = b;
}

std::size_t CoxeterDiagram::count(Bond b) const
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (bonds[i][j] == b) ++c;
    return c;
}

namespace {

Int int_from_json(const json& j)
{
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw DataError("expected an integer, got " + j.dump());
}

json int_to_json(const Int& z)
{
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

}  // namespace

GaussInt gauss_from_json(const json& j)
{
    if (j.is_array() && j.size() == 2) return GaussInt(int_from_json(j[0]), int_from_json(j[1]));
    if (j.is_number_integer()) return GaussInt(int_from_json(j));
    throw DataError("expected a Gaussian integer [re, im], got " + j.dump());
}

json gauss_to_json(const GaussInt& z) { return json::array({int_to_json(z.re()), int_to_json(z.im())}); }

GMat gmat_from_json(const json& j)
{
    if (!j.is_array() || j.empty()) throw DataError("expected a nonempty matrix");
    std::vector<GVec> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw DataError("matrix row is not an array");
        GVec row;
        for (const auto& x : r) row.push_back(gauss_from_json(x));
        if (!rows.empty() && row.size() != rows[0].size()) throw DataError("ragged matrix");
        rows.push_back(std::move(row));
    }
    return GMat::from_rows(rows);
}

json gmat_to_json(const GMat& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(gauss_to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

GVec gvec_from_json(const json& j)
{
    if (!j.is_array()) throw DataError("expected a vector");
    GVec v;
    for (const auto& x : j) v.push_back(gauss_from_json(x));
    return v;
}

json gvec_to_json(const GVec& v)
{
    json out = json::array();
    for (const auto& z : v) out.push_back(gauss_to_json(z));
    return out;
}

IntMat intmat_from_json(const json& j)
{
    if (!j.is_array() || j.empty()) throw DataError("expected a nonempty integer matrix");
    std::vector<IntVec> rows;
    for (const auto& r : j) {
        IntVec row;
        for (const auto& x : r) row.push_back(int_from_json(x));
        if (!rows.empty() && row.size() != rows[0].size()) throw DataError("ragged matrix");
        rows.push_back(std::move(row));
    }
    return IntMat::from_rows(rows);
}

json intmat_to_json(const IntMat& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

json intvec_to_json(const IntVec& v)
{
    json out = json::array();
    for (const auto& z : v) out.push_back(int_to_json(z));
    return out;
}

json gaussrat_to_json(const GaussRat& z) { return json{{"num", gauss_to_json(z.num())}, {"den", int_to_json(z.den())}}; }

GaussRat gaussrat_from_json(const json& j)
{
    Int den = int_from_json(j.at("den"));
    if (den <= 0) throw DataError("GaussRat denominator must be positive");
    return GaussRat(gauss_from_json(j.at("num")), den);
}

json ext_to_json(const ExtScalar& z) { return json{{"a", gaussrat_to_json(z.a())}, {"b", gaussrat_to_json(z.b())}}; }

ExtScalar ext_from_json(const json& j) { return ExtScalar(gaussrat_from_json(j.at("a")), gaussrat_from_json(j.at("b"))); }

GMat lattice_gram_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("gram")) throw DataError("lattice object needs a 'gram' field");
    GMat g = gmat_from_json(j.at("gram"));
    if (!g.square()) throw DataError("lattice Gram matrix is not square");
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != g.rows())
        throw DataError("lattice rank does not match Gram size");
    return g;
}

json diagram_to_json(const CoxeterDiagram& d)
{
    json nodes = json::array();
    for (std::size_t i = 0; i < d.size(); ++i) nodes.push_back(json{{"label", d.labels[i]}, {"norm", int_to_json(d.norms[i])}});
    json edges = json::array();
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d.bonds[i][j] != Bond::None) edges.push_back(json::array({i, j, bond_name(d.bonds[i][j])}));
    return json{{"nodes", nodes}, {"bonds", edges}};
}

CoxeterDiagram diagram_from_json(const json& j)
{
    CoxeterDiagram d;
    if (j.contains("nodes")) {
        const auto& nodes = j.at("nodes");
        d.resize(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            d.labels[i] = nodes[i].at("label").get<std::string>();
            d.norms[i] = int_from_json(nodes[i].at("norm"));
        }
    } else {
        const auto& norms = j.at("norms");
        d.resize(norms.size());
        for (std::size_t i = 0; i < norms.size(); ++i) {
            d.norms[i] = int_from_json(norms[i]);
            d.labels[i] = j.contains("labels") ? j.at("labels")[i].get<std::string>() : "r" + std::to_string(i + 1);
        }
    }
    for (const auto& e : j.at("bonds")) {
        std::size_t a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
        if (a >= d.size() || b >= d.size()) throw DataError("bond refers to a missing node");
        d.set_bond(a, b, bond_from_name(e.at(2).get<std::string>()));
    }
    return d;
}

std::string fnv1a64_hex(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string DataFile::default_path() { return OCTICA_DATA_PATH; }

DataFile DataFile::load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open data file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

DataFile DataFile::parse(const std::string& text, const std::string& origin)
{
    DataFile d;
    try {
        d.json_ = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError("malformed data file " + origin + ": " + e.what());
    }
    if (!d.json_.is_object() || d.json_.value("format", "") != "octica-paper-data")
        throw DataError("data file " + origin + " is not an octica data file");
    d.checksum_ = fnv1a64_hex(text);
    d.origin_ = origin;
    return d;
}

const json& DataFile::at(const std::string& key) const
{
    if (!json_.contains(key)) throw DataError("data file lacks entry '" + key + "'");
    return json_.at(key);
}

void DataFile::check_index(int i)
{
    if (i < 0 || i > 4) throw DataError("index must be in 0..4, got " + std::to_string(i));
}

HermitianLattice DataFile::lambda() const
{
    try {
        return HermitianLattice::make(lattice_gram_from_json(at("lambda")));
    } catch (const NonHermitian& e) {
        throw DataError(std::string("lambda: ") + e.what());
    }
}

HermitianLattice DataFile::lz() const
{
    try {
        return HermitianLattice::make(lattice_gram_from_json(at("lz")));
    } catch (const NonHermitian& e) {
        throw DataError(std::string("lz: ") + e.what());
    }
}

GMat DataFile::chi(int i) const
{
    check_index(i);
    return gmat_from_json(at("chi" + std::to_string(i)));
}

GMat DataFile::chi_ii() const { return gmat_from_json(at("chiII")); }

GMat DataFile::iso(int i) const
{
    check_index(i);
    return gmat_from_json(at("A" + std::to_string(i)));
}

GMat DataFile::basis(int i) const
{
    check_index(i);
    return gmat_from_json(at("B" + std::to_string(i)));
}

IntMat DataFile::gram(int i) const
{
    check_index(i);
    const json& j = at("L" + std::to_string(i));
    GMat g = lattice_gram_from_json(j);
    return g.map([](const GaussInt& z) {
        if (!z.is_real()) throw DataError("Gram entry of a Z-lattice is not an integer");
        return z.re();
    });
}

CoxeterDiagram DataFile::diagram(int i) const
{
    check_index(i);
    const json& all = at("diagrams");
    std::string key = "L" + std::to_string(i);
    if (!all.contains(key)) throw DataError("data file lacks diagram " + key);
    return diagram_from_json(all.at(key));
}

bool DataFile::has_roots(int i) const
{
    return json_.contains("roots") && json_.at("roots").contains("L" + std::to_string(i));
}

RootTable DataFile::roots(int i) const
{
    check_index(i);
    if (!has_roots(i)) throw DataError("data file lacks a root table for L" + std::to_string(i));
    const json& j = json_.at("roots").at("L" + std::to_string(i));
    RootTable t;
    for (const auto& l : j.at("labels")) t.labels.push_back(l.get<std::string>());
    IntMat c = intmat_from_json(j.at("coords"));
    for (std::size_t r = 0; r < c.rows(); ++r) t.coords.push_back(c.row(r));
    if (t.labels.size() != t.coords.size()) throw DataError("root table label count mismatch");
    return t;
}

GMat DataFile::cusp_matrix(const std::string& name) const
{
    const json& c = at("cusp");
    if (!c.contains(name)) throw DataError("data file lacks cusp entry '" + name + "'");
    return gmat_from_json(c.at(name));
}

GVec DataFile::cusp_vector(const std::string& name) const
{
    const json& c = at("cusp");
    if (!c.contains(name)) throw DataError("data file lacks cusp entry '" + name + "'");
    return gvec_from_json(c.at(name));
}

std::vector<std::string> DataFile::builtin_names()
{
    std::vector<std::string> names = {"lambda", "lz", "chiII"};
    for (const char* p : {"chi", "A", "B", "L"})
        for (int i = 0; i < 5; ++i) names.push_back(p + std::to_string(i));
    return names;
}

bool DataFile::has_builtin(const std::string& name) const
{
    for (const auto& n : builtin_names())
        if (n == name) return json_.contains(name);
    return false;
}

}  // namespace octica
