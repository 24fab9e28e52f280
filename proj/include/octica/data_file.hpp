#pragma once

#include "octica/lattices.hpp"

#include "json.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace octica {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Bond { None, Single, Double, Triple, Parallel, Ultraparallel };

const char* bond_name(Bond b);
Bond bond_from_name(const std::string& s);

// Labeled Coxeter diagram: node norms and a symmetric bond table.
struct CoxeterDiagram {
    std::vector<std::string> labels;
    std::vector<Int> norms;
    std::vector<std::vector<Bond>> bonds;

    std::size_t size() const { return norms.size(); }
    Bond bond(std::size_t i, std::size_t j) const { return bonds[i][j]; }
    void resize(std::size_t n);
    void set_bond(std::size_t i, std::size_t j, Bond b);
    std::size_t count(Bond b) const;
    friend bool operator==(const CoxeterDiagram& a, const CoxeterDiagram& b)
    {
        return a.labels == b.labels && a.norms == b.norms && a.bonds == b.bonds;
    }
};

// Roots given by coordinates in a distinguished basis, in listed label order.
struct RootTable {
    std::vector<std::string> labels;
    std::vector<IntVec> coords;
};

GaussInt gauss_from_json(const nlohmann::json& j);
nlohmann::json gauss_to_json(const GaussInt& z);
GMat gmat_from_json(const nlohmann::json& j);
nlohmann::json gmat_to_json(const GMat& m);
GVec gvec_from_json(const nlohmann::json& j);
nlohmann::json gvec_to_json(const GVec& v);
IntMat intmat_from_json(const nlohmann::json& j);
nlohmann::json intmat_to_json(const IntMat& m);
nlohmann::json intvec_to_json(const IntVec& v);
nlohmann::json gaussrat_to_json(const GaussRat& z);
GaussRat gaussrat_from_json(const nlohmann::json& j);
nlohmann::json ext_to_json(const ExtScalar& z);
ExtScalar ext_from_json(const nlohmann::json& j);

// Lattice object {"rank": n, "gram": [...]} with Gaussian [re, im] entries or plain integers.
GMat lattice_gram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const CoxeterDiagram& d);
CoxeterDiagram diagram_from_json(const nlohmann::json& j);

std::string fnv1a64_hex(const std::string& bytes);

// The bundled constants: lattices, maps, bases, Grams, diagrams and root tables.
class DataFile {
public:
    static DataFile load(const std::string& path);
    static DataFile parse(const std::string& text, const std::string& origin = "<memory>");
    static std::string default_path();

    const std::string& checksum() const { return checksum_; }
    const std::string& origin() const { return origin_; }
    const nlohmann::json& raw() const { return json_; }

    HermitianLattice lambda() const;
    HermitianLattice lz() const;
    GMat chi(int i) const;
    GMat chi_ii() const;
    GMat iso(int i) const;    // A_i
    GMat basis(int i) const;  // B_i, columns are basis vectors
    IntMat gram(int i) const; // L_i
    CoxeterDiagram diagram(int i) const;
    bool has_roots(int i) const;
    RootTable roots(int i) const;
    GMat cusp_matrix(const std::string& name) const;  // kappa1, kappa3, A1, A2
    GVec cusp_vector(const std::string& name) const;  // u1, u2, v1, v2

    // Builtin names: lambda, lz, chi0..chi4, chiII, A0..A4, B0..B4, L0..L4.
    bool has_builtin(const std::string& name) const;
    static std::vector<std::string> builtin_names();

private:
    const nlohmann::json& at(const std::string& key) const;
    static void check_index(int i);

    nlohmann::json json_;
    std::string checksum_;
    std::string origin_;
};

}  // namespace octica
