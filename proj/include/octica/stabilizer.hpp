#pragma once

#include "octica/fixed_points.hpp"
#include "octica/vinberg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octica {

enum class StabType { I, II };
const char* stab_type_name(StabType t);

struct StabElement {
    GMat A;
    GaussInt beta;
    StabType type = StabType::I;
};

// chi(A b) = beta A b on a basis of Fix(chi) with one common unit beta.
// Throws std::domain_error when A does not stabilize the fixed subspace.
StabElement classify_stab_element(const HermitianLattice& L, const GMat& chi, const GMat& A);

// Fundamental roots in ambient coordinates with the Coxeter diagram they span.
struct AmbientRoots {
    std::vector<std::string> labels;
    std::vector<GVec> coords;  // in the Hermitian lattice
    std::vector<Int> norms;
    CoxeterDiagram diagram;
};

struct TypeTwoAttempt {
    int sign = 1;  // epsilon
    bool consistent = false;
    bool integral = false;
    bool isometry = false;
    std::optional<GMat> T;
    std::vector<ExtScalar> certificate;  // left dependency when inconsistent
    std::string relation;                // forced relation among the roots, e.g. "2 r3 = r4"
    std::string note;
};

struct TypeTwoResult {
    std::vector<std::size_t> pairing;  // s
    std::vector<ExtScalar> mu;
    std::vector<TypeTwoAttempt> attempts;  // epsilon = +1 then -1
    std::optional<GMat> witness;
    int witness_sign = 0;
};

// Scale factors with 2 q(r_j) = mu_j^2 q(r_s(j)); throws std::invalid_argument if some mu_j lies outside Q(sqrt 2).
std::vector<ExtScalar> scale_factors(const std::vector<Int>& norms, const std::vector<std::size_t>& pairing);

// Looks for T with (1 - i) T r_j = eps mu_j r_s(j) for all j, T an isometry of L.
TypeTwoResult solve_type_two(const HermitianLattice& L, const AmbientRoots& roots,
                             const std::vector<std::size_t>& pairing);

// Independent re-verification of a witness: isometry, scale conditions, projective order two.
Verdict verify_type_two_witness(const HermitianLattice& L, const AmbientRoots& roots,
                                const std::vector<std::size_t>& pairing, const GMat& T, int sign);

// Maps the realified Fix(chi) onto the realified Fix(i chi).
bool maps_fix_to_fix_i(const GMat& chi, const GMat& T);

// Nontrivial involutions of the diagram ignoring norms.
std::vector<std::vector<std::size_t>> diagram_involutions(const CoxeterDiagram& d);

struct StabStructure {
    bool semidirect = false;
    std::vector<TypeTwoResult> tried;  // one per diagram involution
    std::optional<GMat> witness;
    std::string str() const { return semidirect ? "semidirect" : "equal"; }
};
StabStructure stab_structure(const HermitianLattice& L, const AmbientRoots& roots);

struct WallReport {
    std::size_t count = 0;
    std::vector<std::size_t> walls;  // indices of roots r = (1+i) w, w primitive, q(w) = -2
    std::vector<GVec> w;
};
WallReport discriminant_walls(const HermitianLattice& L, const std::vector<GVec>& roots);

std::string relation_str(const IntVec& coeffs, const std::vector<std::string>& labels);

}  // namespace octica
