#pragma once

#include "octica/fixed_points.hpp"

#include <string>
#include <vector>

namespace octica {

// Complete list of isometries of a definite Hermitian lattice, sorted.
struct FiniteIsometryGroup {
    std::vector<GMat> elements;
    std::size_t order() const { return elements.size(); }
    std::ptrdiff_t index_of(const GMat& a) const;
    bool contains(const GMat& a) const { return index_of(a) >= 0; }
};

// Backtracking over images of basis vectors among lattice vectors of the right norm.
// Throws std::invalid_argument for indefinite input.
FiniteIsometryGroup enumerate_isometries(const HermitianLattice& L);
Verdict check_group_closure(const FiniteIsometryGroup& G);

// Vectors v of the definite lattice with q(v) = target.
std::vector<GVec> vectors_of_norm(const HermitianLattice& L, const Int& target);

// {A kappa : A in G, involutive}, sorted; throws if kappa is not an anti-involution.
std::vector<GMat> enumerate_anti_involutions(const HermitianLattice& L, const FiniteIsometryGroup& G,
                                             const GMat& kappa);
// Same set by exhaustive search over 2x2 Gaussian matrices with entry norms <= max_norm.
std::vector<GMat> anti_involutions_brute_force(const HermitianLattice& L, const Int& max_norm);
Int max_entry_norm(const FiniteIsometryGroup& G);

// Orbits of kappa -> A kappa A^-1, each sorted, ordered by first element.
std::vector<std::vector<GMat>> conjugacy_classes(const FiniteIsometryGroup& G, const std::vector<GMat>& antis);
std::size_t class_of(const std::vector<std::vector<GMat>>& classes, const GMat& kappa);

struct WedgeQuotient {
    GMat kappa;
    ZLattice fix;                   // Hermite basis and Gram
    std::size_t stabilizer = 0;     // elements of G preserving Fix(kappa)
    std::size_t image_order = 0;    // order of the faithful image on the plane
    std::size_t rotations = 0;      // orientation-preserving part
    bool dihedral = false;
    std::size_t m = 0;              // image is dihedral of order 2m
    Rat angle;                      // multiple of pi
};
// Throws std::runtime_error if the image is not dihedral.
WedgeQuotient wedge_quotient(const HermitianLattice& L, const FiniteIsometryGroup& G, const GMat& kappa);

// Squared cosine of the angle between two vectors of a definite lattice.
Rat cos2(const HermitianLattice& L, const GVec& e, const GVec& f);
// cos^2(pi / m) when it is rational (m = 1, 2, 3, 4, 6).
std::optional<Rat> cos2_pi_over(std::size_t m);

struct EdgeGluing {
    std::string from, to;          // edge vector names
    GVec from_vec, to_vec;
    std::vector<std::size_t> witnesses;  // indices into G with A from = to
};

struct GluedCone {
    std::vector<EdgeGluing> gluings;
    Rat total_angle;  // multiple of pi
    bool orbifold_point = false;
};

// Glues the wedges of kappa3 (edges v2, v3 = v1 + v2) and kappa1 (edges u1, u2).
GluedCone glue_cone(const FiniteIsometryGroup& G, const WedgeQuotient& w1, const WedgeQuotient& w3, const GVec& u1,
                    const GVec& u2, const GVec& v1, const GVec& v2);

// True iff angle = 1/k for a positive integer k.
bool is_orbifold_angle(const Rat& angle);

}  // namespace octica
