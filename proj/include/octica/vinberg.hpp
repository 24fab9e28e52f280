#pragma once

#include "octica/fixed_points.hpp"
#include "octica/data_file.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octica {

struct Root {
    IntVec coords;
    Int norm;
    Rat height;  // (r, v0)^2 / -q(r)
};

struct IllegalAngle : std::domain_error {
    explicit IllegalAngle(const Rat& c) : std::domain_error("illegal angle invariant c = " + c.get_str()), value(c) {}
    Rat value;
};

bool is_crystallographic_root(const ZLattice& L, const IntVec& r, const std::vector<Int>& norms);

// v0 for the algorithm: the first basis vector if time-like, else the time-like
// vector minimizing (q, l1 norm, reversed coordinates) in a growing box.
IntVec choose_v0(const ZLattice& L);

// All crystallographic primitive roots with norm in norms and height <= bound,
// signed so that (r, v0) <= 0; height-zero roots are listed with both signs.
std::vector<Root> enumerate_roots(const ZLattice& L, const std::vector<Int>& norms, const Rat& height_bound,
                                  const IntVec& v0);

// Same set by exhaustive search of the box [-box, box]^n (vectorized kernel).
std::vector<Root> enumerate_roots_box(const ZLattice& L, const std::vector<Int>& norms, const Rat& height_bound,
                                      const IntVec& v0, long box);
// Box radius that contains every root enumerate_roots can return for these inputs.
Int root_box_bound(const ZLattice& L, const std::vector<Int>& norms, const Rat& height_bound, const IntVec& v0);

struct StopRule {
    enum Kind { Expected, Volume, Height } kind = Volume;
    std::size_t expected = 0;
    Rat height = 0;
    static StopRule parse(const std::string& s);
    std::string str() const;
};

struct VinbergResult {
    IntVec v0;
    std::vector<Root> roots;
    Rat last_height = 0;       // largest height fully processed
    bool finite_volume = false;
    bool stopped = false;      // the stop rule was met
};

// Vinberg's algorithm; throws std::runtime_error past the ceiling without meeting the stop rule.
VinbergResult fundamental_roots(const ZLattice& L, const std::vector<Int>& norms, const IntVec& v0,
                                const StopRule& stop, const Rat& ceiling = Rat(256));

Bond bond_for(const Rat& c);
Rat angle_invariant(const ZLattice& L, const IntVec& a, const IntVec& b);
CoxeterDiagram coxeter_diagram(const ZLattice& L, const std::vector<Root>& roots);

struct DiagramSymmetry {
    std::vector<std::size_t> perm;
    bool respects_norms = false;
    bool is_identity() const;
    bool is_involution() const;
};

std::vector<DiagramSymmetry> diagram_symmetries(const CoxeterDiagram& d, bool respect_norms);
// A node map phi with b.node(phi[i]) matching a.node(i), if one exists.
std::optional<std::vector<std::size_t>> diagram_isomorphism(const CoxeterDiagram& a, const CoxeterDiagram& b,
                                                            bool respect_norms);

// Connected Coxeter type by catalog: "A4", "B3", "D4", "E6", "F4", "G2", affine types with a '~' suffix, or "".
std::string connected_type(const CoxeterDiagram& d, const std::vector<std::size_t>& nodes);

enum class SubKind { Elliptic, Parabolic, Other };

struct Subdiagram {
    std::vector<std::size_t> nodes;
    SubKind kind = SubKind::Other;
    std::size_t rank = 0;
    std::string type;  // component types joined with '+'
};

// Classifies a node subset by the catalog.
Subdiagram classify_subdiagram(const CoxeterDiagram& d, const std::vector<std::size_t>& nodes);
// Same decision from the root Gram matrix: elliptic iff -Gram is positive definite,
// parabolic iff every component is positive semidefinite of corank one.
SubKind classify_by_gram(const ZLattice& L, const std::vector<Root>& roots, const std::vector<std::size_t>& nodes);

struct VolumeReport {
    bool finite = false;
    std::size_t vertices = 0;          // elliptic of rank n plus parabolic of rank n-1
    std::size_t edges_checked = 0;     // elliptic subdiagrams of rank n-1
    std::vector<std::string> failures;
};

// Vinberg's criterion for a diagram of a polytope in hyperbolic n-space.
VolumeReport finite_volume_report(const CoxeterDiagram& d, std::size_t n);
bool finite_volume_check(const CoxeterDiagram& d, std::size_t n);

std::string render_dot(const CoxeterDiagram& d, const std::string& name);
std::string render_ascii(const CoxeterDiagram& d, const std::string& name);

}  // namespace octica
