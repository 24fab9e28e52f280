#pragma once

#include "octica/lattices.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octica {

// Integral symmetric lattice, optionally embedded into a Hermitian lattice.
struct ZLattice {
    IntMat gram;
    std::optional<GMat> embedding;  // columns are the basis vectors in ambient coordinates

    std::size_t rank() const { return gram.rows(); }
    Int inner(const IntVec& x, const IntVec& y) const { return bilinear(gram, x, y); }
    Int norm(const IntVec& x) const { return bilinear(gram, x, x); }
    // Ambient coordinates of a vector given in this lattice's basis.
    GVec ambient(const IntVec& x) const;
};

ZLattice make_zlattice(const IntMat& gram);

// Fix(chi) with its Hermite basis; throws std::invalid_argument unless chi is an involutive anti-isometry.
ZLattice fix_lattice(const HermitianLattice& L, const GMat& c);
// Integer kernel of realify_anti(c) - I without involutivity checks (columns in real coordinates).
IntMat fixed_real_kernel(const GMat& c);

// Gram of the columns of b under h; throws if any entry is not a rational integer.
IntMat gram_of(const HermitianLattice& L, const GMat& b);

// [outer : span(inner)] where both are column bases of Z^m.
Int sublattice_index(const IntMat& outer, const IntMat& inner);

struct BasisReport {
    bool fixed = true;
    bool gram_matches = true;
    bool full_index = true;
    Int index = 0;
    std::vector<std::string> problems;
    bool ok() const { return fixed && gram_matches && full_index; }
};

// Checks that the columns of b are fixed by chi, have Gram l, and span Fix(chi).
BasisReport verify_basis(const HermitianLattice& L, const GMat& c, const GMat& b, const IntMat& l);

}  // namespace octica
