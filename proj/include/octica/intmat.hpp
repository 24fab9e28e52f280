#pragma once

#include "octica/matrix.hpp"

#include <functional>
#include <optional>

namespace octica {

// Row Hermite normal form: nonzero rows only, positive pivots, entries above
// each pivot reduced into [0, pivot).
IntMat row_hnf(const IntMat& m);

// Columns form the canonical (Hermite) basis of the Z-span of the columns of gens.
IntMat hermite_basis(const IntMat& gens);

// Columns form the Hermite basis of {x in Z^n : m x = 0}.
IntMat integer_kernel(const IntMat& m);

// Coordinates c with basis * c = v, if integral; basis has full column rank.
std::optional<IntVec> integral_coords(const IntMat& basis, const IntVec& v);

std::size_t rank_int(const IntMat& m);

RatMat to_rat(const IntMat& m);

struct Signature {
    int pos = 0;
    int neg = 0;
    int zero = 0;
    friend bool operator==(const Signature& a, const Signature& b)
    {
        return a.pos == b.pos && a.neg == b.neg && a.zero == b.zero;
    }
    std::string str() const;
};

// Inertia of a symmetric rational matrix by exact congruence diagonalization.
Signature signature(const RatMat& s);
Signature signature(const IntMat& s);

Int bilinear(const IntMat& gram, const IntVec& x, const IntVec& y);
IntVec mul(const IntMat& m, const IntVec& v);

// Calls visit(x) for every integer x != 0 with x^T P x <= bound, P positive definite.
// Exact Fincke-Pohst over the rationals; returns false if visit asked to stop.
bool enumerate_short(const IntMat& P, const Int& bound, const std::function<bool(const IntVec&)>& visit);
std::vector<IntVec> short_vectors(const IntMat& P, const Int& bound);

// Bound B with |x_i| <= B for every x with x^T P x <= bound.
Int coordinate_bound(const IntMat& P, const Int& bound);

Int content(const IntVec& v);

}  // namespace octica
