#pragma once

#include "octica/intmat.hpp"

#include <stdexcept>
#include <string>

namespace octica {

struct NonHermitian : std::invalid_argument {
    NonHermitian(std::size_t i, std::size_t j, const std::string& what)
        : std::invalid_argument(what), row(i), col(j) {}
    std::size_t row, col;
};

// Outcome of a finite verification with a reason on failure.
struct Verdict {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

// Free Z[i]-module with Hermitian form h(x, y) = x^* G y (conjugate-linear in x).
class HermitianLattice {
public:
    static HermitianLattice make(const GMat& gram);

    std::size_t rank() const { return gram_.rows(); }
    const GMat& gram() const { return gram_; }
    // Hermitian signature; the realified form has twice these counts.
    const Signature& signature() const { return sig_; }
    bool negative_definite() const { return sig_.neg == static_cast<int>(rank()); }

    GaussInt inner(const GVec& v, const GVec& w) const;
    Int q_norm(const GVec& v) const;

    // Real symmetric form on Z^{2n} with coordinates (re, im).
    const IntMat& real_form() const { return real_; }

private:
    GMat gram_;
    IntMat real_;
    Signature sig_;
};

// Realification of z -> M z.
IntMat realify(const GMat& m);
// Realification of z -> C conj(z).
IntMat realify_anti(const GMat& c);
IntVec to_real(const GVec& v);
GVec from_real(const IntVec& v);

Verdict check_isometry(const HermitianLattice& L, const GMat& a);
Verdict check_anti_isometry(const HermitianLattice& L, const GMat& c);
Verdict check_anti_involution(const HermitianLattice& L, const GMat& c);

// v -> a c conj(v)
GMat compose_anti(const GMat& a, const GMat& c);
// v -> u c conj(v); u must be a unit.
GMat scale_anti(const GMat& c, const GaussInt& u);
// Conjugate a chi a^-1 as the matrix a c conj(a^-1).
GMat conjugate_anti(const GMat& a, const GMat& c);
GVec apply_anti(const GMat& c, const GVec& v);

}  // namespace octica
