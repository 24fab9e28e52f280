#pragma once

#include "octica/lattices.hpp"
#include "octica/kernels.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace octica {

// Vectors of F2^n (n <= 8) as bit masks, bit k = coordinate k.
using F2Vec = std::uint8_t;

inline int popcount8(unsigned x) { return __builtin_popcount(x & 0xffu); }

// Linear map of F2^n given by the images of the unit vectors.
struct F2Map {
    int dim = 0;
    std::array<F2Vec, 8> cols{};

    static F2Map identity(int n);
    F2Vec apply(F2Vec x) const;
    F2Map compose(const F2Map& o) const;  // this after o
    bool operator==(const F2Map& o) const { return dim == o.dim && cols == o.cols; }
    std::string str() const;
};

// V = L / (1+i) L with q(x) = h(x, x) / 2 mod 2 on 0/1 lifts.
struct F2QuadraticSpace {
    int dim = 0;
    std::vector<std::uint8_t> q;  // value for each of the 2^dim vectors

    int polar(F2Vec x, F2Vec y) const { return q[x ^ y] ^ q[x] ^ q[y]; }
    std::size_t size() const { return q.size(); }
    int count_norm_one() const;
};

F2Vec reduce_vector(const GVec& v);
GVec lift_vector(F2Vec x, std::size_t n);
// Requires even diagonal, so h(x, x) is even on every lift.
F2QuadraticSpace quadratic_space(const HermitianLattice& L);
// q agrees on all lifts x + (1+i) u e_k, u in {1, i}.
Verdict check_q_well_defined(const HermitianLattice& L);
Verdict check_polar_form(const F2QuadraticSpace& V);

// Reduction of v -> M v or v -> M conj(v); conjugation is trivial modulo 1+i.
F2Map reduce_matrix(const GMat& m);
F2Map induced_involution(const GMat& chi);
bool preserves_q(const F2QuadraticSpace& V, const F2Map& f);
F2Map inverse(const F2Map& f);

struct InvolutionInvariants {
    int dim_fix = 0;
    int norm_one_fixed = 0;
    friend bool operator==(const InvolutionInvariants& a, const InvolutionInvariants& b)
    {
        return a.dim_fix == b.dim_fix && a.norm_one_fixed == b.norm_one_fixed;
    }
    std::string str() const;
};

InvolutionInvariants involution_invariants(const F2QuadraticSpace& V, const F2Map& phi);

// Invariants of an involution of P8 = {1..8} with the given number of transpositions (0..4),
// read off on the W-model of even subsets modulo complement.
struct S8Invariants {
    int transpositions = 0;
    int fixed_subsets = 0;  // even subsets S with tau S = S
    int fixed_classes = 0;
    InvolutionInvariants inv;
};
S8Invariants s8_invariants(int transpositions);
// Same from a cycle type string like "2,2,1,1,1,1,1,1" or "(12)(34)".
S8Invariants s8_invariants_from_cycle_type(const std::string& cycles);

enum class OcticType { Type0, Type1, Type2, Type3, Type4OrAntipodal };
const char* octic_type_name(OcticType t);
// Throws std::domain_error for invariants that match no row.
OcticType classify_octic_type(const InvolutionInvariants& inv);

// W-model: even subsets of P8 modulo complement; a class is stored by its
// representative containing element 1, or 0 for {empty, P8}.
using WClass = std::uint8_t;
WClass canonical_class(std::uint8_t subset);
WClass w_add(WClass a, WClass b);
int w_q(WClass a);
std::vector<WClass> all_w_classes();

struct WBijection {
    std::array<F2Vec, 8> a{};        // a[j] is the image of the class of {1, j+1}, j = 1..7
    std::array<F2Vec, 256> to_v{};   // indexed by canonical class
    std::array<WClass, 64> to_w{};
};
// Searches a linear bijection W -> V carrying half-cardinality mod 2 to q; throws on failure.
WBijection build_w_bijection(const F2QuadraticSpace& V);
Verdict check_w_bijection(const F2QuadraticSpace& V, const WBijection& b);

using Perm64 = kernels::Perm64;
Perm64 to_perm(const F2Map& f);
// Transvections x -> x + B(x, v) v for q(v) = 1.
std::vector<F2Map> transvections(const F2QuadraticSpace& V);
// Action of the transposition (k k+1) of P8 transported to V.
std::vector<F2Map> transported_s8_generators(const WBijection& b);

// Closure of a set of linear maps under composition, as permutations of the 2^dim vectors.
struct PermGroup {
    std::vector<Perm64> elements;
    bool contains(const Perm64& p) const;
    std::size_t order() const { return elements.size(); }
};
PermGroup generate_group(const std::vector<F2Map>& gens);

struct OvqReport {
    std::size_t order = 0;
    std::size_t transported_order = 0;
    bool generators_preserve_q = false;
    bool transported_inside = false;
    bool equal = false;
    int norm_one = 0;
};
OvqReport o_vq_report(const F2QuadraticSpace& V);

}  // namespace octica
