#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace octica {

using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Int& z);
std::string to_string(const Rat& q);

// Floor of the square root of a nonnegative integer.
Int isqrt(const Int& n);
// Floor of the square root of a nonnegative rational.
Int floor_sqrt(const Rat& q);
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// Element a + b i of Z[i].
class GaussInt {
public:
    GaussInt() = default;
    GaussInt(long re) : re_(re) {}
    GaussInt(const Int& re) : re_(re) {}
    GaussInt(const Int& re, const Int& im) : re_(re), im_(im) {}
    GaussInt(long re, long im) : re_(re), im_(im) {}

    static GaussInt i() { return GaussInt(0, 1); }

    const Int& re() const { return re_; }
    const Int& im() const { return im_; }

    GaussInt conj() const { return GaussInt(re_, -im_); }
    Int norm() const { return re_ * re_ + im_ * im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm() == 1; }
    bool is_real() const { return im_ == 0; }

    GaussInt operator-() const { return GaussInt(-re_, -im_); }
    GaussInt& operator+=(const GaussInt& o);
    GaussInt& operator-=(const GaussInt& o);
    GaussInt& operator*=(const GaussInt& o);

    friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
    friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }
    // Lexicographic on (re, im); only used for canonical ordering.
    friend bool operator<(const GaussInt& a, const GaussInt& b);

    std::string str() const;

private:
    Int re_ = 0;
    Int im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GaussInt& z);

inline const GaussInt one_plus_i{1, 1};

bool divisible_by_one_plus_i(const GaussInt& z);
// z / (1+i); requires divisible_by_one_plus_i(z).
GaussInt div_one_plus_i(const GaussInt& z);
// True iff d divides z in Z[i].
bool divides(const GaussInt& d, const GaussInt& z);
// z / d; throws std::domain_error unless exact.
GaussInt exact_div(const GaussInt& z, const GaussInt& d);
// Euclidean division with rounded quotient, so norm(r) <= norm(d)/2.
void divmod(const GaussInt& z, const GaussInt& d, GaussInt& q, GaussInt& r);
// A gcd normalized to the first quadrant (re > 0, im >= 0), or 0.
GaussInt gcd(GaussInt a, GaussInt b);
GaussInt normalize_associate(const GaussInt& z);
const GaussInt& unit(int k);  // i^k

// Element of Q(i) in canonical form num/den, den > 0, gcd(content(num), den) = 1.
class GaussRat {
public:
    GaussRat() : den_(1) {}
    GaussRat(long v) : num_(v), den_(1) {}
    GaussRat(const GaussInt& z) : num_(z), den_(1) {}
    GaussRat(const Rat& q) : num_(q.get_num()), den_(q.get_den()) {}
    GaussRat(const GaussInt& num, const Int& den);

    const GaussInt& num() const { return num_; }
    const Int& den() const { return den_; }
    Rat re() const;
    Rat im() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    bool is_rational() const { return num_.im() == 0; }
    GaussInt to_gauss_int() const;  // throws unless integral
    GaussRat conj() const { return GaussRat(num_.conj(), den_); }
    Rat norm() const { return Rat(num_.norm(), den_ * den_); }
    GaussRat inverse() const;

    GaussRat operator-() const { return GaussRat(-num_, den_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const;

private:
    void canonicalize();
    GaussInt num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

// a + b sqrt(2) with a, b in Q(i).
class ExtScalar {
public:
    ExtScalar() = default;
    ExtScalar(long v) : a_(v) {}
    ExtScalar(const GaussInt& z) : a_(z) {}
    ExtScalar(const GaussRat& a) : a_(a) {}
    ExtScalar(const GaussRat& a, const GaussRat& b) : a_(a), b_(b) {}

    static ExtScalar sqrt2() { return ExtScalar(GaussRat(0L), GaussRat(1L)); }

    const GaussRat& a() const { return a_; }
    const GaussRat& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool in_base_field() const { return b_.is_zero(); }
    bool is_gauss_int() const { return b_.is_zero() && a_.is_integral(); }
    GaussInt to_gauss_int() const;
    ExtScalar conj() const { return ExtScalar(a_.conj(), b_.conj()); }
    // Galois conjugate sqrt(2) -> -sqrt(2).
    ExtScalar galois() const { return ExtScalar(a_, -b_); }
    ExtScalar inverse() const;

    ExtScalar operator-() const { return ExtScalar(-a_, -b_); }
    ExtScalar& operator+=(const ExtScalar& o);
    ExtScalar& operator-=(const ExtScalar& o);
    ExtScalar& operator*=(const ExtScalar& o);
    ExtScalar& operator/=(const ExtScalar& o);

    friend ExtScalar operator+(ExtScalar x, const ExtScalar& y) { return x += y; }
    friend ExtScalar operator-(ExtScalar x, const ExtScalar& y) { return x -= y; }
    friend ExtScalar operator*(ExtScalar x, const ExtScalar& y) { return x *= y; }
    friend ExtScalar operator/(ExtScalar x, const ExtScalar& y) { return x /= y; }
    friend bool operator==(const ExtScalar& x, const ExtScalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const ExtScalar& x, const ExtScalar& y) { return !(x == y); }

    std::string str() const;

private:
    GaussRat a_;
    GaussRat b_;
};

std::ostream& operator<<(std::ostream& os, const ExtScalar& z);

// Positive square root of a positive rational inside Q(sqrt 2), if it exists there.
bool sqrt_in_ext(const Rat& r, ExtScalar& out);

struct GaussIntHash {
    std::size_t operator()(const GaussInt& z) const;
};

}  // namespace octica
