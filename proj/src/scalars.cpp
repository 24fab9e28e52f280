#include "octica/scalars.hpp"

#include <sstream>

namespace octica {

std::string to_string(const Int& z) { return z.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

Int isqrt(const Int& n)
{
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int floor_rat(const Rat& q)
{
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q)
{
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int floor_sqrt(const Rat& q)
{
    if (q < 0) throw std::domain_error("square root of negative rational");
    return isqrt(floor_rat(q));
}

GaussInt& GaussInt::operator+=(const GaussInt& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussInt& GaussInt::operator*=(const GaussInt& o)
{
    Int r = re_ * o.re_ - im_ * o.im_;
    Int i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

bool operator<(const GaussInt& a, const GaussInt& b)
{
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
}

std::string GaussInt::str() const
{
    if (im_ == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "i";
    if (re_ == 0) return imag;
    if (im_ > 0) return re_.get_str() + "+" + imag;
    return re_.get_str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << z.str(); }

bool divisible_by_one_plus_i(const GaussInt& z)
{
    Int s = z.re() + z.im();
    return mpz_even_p(s.get_mpz_t()) != 0;
}

GaussInt div_one_plus_i(const GaussInt& z)
{
    // z (1-i) / 2
    if (!divisible_by_one_plus_i(z)) throw std::domain_error("not divisible by 1+i");
    Int re = z.re() + z.im();
    Int im = z.im() - z.re();
    mpz_divexact_ui(re.get_mpz_t(), re.get_mpz_t(), 2);
    mpz_divexact_ui(im.get_mpz_t(), im.get_mpz_t(), 2);
    return GaussInt(re, im);
}

bool divides(const GaussInt& d, const GaussInt& z)
{
    if (d.is_zero()) return z.is_zero();
    GaussInt p = z * d.conj();
    Int n = d.norm();
    return mpz_divisible_p(p.re().get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(p.im().get_mpz_t(), n.get_mpz_t());
}

GaussInt exact_div(const GaussInt& z, const GaussInt& d)
{
    if (!divides(d, z)) throw std::domain_error("inexact Gaussian division");
    if (d.is_zero()) return GaussInt();
    GaussInt p = z * d.conj();
    Int n = d.norm();
    Int re, im;
    mpz_divexact(re.get_mpz_t(), p.re().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), p.im().get_mpz_t(), n.get_mpz_t());
    return GaussInt(re, im);
}

namespace {

// Nearest integer to a/n, n > 0.
Int round_div(const Int& a, const Int& n)
{
    Int t = 2 * a + n;
    Int d = 2 * n;
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
    return r;
}

}  // namespace

void divmod(const GaussInt& z, const GaussInt& d, GaussInt& q, GaussInt& r)
{
    if (d.is_zero()) throw std::domain_error("Gaussian division by zero");
    GaussInt p = z * d.conj();
    Int n = d.norm();
    q = GaussInt(round_div(p.re(), n), round_div(p.im(), n));
    r = z - q * d;
}

GaussInt normalize_associate(const GaussInt& z)
{
    GaussInt w = z;
    for (int k = 0; k < 4; ++k) {
        if (w.re() > 0 && w.im() >= 0) return w;
        w *= GaussInt::i();
    }
    return w;
}

GaussInt gcd(GaussInt a, GaussInt b)
{
    while (!b.is_zero()) {
        GaussInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : normalize_associate(a);
}

const GaussInt& unit(int k)
{
    static const GaussInt units[4] = {GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1)};
    return units[((k % 4) + 4) % 4];
}

std::size_t GaussIntHash::operator()(const GaussInt& z) const
{
    std::size_t h1 = std::hash<std::string>()(z.re().get_str(16));
    std::size_t h2 = std::hash<std::string>()(z.im().get_str(16));
    return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
}

GaussRat::GaussRat(const GaussInt& num, const Int& den) : num_(num), den_(den)
{
    if (den_ == 0) throw std::domain_error("zero denominator");
    canonicalize();
}

void GaussRat::canonicalize()
{
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.re().get_mpz_t(), num_.im().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        Int re, im, d;
        mpz_divexact(re.get_mpz_t(), num_.re().get_mpz_t(), g.get_mpz_t());
        mpz_divexact(im.get_mpz_t(), num_.im().get_mpz_t(), g.get_mpz_t());
        mpz_divexact(d.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        num_ = GaussInt(re, im);
        den_ = d;
    }
}

Rat GaussRat::re() const
{
    Rat q(num_.re(), den_);
    q.canonicalize();
    return q;
}

Rat GaussRat::im() const
{
    Rat q(num_.im(), den_);
    q.canonicalize();
    return q;
}

GaussInt GaussRat::to_gauss_int() const
{
    if (!is_integral()) throw std::domain_error("Gaussian rational is not integral: " + str());
    return num_;
}

GaussRat GaussRat::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    // den / num = den conj(num) / norm(num)
    return GaussRat(num_.conj() * GaussInt(den_), num_.norm());
}

GaussRat& GaussRat::operator+=(const GaussRat& o)
{
    num_ = num_ * GaussInt(o.den_) + o.num_ * GaussInt(den_);
    den_ *= o.den_;
    canonicalize();
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o)
{
    num_ = num_ * GaussInt(o.den_) - o.num_ * GaussInt(den_);
    den_ *= o.den_;
    canonicalize();
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

std::string GaussRat::str() const
{
    if (den_ == 1) return num_.str();
    std::string n = num_.str();
    if (!num_.is_real() && num_.re() != 0) n = "(" + n + ")";
    return n + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

GaussInt ExtScalar::to_gauss_int() const
{
    if (!b_.is_zero()) throw std::domain_error("scalar has a sqrt(2) component: " + str());
    return a_.to_gauss_int();
}

ExtScalar ExtScalar::inverse() const
{
    // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2); the denominator vanishes only at zero.
    GaussRat d = a_ * a_ - GaussRat(2L) * b_ * b_;
    if (d.is_zero()) throw std::domain_error("inverse of zero");
    GaussRat di = d.inverse();
    return ExtScalar(a_ * di, -(b_ * di));
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o)
{
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o)
{
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

ExtScalar& ExtScalar::operator*=(const ExtScalar& o)
{
    GaussRat a = a_ * o.a_ + GaussRat(2L) * b_ * o.b_;
    GaussRat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

ExtScalar& ExtScalar::operator/=(const ExtScalar& o) { return *this *= o.inverse(); }

std::string ExtScalar::str() const
{
    if (b_.is_zero()) return a_.str();
    std::string rt;
    if (b_ == GaussRat(1L))
        rt = "sqrt2";
    else if (b_ == GaussRat(-1L))
        rt = "-sqrt2";
    else {
        std::string s = b_.str();
        if (!b_.is_rational() && b_.num().re() != 0) s = "(" + s + ")";
        rt = s + "*sqrt2";
    }
    if (a_.is_zero()) return rt;
    std::string a = a_.str();
    if (rt[0] == '-') return a + rt;
    return a + "+" + rt;
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& z) { return os << z.str(); }

bool sqrt_in_ext(const Rat& r, ExtScalar& out)
{
    if (r <= 0) return false;
    Int n = r.get_num(), d = r.get_den();
    // sqrt(n/d) = sqrt(n d) / d
    Int nd = n * d;
    Int s = isqrt(nd);
    if (s * s == nd) {
        out = ExtScalar(GaussRat(Rat(s, d)));
        return true;
    }
    // sqrt(n d) = t sqrt 2 with 2 t^2 = n d
    if (mpz_even_p(nd.get_mpz_t())) {
        Int h = nd / 2;
        Int t = isqrt(h);
        if (t * t == h) {
            Rat c(t, d);
            c.canonicalize();
            out = ExtScalar(GaussRat(0L), GaussRat(c));
            return true;
        }
    }
    return false;
}

}  // namespace octica
