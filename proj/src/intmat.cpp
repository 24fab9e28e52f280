#include "octica/intmat.hpp"

#include <algorithm>

namespace octica {

namespace {

void swap_rows(IntMat& a, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

// row_i -= f * row_j
void sub_row(IntMat& a, std::size_t i, std::size_t j, const Int& f)
{
    if (f == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= f * a(j, c);
}

}  // namespace

IntMat row_hnf(const IntMat& m)
{
    IntMat a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c among rows r..end.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                if (best == rows || abs(a(i, c)) < abs(a(best, c))) best = i;
            }
            if (best == rows) break;
            swap_rows(a, r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                sub_row(a, i, r, q);
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r < rows && a(r, c) != 0) {
            if (a(r, c) < 0)
                for (std::size_t k = 0; k < cols; ++k) a(r, k) = -a(r, k);
            pivots.push_back(c);
            ++r;
        }
    }
    // Reduce above pivots.
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        std::size_t c = pivots[p];
        for (std::size_t i = 0; i < p; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(p, c).get_mpz_t());
            sub_row(a, i, p, q);
        }
    }
    IntMat out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < cols; ++c) out(i, c) = a(i, c);
    return out;
}

IntMat hermite_basis(const IntMat& gens) { return row_hnf(gens.transpose()).transpose(); }

IntMat integer_kernel(const IntMat& m)
{
    const std::size_t rows = m.rows(), n = m.cols();
    // Reduce [m^T | I]; rows whose left part vanishes span the kernel.
    IntMat aug(n, rows + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < rows; ++j) aug(i, j) = m(j, i);
        aug(i, rows + i) = 1;
    }
    IntMat h = row_hnf(aug);
    std::vector<IntVec> kern;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < rows; ++j)
            if (h(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        IntVec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = h(i, rows + j);
        kern.push_back(v);
    }
    if (kern.empty()) return IntMat(n, 0);
    return hermite_basis(IntMat::from_columns(kern));
}

RatMat to_rat(const IntMat& m)
{
    return m.map([](const Int& z) { return Rat(z); });
}

std::size_t rank_int(const IntMat& m) { return rank_of(to_rat(m)); }

std::optional<IntVec> integral_coords(const IntMat& basis, const IntVec& v)
{
    RatMat b(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) b(i, 0) = v[i];
    auto sol = solve_linear(to_rat(basis), b);
    if (!sol.consistent) return std::nullopt;
    if (sol.rank != basis.cols()) throw std::invalid_argument("basis is not of full column rank");
    IntVec c(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        const Rat& x = sol.particular(j, 0);
        if (x.get_den() != 1) return std::nullopt;
        c[j] = x.get_num();
    }
    return c;
}

std::string Signature::str() const
{
    std::string s = "(" + std::to_string(pos) + "," + std::to_string(neg) + ")";
    if (zero) s += " rad " + std::to_string(zero);
    return s;
}

Signature signature(const RatMat& s0)
{
    if (!s0.square()) throw std::invalid_argument("signature of non-square matrix");
    RatMat s = s0;
    std::size_t n = s.rows();
    Signature sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && s(i, i) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // All remaining diagonal entries vanish: make one nonzero via x_i += x_j.
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && s(i, j) != 0) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) ++sig.zero;
                return sig;
            }
            for (std::size_t k = 0; k < n; ++k) s(a, k) += s(b, k);
            for (std::size_t k = 0; k < n; ++k) s(k, a) += s(k, b);
            p = a;
        }
        Rat d = s(p, p);
        if (d > 0)
            ++sig.pos;
        else
            ++sig.neg;
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || s(i, p) == 0) continue;
            Rat f = s(i, p) / d;
            for (std::size_t k = 0; k < n; ++k) s(i, k) -= f * s(p, k);
            for (std::size_t k = 0; k < n; ++k) s(k, i) -= f * s(k, p);
        }
    }
    return sig;
}

Signature signature(const IntMat& s) { return signature(to_rat(s)); }

Int bilinear(const IntMat& gram, const IntVec& x, const IntVec& y)
{
    Int total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < y.size(); ++j) row += gram(i, j) * y[j];
        total += x[i] * row;
    }
    return total;
}

IntVec mul(const IntMat& m, const IntVec& v) { return m * v; }

Int content(const IntVec& v)
{
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

namespace {

// P = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
struct Cholesky {
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> mu;
};

Cholesky decompose(const IntMat& P)
{
    const std::size_t n = P.rows();
    RatMat a = to_rat(P);
    Cholesky c;
    c.d.assign(n, Rat(0));
    c.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) <= 0) throw std::invalid_argument("form is not positive definite");
        c.d[i] = a(i, i);
        for (std::size_t j = i + 1; j < n; ++j) c.mu[i][j] = a(i, j) / a(i, i);
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                a(j, k) -= c.mu[i][j] * c.mu[i][k] * c.d[i];
                a(k, j) = a(j, k);
            }
    }
    return c;
}

}  // namespace

bool enumerate_short(const IntMat& P, const Int& bound, const std::function<bool(const IntVec&)>& visit)
{
    if (!P.square()) throw std::invalid_argument("form must be square");
    const std::size_t n = P.rows();
    if (n == 0 || bound < 0) return true;
    Cholesky ch = decompose(P);
    IntVec x(n, Int(0));
    std::vector<Rat> rem(n + 1);
    rem[n] = Rat(bound);
    bool keep_going = true;

    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        const std::size_t i = level - 1;
        Rat c = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (x[j] != 0) c -= ch.mu[i][j] * x[j];
        Rat t = rem[level] / ch.d[i];
        Int s = floor_sqrt(t);
        Int lo = floor_rat(c) - s - 1, hi = ceil_rat(c) + s + 1;
        for (Int v = lo; v <= hi && keep_going; ++v) {
            Rat diff = Rat(v) - c;
            Rat left = rem[level] - ch.d[i] * diff * diff;
            if (left < 0) continue;
            x[i] = v;
            rem[i] = left;
            if (i == 0) {
                if (!is_zero_vec(x) && !visit(x)) keep_going = false;
            } else {
                rec(i);
            }
        }
        x[i] = 0;
    };
    rec(n);
    return keep_going;
}

std::vector<IntVec> short_vectors(const IntMat& P, const Int& bound)
{
    std::vector<IntVec> out;
    enumerate_short(P, bound, [&](const IntVec& v) {
        out.push_back(v);
        return true;
    });
    return out;
}

Int coordinate_bound(const IntMat& P, const Int& bound)
{
    // |x_i|^2 <= bound * (P^-1)_ii
    const std::size_t n = P.rows();
    auto sol = solve_linear(to_rat(P), RatMat::identity(n));
    if (!sol.consistent || sol.rank != n) throw std::invalid_argument("form is singular");
    Int best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Int b = floor_sqrt(Rat(bound) * sol.particular(i, i)) + 1;
        if (b > best) best = b;
    }
    return best;
}

}  // namespace octica
