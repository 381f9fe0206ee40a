#include "milnor/exact.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <sstream>

namespace milnor {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int r = (a / g) * b;
    return r < 0 ? -r : r;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("IntMatrix: entry count mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

IntMatrix IntMatrix::operator*(const Int& c) const {
    IntMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * c;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    assert(cols_ == o.rows_);
    IntMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += x * o(k, j);
        }
    return m;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    assert(v.size() == cols_);
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return a_[k] < o.a_[k];
    return false;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    IntMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

Int IntMatrix::det() const {
    assert(is_square());
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix w(*this);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

IntMatrix IntMatrix::pow(const Int& k) const {
    assert(is_square() && k >= 0);
    IntMatrix r = identity(rows_);
    IntMatrix b(*this);
    Int e = k;
    while (e > 0) {
        if ((e & 1) != 0) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

IntMatrix IntMatrix::kron(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix m(x.rows_ * y.rows_, x.cols_ * y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t j = 0; j < x.cols_; ++j) {
            if (x(i, j) == 0) continue;
            for (std::size_t k = 0; k < y.rows_; ++k)
                for (std::size_t l = 0; l < y.cols_; ++l)
                    m(i * y.rows_ + k, j * y.cols_ + l) = x(i, j) * y(k, l);
        }
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.rows_ == 0) return bottom;
    if (bottom.rows_ == 0) return top;
    assert(top.cols_ == bottom.cols_);
    IntMatrix m(top.rows_ + bottom.rows_, top.cols_);
    for (std::size_t i = 0; i < top.rows_; ++i)
        for (std::size_t j = 0; j < top.cols_; ++j) m(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows_; ++i)
        for (std::size_t j = 0; j < top.cols_; ++j) m(top.rows_ + i, j) = bottom(i, j);
    return m;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

// ------------------------------------------------------------------ IntPoly

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::t_power(std::size_t k) {
    std::vector<Int> c(k + 1);
    c[k] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::t_minus(const Int& a) { return IntPoly({-a, 1}); }

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (!divisor.is_monic()) throw std::invalid_argument("divmod_monic: divisor not monic");
    std::vector<Int> rem = c_;
    long dd = divisor.degree();
    long dr = static_cast<long>(rem.size()) - 1;
    if (dr < dd) return {IntPoly(), *this};
    std::vector<Int> quot(dr - dd + 1);
    for (long k = dr; k >= dd; --k) {
        Int q = rem[k];
        if (q == 0) continue;
        quot[k - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeff(j);
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

IntMatrix IntPoly::eval(const IntMatrix& m) const {
    assert(m.is_square());
    IntMatrix r(m.rows(), m.rows());
    for (std::size_t k = c_.size(); k-- > 0;) {
        r = r * m;
        for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) += c_[k];
    }
    return r;
}

IntPoly IntPoly::substitute_minus_t() const {
    std::vector<Int> c = c_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return IntPoly(std::move(c));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        if (!first) os << (c_[k] > 0 ? " + " : " - ");
        else if (c_[k] < 0) os << "-";
        Int a = c_[k] < 0 ? Int(-c_[k]) : c_[k];
        if (a != 1 || k == 0) os << a;
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

long euler_phi(long m) {
    long r = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

const IntPoly& cyclotomic(long m) {
    static std::map<long, IntPoly> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<Int> tm(m + 1);
    tm[0] = -1;
    tm[m] = 1;
    IntPoly p((std::vector<Int>(tm)));  // t^m - 1
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        // recursion depth bounded by divisor chains; safe for the sizes here
        auto [q, r] = p.divmod_monic(cyclotomic(d));
        assert(r.is_zero());
        p = q;
    }
    return cache.emplace(m, std::move(p)).first->second;
}

// --------------------------------------------------------------- HNF / SNF

HnfResult hnf(const IntMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(nr);
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < nc; ++j) std::swap(h(a, j), h(b, j));
        for (std::size_t j = 0; j < nr; ++j) std::swap(u(a, j), u(b, j));
    };
    auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < nc; ++j) h(dst, j) += c * h(src, j);
        for (std::size_t j = 0; j < nr; ++j) u(dst, j) += c * u(src, j);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < nc; ++j) h(i, j) = -h(i, j);
        for (std::size_t j = 0; j < nr; ++j) u(i, j) = -u(i, j);
    };

    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        // Euclidean reduction within the column below row r
        for (;;) {
            std::size_t piv = nr;
            for (std::size_t i = r; i < nr; ++i) {
                if (h(i, col) == 0) continue;
                if (piv == nr || abs(h(i, col)) < abs(h(piv, col))) piv = i;
            }
            if (piv == nr) break;  // column is zero below r
            swap_rows(r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (h(i, col) == 0) continue;
                Int q = h(i, col) / h(r, col);
                // floor-like reduction is unnecessary; magnitude shrinks either way
                addmul_row(i, r, -q);
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, col) == 0) continue;
        if (h(r, col) < 0) negate_row(r);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q = h(i, col) / h(r, col);
            if (h(i, col) - q * h(r, col) < 0) q -= 1;  // floor division
            addmul_row(i, r, -q);
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(nr);
    IntMatrix v = IntMatrix::identity(nc);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < nc; ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t j = 0; j < nr; ++j) std::swap(u(a, j), u(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < nr; ++i) std::swap(d(i, a), d(i, b));
        for (std::size_t i = 0; i < nc; ++i) std::swap(v(i, a), v(i, b));
    };
    auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < nc; ++j) d(dst, j) += c * d(src, j);
        for (std::size_t j = 0; j < nr; ++j) u(dst, j) += c * u(src, j);
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < nr; ++i) d(i, dst) += c * d(i, src);
        for (std::size_t i = 0; i < nc; ++i) v(i, dst) += c * v(i, src);
    };

    std::size_t t = 0;
    std::size_t nmin = std::min(nr, nc);
    while (t < nmin) {
        // find nonzero entry of minimal magnitude in the trailing block
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (d(i, j) == 0) continue;
                if (pi == nr || abs(d(i, j)) < abs(d(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == nr) break;  // trailing block zero
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool dirty = false;
        for (std::size_t i = t + 1; i < nr; ++i) {
            if (d(i, t) == 0) continue;
            addmul_row(i, t, -Int(d(i, t) / d(t, t)));
            if (d(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
            if (d(t, j) == 0) continue;
            addmul_col(j, t, -Int(d(t, j) / d(t, t)));
            if (d(t, j) != 0) dirty = true;
        }
        if (dirty) continue;
        // pivot divides everything in its row/column now; enforce divisibility
        // into the rest of the block
        bool bad = false;
        for (std::size_t i = t + 1; i < nr && !bad; ++i)
            for (std::size_t j = t + 1; j < nc && !bad; ++j)
                if (d(i, j) % d(t, t) != 0) {
                    addmul_row(t, i, 1);
                    bad = true;
                }
        if (bad) continue;
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < nc; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < nr; ++j) u(t, j) = -u(t, j);
        }
        ++t;
    }
    return {std::move(d), std::move(u), std::move(v)};
}

IntMatrix kernel_saturated(const IntMatrix& m) {
    // integer kernel of M (columns as domain): rows u of U with u * M^T = 0
    HnfResult hr = hnf(m.transpose());
    std::size_t nzero = 0;
    for (std::size_t i = 0; i < hr.h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < hr.h.cols(); ++j)
            if (hr.h(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) ++nzero;
    }
    IntMatrix basis(nzero, m.cols());
    std::size_t k = 0;
    for (std::size_t i = 0; i < hr.h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < hr.h.cols(); ++j)
            if (hr.h(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) basis(k, j) = hr.u(i, j);
        ++k;
    }
    if (nzero == 0) return basis;
    IntMatrix canon = hnf(basis).h;
    return canon.submatrix(0, 0, nzero, m.cols());
}

IntPoly char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    std::size_t n = m.rows();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix w = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = m * w;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        assert(tr % Int(k) == 0);
        c[n - k] = -tr / Int(k);
        w = am;
        for (std::size_t i = 0; i < n; ++i) w(i, i) += c[n - k];
    }
    return IntPoly(std::move(c));
}

std::map<long, long> cyclotomic_factor(const IntPoly& p) {
    if (!p.is_monic()) throw std::invalid_argument("cyclotomic_factor: polynomial not monic");
    std::map<long, long> result;
    IntPoly rest = p;
    // phi(m) >= sqrt(m/2), so phi(m) <= deg forces m <= 2*deg^2
    long bound = 2 * std::max<long>(p.degree(), 1) * std::max<long>(p.degree(), 1);
    for (long m = 1; m <= bound && rest.degree() > 0; ++m) {
        if (euler_phi(m) > rest.degree()) continue;
        const IntPoly& phi = cyclotomic(m);
        for (;;) {
            auto [q, r] = rest.divmod_monic(phi);
            if (!r.is_zero()) break;
            ++result[m];
            rest = q;
            if (rest.degree() <= 0) break;
        }
    }
    if (rest.degree() > 0)
        throw NotQuasiunipotent("non-cyclotomic factor remains: " + rest.str());
    return result;
}

std::optional<long> matrix_order(const IntMatrix& m, long cap) {
    if (!m.is_square()) throw std::invalid_argument("matrix_order: matrix not square");
    std::map<long, long> fac;
    try {
        fac = cyclotomic_factor(char_poly(m));
    } catch (const NotQuasiunipotent&) {
        return std::nullopt;
    }
    Int e = 1;
    for (auto& [mm, mult] : fac) e = lcm_int(e, mm);
    if (e > cap) return std::nullopt;
    if (!m.pow(e).is_identity()) return std::nullopt;  // Jordan block
    long eo = static_cast<long>(e);
    for (long k = 1; k <= eo; ++k)
        if (eo % k == 0 && m.pow(k).is_identity()) return k;
    return eo;
}

// ------------------------------------------------------------ rational part

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
}

bool RatMatrix::is_integral() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const Rat& x) { return denominator(x) == 1; });
}

IntMatrix RatMatrix::to_int() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& x = (*this)(i, j);
            if (denominator(x) != 1) throw std::invalid_argument("to_int: non-integral entry");
            m(i, j) = numerator(x);
        }
    return m;
}

std::optional<RatMatrix> solve_linear(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: shape mismatch");
    std::size_t nr = a.rows(), nc = a.cols(), nb = b.cols();
    RatMatrix w(nr, nc + nb);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) w(i, j) = a(i, j);
        for (std::size_t j = 0; j < nb; ++j) w(i, nc + j) = b(i, j);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t piv = r;
        while (piv < nr && w(piv, col) == 0) ++piv;
        if (piv == nr) continue;
        for (std::size_t j = 0; j < nc + nb; ++j) std::swap(w(r, j), w(piv, j));
        Rat inv = w(r, col);
        for (std::size_t j = col; j < nc + nb; ++j) w(r, j) /= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || w(i, col) == 0) continue;
            Rat f = w(i, col);
            for (std::size_t j = col; j < nc + nb; ++j) w(i, j) -= f * w(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    if (pivot_col.size() != nc) return std::nullopt;  // not full column rank
    // consistency: rows beyond rank must be zero on the RHS too
    for (std::size_t i = r; i < nr; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            if (w(i, nc + j) != 0) return std::nullopt;
    RatMatrix x(nc, nb);
    for (std::size_t k = 0; k < nc; ++k)
        for (std::size_t j = 0; j < nb; ++j) x(pivot_col[k], j) = w(k, nc + j);
    return x;
}

std::optional<RatMatrix> solve_linear(const IntMatrix& a, const IntMatrix& b) {
    return solve_linear(RatMatrix(a), RatMatrix(b));
}

std::size_t rank(const IntMatrix& m) {
    HnfResult hr = hnf(m);
    std::size_t r = 0;
    for (std::size_t i = 0; i < hr.h.rows(); ++i)
        for (std::size_t j = 0; j < hr.h.cols(); ++j)
            if (hr.h(i, j) != 0) {
                ++r;
                break;
            }
    return r;
}

}  // namespace milnor
