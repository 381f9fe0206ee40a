#include "milnor/enumeration.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace milnor {

namespace {

// largest integer s >= 0 with s^2 <= x (x >= 0 rational)
Int sqrt_floor(const Rat& x) {
    Int fl = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
    Int s = boost::multiprecision::sqrt(fl);
    while (Rat((s + 1) * (s + 1)) <= x) ++s;
    while (s > 0 && Rat(s * s) > x) --s;
    return s;
}

// definiteness sign via leading principal minors: +1 pos def, -1 neg def, 0 neither
int definiteness(const IntMatrix& g) {
    if (!g.is_square()) return 0;
    std::size_t n = g.rows();
    int sign = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        Int d = g.submatrix(0, 0, k, k).det();
        if (d == 0) return 0;
        bool neg = d < 0;
        bool expect_neg = (k % 2 == 1) ? true : false;
        if (k == 1) sign = neg ? -1 : 1;
        if (sign == 1 && neg) return 0;
        if (sign == -1 && neg != expect_neg) return 0;
    }
    return sign;
}

}  // namespace

std::vector<std::vector<Int>> short_vectors(const IntMatrix& g, const Int& target) {
    if (!g.is_square()) throw NotDefinite("gram matrix not square");
    std::size_t n = g.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g(i, j) != g(j, i)) throw NotDefinite("gram matrix not symmetric");
    int sign = definiteness(g);
    if (sign == 0) throw NotDefinite("gram matrix not definite");
    IntMatrix gp = (sign > 0) ? g : -g;
    Int t = (sign > 0) ? target : -target;
    std::vector<std::vector<Int>> out;
    if (t < 0) return out;
    if (t == 0) return out;  // only the zero vector, which is not listed

    // gp = R^T D R with R unit upper triangular, D positive diagonal (exact)
    std::size_t dim = n;
    std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) a[i][j] = Rat(gp(i, j));
    std::vector<Rat> d(dim);
    std::vector<std::vector<Rat>> r(dim, std::vector<Rat>(dim, Rat(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        d[i] = a[i][i];
        r[i][i] = 1;
        for (std::size_t j = i + 1; j < dim; ++j) r[i][j] = a[i][j] / d[i];
        for (std::size_t k = i + 1; k < dim; ++k)
            for (std::size_t j = i + 1; j < dim; ++j) a[k][j] -= a[k][i] * r[i][j];
    }

    std::vector<Int> v(dim, 0);
    // recurse from the last coordinate; offsets o_i = sum_{j>i} r_ij v_j
    auto rec = [&](auto&& self, std::size_t level, const Rat& budget) -> void {
        std::size_t i = level - 1;
        Rat off = 0;
        for (std::size_t j = i + 1; j < dim; ++j) off += r[i][j] * Rat(v[j]);
        Rat cap = budget / d[i];
        Int s = sqrt_floor(cap);
        // v_i in [ceil(-sqrt(cap)-off), floor(sqrt(cap)-off)]; widen by 1 and
        // filter exactly below
        Int lo_num = -s - 2, hi_num = s + 2;
        // shift by -off (rational): iterate integers in the widened window
        Int lo = lo_num - boost::multiprecision::numerator(off) /
                              boost::multiprecision::denominator(off);
        Int hi = hi_num - boost::multiprecision::numerator(off) /
                              boost::multiprecision::denominator(off);
        for (Int x = lo; x <= hi; ++x) {
            Rat term = d[i] * (Rat(x) + off) * (Rat(x) + off);
            if (term > budget) continue;
            v[i] = x;
            if (i == 0) {
                // exact check of the full value
                Rat total = 0;
                for (std::size_t k = 0; k < dim; ++k) {
                    Rat o2 = 0;
                    for (std::size_t j = k + 1; j < dim; ++j) o2 += r[k][j] * Rat(v[j]);
                    total += d[k] * (Rat(v[k]) + o2) * (Rat(v[k]) + o2);
                }
                if (total == Rat(t)) out.push_back(v);
            } else {
                self(self, i, budget - term);
            }
        }
        v[i] = 0;
    };
    rec(rec, dim, Rat(t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// backtracking search for all X with X^T g1 X = g2; bilinear forms with
// definite symmetrization
std::vector<IntMatrix> isometries(const IntMatrix& g1, const IntMatrix& g2, bool first_only) {
    std::size_t n = g1.rows();
    if (g2.rows() != n) return {};
    IntMatrix s1 = g1 + g1.transpose();
    if (definiteness(s1) == 0) throw NotDefinite("symmetrized form not definite");
    // candidate images of basis vector j: vectors with v^T s1 v = 2 g2(j,j)
    std::vector<std::vector<std::vector<Int>>> cands(n);
    for (std::size_t j = 0; j < n; ++j) cands[j] = short_vectors(s1, 2 * g2(j, j));
    std::vector<IntMatrix> out;
    std::vector<std::vector<Int>> cols(n);
    auto pair_val = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        Int v = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) v += x[i] * g1(i, k) * y[k];
        return v;
    };
    auto rec = [&](auto&& self, std::size_t j) -> bool {
        if (j == n) {
            IntMatrix x(n, n);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t i = 0; i < n; ++i) x(i, c) = cols[c][i];
            Int dx = x.det();
            if (dx != 1 && dx != -1) return false;
            out.push_back(x);
            return first_only;
        }
        for (auto& c : cands[j]) {
            bool ok = pair_val(c, c) == g2(j, j);
            for (std::size_t i = 0; i < j && ok; ++i) {
                if (pair_val(cols[i], c) != g2(i, j)) ok = false;
                if (ok && pair_val(c, cols[i]) != g2(j, i)) ok = false;
            }
            if (!ok) continue;
            cols[j] = c;
            if (self(self, j + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<IntMatrix> definite_aut(const IntMatrix& g) { return isometries(g, g, false); }

std::optional<IntMatrix> gram_isometry(const IntMatrix& g1, const IntMatrix& g2) {
    if (g1.rows() != g2.rows()) return std::nullopt;
    auto found = isometries(g1, g2, true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

bool gram_isometric(const IntMatrix& g1, const IntMatrix& g2) {
    return gram_isometry(g1, g2).has_value();
}

// ------------------------------------------------------------- CycNumber

CycNumber::CycNumber(long l, std::vector<Int> coeffs) : l_(l), c_(std::move(coeffs)) {
    if (l != 3 && l != 4 && l != 5) throw UnsupportedCase("root order must be 3, 4 or 5");
    c_.resize(dim(l));
}

CycNumber CycNumber::integer(long l, const Int& v) {
    std::vector<Int> c(dim(l));
    c[0] = v;
    return CycNumber(l, c);
}

CycNumber CycNumber::xi(long l) {
    std::vector<Int> c(dim(l));
    c[1] = 1;
    return CycNumber(l, c);
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] + o.c_[i];
    return CycNumber(l_, c);
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] - o.c_[i];
    return CycNumber(l_, c);
}

CycNumber CycNumber::operator-() const {
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return CycNumber(l_, c);
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    std::size_t d = c_.size();
    std::vector<Int> raw(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) raw[i + j] += c_[i] * o.c_[j];
    // reduce powers xi^k, k >= d, by the minimal polynomial
    std::vector<Int> c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = raw[i];
    for (std::size_t k = 2 * d - 2; k >= d; --k) {
        Int coef = raw[k];
        if (coef == 0) continue;
        raw[k] = 0;
        if (l_ == 3) {
            // xi^2 = -1 - xi
            raw[k - 2] -= coef;
            raw[k - 1] -= coef;
        } else if (l_ == 4) {
            // xi^2 = -1
            raw[k - 2] -= coef;
        } else {
            // xi^4 = -1 - xi - xi^2 - xi^3
            for (std::size_t j = 1; j <= 4; ++j) raw[k - j] -= coef;
        }
        if (k == d) break;
    }
    for (std::size_t i = 0; i < d; ++i) c[i] = raw[i];
    return CycNumber(l_, c);
}

CycNumber CycNumber::conj() const {
    std::size_t d = c_.size();
    // xi -> xi^{l-1}; expand each power in the basis
    std::vector<Int> c(d);
    if (l_ == 3) {
        // conj(xi) = xi^2 = -1 - xi
        c[0] = c_[0] - c_[1];
        c[1] = -c_[1];
    } else if (l_ == 4) {
        c[0] = c_[0];
        c[1] = -c_[1];
    } else {
        // conj(xi^k) = xi^{5-k}, with xi^4 = -1 - xi - xi^2 - xi^3
        c[0] = c_[0] - c_[1];
        c[1] = -c_[1];
        c[2] = c_[3] - c_[1];
        c[3] = c_[2] - c_[1];
    }
    return CycNumber(l_, c);
}

bool CycNumber::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNumber::operator<(const CycNumber& o) const {
    if (l_ != o.l_) return l_ < o.l_;
    return c_ < o.c_;
}

Int CycNumber::norm2() const {
    CycNumber n = (*this) * conj();
    for (std::size_t i = 1; i < n.c_.size(); ++i)
        if (n.c_[i] != 0) throw UnsupportedCase("norm is not a rational integer");
    return n.c_[0];
}

std::string CycNumber::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ")";
    return os.str();
}

bool CycVec::operator<(const CycVec& o) const {
    if (!(r1 == o.r1)) return r1 < o.r1;
    return r2 < o.r2;
}

CycNumber hermitian_value(const HermitianPair& hp, const CycVec& r, const CycVec& s) {
    CycNumber s1c = s.r1.conj(), s2c = s.r2.conj();
    CycNumber two = CycNumber::integer(hp.l, 2), mm = CycNumber::integer(hp.l, hp.m);
    return two * r.r1 * s1c - r.r1 * s2c - r.r2 * s1c + mm * r.r2 * s2c;
}

namespace {

void check_supported(const HermitianPair& hp) {
    if (hp.m < 2) throw UnsupportedCase("m must be >= 2");
    if (hp.l != 3 && hp.l != 4 && hp.l != 5) throw UnsupportedCase("l must be 3, 4 or 5");
    if (hp.l == 5 && hp.m >= 3) throw UnsupportedCase("(m >= 3, l = 5) is excluded");
}

// all z in Z[xi] (l in {3,4}) with z conj(z) = n
std::vector<CycNumber> fixed_norm_elements(long l, const Int& n) {
    std::vector<CycNumber> out;
    if (n < 0) return out;
    // norm form: a^2 - ab + b^2 (l=3), a^2 + b^2 (l=4); both >= (a^2+b^2)/2
    Int bound = sqrt_floor(Rat(2 * n));
    for (Int a = -bound; a <= bound; ++a)
        for (Int b = -bound; b <= bound; ++b) {
            Int v = (l == 3) ? Int(a * a - a * b + b * b) : Int(a * a + b * b);
            if (v == n) out.push_back(CycNumber(l, {a, b}));
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Gram of 4 * A1 from (4.18) on Z^8 coordinates (r_10..r_13, r_20..r_23)
IntMatrix z8_gram() {
    // A1(z) = (1/4)[ sum_j r1j^2 + r2j^2 + (r1j - r2j)^2
    //              + sum_{j<k} (r1j-r1k-r2j+r2k)^2 + (r1j-r1k)^2 + (r2j-r2k)^2 ]
    IntMatrix q(8, 8);  // gram of 4*A1: z^T q z = 4 A1(z)
    auto add_sq = [&](const std::vector<Int>& lin) {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) q(i, j) += lin[i] * lin[j];
    };
    for (int j = 0; j < 4; ++j) {
        std::vector<Int> a(8, 0), b(8, 0), c(8, 0);
        a[j] = 1;
        b[4 + j] = 1;
        c[j] = 1;
        c[4 + j] = -1;
        add_sq(a);
        add_sq(b);
        add_sq(c);
    }
    for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) {
            std::vector<Int> a(8, 0), b(8, 0), c(8, 0);
            a[j] = 1;
            a[k] = -1;
            a[4 + j] = -1;
            a[4 + k] = 1;
            b[j] = 1;
            b[k] = -1;
            c[4 + j] = 1;
            c[4 + k] = -1;
            add_sq(a);
            add_sq(b);
            add_sq(c);
        }
    return q;
}

}  // namespace

std::vector<CycVec> hermitian_solutions(const HermitianPair& hp, const Int& target,
                                        bool exclude_zxi_b1) {
    check_supported(hp);
    std::vector<CycVec> out;
    if (hp.l == 3 || hp.l == 4) {
        // |r1|^2 + |r1 - r2|^2 + (m-1)|r2|^2 = target, all three nonnegative integers
        for (Int n1 = 0; n1 <= target; ++n1)
            for (Int n2 = 0; n1 + n2 <= target; ++n2) {
                Int rem = target - n1 - n2;
                if (rem % (hp.m - 1) != 0) continue;
                Int n3 = rem / (hp.m - 1);
                auto r1s = fixed_norm_elements(hp.l, n1);
                auto r2s = fixed_norm_elements(hp.l, n3);
                for (auto& r1 : r1s)
                    for (auto& r2 : r2s) {
                        if ((r1 - r2).norm2() != n2) continue;
                        if (exclude_zxi_b1 && r2.is_zero()) continue;
                        out.push_back(CycVec{r1, r2});
                    }
            }
    } else {
        // (m, l) = (2, 5): enumerate the positive Z^8 form, then keep exact
        // solutions of L(r, r) = target
        auto vs = short_vectors(z8_gram(), 4 * target);
        CycNumber t = CycNumber::integer(5, target);
        for (auto& z : vs) {
            CycVec r{CycNumber(5, {z[0], z[1], z[2], z[3]}),
                     CycNumber(5, {z[4], z[5], z[6], z[7]})};
            if (!(hermitian_value(hp, r, r) == t)) continue;
            if (exclude_zxi_b1 && r.r2.is_zero()) continue;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool CycMatrix::operator<(const CycMatrix& o) const {
    if (!(a == o.a)) return a < o.a;
    if (!(b == o.b)) return b < o.b;
    if (!(c == o.c)) return c < o.c;
    return d < o.d;
}

std::vector<CycMatrix> zxi_aut(const HermitianPair& hp) {
    check_supported(hp);
    auto col1 = hermitian_solutions(hp, 2);
    auto col2 = hermitian_solutions(hp, hp.m);
    CycNumber minus1 = CycNumber::integer(hp.l, -1);
    std::vector<CycMatrix> out;
    for (auto& x : col1)
        for (auto& y : col2) {
            if (!(hermitian_value(hp, x, y) == minus1)) continue;
            out.push_back(CycMatrix{x.r1, y.r1, x.r2, y.r2});
        }
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------- commutant units

bool order_chain_holds(const std::vector<long>& orders) {
    std::vector<long> ord = orders;
    std::sort(ord.begin(), ord.end());
    std::size_t s = ord.size();
    if (s == 0) return false;
    if (s == 1) return true;
    auto prime_power_ratio = [](long big, long small) -> long {
        // returns p if big/small is a power of the prime p, else 0
        if (small == 0 || big % small != 0) return 0;
        long q = big / small;
        if (q <= 1) return 0;
        for (long p = 2; p * p <= q; ++p) {
            if (q % p == 0) {
                while (q % p == 0) q /= p;
                return (q == 1) ? p : 0;
            }
        }
        return q;  // q itself prime
    };
    std::vector<std::size_t> perm(s);
    for (std::size_t i = 0; i < s; ++i) perm[i] = i;
    do {
        std::vector<long> m(s);
        for (std::size_t i = 0; i < s; ++i) m[i] = ord[perm[i]];
        for (std::size_t i1 = 0; i1 <= s; ++i1) {
            for (std::size_t i2 = i1; i2 <= s; ++i2) {
                bool ok = true;
                for (std::size_t i = 1; i < s && ok; ++i) {
                    if (i1 + 1 <= i + 1 && i + 1 <= i2) {
                        // 1-based index in [i1+1, i2]: p = 2, j(i) = i-1
                        ok = prime_power_ratio(m[i - 1], m[i]) == 2;
                    } else {
                        bool found = false;
                        for (std::size_t j = 0; j < i && !found; ++j) {
                            long p = prime_power_ratio(m[j], m[i]);
                            if (p >= 3) found = true;
                        }
                        ok = found;
                    }
                }
                if (ok) return true;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

// deterministic search for a vector whose monodromy orbit is a Z-basis
std::optional<IntMatrix> cyclic_basis(const IntMatrix& m) {
    std::size_t n = m.rows();
    // candidates: bounded-coefficient vectors ordered by max-norm, then lex
    for (long bound = 1; bound <= 2; ++bound) {
        std::vector<long> v(n, -bound);
        while (true) {
            bool active = false;
            for (auto x : v)
                if (x == bound || x == -bound) active = true;  // new shell only
            if (active) {
                IntMatrix q(n, n);
                std::vector<Int> col(n);
                for (std::size_t i = 0; i < n; ++i) col[i] = v[i];
                for (std::size_t j = 0; j < n; ++j) {
                    for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i];
                    col = m.apply(col);
                }
                Int dq = q.det();
                if (dq == 1 || dq == -1) return q;
            }
            std::size_t k = 0;
            while (k < n && v[k] == bound) v[k++] = -bound;
            if (k == n) break;
            ++v[k];
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<IntMatrix> commutant_units(const BilinearLattice& lat, const Sublattice& sub) {
    auto mr = restrict_matrix(lat.monodromy(), sub);
    if (!mr) throw HypothesesFail("sublattice not monodromy invariant");
    IntMatrix m = *mr;
    IntMatrix lg = restrict_gram(lat, sub, FormKind::Seifert);
    std::size_t n = m.rows();
    if (lg.det() == 0) {
        // degeneracy is tolerable only on the monodromy-fixed line: there the
        // determinant constraint still pins the eigenvalue to +-1
        IntMatrix rk = kernel_saturated(lg);
        IntMatrix lk = kernel_saturated(lg.transpose());
        if (rk.rows() > 1 || lk.rows() > 1)
            throw HypothesesFail("restricted Seifert form too degenerate");
        for (auto* k : {&rk, &lk}) {
            std::vector<Int> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = (*k)(0, j);
            if (m.apply(v) != v)
                throw HypothesesFail("Seifert radical not monodromy fixed");
        }
    }

    std::map<long, long> fac;
    try {
        fac = cyclotomic_factor(char_poly(m));
    } catch (const NotQuasiunipotent&) {
        throw HypothesesFail("restricted monodromy not quasiunipotent");
    }
    std::vector<long> orders;
    for (auto& [mm, e] : fac) {
        if (e != 1) throw HypothesesFail("eigenvalue of multiplicity > 1");
        orders.push_back(mm);
    }
    if (!order_chain_holds(orders)) throw HypothesesFail("order chain condition fails");
    auto ord = matrix_order(m);
    if (!ord) throw HypothesesFail("restricted monodromy has infinite order");

    auto qopt = cyclic_basis(m);
    if (!qopt) throw HypothesesFail("no cyclic generator found");
    IntMatrix q = *qopt;
    IntMatrix qinv = solve_linear(q, IntMatrix::identity(n))->to_int();
    IntMatrix c = qinv * m * q;          // companion-type matrix
    IntMatrix lgc = q.transpose() * lg * q;

    // trace form T(j,k) = trace(M^{j-k}); positive definite for simple
    // spectrum on the unit circle
    IntMatrix pw = IntMatrix::identity(n);
    std::vector<Int> trs;
    for (long k = 0; k < *ord; ++k) {
        Int t = 0;
        for (std::size_t i = 0; i < n; ++i) t += pw(i, i);
        trs.push_back(t);
        pw = pw * m;
    }
    auto trace_pow = [&](long k) {
        long kk = ((k % *ord) + *ord) % *ord;
        return trs[kk];
    };
    IntMatrix tform(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) tform(j, k) = trace_pow((long)j - (long)k);

    auto us = short_vectors(tform, Int(n));
    std::vector<IntMatrix> out;
    std::vector<IntMatrix> cpows;
    {
        IntMatrix p = IntMatrix::identity(n);
        for (std::size_t k = 0; k < n; ++k) {
            cpows.push_back(p);
            p = p * c;
        }
    }
    for (auto& u : us) {
        IntMatrix g(n, n);
        for (std::size_t k = 0; k < n; ++k) g = g + cpows[k] * u[k];
        Int dg = g.det();
        if (dg != 1 && dg != -1) continue;
        if (g.transpose() * lgc * g != lgc) continue;
        out.push_back(q * g * qinv);  // back to the sublattice basis
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------- branch recovery

std::vector<std::vector<std::vector<Int>>> recover_branches(const IntMatrix& g, long r) {
    if (definiteness(g) != -1) throw NotDefinite("branch Gram must be negative definite");
    std::size_t n = g.rows();
    if ((long)n != r - 1) throw std::invalid_argument("rank must be r - 1");
    Int det_neg = (-g).det();
    // norm bound: -L(l_i, l_i) <= 2 det(-G) + r covers all unimodular-corank
    // configurations at the ranks used here
    Int nb = 2 * det_neg + r;
    std::vector<std::vector<Int>> cands;
    for (Int t = 1; t <= nb; ++t) {
        auto vs = short_vectors(g, -t);
        cands.insert(cands.end(), vs.begin(), vs.end());
    }
    auto lval = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        Int v = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v += x[i] * g(i, j) * y[j];
        return v;
    };
    auto unimodular_subset = [&](const std::vector<std::vector<Int>>& tup, std::size_t skip) {
        IntMatrix m(n, n);
        std::size_t row = 0;
        for (std::size_t i = 0; i < tup.size(); ++i) {
            if (i == skip) continue;
            for (std::size_t j = 0; j < n; ++j) m(row, j) = tup[i][j];
            ++row;
        }
        Int d = m.det();
        return d == 1 || d == -1;
    };

    std::set<std::vector<std::vector<Int>>> seen;
    std::vector<std::vector<std::vector<Int>>> out;
    // choose l_1 .. l_{r-1} from candidates, l_r = -(sum)
    std::vector<std::size_t> idx(r - 1, 0);
    std::vector<std::vector<Int>> tup(r);
    auto emit = [&]() {
        // canonical representative up to common sign and ordering
        auto a = tup;
        std::sort(a.begin(), a.end());
        auto b = tup;
        for (auto& v : b)
            for (auto& x : v) x = -x;
        std::sort(b.begin(), b.end());
        auto rep = std::min(a, b);
        if (seen.insert(rep).second) out.push_back(rep);
    };
    auto rec = [&](auto&& self, long i) -> void {
        if (i == r - 1) {
            std::vector<Int> last(n, 0);
            for (long k = 0; k < r - 1; ++k)
                for (std::size_t j = 0; j < n; ++j) last[j] -= tup[k][j];
            bool zero = true;
            for (auto& x : last)
                if (x != 0) zero = false;
            if (zero) return;
            tup[r - 1] = last;
            for (long a = 0; a < r; ++a)
                for (long b = a + 1; b < r; ++b)
                    if (lval(tup[a], tup[b]) <= 0) return;
            for (long s = 0; s < r; ++s)
                if (!unimodular_subset(tup, s)) return;
            emit();
            return;
        }
        for (auto& c : cands) {
            tup[i] = c;
            bool ok = true;
            for (long k = 0; k < i && ok; ++k)
                if (lval(tup[k], c) <= 0) ok = false;
            if (ok) self(self, i + 1);
        }
    };
    rec(rec, 0);
    if (out.empty()) throw NoSolution("no branch system found");
    return out;
}

}  // namespace milnor
