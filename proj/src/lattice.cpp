#include "milnor/lattice.hpp"

#include "json.hpp"

#include <sstream>

namespace milnor {

namespace {

// (-1)^k for possibly negative k
Int sign_pow(long k) { return (((k % 2) + 2) % 2 == 0) ? Int(1) : Int(-1); }

Int seifert_sign(long n) { return sign_pow((n + 1) * (n + 2) / 2); }
Int intersection_sign(long n) { return sign_pow(n * (n + 1) / 2); }

IntMatrix unipotent_inverse(const IntMatrix& s) {
    // S = I + N with N strictly upper; S^{-1} = I - N + N^2 - ...
    std::size_t mu = s.rows();
    IntMatrix n = s - IntMatrix::identity(mu);
    IntMatrix inv = IntMatrix::identity(mu);
    IntMatrix pw = IntMatrix::identity(mu);
    for (std::size_t k = 1; k < mu; ++k) {
        pw = pw * n;
        inv = (k % 2) ? inv - pw : inv + pw;
    }
    return inv;
}

}  // namespace

BilinearLattice BilinearLattice::from_stokes(IntMatrix s, long n) {
    if (!s.is_square()) throw NotUnipotentUpper("stokes matrix not square");
    for (std::size_t i = 0; i < s.rows(); ++i) {
        if (s(i, i) != 1) throw NotUnipotentUpper("diagonal entry != 1");
        for (std::size_t j = 0; j < i; ++j)
            if (s(i, j) != 0) throw NotUnipotentUpper("entry below diagonal");
    }
    BilinearLattice lat;
    lat.n_ = ((n % 4) + 4) % 4;
    IntMatrix st = s.transpose();
    lat.seifert_ = st * seifert_sign(n);
    lat.monodromy_ = (unipotent_inverse(s) * st) * sign_pow(n + 1);
    lat.intersection_ = (s + st * sign_pow(n)) * intersection_sign(n);
    lat.stokes_ = std::move(s);
    return lat;
}

IntMatrix stokes_from_monodromy(const IntMatrix& m, long n) {
    if (!m.is_square()) throw std::invalid_argument("monodromy not square");
    std::size_t mu = m.rows();
    Int eps = sign_pow(n + 1);
    // Unknowns: strictly upper entries of N, S = I + N.
    // Relation S M = eps S^T, entrywise (a,b):
    //   M(a,b) + sum_{k>a} N(a,k) M(k,b) = eps([a==b] + N(b,a) with b<a)
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = i + 1; j < mu; ++j) unknowns.emplace_back(i, j);
    auto idx = [&](std::size_t i, std::size_t j) {
        // position of (i,j), i<j, in the list above
        return i * mu - i * (i + 1) / 2 + (j - i - 1);
    };
    std::size_t nu = unknowns.size();
    RatMatrix a(mu * mu, nu), b(mu * mu, 1);
    for (std::size_t r = 0; r < mu; ++r) {
        for (std::size_t c = 0; c < mu; ++c) {
            std::size_t e = r * mu + c;
            for (std::size_t k = r + 1; k < mu; ++k) a(e, idx(r, k)) += Rat(m(k, c));
            if (c < r) a(e, idx(c, r)) -= Rat(eps);
            b(e, 0) = Rat(eps * ((r == c) ? 1 : 0) - m(r, c));
        }
    }
    auto x = solve_linear(a, b);
    if (!x || !x->is_integral()) throw NoIntegralStokes("no integral unipotent solution");
    IntMatrix s = IntMatrix::identity(mu);
    for (std::size_t t = 0; t < nu; ++t) s(unknowns[t].first, unknowns[t].second) = boost::multiprecision::numerator((*x)(t, 0));
    // Round trip guard; also catches the nu = 0 edge case.
    if (BilinearLattice::from_stokes(s, n).monodromy() != m)
        throw NoIntegralStokes("round trip failed");
    return s;
}

bool Sublattice::is_saturated() const {
    if (basis.rows() == 0) return true;
    auto s = snf(basis);
    std::size_t r = std::min(basis.rows(), basis.cols());
    for (std::size_t i = 0; i < r; ++i)
        if (s.d(i, i) != 1) return false;
    return true;
}

std::optional<std::vector<Int>> Sublattice::coords(const std::vector<Int>& v) const {
    IntMatrix rhs(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
    if (basis.rows() == 0) {
        for (auto& e : v)
            if (e != 0) return std::nullopt;
        return std::vector<Int>{};
    }
    auto x = solve_linear(basis.transpose(), rhs);
    if (!x || !x->is_integral()) return std::nullopt;
    std::vector<Int> out(basis.rows());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = boost::multiprecision::numerator((*x)(i, 0));
    return out;
}

Sublattice Sublattice::from_rows(const IntMatrix& rows) {
    auto h = hnf(rows).h;
    std::size_t nz = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) zero = false;
        if (!zero) nz = i + 1;
    }
    return Sublattice{h.submatrix(0, 0, nz, h.cols())};
}

Sublattice Sublattice::full(std::size_t mu) { return Sublattice{IntMatrix::identity(mu)}; }
Sublattice Sublattice::zero(std::size_t mu) { return Sublattice{IntMatrix(0, mu)}; }

IntMatrix picard_lefschetz(const BilinearLattice& lat, const std::vector<Int>& d) {
    std::size_t mu = lat.mu();
    Int sg = intersection_sign(lat.n());
    // row vector d^T G_I
    std::vector<Int> w(mu, 0);
    for (std::size_t j = 0; j < mu; ++j)
        for (std::size_t i = 0; i < mu; ++i) w[j] += d[i] * lat.intersection()(i, j);
    IntMatrix p = IntMatrix::identity(mu);
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j) p(i, j) -= sg * d[i] * w[j];
    return p;
}

BilinearLattice tensor(const BilinearLattice& f, const BilinearLattice& g) {
    return BilinearLattice::from_stokes(IntMatrix::kron(f.stokes(), g.stokes()),
                                        f.n() + g.n() + 1);
}

BilinearLattice stabilize(const BilinearLattice& lat) {
    return BilinearLattice::from_stokes(lat.stokes(), lat.n() + 1);
}

Sublattice eigenlattice(const BilinearLattice& lat, const IntPoly& p) {
    return Sublattice::from_rows(kernel_saturated(p.eval(lat.monodromy())));
}

Sublattice radical(const BilinearLattice& lat) {
    return Sublattice::from_rows(kernel_saturated(lat.intersection()));
}

IntMatrix restrict_gram(const IntMatrix& gram, const Sublattice& sub) {
    return sub.basis * gram * sub.basis.transpose();
}

IntMatrix restrict_gram(const BilinearLattice& lat, const Sublattice& sub, FormKind form) {
    return restrict_gram(form == FormKind::Seifert ? lat.seifert() : lat.intersection(), sub);
}

IntMatrix quotient_gram(const BilinearLattice& lat, const Sublattice& sub_small,
                        const Sublattice& sub_big, FormKind form, const Int& scale) {
    std::size_t rs = sub_small.rank(), rb = sub_big.rank();
    // small in big coordinates
    IntMatrix c(rs, rb);
    for (std::size_t i = 0; i < rs; ++i) {
        std::vector<Int> v(sub_small.basis.cols());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = sub_small.basis(i, j);
        auto x = sub_big.coords(v);
        if (!x) throw DoesNotDescend("sub_small not contained in sub_big");
        for (std::size_t j = 0; j < rb; ++j) c(i, j) = (*x)[j];
    }
    IntMatrix gb = restrict_gram(lat, sub_big, form) * scale;
    if (rs == rb) return IntMatrix(0, 0);  // zero quotient
    // descent: small pairs to zero with big on both sides
    if (!(c * gb).is_zero() || !(gb * c.transpose()).is_zero())
        throw DoesNotDescend("form does not vanish on sub_small against sub_big");
    // complement basis: non-pivot columns of the HNF of c
    auto h = hnf(c).h;
    std::vector<bool> pivot(rb, false);
    for (std::size_t i = 0; i < rs; ++i) {
        for (std::size_t j = 0; j < rb; ++j) {
            if (h(i, j) != 0) {
                if (h(i, j) != 1)
                    throw DoesNotDescend("sub_small not saturated in sub_big");
                pivot[j] = true;
                break;
            }
        }
    }
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < rb; ++j)
        if (!pivot[j]) comp.push_back(j);
    IntMatrix out(comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp.size(); ++j) out(i, j) = gb(comp[i], comp[j]);
    return out;
}

Sublattice lattice_intersect(const Sublattice& a, const Sublattice& b) {
    std::size_t mu = a.ambient_rank();
    if (a.rank() == 0 || b.rank() == 0) return Sublattice::zero(mu);
    // columns (x, y) with A^T x = B^T y; intersection vectors are A^T x
    IntMatrix at = a.basis.transpose(), bt = b.basis.transpose();
    IntMatrix c(mu, a.rank() + b.rank());
    for (std::size_t i = 0; i < mu; ++i) {
        for (std::size_t j = 0; j < a.rank(); ++j) c(i, j) = at(i, j);
        for (std::size_t j = 0; j < b.rank(); ++j) c(i, a.rank() + j) = -bt(i, j);
    }
    IntMatrix k = kernel_saturated(c);
    IntMatrix rows(k.rows(), mu);
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < mu; ++j) {
            Int s = 0;
            for (std::size_t t = 0; t < a.rank(); ++t) s += at(j, t) * k(i, t);
            rows(i, j) = s;
        }
    return Sublattice::from_rows(rows);
}

Sublattice lattice_sum(const Sublattice& a, const Sublattice& b) {
    return Sublattice::from_rows(IntMatrix::vstack(a.basis, b.basis));
}

std::optional<IntMatrix> restrict_matrix(const IntMatrix& g, const Sublattice& sub) {
    // g B^T = B^T R with R the restricted matrix (columns = images in sub coords)
    IntMatrix bt = sub.basis.transpose();
    auto r = solve_linear(bt, g * bt);
    if (!r || !r->is_integral()) return std::nullopt;
    return r->to_int();
}

std::string save_lattice(const BilinearLattice& lat) {
    nlohmann::json j;
    j["mu"] = lat.mu();
    j["n"] = lat.n();
    std::vector<std::string> entries;
    for (auto& e : lat.stokes().entries()) entries.push_back(e.str());
    j["stokes"] = entries;
    return j.dump(2);
}

BilinearLattice load_lattice(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    std::size_t mu = j.at("mu").get<std::size_t>();
    long n = j.at("n").get<long>();
    auto raw = j.at("stokes");
    if (raw.size() != mu * mu) throw std::invalid_argument("stokes entry count mismatch");
    IntMatrix s(mu, mu);
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t k = 0; k < mu; ++k) {
            auto& cell = raw[i * mu + k];
            s(i, k) = cell.is_string() ? Int(cell.get<std::string>()) : Int(cell.get<long long>());
        }
    return BilinearLattice::from_stokes(s, n);
}

}  // namespace milnor
