#pragma once

#include "milnor/lattice.hpp"

namespace milnor {

struct NotDefinite : std::runtime_error {
    explicit NotDefinite(const std::string& w) : std::runtime_error(w) {}
};
struct UnsupportedCase : std::runtime_error {
    explicit UnsupportedCase(const std::string& w) : std::runtime_error(w) {}
};
struct HypothesesFail : std::runtime_error {
    explicit HypothesesFail(const std::string& w) : std::runtime_error(w) {}
};
struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& w) : std::runtime_error(w) {}
};

/// All v in Z^n with v^T G v = target, for symmetric definite G
/// (positive or negative). Output in lexicographic order.
std::vector<std::vector<Int>> short_vectors(const IntMatrix& g, const Int& target);

/// Full automorphism group {X : X^T G X = G} of a bilinear form G whose
/// symmetrization G + G^T is definite. Lexicographically sorted.
std::vector<IntMatrix> definite_aut(const IntMatrix& g);

/// A unimodular X with X^T g1 X = g2, if one exists. Symmetrizations must
/// be definite.
std::optional<IntMatrix> gram_isometry(const IntMatrix& g1, const IntMatrix& g2);
bool gram_isometric(const IntMatrix& g1, const IntMatrix& g2);

/// Element of Z[xi], xi = exp(2 pi i / l), l in {3,4,5}. Power basis
/// 1, xi for l in {3,4}; 1, xi, xi^2, xi^3 for l = 5.
class CycNumber {
public:
    CycNumber() : l_(3), c_(2) {}
    CycNumber(long l, std::vector<Int> coeffs);
    static CycNumber integer(long l, const Int& v);
    static CycNumber xi(long l);
    static std::size_t dim(long l) { return l == 5 ? 4 : 2; }

    long l() const { return l_; }
    const std::vector<Int>& coeffs() const { return c_; }

    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator-() const;
    CycNumber conj() const;  // xi -> xi^{-1}
    bool is_zero() const;
    bool operator==(const CycNumber& o) const = default;
    bool operator<(const CycNumber& o) const;

    /// r * conj(r) when the result is a rational integer (l in {3,4}).
    Int norm2() const;

    std::string str() const;

private:
    long l_;
    std::vector<Int> c_;
};

/// Rank-2 Z[xi]-module with Gram [[2,-1],[-1,m]] extended sesquilinearly.
struct HermitianPair {
    long m;  // >= 2
    long l;  // in {3,4,5}; (m >= 3, l = 5) excluded
};

struct CycVec {
    CycNumber r1, r2;
    bool operator==(const CycVec& o) const = default;
    bool operator<(const CycVec& o) const;
};

/// Sesquilinear value L(r, s) = 2 r1 conj(s1) - r1 conj(s2) - r2 conj(s1) + m r2 conj(s2).
CycNumber hermitian_value(const HermitianPair& hp, const CycVec& r, const CycVec& s);

/// Complete list of r with L(r, r) = target; optionally excluding Z[xi] b1.
std::vector<CycVec> hermitian_solutions(const HermitianPair& hp, const Int& target,
                                        bool exclude_zxi_b1 = false);

struct CycMatrix {
    CycNumber a, b, c, d;  // columns are images of b1, b2
    bool operator<(const CycMatrix& o) const;
    bool operator==(const CycMatrix& o) const = default;
};

/// Aut(V_{Z[xi]}, L_C), assembled from the finite norm-solution sets.
std::vector<CycMatrix> zxi_aut(const HermitianPair& hp);

/// All automorphisms of the sublattice that commute with the restricted
/// monodromy and preserve the restricted Seifert form. Under the hypotheses
/// (simple spectrum, order chain, cyclic generator) this is {+-M^k}.
/// Returned matrices act in the sublattice basis.
std::vector<IntMatrix> commutant_units(const BilinearLattice& lat, const Sublattice& sub);

/// The order-chain condition on the set of eigenvalue orders: an ordering
/// m_1, ..., m_s with each m_i = m_{j(i)} / p^k, where a contiguous block
/// uses p = 2 with j(i) = i-1 and the rest use odd primes with any j(i) < i.
bool order_chain_holds(const std::vector<long>& orders);

/// All tuples (l_1, ..., l_r) with sum 0, pairwise positive L-values and
/// every (r-1)-subset a Z-basis, grouped up to a common sign. Coordinates
/// are in the basis of the rank r-1 negative definite Gram G.
std::vector<std::vector<std::vector<Int>>> recover_branches(const IntMatrix& g, long r);

}  // namespace milnor
