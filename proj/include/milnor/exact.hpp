#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace milnor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense integer matrix, row-major, exact arithmetic throughout.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return a_; }

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix operator*(const Int& c) const;

    std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v (column)

    bool operator==(const IntMatrix& o) const = default;
    // lexicographic on (rows, cols, entries); used for canonical orderings
    bool operator<(const IntMatrix& o) const;

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix row(std::size_t i) const;
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    /// Exact determinant (Bareiss fraction-free elimination).
    Int det() const;

    IntMatrix pow(const Int& k) const;  // k >= 0

    /// Kronecker product in lexicographic index order.
    static IntMatrix kron(const IntMatrix& x, const IntMatrix& y);

    /// Vertical stack (same column count).
    static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Integer polynomial, coefficients lowest degree first; leading coeff nonzero
/// unless the zero polynomial.
class IntPoly {
public:
    IntPoly() {}
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPoly constant(const Int& c) { return IntPoly({c}); }
    static IntPoly t_power(std::size_t k);  // t^k
    static IntPoly t_minus(const Int& a);   // t - a

    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? -1 : static_cast<long>(c_.size()) - 1; }
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const = default;

    /// Division by a monic divisor; returns (quotient, remainder), exact over Z.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

    Int eval(const Int& x) const;
    IntMatrix eval(const IntMatrix& m) const;  // Horner
    IntPoly substitute_minus_t() const;        // p(t) -> p(-t)

    std::string str() const;

private:
    void normalize();
    std::vector<Int> c_;
};

/// m-th cyclotomic polynomial (cached).
const IntPoly& cyclotomic(long m);
long euler_phi(long m);

struct NotQuasiunipotent : std::runtime_error {
    explicit NotQuasiunipotent(const std::string& what) : std::runtime_error(what) {}
};

struct HnfResult {
    IntMatrix h;  // canonical row Hermite form, H = U * M
    IntMatrix u;  // unimodular
};

/// Row-style HNF: pivots positive, entries above each pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
    IntMatrix d;  // diagonal, d1 | d2 | ..., di >= 0, D = U * M * V
    IntMatrix u, v;
};

SnfResult snf(const IntMatrix& m);

/// Basis (as rows, HNF-canonical) of the saturated integer kernel
/// {v in Z^cols : M v = 0}. May have zero rows.
IntMatrix kernel_saturated(const IntMatrix& m);

/// Exact characteristic polynomial det(t I - M), monic (Faddeev-LeVerrier,
/// all intermediate divisions exact over Z).
IntPoly char_poly(const IntMatrix& m);

/// Factor a monic polynomial as a product of cyclotomics Phi_m.
/// Throws NotQuasiunipotent if a nontrivial non-cyclotomic factor remains.
std::map<long, long> cyclotomic_factor(const IntPoly& p);

/// Least k >= 1 with M^k = I, or nullopt ("infinite") if M has an eigenvalue
/// that is not a root of unity, has a Jordan block, or the order exceeds cap.
std::optional<long> matrix_order(const IntMatrix& m, long cap = 1000000);

/// Minimal dense rational matrix used where exact linear solving over Q is needed.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    explicit RatMatrix(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// All entries integral?
    bool is_integral() const;
    /// Round-trip to IntMatrix; requires is_integral().
    IntMatrix to_int() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Solve A X = B over Q. Returns X if a solution exists and is unique
/// (A has full column rank); nullopt otherwise.
std::optional<RatMatrix> solve_linear(const RatMatrix& a, const RatMatrix& b);
std::optional<RatMatrix> solve_linear(const IntMatrix& a, const IntMatrix& b);

/// Matrix rank over Q.
std::size_t rank(const IntMatrix& m);

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);

}  // namespace milnor
