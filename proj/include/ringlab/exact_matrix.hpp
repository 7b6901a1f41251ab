#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringlab {

using rational = boost::multiprecision::cpp_rational;

// Exact k-by-k matrix over the rationals.  Entries stay normalized (reduced,
// positive denominator) by construction of cpp_rational.  No tolerances
// exist anywhere in this backend.
class RationalMatrix {
public:
    RationalMatrix() = default;                 // 0x0 placeholder
    explicit RationalMatrix(std::uint32_t k);   // k x k zero matrix
    static RationalMatrix identity(std::uint32_t k);
    // Literal "[[p/q,...],...]" with optional "/q" and sign; must be square.
    static RationalMatrix parse(const std::string& text);

    std::uint32_t dim() const { return k_; }
    rational& at(std::uint32_t i, std::uint32_t j) { return e_[i * k_ + j]; }
    const rational& at(std::uint32_t i, std::uint32_t j) const {
        return e_[i * k_ + j];
    }

    bool is_zero() const;
    bool is_identity() const;
    std::string to_string() const;  // same literal syntax as parse

    friend bool operator==(const RationalMatrix&,
                           const RationalMatrix&) = default;

private:
    std::uint32_t k_ = 0;
    std::vector<rational> e_;
};

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_sub(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_scale(const rational& c, const RationalMatrix& a);
RationalMatrix mat_pow(const RationalMatrix& a, std::uint64_t n);
// Throws std::domain_error on a singular matrix; the optional variant
// reports singularity as nullopt.
RationalMatrix mat_inverse(const RationalMatrix& a);
std::optional<RationalMatrix> mat_inverse_opt(const RationalMatrix& a);

// Smallest e >= 1 with A^e = 0, or nullopt; A^k = 0 decides (k = dimension).
std::optional<std::uint32_t> is_nilpotent_matrix(const RationalMatrix& a);

// Dense exact polynomial; coeffs[i] multiplies t^i; no trailing zeros.
class PolynomialExact {
public:
    PolynomialExact() = default;  // zero polynomial
    explicit PolynomialExact(std::vector<rational> coeffs);
    static PolynomialExact t_power(std::uint32_t s);  // t^s

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    rational coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : rational(0);
    }

    RationalMatrix evaluate(const RationalMatrix& A) const;  // Horner
    std::string to_string() const;  // e.g. "t^2+1", "t^3-1/2t+3"

    friend bool operator==(const PolynomialExact&,
                           const PolynomialExact&) = default;

private:
    std::vector<rational> c_;
};

PolynomialExact poly_add(const PolynomialExact& f, const PolynomialExact& g);
PolynomialExact poly_sub(const PolynomialExact& f, const PolynomialExact& g);
PolynomialExact poly_mul(const PolynomialExact& f, const PolynomialExact& g);
// f = q g + r with deg r < deg g; g must be nonzero.
std::pair<PolynomialExact, PolynomialExact> poly_divmod(
    const PolynomialExact& f, const PolynomialExact& g);
PolynomialExact poly_monic(const PolynomialExact& f);
// Monic gcd d and Bezout cofactors (u, v) with u f + v g = d.
struct PolyXgcd {
    PolynomialExact d, u, v;
};
PolyXgcd poly_xgcd(const PolynomialExact& f, const PolynomialExact& g);

// Monic least-degree annihilator, found by ascending Krylov rank search
// with exact elimination; m(A) = 0 is asserted before returning.
PolynomialExact minimal_polynomial(const RationalMatrix& A);

// lcm of {m >= 1 : phi(m) <= k}: rational k x k matrices only admit root-of-
// unity eigenvalues of order m with phi(m) <= k, so this bounds every
// existential power search conclusively.
std::uint64_t period_bound(std::uint32_t k);

// Smallest n in [1, period_bound(k)] with A - A^{n+1} nilpotent; nullopt is
// a conclusive negative.
std::optional<std::uint64_t> decide_gzhou_matrix(const RationalMatrix& A);

// Projection onto the generalized nullspace at 0: with m(t) = t^s g(t),
// g(0) != 0 and Bezout u t^s + v g = 1, returns e := I - u(A) A^s
// (equivalently v(A) g(A)).  Postconditions e^2 = e, eA = Ae and A + e
// invertible are verified before returning.
RationalMatrix spectral_idempotent_at_zero(const RationalMatrix& A);

// (A + e)^{-1} (I - e) with e the spectral idempotent at zero; satisfies
// x = xAx, Ax = xA, A - A^2 x nilpotent (verified).
RationalMatrix drazin_matrix(const RationalMatrix& A);

// (drazin_matrix(A), n) when decide_gzhou_matrix(A) = n, else nullopt;
// A^n - A x is re-verified nilpotent before returning.
struct GzhouMatrixResult {
    RationalMatrix inverse;
    std::uint64_t n;
};
std::optional<GzhouMatrixResult> gzhou_matrix(const RationalMatrix& A);

}  // namespace ringlab
