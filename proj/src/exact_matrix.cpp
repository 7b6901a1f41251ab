#include "ringlab/exact_matrix.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "ringlab/errors.hpp"

namespace ringlab {

RationalMatrix::RationalMatrix(std::uint32_t k) : k_(k), e_(std::size_t(k) * k) {
    if (k == 0) throw std::invalid_argument("matrix dimension must be >= 1");
}

RationalMatrix RationalMatrix::identity(std::uint32_t k) {
    RationalMatrix m(k);
    for (std::uint32_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const rational& x : e_)
        if (x != 0) return false;
    return true;
}

bool RationalMatrix::is_identity() const {
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

namespace {

void skip_ws(const std::string& t, std::size_t& pos) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos])))
        ++pos;
}

void expect(const std::string& t, std::size_t& pos, char c) {
    skip_ws(t, pos);
    if (pos >= t.size() || t[pos] != c)
        throw parse_error(std::string("expected '") + c + "'", pos);
    ++pos;
}

boost::multiprecision::cpp_int parse_int(const std::string& t,
                                         std::size_t& pos) {
    skip_ws(t, pos);
    std::size_t start = pos;
    bool neg = false;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) {
        neg = t[pos] == '-';
        ++pos;
    }
    if (pos >= t.size() || !std::isdigit(static_cast<unsigned char>(t[pos])))
        throw parse_error("expected an integer", start);
    boost::multiprecision::cpp_int v = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
        v = v * 10 + (t[pos] - '0');
        ++pos;
    }
    return neg ? -v : v;
}

rational parse_rational(const std::string& t, std::size_t& pos) {
    boost::multiprecision::cpp_int num = parse_int(t, pos);
    skip_ws(t, pos);
    if (pos < t.size() && t[pos] == '/') {
        ++pos;
        std::size_t at = pos;
        boost::multiprecision::cpp_int den = parse_int(t, pos);
        if (den == 0) throw parse_error("zero denominator", at);
        return rational(num, den);
    }
    return rational(num);
}

}  // namespace

RationalMatrix RationalMatrix::parse(const std::string& text) {
    std::size_t pos = 0;
    std::vector<std::vector<rational>> rows;
    expect(text, pos, '[');
    while (true) {
        expect(text, pos, '[');
        std::vector<rational> row;
        row.push_back(parse_rational(text, pos));
        for (skip_ws(text, pos); pos < text.size() && text[pos] == ',';
             skip_ws(text, pos)) {
            ++pos;
            row.push_back(parse_rational(text, pos));
        }
        expect(text, pos, ']');
        rows.push_back(std::move(row));
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(text, pos, ']');
    skip_ws(text, pos);
    if (pos != text.size())
        throw parse_error("unexpected trailing input", pos);

    std::size_t k = rows.size();
    for (const auto& row : rows)
        if (row.size() != k)
            throw parse_error("matrix literal is not square", 0);
    RationalMatrix m(static_cast<std::uint32_t>(k));
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::string RationalMatrix::to_string() const {
    std::string out = "[";
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i) out += ',';
        out += '[';
        for (std::uint32_t j = 0; j < k_; ++j) {
            if (j) out += ',';
            out += at(i, j).str();
        }
        out += ']';
    }
    out += ']';
    return out;
}

namespace {

void require_same_dim(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.dim() != b.dim() || a.dim() == 0)
        throw std::invalid_argument("matrix dimensions do not match");
}

}  // namespace

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_dim(a, b);
    RationalMatrix c(a.dim());
    for (std::uint32_t i = 0; i < a.dim(); ++i)
        for (std::uint32_t j = 0; j < a.dim(); ++j)
            c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

RationalMatrix mat_sub(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_dim(a, b);
    RationalMatrix c(a.dim());
    for (std::uint32_t i = 0; i < a.dim(); ++i)
        for (std::uint32_t j = 0; j < a.dim(); ++j)
            c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    require_same_dim(a, b);
    std::uint32_t k = a.dim();
    RationalMatrix c(k);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t m = 0; m < k; ++m) {
            const rational& lhs = a.at(i, m);
            if (lhs == 0) continue;
            for (std::uint32_t j = 0; j < k; ++j)
                c.at(i, j) += lhs * b.at(m, j);
        }
    return c;
}

RationalMatrix mat_scale(const rational& c, const RationalMatrix& a) {
    RationalMatrix out(a.dim());
    for (std::uint32_t i = 0; i < a.dim(); ++i)
        for (std::uint32_t j = 0; j < a.dim(); ++j)
            out.at(i, j) = c * a.at(i, j);
    return out;
}

RationalMatrix mat_pow(const RationalMatrix& a, std::uint64_t n) {
    RationalMatrix acc = RationalMatrix::identity(a.dim());
    RationalMatrix base = a;
    while (n > 0) {
        if (n & 1) acc = mat_mul(acc, base);
        n >>= 1;
        if (n) base = mat_mul(base, base);
    }
    return acc;
}

std::optional<RationalMatrix> mat_inverse_opt(const RationalMatrix& a) {
    std::uint32_t k = a.dim();
    if (k == 0) throw std::invalid_argument("matrix dimension must be >= 1");
    // Gauss-Jordan on [A | I] with exact pivoting (first nonzero pivot).
    std::vector<std::vector<rational>> w(k, std::vector<rational>(2 * k));
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) w[i][j] = a.at(i, j);
        w[i][k + i] = 1;
    }
    for (std::uint32_t col = 0; col < k; ++col) {
        std::uint32_t piv = col;
        while (piv < k && w[piv][col] == 0) ++piv;
        if (piv == k) return std::nullopt;
        std::swap(w[piv], w[col]);
        rational inv_p = rational(1) / w[col][col];
        for (std::uint32_t j = col; j < 2 * k; ++j) w[col][j] *= inv_p;
        for (std::uint32_t i = 0; i < k; ++i) {
            if (i == col || w[i][col] == 0) continue;
            rational f = w[i][col];
            for (std::uint32_t j = col; j < 2 * k; ++j)
                w[i][j] -= f * w[col][j];
        }
    }
    RationalMatrix out(k);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) out.at(i, j) = w[i][k + j];
    // exactness check, cheap at these dimensions
    if (!mat_mul(a, out).is_identity())
        throw falsification_error("inverse failed its own product check");
    return out;
}

RationalMatrix mat_inverse(const RationalMatrix& a) {
    auto inv = mat_inverse_opt(a);
    if (!inv) throw std::domain_error("matrix is singular");
    return *inv;
}

std::optional<std::uint32_t> is_nilpotent_matrix(const RationalMatrix& a) {
    RationalMatrix p = a;
    for (std::uint32_t e = 1; e <= a.dim(); ++e) {
        if (p.is_zero()) return e;
        p = mat_mul(p, a);
    }
    return std::nullopt;
}

PolynomialExact::PolynomialExact(std::vector<rational> coeffs)
    : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolynomialExact PolynomialExact::t_power(std::uint32_t s) {
    std::vector<rational> c(s + 1);
    c[s] = 1;
    return PolynomialExact(std::move(c));
}

RationalMatrix PolynomialExact::evaluate(const RationalMatrix& A) const {
    RationalMatrix acc(A.dim());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = mat_mul(acc, A);
        for (std::uint32_t d = 0; d < A.dim(); ++d) acc.at(d, d) += c_[i];
    }
    return acc;
}

std::string PolynomialExact::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        rational c = c_[i];
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? '-' : '+';
        }
        rational mag = c < 0 ? rational(-c) : c;
        bool unit = mag == 1 && i > 0;
        if (!unit) out += mag.str();
        if (i > 0) {
            out += 't';
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out;
}

PolynomialExact poly_add(const PolynomialExact& f, const PolynomialExact& g) {
    std::size_t n = std::max(f.degree(), g.degree()) + 1;
    std::vector<rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = f.coeff(i) + g.coeff(i);
    return PolynomialExact(std::move(c));
}

PolynomialExact poly_sub(const PolynomialExact& f, const PolynomialExact& g) {
    std::size_t n = std::max(f.degree(), g.degree()) + 1;
    std::vector<rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = f.coeff(i) - g.coeff(i);
    return PolynomialExact(std::move(c));
}

PolynomialExact poly_mul(const PolynomialExact& f, const PolynomialExact& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<rational> c(f.degree() + g.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j)
            c[i + j] += f.coeff(i) * g.coeff(j);
    return PolynomialExact(std::move(c));
}

std::pair<PolynomialExact, PolynomialExact> poly_divmod(
    const PolynomialExact& f, const PolynomialExact& g) {
    if (g.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<rational> rem(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) rem[i] = f.coeff(i);
    int dg = g.degree();
    rational lead = g.coeff(dg);
    std::vector<rational> quo(
        f.degree() >= dg ? f.degree() - dg + 1 : 0);
    for (int i = f.degree(); i >= dg; --i) {
        if (rem[i] == 0) continue;
        rational q = rem[i] / lead;
        quo[i - dg] = q;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g.coeff(j);
    }
    return {PolynomialExact(std::move(quo)), PolynomialExact(std::move(rem))};
}

PolynomialExact poly_monic(const PolynomialExact& f) {
    if (f.is_zero()) return f;
    rational lead = f.coeff(f.degree());
    std::vector<rational> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) c[i] = f.coeff(i) / lead;
    return PolynomialExact(std::move(c));
}

PolyXgcd poly_xgcd(const PolynomialExact& f, const PolynomialExact& g) {
    // invariant: u*f + v*g = r along both tracks
    PolynomialExact r0 = f, r1 = g;
    PolynomialExact u0({rational(1)}), u1;
    PolynomialExact v0, v1({rational(1)});
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        PolynomialExact u2 = poly_sub(u0, poly_mul(q, u1));
        PolynomialExact v2 = poly_sub(v0, poly_mul(q, v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    PolyXgcd out;
    if (r0.is_zero()) {
        out.d = r0;
        out.u = u0;
        out.v = v0;
        return out;
    }
    rational lead = r0.coeff(r0.degree());
    PolynomialExact scale({rational(1) / lead});
    out.d = poly_mul(scale, r0);
    out.u = poly_mul(scale, u0);
    out.v = poly_mul(scale, v0);
    return out;
}

PolynomialExact minimal_polynomial(const RationalMatrix& A) {
    std::uint32_t k = A.dim();
    std::size_t dim = std::size_t(k) * k;
    // Krylov search: find the first power of A inside the span of the lower
    // powers, by incremental exact elimination over vectorized matrices.
    std::vector<RationalMatrix> pows{RationalMatrix::identity(k)};
    for (std::uint32_t d = 1; d <= k; ++d)
        pows.push_back(mat_mul(pows.back(), A));

    for (std::uint32_t d = 1; d <= k; ++d) {
        // solve sum_{j<d} c_j vec(A^j) = vec(A^d)
        std::vector<std::vector<rational>> w(dim,
                                             std::vector<rational>(d + 1));
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::uint32_t j = 0; j < d; ++j)
                w[r][j] = pows[j].at(static_cast<std::uint32_t>(r / k),
                                     static_cast<std::uint32_t>(r % k));
            w[r][d] = pows[d].at(static_cast<std::uint32_t>(r / k),
                                 static_cast<std::uint32_t>(r % k));
        }
        // forward elimination
        std::size_t row = 0;
        std::vector<std::size_t> pivot_row(d, SIZE_MAX);
        for (std::uint32_t col = 0; col < d && row < dim; ++col) {
            std::size_t piv = row;
            while (piv < dim && w[piv][col] == 0) ++piv;
            if (piv == dim) continue;
            std::swap(w[piv], w[row]);
            rational inv_p = rational(1) / w[row][col];
            for (std::uint32_t j = col; j <= d; ++j) w[row][j] *= inv_p;
            for (std::size_t i = 0; i < dim; ++i) {
                if (i == row || w[i][col] == 0) continue;
                rational f = w[i][col];
                for (std::uint32_t j = col; j <= d; ++j)
                    w[i][j] -= f * w[row][j];
            }
            pivot_row[col] = row;
            ++row;
        }
        // consistent iff no row reads 0 = nonzero
        bool consistent = true;
        for (std::size_t i = row; i < dim && consistent; ++i)
            if (w[i][d] != 0) consistent = false;
        if (!consistent) continue;

        std::vector<rational> coeffs(d + 1);
        for (std::uint32_t j = 0; j < d; ++j)
            coeffs[j] = pivot_row[j] == SIZE_MAX
                            ? rational(0)
                            : -w[pivot_row[j]][d];
        coeffs[d] = 1;
        PolynomialExact m{std::move(coeffs)};
        if (!m.evaluate(A).is_zero())
            throw falsification_error(
                "minimal polynomial failed to annihilate its matrix");
        return m;
    }
    throw falsification_error(
        "no annihilator of degree <= dimension exists; elimination is buggy");
}

std::uint64_t period_bound(std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("dimension must be >= 1");
    auto phi = [](std::uint64_t m) {
        std::uint64_t result = m;
        for (std::uint64_t p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            while (m % p == 0) m /= p;
            result -= result / p;
        }
        if (m > 1) result -= result / m;
        return result;
    };
    // phi(m) >= sqrt(m/2), so phi(m) <= k forces m <= 2k^2
    std::uint64_t bound = 1;
    for (std::uint64_t m = 1; m <= 2ull * k * k + 1; ++m)
        if (phi(m) <= k) bound = std::lcm(bound, m);
    return bound;
}

std::optional<std::uint64_t> decide_gzhou_matrix(const RationalMatrix& A) {
    std::uint64_t bound = period_bound(A.dim());
    RationalMatrix p = mat_mul(A, A);  // A^{n+1} for n = 1
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (is_nilpotent_matrix(mat_sub(A, p))) return n;
        p = mat_mul(p, A);
    }
    return std::nullopt;
}

RationalMatrix spectral_idempotent_at_zero(const RationalMatrix& A) {
    PolynomialExact m = minimal_polynomial(A);
    std::uint32_t s = 0;
    while (m.coeff(s) == 0) ++s;
    RationalMatrix I = RationalMatrix::identity(A.dim());
    RationalMatrix e(A.dim());  // s = 0 keeps e = 0: A has no nullspace part
    if (s > 0) {
        std::vector<rational> gc;
        for (std::uint32_t i = s; i <= std::uint32_t(m.degree()); ++i)
            gc.push_back(m.coeff(i));
        PolynomialExact g{std::move(gc)};
        PolyXgcd bez = poly_xgcd(PolynomialExact::t_power(s), g);
        if (bez.d.degree() != 0)
            throw falsification_error("t^s and g are not coprime");
        // e = I - u(A) A^s = v(A) g(A)
        e = mat_sub(I, mat_mul(bez.u.evaluate(A), mat_pow(A, s)));
    }
    if (mat_mul(e, e) != e)
        throw falsification_error("spectral idempotent is not idempotent");
    if (mat_mul(e, A) != mat_mul(A, e))
        throw falsification_error("spectral idempotent does not commute");
    if (!mat_inverse_opt(mat_add(A, e)))
        throw falsification_error("A + e is singular");
    return e;
}

RationalMatrix drazin_matrix(const RationalMatrix& A) {
    RationalMatrix e = spectral_idempotent_at_zero(A);
    RationalMatrix I = RationalMatrix::identity(A.dim());
    RationalMatrix x = mat_mul(mat_inverse(mat_add(A, e)), mat_sub(I, e));
    if (mat_mul(mat_mul(x, A), x) != x)
        throw falsification_error("xAx != x");
    if (mat_mul(A, x) != mat_mul(x, A))
        throw falsification_error("Ax != xA");
    if (!is_nilpotent_matrix(mat_sub(A, mat_mul(mat_mul(A, A), x))))
        throw falsification_error("A - A^2 x is not nilpotent");
    return x;
}

std::optional<GzhouMatrixResult> gzhou_matrix(const RationalMatrix& A) {
    auto n = decide_gzhou_matrix(A);
    if (!n) return std::nullopt;
    GzhouMatrixResult out{drazin_matrix(A), *n};
    if (!is_nilpotent_matrix(
            mat_sub(mat_pow(A, *n), mat_mul(A, out.inverse))))
        throw falsification_error("A^n - A x is not nilpotent");
    return out;
}

}  // namespace ringlab
