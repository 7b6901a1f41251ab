#include "ringlab/ring.hpp"

#include <atomic>
#include <cctype>
#include <random>
#include <unordered_map>
#include <utility>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

std::uint32_t next_ring_id() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
}

void skip_ws(const std::string& text, std::size_t& pos) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
}

void expect_char(const std::string& text, std::size_t& pos, char c) {
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != c)
        throw parse_error(std::string("expected '") + c + "'", pos);
    ++pos;
}

class ZmodOps final : public RingOps {
public:
    explicit ZmodOps(std::uint64_t n) : n_(n) {}

    std::uint64_t card() const override { return n_; }
    code_t one() const override { return n_ == 1 ? 0 : 1; }

    code_t add(code_t x, code_t y) const override {
        using u128 = unsigned __int128;
        return static_cast<code_t>((u128(x) + u128(y)) % n_);
    }
    code_t neg(code_t x) const override { return x == 0 ? 0 : n_ - x; }
    code_t mul(code_t x, code_t y) const override {
        using u128 = unsigned __int128;
        return static_cast<code_t>((u128(x) * u128(y)) % n_);
    }
    code_t from_int(std::int64_t v) const override {
        std::int64_t m = static_cast<std::int64_t>(n_);
        std::int64_t r = v % m;
        if (r < 0) r += m;
        return static_cast<code_t>(r);
    }

    void format(code_t x, std::string& out) const override {
        out += std::to_string(x);
    }

    code_t parse(const std::string& text, std::size_t& pos) const override {
        skip_ws(text, pos);
        std::size_t start = pos;
        if (pos >= text.size() ||
            !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected a residue value", pos);
        std::uint64_t v = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (UINT64_MAX - digit) / 10)
                throw parse_error("residue value too large", start);
            v = v * 10 + digit;
            ++pos;
        }
        if (v >= n_)
            throw parse_error("residue out of range (modulus " +
                                  std::to_string(n_) + ")",
                              start);
        return v;
    }

private:
    std::uint64_t n_;
};

// Shared machinery for full and upper-triangular matrix backends.  Codes are
// mixed-radix numbers over the stored cells, row-major, entry (0,0) most
// significant.
class MatrixBaseOps : public RingOps {
public:
    MatrixBaseOps(std::uint32_t k, std::unique_ptr<RingOps> base)
        : k_(k), base_(std::move(base)), base_card_(base_->card()) {}

    std::uint64_t card() const override {
        std::uint64_t c = 1;
        for (std::uint32_t i = 0; i < cells(); ++i) c *= base_card_;
        return c;
    }

    code_t one() const override {
        std::vector<code_t> m(cells(), 0);
        for (std::uint32_t i = 0; i < k_; ++i) cell(m, i, i) = base_->one();
        return encode(m);
    }

    code_t add(code_t x, code_t y) const override {
        std::vector<code_t> a = decode(x), b = decode(y);
        for (std::uint32_t i = 0; i < cells(); ++i) a[i] = base_->add(a[i], b[i]);
        return encode(a);
    }

    code_t neg(code_t x) const override {
        std::vector<code_t> a = decode(x);
        for (std::uint32_t i = 0; i < cells(); ++i) a[i] = base_->neg(a[i]);
        return encode(a);
    }

    code_t from_int(std::int64_t v) const override {
        std::vector<code_t> m(cells(), 0);
        code_t d = base_->from_int(v);
        for (std::uint32_t i = 0; i < k_; ++i) cell(m, i, i) = d;
        return encode(m);
    }

    void format(code_t x, std::string& out) const override {
        std::vector<code_t> a = decode(x);
        out += '[';
        for (std::uint32_t i = 0; i < k_; ++i) {
            if (i) out += ',';
            out += '[';
            for (std::uint32_t j = 0; j < k_; ++j) {
                if (j) out += ',';
                base_->format(get(a, i, j), out);
            }
            out += ']';
        }
        out += ']';
    }

    code_t parse(const std::string& text, std::size_t& pos) const override {
        expect_char(text, pos, '[');
        std::vector<code_t> m(cells(), 0);
        for (std::uint32_t i = 0; i < k_; ++i) {
            if (i) expect_char(text, pos, ',');
            expect_char(text, pos, '[');
            for (std::uint32_t j = 0; j < k_; ++j) {
                if (j) expect_char(text, pos, ',');
                std::size_t at = pos;
                skip_ws(text, at);
                code_t v = base_->parse(text, pos);
                if (!stores(i, j)) {
                    if (v != 0)
                        throw parse_error(
                            "below-diagonal entry must be zero", at);
                } else {
                    cell(m, i, j) = v;
                }
            }
            expect_char(text, pos, ']');
        }
        expect_char(text, pos, ']');
        return encode(m);
    }

protected:
    // Which cells (i, j) the encoding stores; the rest are structural zeros.
    virtual bool stores(std::uint32_t i, std::uint32_t j) const = 0;
    virtual std::uint32_t cells() const = 0;
    virtual std::uint32_t cell_index(std::uint32_t i, std::uint32_t j) const = 0;

    code_t& cell(std::vector<code_t>& m, std::uint32_t i,
                 std::uint32_t j) const {
        return m[cell_index(i, j)];
    }
    code_t get(const std::vector<code_t>& m, std::uint32_t i,
               std::uint32_t j) const {
        return stores(i, j) ? m[cell_index(i, j)] : 0;
    }

    std::vector<code_t> decode(code_t x) const {
        std::vector<code_t> m(cells());
        for (std::uint32_t i = cells(); i-- > 0;) {
            m[i] = x % base_card_;
            x /= base_card_;
        }
        return m;
    }

    code_t encode(const std::vector<code_t>& m) const {
        code_t x = 0;
        for (std::uint32_t i = 0; i < cells(); ++i) x = x * base_card_ + m[i];
        return x;
    }

    std::uint32_t k_;
    std::unique_ptr<RingOps> base_;
    std::uint64_t base_card_;
};

class MatrixOps final : public MatrixBaseOps {
public:
    using MatrixBaseOps::MatrixBaseOps;

    code_t mul(code_t x, code_t y) const override {
        std::vector<code_t> a = decode(x), b = decode(y), c(cells(), 0);
        for (std::uint32_t i = 0; i < k_; ++i)
            for (std::uint32_t j = 0; j < k_; ++j) {
                code_t s = 0;
                for (std::uint32_t m = 0; m < k_; ++m)
                    s = base_->add(s, base_->mul(get(a, i, m), get(b, m, j)));
                cell(c, i, j) = s;
            }
        return encode(c);
    }

protected:
    bool stores(std::uint32_t, std::uint32_t) const override { return true; }
    std::uint32_t cells() const override { return k_ * k_; }
    std::uint32_t cell_index(std::uint32_t i, std::uint32_t j) const override {
        return i * k_ + j;
    }
};

class UpperTriOps final : public MatrixBaseOps {
public:
    UpperTriOps(std::uint32_t k, std::unique_ptr<RingOps> base)
        : MatrixBaseOps(k, std::move(base)), row_offset_(k) {
        // row i starts after rows 0..i-1, which hold k, k-1, ... cells
        std::uint32_t off = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            row_offset_[i] = off;
            off += k - i;
        }
    }

    code_t mul(code_t x, code_t y) const override {
        std::vector<code_t> a = decode(x), b = decode(y), c(cells(), 0);
        for (std::uint32_t i = 0; i < k_; ++i)
            for (std::uint32_t j = i; j < k_; ++j) {
                code_t s = 0;
                for (std::uint32_t m = i; m <= j; ++m)
                    s = base_->add(s, base_->mul(get(a, i, m), get(b, m, j)));
                cell(c, i, j) = s;
            }
        return encode(c);
    }

protected:
    bool stores(std::uint32_t i, std::uint32_t j) const override {
        return j >= i;
    }
    std::uint32_t cells() const override { return k_ * (k_ + 1) / 2; }
    std::uint32_t cell_index(std::uint32_t i, std::uint32_t j) const override {
        return row_offset_[i] + (j - i);
    }

private:
    std::vector<std::uint32_t> row_offset_;
};

class ProductOps final : public RingOps {
public:
    ProductOps(std::unique_ptr<RingOps> left, std::unique_ptr<RingOps> right)
        : left_(std::move(left)),
          right_(std::move(right)),
          right_card_(right_->card()) {}

    std::uint64_t card() const override {
        return left_->card() * right_card_;
    }
    code_t one() const override {
        return left_->one() * right_card_ + right_->one();
    }
    code_t add(code_t x, code_t y) const override {
        return left_->add(x / right_card_, y / right_card_) * right_card_ +
               right_->add(x % right_card_, y % right_card_);
    }
    code_t neg(code_t x) const override {
        return left_->neg(x / right_card_) * right_card_ +
               right_->neg(x % right_card_);
    }
    code_t mul(code_t x, code_t y) const override {
        return left_->mul(x / right_card_, y / right_card_) * right_card_ +
               right_->mul(x % right_card_, y % right_card_);
    }
    code_t from_int(std::int64_t v) const override {
        return left_->from_int(v) * right_card_ + right_->from_int(v);
    }
    void format(code_t x, std::string& out) const override {
        out += '(';
        left_->format(x / right_card_, out);
        out += ',';
        right_->format(x % right_card_, out);
        out += ')';
    }
    code_t parse(const std::string& text, std::size_t& pos) const override {
        expect_char(text, pos, '(');
        code_t l = left_->parse(text, pos);
        expect_char(text, pos, ',');
        code_t r = right_->parse(text, pos);
        expect_char(text, pos, ')');
        return l * right_card_ + r;
    }

private:
    std::unique_ptr<RingOps> left_, right_;
    std::uint64_t right_card_;
};

std::unique_ptr<RingOps> make_ops(const RingDescriptor& d) {
    switch (d.kind) {
        case RingDescriptor::Kind::zmod:
            return std::make_unique<ZmodOps>(d.modulus);
        case RingDescriptor::Kind::matrix:
            return std::make_unique<MatrixOps>(d.dim, make_ops(*d.base));
        case RingDescriptor::Kind::uppertri:
            return std::make_unique<UpperTriOps>(d.dim, make_ops(*d.base));
        case RingDescriptor::Kind::product:
            return std::make_unique<ProductOps>(make_ops(*d.left),
                                                make_ops(*d.right));
    }
    throw std::logic_error("unreachable descriptor kind");
}

}  // namespace

RingPtr FiniteRing::build(const DescriptorPtr& d, const BuildOptions& opts) {
    if (!d) throw std::invalid_argument("null ring descriptor");
    bigint card = descriptor_cardinality(*d);
    if (card > bigint(opts.cap))
        throw cap_error("ring " + format_descriptor(*d) + " has cardinality " +
                            card.str() + ", above the cap " +
                            std::to_string(opts.cap),
                        card.str());
    return RingPtr(new FiniteRing(d, make_ops(*d), format_descriptor(*d),
                                  opts));
}

RingPtr FiniteRing::build(const std::string& ring_expr,
                          const BuildOptions& opts) {
    return build(parse_ring_expr(ring_expr), opts);
}

RingPtr FiniteRing::adopt(std::unique_ptr<RingOps> ops, std::string label,
                          const BuildOptions& opts) {
    if (!ops) throw std::invalid_argument("null ring backend");
    if (ops->card() > opts.cap)
        throw cap_error("ring " + label + " has cardinality " +
                            std::to_string(ops->card()) +
                            ", above the cap " + std::to_string(opts.cap),
                        std::to_string(ops->card()));
    return RingPtr(
        new FiniteRing(nullptr, std::move(ops), std::move(label), opts));
}

FiniteRing::FiniteRing(DescriptorPtr d, std::unique_ptr<RingOps> ops,
                       std::string label, const BuildOptions& opts)
    : descriptor_(std::move(d)),
      ops_(std::move(ops)),
      label_(std::move(label)),
      id_(next_ring_id()),
      card_(ops_->card()),
      one_(ops_->one()) {
    if (card_ == 0) throw std::invalid_argument("empty ring backend");
    if (card_ <= opts.table_threshold) fill_tables();
    if (opts.check_axioms) quick_axiom_check();
}

void FiniteRing::fill_tables() {
    add_table_.resize(card_ * card_);
    mul_table_.resize(card_ * card_);
    neg_table_.resize(card_);
    for (code_t x = 0; x < card_; ++x) {
        neg_table_[x] = static_cast<std::uint32_t>(ops_->neg(x));
        for (code_t y = 0; y < card_; ++y) {
            add_table_[x * card_ + y] =
                static_cast<std::uint32_t>(ops_->add(x, y));
            mul_table_[x * card_ + y] =
                static_cast<std::uint32_t>(ops_->mul(x, y));
        }
    }
    tables_ = true;
}

Element FiniteRing::own(Element x) const {
    if (x.ring_id != id_)
        throw std::invalid_argument("element belongs to a different ring");
    if (x.code >= card_)
        throw std::invalid_argument("element code out of range");
    return x;
}

Element FiniteRing::element(code_t code) const {
    if (code >= card_) throw std::invalid_argument("element code out of range");
    return {id_, code};
}

Element FiniteRing::add(Element x, Element y) const {
    own(x);
    own(y);
    if (tables_) return {id_, add_table_[x.code * card_ + y.code]};
    return {id_, ops_->add(x.code, y.code)};
}

Element FiniteRing::neg(Element x) const {
    own(x);
    if (tables_) return {id_, neg_table_[x.code]};
    return {id_, ops_->neg(x.code)};
}

Element FiniteRing::sub(Element x, Element y) const { return add(x, neg(y)); }

Element FiniteRing::mul(Element x, Element y) const {
    own(x);
    own(y);
    if (tables_) return {id_, mul_table_[x.code * card_ + y.code]};
    return {id_, ops_->mul(x.code, y.code)};
}

Element FiniteRing::pow(Element a, std::uint64_t n) const {
    own(a);
    Element acc = one();
    Element base = a;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return acc;
}

PowerOrbit FiniteRing::power_orbit(Element a) const {
    own(a);
    PowerOrbit po;
    po.base = a;
    std::unordered_map<code_t, std::uint64_t> seen;  // code -> exponent
    Element cur = a;
    std::uint64_t e = 1;
    while (true) {
        auto it = seen.find(cur.code);
        if (it != seen.end()) {
            po.index = it->second;
            po.period = e - it->second;
            break;
        }
        seen.emplace(cur.code, e);
        po.orbit.push_back(cur);
        cur = mul(cur, a);
        ++e;
    }
    return po;
}

Element FiniteRing::from_int(std::int64_t v) const {
    return {id_, ops_->from_int(v)};
}

std::string FiniteRing::format_element(Element x) const {
    own(x);
    std::string out;
    ops_->format(x.code, out);
    return out;
}

Element FiniteRing::parse_element(const std::string& text) const {
    std::size_t pos = 0;
    code_t c = ops_->parse(text, pos);
    skip_ws(text, pos);
    if (pos != text.size())
        throw parse_error("unexpected trailing input", pos);
    return {id_, c};
}

namespace {

void check_triple(const FiniteRing& R, Element x, Element y, Element z) {
    auto fail = [&](const char* law) {
        throw falsification_error(
            std::string("ring axiom violated (") + law + ") in " + R.label() +
            " at x=" + R.format_element(x) + " y=" + R.format_element(y) +
            " z=" + R.format_element(z));
    };
    if (R.add(R.add(x, y), z) != R.add(x, R.add(y, z))) fail("+ associative");
    if (R.add(x, y) != R.add(y, x)) fail("+ commutative");
    if (R.mul(R.mul(x, y), z) != R.mul(x, R.mul(y, z))) fail("* associative");
    if (R.mul(x, R.add(y, z)) != R.add(R.mul(x, y), R.mul(x, z)))
        fail("left distributive");
    if (R.mul(R.add(y, z), x) != R.add(R.mul(y, x), R.mul(z, x)))
        fail("right distributive");
}

void check_unary(const FiniteRing& R, Element x) {
    auto fail = [&](const char* law) {
        throw falsification_error(std::string("ring axiom violated (") + law +
                                  ") in " + R.label() + " at x=" +
                                  R.format_element(x));
    };
    if (R.add(x, R.zero()) != x) fail("additive identity");
    if (R.add(x, R.neg(x)) != R.zero()) fail("additive inverse");
    if (R.mul(x, R.one()) != x || R.mul(R.one(), x) != x)
        fail("multiplicative identity");
}

}  // namespace

void FiniteRing::quick_axiom_check() const {
    // Cheap build-time smoke test; the full suite lives in check_ring_axioms.
    const FiniteRing& R = *this;
    std::uint64_t n = card_;
    if (n <= 8) {
        for (code_t x = 0; x < n; ++x) {
            check_unary(R, {id_, x});
            for (code_t y = 0; y < n; ++y)
                for (code_t z = 0; z < n; ++z)
                    check_triple(R, {id_, x}, {id_, y}, {id_, z});
        }
        return;
    }
    std::mt19937_64 rng(0xC0FFEEu);
    std::uniform_int_distribution<code_t> pick(0, n - 1);
    for (int i = 0; i < 64; ++i) check_unary(R, {id_, pick(rng)});
    for (int i = 0; i < 256; ++i)
        check_triple(R, {id_, pick(rng)}, {id_, pick(rng)}, {id_, pick(rng)});
}

AxiomCheck check_ring_axioms(const FiniteRing& R,
                             std::uint64_t exhaustive_limit,
                             std::uint64_t samples, std::uint64_t seed) {
    AxiomCheck result;
    std::uint64_t n = R.cardinality();
    for (code_t x = 0; x < n; ++x) check_unary(R, R.element(x));
    if (n <= exhaustive_limit) {
        result.exhaustive = true;
        for (code_t x = 0; x < n; ++x)
            for (code_t y = 0; y < n; ++y)
                for (code_t z = 0; z < n; ++z) {
                    check_triple(R, R.element(x), R.element(y), R.element(z));
                    ++result.triples_checked;
                }
        return result;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<code_t> pick(0, n - 1);
    for (std::uint64_t i = 0; i < samples; ++i) {
        check_triple(R, R.element(pick(rng)), R.element(pick(rng)),
                     R.element(pick(rng)));
        ++result.triples_checked;
    }
    return result;
}

}  // namespace ringlab
