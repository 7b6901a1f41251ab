#include "ringlab/descriptor.hpp"

#include <cctype>
#include <utility>

#include "ringlab/errors.hpp"

namespace ringlab {

DescriptorPtr make_zmod(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Z modulus must be >= 1");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingDescriptor::Kind::zmod;
    d->modulus = n;
    return d;
}

DescriptorPtr make_matrix(std::uint32_t k, DescriptorPtr base) {
    if (k == 0) throw std::invalid_argument("matrix dimension must be >= 1");
    if (!base) throw std::invalid_argument("matrix base ring is null");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingDescriptor::Kind::matrix;
    d->dim = k;
    d->base = std::move(base);
    return d;
}

DescriptorPtr make_uppertri(std::uint32_t k, DescriptorPtr base) {
    if (k == 0) throw std::invalid_argument("matrix dimension must be >= 1");
    if (!base) throw std::invalid_argument("matrix base ring is null");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingDescriptor::Kind::uppertri;
    d->dim = k;
    d->base = std::move(base);
    return d;
}

DescriptorPtr make_product(DescriptorPtr left, DescriptorPtr right) {
    if (!left || !right) throw std::invalid_argument("product factor is null");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingDescriptor::Kind::product;
    d->left = std::move(left);
    d->right = std::move(right);
    return d;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    DescriptorPtr parse() {
        auto d = parse_product();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected trailing input", pos_);
        return d;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected an integer", pos_);
        std::uint64_t v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (UINT64_MAX - digit) / 10)
                throw parse_error("integer literal too large", start);
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }

    DescriptorPtr parse_product() {
        DescriptorPtr d = parse_atom();
        while (peek_is('x')) {
            ++pos_;
            d = make_product(std::move(d), parse_atom());
        }
        return d;
    }

    DescriptorPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw parse_error("expected a ring expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_product();
            expect(')');
            return inner;
        }
        if (c == 'Z') {
            ++pos_;
            std::size_t at = pos_;
            std::uint64_t n = parse_uint();
            if (n == 0) throw parse_error("Z modulus must be >= 1", at);
            return make_zmod(n);
        }
        if (c == 'M' || c == 'T') {
            ++pos_;
            std::size_t at = pos_;
            std::uint64_t k = parse_uint();
            if (k == 0 || k > 0xffffffffu)
                throw parse_error("matrix dimension out of range", at);
            expect('(');
            auto base = parse_product();
            expect(')');
            return c == 'M' ? make_matrix(static_cast<std::uint32_t>(k), base)
                            : make_uppertri(static_cast<std::uint32_t>(k), base);
        }
        throw parse_error("expected 'Z', 'M', 'T' or '('", pos_);
    }
};

void format_rec(const RingDescriptor& d, std::string& out, bool parenthesize) {
    switch (d.kind) {
        case RingDescriptor::Kind::zmod:
            out += 'Z';
            out += std::to_string(d.modulus);
            break;
        case RingDescriptor::Kind::matrix:
        case RingDescriptor::Kind::uppertri:
            out += d.kind == RingDescriptor::Kind::matrix ? 'M' : 'T';
            out += std::to_string(d.dim);
            out += '(';
            format_rec(*d.base, out, false);
            out += ')';
            break;
        case RingDescriptor::Kind::product:
            // "x" is left associative, so only a product appearing as a
            // right factor needs explicit parentheses.
            if (parenthesize) out += '(';
            format_rec(*d.left, out, false);
            out += " x ";
            format_rec(*d.right, out, true);
            if (parenthesize) out += ')';
            break;
    }
}

}  // namespace

DescriptorPtr parse_ring_expr(const std::string& text) {
    return Parser(text).parse();
}

std::string format_descriptor(const RingDescriptor& d) {
    std::string out;
    format_rec(d, out, false);
    return out;
}

bigint descriptor_cardinality(const RingDescriptor& d) {
    switch (d.kind) {
        case RingDescriptor::Kind::zmod:
            return bigint(d.modulus);
        case RingDescriptor::Kind::matrix: {
            bigint b = descriptor_cardinality(*d.base);
            bigint r = 1;
            std::uint64_t cells =
                static_cast<std::uint64_t>(d.dim) * d.dim;
            for (std::uint64_t i = 0; i < cells; ++i) r *= b;
            return r;
        }
        case RingDescriptor::Kind::uppertri: {
            bigint b = descriptor_cardinality(*d.base);
            bigint r = 1;
            std::uint64_t cells =
                static_cast<std::uint64_t>(d.dim) * (d.dim + 1) / 2;
            for (std::uint64_t i = 0; i < cells; ++i) r *= b;
            return r;
        }
        case RingDescriptor::Kind::product:
            return descriptor_cardinality(*d.left) *
                   descriptor_cardinality(*d.right);
    }
    throw std::logic_error("unreachable descriptor kind");
}

bool descriptor_equal(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case RingDescriptor::Kind::zmod:
            return a.modulus == b.modulus;
        case RingDescriptor::Kind::matrix:
        case RingDescriptor::Kind::uppertri:
            return a.dim == b.dim && descriptor_equal(*a.base, *b.base);
        case RingDescriptor::Kind::product:
            return descriptor_equal(*a.left, *b.left) &&
                   descriptor_equal(*a.right, *b.right);
    }
    return false;
}

}  // namespace ringlab
