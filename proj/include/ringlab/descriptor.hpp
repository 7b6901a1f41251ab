#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringlab {

using bigint = boost::multiprecision::cpp_int;

// Abstract syntax for ring expressions:
//
//   ring := "Z" INT            residues mod n, n >= 1
//         | "M" k "(" ring ")" full k-by-k matrices over a ring
//         | "T" k "(" ring ")" upper triangular k-by-k matrices
//         | ring "x" ring      direct product (left associative)
//
// Whitespace is insignificant.  "Z1" is the zero ring.
struct RingDescriptor;
using DescriptorPtr = std::shared_ptr<const RingDescriptor>;

struct RingDescriptor {
    enum class Kind { zmod, matrix, uppertri, product };

    Kind kind;
    std::uint64_t modulus = 0;  // zmod: n
    std::uint32_t dim = 0;      // matrix / uppertri: k
    DescriptorPtr base;         // matrix / uppertri
    DescriptorPtr left, right;  // product; "A x B x C" nests as (A x B) x C
};

DescriptorPtr make_zmod(std::uint64_t n);
DescriptorPtr make_matrix(std::uint32_t k, DescriptorPtr base);
DescriptorPtr make_uppertri(std::uint32_t k, DescriptorPtr base);
DescriptorPtr make_product(DescriptorPtr left, DescriptorPtr right);

// Parses a ring expression.  Throws parse_error with a byte offset on
// malformed input (including trailing garbage).
DescriptorPtr parse_ring_expr(const std::string& text);

// Canonical textual form: "Z4", "M2(Z2)", "T2(Z3) x Z4".  Parsing the
// result yields a structurally equal descriptor.
std::string format_descriptor(const RingDescriptor& d);

// Exact cardinality; exact even when it would overflow machine integers.
bigint descriptor_cardinality(const RingDescriptor& d);

bool descriptor_equal(const RingDescriptor& a, const RingDescriptor& b);

}  // namespace ringlab
