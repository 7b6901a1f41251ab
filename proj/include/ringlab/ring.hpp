#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ringlab/descriptor.hpp"

namespace ringlab {

using code_t = std::uint64_t;

// A plain value: canonical code plus the id of the ring it lives in.
// Operations mixing elements of distinct rings are rejected.
struct Element {
    std::uint32_t ring_id = 0;
    code_t code = 0;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

// Eventual periodicity data of a under multiplication:
//   index k: smallest k >= 1 with a^k inside the cycle,
//   period l: smallest l >= 1 with a^{k+l} = a^k,
//   orbit: a^1, ..., a^{k+l-1} (pairwise distinct).
// Every "exists n" power condition is decided by scanning n in [1, k+l].
struct PowerOrbit {
    Element base;
    std::uint64_t index = 0;
    std::uint64_t period = 0;
    std::vector<Element> orbit;
};

struct BuildOptions {
    std::uint64_t cap = 65536;            // largest constructible cardinality
    std::uint64_t table_threshold = 1024; // Cayley tables at or below this
    bool check_axioms = true;             // quick sampled check at build time
};

// Backend arithmetic over canonical codes, one node per constructor in the
// ring expression; composite nodes own their children.  Code 0 is always the
// zero element.
class RingOps {
public:
    virtual ~RingOps() = default;
    virtual std::uint64_t card() const = 0;
    virtual code_t one() const = 0;
    virtual code_t add(code_t x, code_t y) const = 0;
    virtual code_t neg(code_t x) const = 0;
    virtual code_t mul(code_t x, code_t y) const = 0;
    virtual code_t from_int(std::int64_t v) const = 0;
    virtual void format(code_t x, std::string& out) const = 0;
    // Parses one element literal starting at text[pos]; advances pos.
    virtual code_t parse(const std::string& text, std::size_t& pos) const = 0;
};

struct StructuralCache;  // computed lazily by the structure module

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing {
public:
    // Builds the ring described by d (or by a ring expression).  Throws
    // cap_error when the cardinality exceeds opts.cap.
    static RingPtr build(const DescriptorPtr& d, const BuildOptions& opts = {});
    static RingPtr build(const std::string& ring_expr,
                         const BuildOptions& opts = {});
    // Wraps a custom backend (used for quotient rings).  descriptor() is
    // null for such rings; they are identified by their label.
    static RingPtr adopt(std::unique_ptr<RingOps> ops, std::string label,
                         const BuildOptions& opts = {});

    std::uint32_t id() const { return id_; }
    std::uint64_t cardinality() const { return card_; }
    const DescriptorPtr& descriptor() const { return descriptor_; }
    const std::string& label() const { return label_; }
    bool has_tables() const { return tables_; }

    Element element(code_t code) const;
    Element zero() const { return {id_, 0}; }
    Element one() const { return {id_, one_}; }
    bool is_zero(Element x) const { return own(x).code == 0; }
    bool is_one(Element x) const { return own(x).code == one_; }

    Element add(Element x, Element y) const;
    Element sub(Element x, Element y) const;
    Element neg(Element x) const;
    Element mul(Element x, Element y) const;
    Element pow(Element a, std::uint64_t n) const;  // pow(a, 0) = one
    PowerOrbit power_orbit(Element a) const;
    Element from_int(std::int64_t v) const;

    std::string format_element(Element x) const;
    Element parse_element(const std::string& text) const;

private:
    FiniteRing(DescriptorPtr d, std::unique_ptr<RingOps> ops,
               std::string label, const BuildOptions& opts);

    Element own(Element x) const;  // rejects foreign or out-of-range elements
    void fill_tables();
    void quick_axiom_check() const;

    DescriptorPtr descriptor_;
    std::unique_ptr<RingOps> ops_;
    std::string label_;
    std::uint32_t id_ = 0;
    std::uint64_t card_ = 0;
    code_t one_ = 0;
    bool tables_ = false;
    std::vector<std::uint32_t> add_table_, mul_table_, neg_table_;

    mutable std::once_flag struct_once_;
    mutable std::shared_ptr<const StructuralCache> struct_cache_;
    friend const StructuralCache& structural_cache(const FiniteRing& R);
};

inline Element parse_element(const FiniteRing& R, const std::string& text) {
    return R.parse_element(text);
}
inline std::string format_element(const FiniteRing& R, Element x) {
    return R.format_element(x);
}

struct AxiomCheck {
    std::uint64_t triples_checked = 0;
    bool exhaustive = false;
};

// Verifies associativity, commutativity of +, distributivity, identities and
// negation.  Exhaustive over all triples when cardinality <= exhaustive_limit,
// otherwise over `samples` seeded random triples.  Throws falsification_error
// on any violation.
AxiomCheck check_ring_axioms(const FiniteRing& R,
                             std::uint64_t exhaustive_limit = 512,
                             std::uint64_t samples = 10000,
                             std::uint64_t seed = 1);

}  // namespace ringlab
