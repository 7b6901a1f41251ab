#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Structural subsets of a finite ring, computed once per ring and cached on
// it.  Element vectors are sorted by canonical code.  Per-code lookup tables
// are indexed by element code.
struct StructuralCache {
    bool commutative = false;
    std::vector<Element> units;
    std::vector<Element> nilpotents;
    std::vector<Element> radical;        // J(R), by quasi-regularity
    std::vector<Element> radical_root;   // sqrt J(R), by power-orbit scan
    std::vector<Element> idempotents;

    std::vector<char> is_unit, is_nilpotent, in_radical, in_radical_root,
        is_idempotent;
    std::vector<code_t> unit_inv;            // valid where is_unit
    std::vector<std::uint64_t> nil_index;    // smallest m with x^m = 0
    std::vector<std::uint64_t> root_witness; // smallest e with x^e in J(R)
};

// Fills the cache on first use (thread-safe, at most once per ring).
const StructuralCache& structural_cache(const FiniteRing& R);

std::vector<Element> units(const FiniteRing& R);
bool is_unit(const FiniteRing& R, Element x);
// Two-sided inverse; throws std::invalid_argument when x is not a unit.
Element unit_inverse(const FiniteRing& R, Element x);

std::vector<Element> nilpotents(const FiniteRing& R);
// Smallest m >= 1 with x^m = 0, or nullopt when x is not nilpotent.
std::optional<std::uint64_t> nilpotency_index(const FiniteRing& R, Element x);
bool is_nilpotent(const FiniteRing& R, Element x);

std::vector<Element> jacobson_radical(const FiniteRing& R);
bool in_jacobson_radical(const FiniteRing& R, Element x);

std::vector<Element> sqrt_jacobson(const FiniteRing& R);
// Smallest e >= 1 with x^e in J(R), or nullopt when no power lands in J(R).
std::optional<std::uint64_t> in_sqrt_jacobson(const FiniteRing& R, Element x);

std::vector<Element> idempotents(const FiniteRing& R);
bool is_idempotent(const FiniteRing& R, Element x);

// comm(a) = {x : xa = ax}; comm2(a) = {x : xy = yx for all y in comm(a)}.
// Computed on demand (commutative rings short-circuit to the whole ring).
std::vector<Element> commutant(const FiniteRing& R, Element a);
std::vector<Element> double_commutant(const FiniteRing& R, Element a);
bool commutes_with_all(const FiniteRing& R, Element x,
                       const std::vector<Element>& ys);

struct Quotient {
    RingPtr ring;
    // Surjective ring homomorphism onto the quotient.
    std::function<Element(Element)> projection;
};

// R / J(R), with canonical coset representatives (minimum code in the coset).
Quotient quotient_by_radical(const RingPtr& R);

}  // namespace ringlab
