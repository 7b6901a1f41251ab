#include "ringlab/structure.hpp"

#include <algorithm>
#include <atomic>
#include <memory>

#include "ringlab/errors.hpp"
#include "ringlab/parallel.hpp"

namespace ringlab {

namespace {

// Parallelize the per-element scans only when the quadratic work is large
// enough to matter.
unsigned scan_jobs(std::uint64_t card) {
    return card >= 4096 ? default_jobs() : 1;
}

void fill_units(const FiniteRing& R, StructuralCache& c) {
    std::uint64_t n = R.cardinality();
    parallel_chunks(n, scan_jobs(n), [&](unsigned, code_t lo, code_t hi) {
        for (code_t x = lo; x < hi; ++x) {
            Element ex = R.element(x);
            bool one_sided = false;
            for (code_t y = 0; y < n; ++y) {
                Element ey = R.element(y);
                if (!R.is_one(R.mul(ex, ey))) continue;
                one_sided = true;
                // promote to two-sided by explicit verification
                if (R.is_one(R.mul(ey, ex))) {
                    c.is_unit[x] = 1;
                    c.unit_inv[x] = y;
                    break;
                }
            }
            if (one_sided && !c.is_unit[x])
                throw falsification_error(
                    "one-sided unit with no two-sided inverse in " +
                    R.label() + " at x=" + R.format_element(ex));
        }
    });
}

void fill_nilpotents(const FiniteRing& R, StructuralCache& c) {
    std::uint64_t n = R.cardinality();
    parallel_chunks(n, scan_jobs(n), [&](unsigned, code_t lo, code_t hi) {
        for (code_t x = lo; x < hi; ++x) {
            Element ex = R.element(x);
            PowerOrbit o = R.power_orbit(ex);
            for (std::uint64_t e = 0; e < o.orbit.size(); ++e) {
                if (R.is_zero(o.orbit[e])) {
                    c.is_nilpotent[x] = 1;
                    c.nil_index[x] = e + 1;
                    break;
                }
            }
        }
    });
}

void fill_radical(const FiniteRing& R, StructuralCache& c) {
    std::uint64_t n = R.cardinality();
    // x in J(R) iff 1 - rx is a unit for every r
    parallel_chunks(n, scan_jobs(n), [&](unsigned, code_t lo, code_t hi) {
        for (code_t x = lo; x < hi; ++x) {
            Element ex = R.element(x);
            bool in = true;
            for (code_t r = 0; r < n && in; ++r)
                if (!c.is_unit[R.sub(R.one(), R.mul(R.element(r), ex)).code])
                    in = false;
            c.in_radical[x] = in ? 1 : 0;
        }
    });
}

void fill_radical_root(const FiniteRing& R, StructuralCache& c) {
    std::uint64_t n = R.cardinality();
    // All distinct powers of x are x^1 .. x^{k+l-1}, so scanning the orbit
    // finds the smallest witness exponent or proves there is none.
    parallel_chunks(n, scan_jobs(n), [&](unsigned, code_t lo, code_t hi) {
        for (code_t x = lo; x < hi; ++x) {
            PowerOrbit o = R.power_orbit(R.element(x));
            for (std::uint64_t e = 0; e < o.orbit.size(); ++e) {
                if (c.in_radical[o.orbit[e].code]) {
                    c.in_radical_root[x] = 1;
                    c.root_witness[x] = e + 1;
                    break;
                }
            }
        }
    });
}

void fill_idempotents(const FiniteRing& R, StructuralCache& c) {
    for (code_t x = 0; x < R.cardinality(); ++x) {
        Element ex = R.element(x);
        if (R.mul(ex, ex) == ex) c.is_idempotent[x] = 1;
    }
}

void fill_commutative(const FiniteRing& R, StructuralCache& c) {
    std::uint64_t n = R.cardinality();
    std::atomic<bool> comm{true};
    parallel_chunks(n, scan_jobs(n), [&](unsigned, code_t lo, code_t hi) {
        for (code_t x = lo; x < hi && comm.load(std::memory_order_relaxed);
             ++x) {
            Element ex = R.element(x);
            for (code_t y = x + 1; y < n; ++y) {
                Element ey = R.element(y);
                if (R.mul(ex, ey) != R.mul(ey, ex)) {
                    comm.store(false, std::memory_order_relaxed);
                    break;
                }
            }
        }
    });
    c.commutative = comm.load();
}

// Cross-checks that are cheap enough to run at fill time.  Full exhaustive
// variants live in the test suite.
void cross_check(const FiniteRing& R, StructuralCache& c) {
    // finite-ring theorem: sqrt J(R) = N(R), both sides computed independently
    for (code_t x = 0; x < R.cardinality(); ++x)
        if (c.is_nilpotent[x] != c.in_radical_root[x])
            throw falsification_error(
                "sqrt J(R) != N(R) in " + R.label() + " at x=" +
                R.format_element(R.element(x)));
    if (!c.is_unit[R.one().code])
        throw falsification_error("1 is not a unit in " + R.label());
    if (!c.in_radical[0])
        throw falsification_error("0 is not in J(R) in " + R.label());

    // J(R) is a two-sided ideal (bounded here; exhaustive in tests)
    std::uint64_t n = R.cardinality();
    if (n <= 4096) {
        for (Element x : c.radical) {
            for (Element y : c.radical)
                if (!c.in_radical[R.add(x, y).code])
                    throw falsification_error("J(R) not closed under + in " +
                                              R.label());
            for (code_t r = 0; r < n; ++r) {
                Element er = R.element(r);
                if (!c.in_radical[R.mul(er, x).code] ||
                    !c.in_radical[R.mul(x, er).code])
                    throw falsification_error(
                        "J(R) not closed under multiplication in " +
                        R.label());
            }
        }
    }
}

std::shared_ptr<const StructuralCache> compute_cache(const FiniteRing& R) {
    auto c = std::make_shared<StructuralCache>();
    std::uint64_t n = R.cardinality();
    c->is_unit.assign(n, 0);
    c->is_nilpotent.assign(n, 0);
    c->in_radical.assign(n, 0);
    c->in_radical_root.assign(n, 0);
    c->is_idempotent.assign(n, 0);
    c->unit_inv.assign(n, 0);
    c->nil_index.assign(n, 0);
    c->root_witness.assign(n, 0);

    fill_units(R, *c);
    fill_nilpotents(R, *c);
    fill_radical(R, *c);
    fill_radical_root(R, *c);
    fill_idempotents(R, *c);
    fill_commutative(R, *c);

    for (code_t x = 0; x < n; ++x) {
        if (c->is_unit[x]) c->units.push_back(R.element(x));
        if (c->is_nilpotent[x]) c->nilpotents.push_back(R.element(x));
        if (c->in_radical[x]) c->radical.push_back(R.element(x));
        if (c->in_radical_root[x]) c->radical_root.push_back(R.element(x));
        if (c->is_idempotent[x]) c->idempotents.push_back(R.element(x));
    }
    cross_check(R, *c);
    return c;
}

}  // namespace

const StructuralCache& structural_cache(const FiniteRing& R) {
    std::call_once(R.struct_once_, [&] { R.struct_cache_ = compute_cache(R); });
    return *R.struct_cache_;
}

namespace {

void check_member(const FiniteRing& R, Element x) {
    if (x.ring_id != R.id() || x.code >= R.cardinality())
        throw std::invalid_argument("element belongs to a different ring");
}

}  // namespace

std::vector<Element> units(const FiniteRing& R) {
    return structural_cache(R).units;
}

bool is_unit(const FiniteRing& R, Element x) {
    check_member(R, x);
    return structural_cache(R).is_unit[x.code] != 0;
}

Element unit_inverse(const FiniteRing& R, Element x) {
    check_member(R, x);
    const StructuralCache& c = structural_cache(R);
    if (!c.is_unit[x.code])
        throw std::invalid_argument("unit_inverse of a non-unit");
    return R.element(c.unit_inv[x.code]);
}

std::vector<Element> nilpotents(const FiniteRing& R) {
    return structural_cache(R).nilpotents;
}

std::optional<std::uint64_t> nilpotency_index(const FiniteRing& R, Element x) {
    check_member(R, x);
    const StructuralCache& c = structural_cache(R);
    if (!c.is_nilpotent[x.code]) return std::nullopt;
    return c.nil_index[x.code];
}

bool is_nilpotent(const FiniteRing& R, Element x) {
    check_member(R, x);
    return structural_cache(R).is_nilpotent[x.code] != 0;
}

std::vector<Element> jacobson_radical(const FiniteRing& R) {
    return structural_cache(R).radical;
}

bool in_jacobson_radical(const FiniteRing& R, Element x) {
    check_member(R, x);
    return structural_cache(R).in_radical[x.code] != 0;
}

std::vector<Element> sqrt_jacobson(const FiniteRing& R) {
    return structural_cache(R).radical_root;
}

std::optional<std::uint64_t> in_sqrt_jacobson(const FiniteRing& R, Element x) {
    check_member(R, x);
    const StructuralCache& c = structural_cache(R);
    if (!c.in_radical_root[x.code]) return std::nullopt;
    return c.root_witness[x.code];
}

std::vector<Element> idempotents(const FiniteRing& R) {
    return structural_cache(R).idempotents;
}

bool is_idempotent(const FiniteRing& R, Element x) {
    check_member(R, x);
    return structural_cache(R).is_idempotent[x.code] != 0;
}

std::vector<Element> commutant(const FiniteRing& R, Element a) {
    std::vector<Element> out;
    if (structural_cache(R).commutative) {
        out.reserve(R.cardinality());
        for (code_t x = 0; x < R.cardinality(); ++x)
            out.push_back(R.element(x));
        return out;
    }
    for (code_t x = 0; x < R.cardinality(); ++x) {
        Element ex = R.element(x);
        if (R.mul(ex, a) == R.mul(a, ex)) out.push_back(ex);
    }
    return out;
}

bool commutes_with_all(const FiniteRing& R, Element x,
                       const std::vector<Element>& ys) {
    for (Element y : ys)
        if (R.mul(x, y) != R.mul(y, x)) return false;
    return true;
}

std::vector<Element> double_commutant(const FiniteRing& R, Element a) {
    if (structural_cache(R).commutative) return commutant(R, a);
    std::vector<Element> com = commutant(R, a);
    std::vector<Element> out;
    for (code_t x = 0; x < R.cardinality(); ++x) {
        Element ex = R.element(x);
        if (commutes_with_all(R, ex, com)) out.push_back(ex);
    }
    return out;
}

namespace {

// Quotient by the radical: codes index canonical coset representatives, the
// minimum parent code in each coset.  Code 0 is the coset J(R) itself.
class QuotientOps final : public RingOps {
public:
    QuotientOps(RingPtr parent, std::vector<code_t> reps,
                std::vector<code_t> to_quot)
        : parent_(std::move(parent)),
          reps_(std::move(reps)),
          to_quot_(std::move(to_quot)) {}

    std::uint64_t card() const override { return reps_.size(); }
    code_t one() const override { return to_quot_[parent_->one().code]; }
    code_t add(code_t x, code_t y) const override {
        return to_quot_[parent_
                            ->add(parent_->element(reps_[x]),
                                  parent_->element(reps_[y]))
                            .code];
    }
    code_t neg(code_t x) const override {
        return to_quot_[parent_->neg(parent_->element(reps_[x])).code];
    }
    code_t mul(code_t x, code_t y) const override {
        return to_quot_[parent_
                            ->mul(parent_->element(reps_[x]),
                                  parent_->element(reps_[y]))
                            .code];
    }
    code_t from_int(std::int64_t v) const override {
        return to_quot_[parent_->from_int(v).code];
    }
    void format(code_t x, std::string& out) const override {
        out += parent_->format_element(parent_->element(reps_[x]));
    }
    code_t parse(const std::string& text, std::size_t& pos) const override {
        // any parent literal is accepted and lands on its coset; quotient
        // rings never nest inside other backends, so take the whole tail
        Element e = parent_->parse_element(text.substr(pos));
        pos = text.size();
        return to_quot_[e.code];
    }

private:
    RingPtr parent_;
    std::vector<code_t> reps_;
    std::vector<code_t> to_quot_;
};

}  // namespace

Quotient quotient_by_radical(const RingPtr& R) {
    const StructuralCache& c = structural_cache(*R);
    std::uint64_t n = R->cardinality();

    // coset minimum for every element
    std::vector<code_t> coset_min(n);
    for (code_t x = 0; x < n; ++x) {
        Element ex = R->element(x);
        code_t m = x;
        for (Element j : c.radical) m = std::min(m, R->add(ex, j).code);
        coset_min[x] = m;
    }

    std::vector<code_t> reps;
    std::vector<code_t> to_quot(n, 0);
    for (code_t x = 0; x < n; ++x)
        if (coset_min[x] == x) {
            to_quot[x] = static_cast<code_t>(reps.size());
            reps.push_back(x);
        }
    for (code_t x = 0; x < n; ++x) to_quot[x] = to_quot[coset_min[x]];

    auto ops = std::make_unique<QuotientOps>(R, reps, to_quot);
    BuildOptions opts;
    opts.cap = UINT64_MAX;
    RingPtr Q = FiniteRing::adopt(std::move(ops), R->label() + "/J", opts);

    std::uint32_t parent_id = R->id();
    Quotient q;
    q.ring = Q;
    q.projection = [Q, parent_id, map = std::move(to_quot)](Element x) {
        if (x.ring_id != parent_id || x.code >= map.size())
            throw std::invalid_argument("projection of a foreign element");
        return Q->element(map[x.code]);
    };
    return q;
}

}  // namespace ringlab
