#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcinv/ring.hpp"
#include "bcinv/subset.hpp"
#include "bcinv/tables.hpp"

namespace bcinv {

enum class InverseStatus { found, not_found };

enum class InverseMethod { definition_search, lemma_characterization, closed_formula };

inline const char* to_string(InverseMethod m) {
    switch (m) {
        case InverseMethod::definition_search: return "definition-search";
        case InverseMethod::lemma_characterization: return "lemma-characterization";
        case InverseMethod::closed_formula: return "closed-formula";
    }
    return "?";
}

/// A named element that witnesses one of the defining memberships or
/// equations of a computed inverse (e.g. r with y = b*r*y).
struct Witness {
    std::string label;
    index_t value;
};

/// Outcome of an inverse computation. Non-existence is a normal status;
/// only internal inconsistencies (a uniqueness theorem failing, a closed
/// formula disagreeing with its scan) raise InternalCheckError.
struct InverseResult {
    InverseStatus status = InverseStatus::not_found;
    index_t value = kNoIndex;
    InverseMethod method = InverseMethod::definition_search;
    std::vector<Witness> witnesses;

    bool found() const { return status == InverseStatus::found; }

    static InverseResult make_found(index_t v, InverseMethod m, std::vector<Witness> w = {}) {
        return InverseResult{InverseStatus::found, v, m, std::move(w)};
    }
    static InverseResult make_not_found(InverseMethod m) {
        return InverseResult{InverseStatus::not_found, kNoIndex, m, {}};
    }
};

/// All inner inverses of a: the x with a = a*x*a.
inline Subset inner_inverses(const Ring& ring, index_t a) {
    Subset out(ring);
    for (index_t x = 0; x < ring.order(); ++x)
        if (ring.mul(ring.mul(a, x), a) == a) out.insert(x);
    return out;
}

inline bool is_regular(const Ring& ring, index_t a) {
    for (index_t x = 0; x < ring.order(); ++x)
        if (ring.mul(ring.mul(a, x), a) == a) return true;
    return false;
}

/// The unique x with axa = a, xax = x and ax = xa, when it exists.
inline InverseResult group_inverse(const Ring& ring, index_t a) {
    index_t found = kNoIndex;
    for (index_t x = 0; x < ring.order(); ++x) {
        index_t ax = ring.mul(a, x);
        if (ax != ring.mul(x, a)) continue;
        if (ring.mul(ax, a) != a) continue;
        if (ring.mul(x, ax) != x) continue;
        if (found != kNoIndex)
            throw InternalCheckError("group_inverse: two distinct group inverses of " +
                                     ring.format_element(a) + " in " + ring.spec_string());
        found = x;
    }
    if (found == kNoIndex) return InverseResult::make_not_found(InverseMethod::definition_search);
    return InverseResult::make_found(found, InverseMethod::definition_search);
}

struct DrazinResult {
    index_t value;
    std::uint32_t index;  // smallest j >= 1 with a^(j+1) x = a^j
};

/// Drazin inverse with its index. Exists for every element of a finite ring;
/// the index search is bounded by the ring order (powers repeat by then).
inline std::optional<DrazinResult> drazin_inverse(const Ring& ring, index_t a) {
    index_t aj = a;
    for (std::uint32_t j = 1; j <= ring.order(); ++j) {
        index_t aj1 = ring.mul(aj, a);
        index_t found = kNoIndex;
        for (index_t x = 0; x < ring.order(); ++x) {
            if (ring.mul(a, x) != ring.mul(x, a)) continue;
            if (ring.mul(ring.mul(x, a), x) != x) continue;
            if (ring.mul(aj1, x) != aj) continue;
            if (found != kNoIndex)
                throw InternalCheckError("drazin_inverse: two candidates at index " +
                                         std::to_string(j) + " for " + ring.format_element(a) +
                                         " in " + ring.spec_string());
            found = x;
        }
        if (found != kNoIndex) return DrazinResult{found, j};
        aj = aj1;
    }
    return std::nullopt;
}

/// Acceptance predicate of the (b,c)-inverse definition:
/// y in bRy, y in yRc, y*a*b = b, c*a*y = c.
inline bool accepts_bc(const Ring& ring, index_t a, index_t b, index_t c, index_t y) {
    if (ring.mul(ring.mul(y, a), b) != b) return false;
    if (ring.mul(ring.mul(c, a), y) != c) return false;
    bool in_bRy = false;
    for (index_t r = 0; r < ring.order(); ++r) {
        if (ring.mul(ring.mul(b, r), y) == y) {
            in_bRy = true;
            break;
        }
    }
    if (!in_bRy) return false;
    for (index_t s = 0; s < ring.order(); ++s)
        if (ring.mul(ring.mul(y, s), c) == y) return true;
    return false;
}

/// Acceptance predicate of the hybrid (b,c)-inverse: yay = y, yR = bR, r(y) = r(c).
inline bool accepts_hybrid(const Ring& ring, index_t a, index_t b, index_t c, index_t y) {
    if (ring.mul(ring.mul(y, a), y) != y) return false;
    return right_ideal(ring, y) == right_ideal(ring, b) &&
           right_annihilator(ring, y) == right_annihilator(ring, c);
}

inline bool accepts_hybrid(const Ring& ring, const RingTables& tab, index_t a, index_t b,
                           index_t c, index_t y) {
    if (ring.mul(ring.mul(y, a), y) != y) return false;
    return tab.right_ideal(y) == tab.right_ideal(b) && tab.right_ann(y) == tab.right_ann(c);
}

/// Acceptance predicate of the annihilator (b,c)-inverse: yay = y, l(y) = l(b), r(y) = r(c).
inline bool accepts_annihilator(const Ring& ring, index_t a, index_t b, index_t c, index_t y) {
    if (ring.mul(ring.mul(y, a), y) != y) return false;
    return left_annihilator(ring, y) == left_annihilator(ring, b) &&
           right_annihilator(ring, y) == right_annihilator(ring, c);
}

inline bool accepts_annihilator(const Ring& ring, const RingTables& tab, index_t a, index_t b,
                                index_t c, index_t y) {
    if (ring.mul(ring.mul(y, a), y) != y) return false;
    return tab.left_ann(y) == tab.left_ann(b) && tab.right_ann(y) == tab.right_ann(c);
}

/// The (b,c)-inverse of a by exhaustive definition scan. Records witnesses
/// r, s with y = b*r*y = y*s*c. At most one element may pass the scan;
/// a second acceptor is an engine bug.
inline InverseResult bc_inverse(const Ring& ring, index_t a, index_t b, index_t c) {
    index_t found = kNoIndex, wit_r = kNoIndex, wit_s = kNoIndex;
    for (index_t y = 0; y < ring.order(); ++y) {
        if (ring.mul(ring.mul(y, a), b) != b) continue;
        if (ring.mul(ring.mul(c, a), y) != c) continue;
        index_t r = kNoIndex, s = kNoIndex;
        for (index_t i = 0; i < ring.order(); ++i) {
            if (ring.mul(ring.mul(b, i), y) == y) {
                r = i;
                break;
            }
        }
        if (r == kNoIndex) continue;
        for (index_t i = 0; i < ring.order(); ++i) {
            if (ring.mul(ring.mul(y, i), c) == y) {
                s = i;
                break;
            }
        }
        if (s == kNoIndex) continue;
        if (found != kNoIndex)
            throw InternalCheckError("bc_inverse: two acceptors " + ring.format_element(found) +
                                     " and " + ring.format_element(y) + " for (a,b,c)=(" +
                                     ring.format_element(a) + "," + ring.format_element(b) + "," +
                                     ring.format_element(c) + ") in " + ring.spec_string());
        found = y;
        wit_r = r;
        wit_s = s;
    }
    if (found == kNoIndex) return InverseResult::make_not_found(InverseMethod::definition_search);
    return InverseResult::make_found(found, InverseMethod::definition_search,
                                     {{"r", wit_r}, {"s", wit_s}});
}

/// Existence of the (b,c)-inverse via the principal-ideal criterion on
/// t = c*a*b: Rb = Rt and cR = tR.
inline bool bc_exists_via_ideals(const Ring& ring, index_t a, index_t b, index_t c) {
    index_t t = ring.mul(ring.mul(c, a), b);
    return left_ideal(ring, b) == left_ideal(ring, t) &&
           right_ideal(ring, c) == right_ideal(ring, t);
}

/// The (b,c)-inverse through the outer-inverse characterization
/// yay = y, yR = bR, Ry = Rc. Cross-checked against the definition scan;
/// disagreement is an engine bug.
inline InverseResult bc_inverse_via_lemma(const Ring& ring, index_t a, index_t b, index_t c) {
    Subset bR = right_ideal(ring, b);
    Subset Rc = left_ideal(ring, c);
    index_t found = kNoIndex;
    for (index_t y = 0; y < ring.order(); ++y) {
        if (ring.mul(ring.mul(y, a), y) != y) continue;
        if (right_ideal(ring, y) != bR) continue;
        if (left_ideal(ring, y) != Rc) continue;
        if (found != kNoIndex)
            throw InternalCheckError("bc_inverse_via_lemma: two acceptors in " +
                                     ring.spec_string());
        found = y;
    }
    InverseResult by_definition = bc_inverse(ring, a, b, c);
    bool agree = by_definition.found() ? (found == by_definition.value) : (found == kNoIndex);
    if (!agree)
        throw InternalCheckError("bc_inverse_via_lemma disagrees with the definition scan for "
                                 "(a,b,c)=(" +
                                 ring.format_element(a) + "," + ring.format_element(b) + "," +
                                 ring.format_element(c) + ") in " + ring.spec_string());
    if (found == kNoIndex)
        return InverseResult::make_not_found(InverseMethod::lemma_characterization);
    return InverseResult::make_found(found, InverseMethod::lemma_characterization);
}

/// The hybrid (b,c)-inverse of a (yay = y, yR = bR, r(y) = r(c)), unique
/// when it exists.
inline InverseResult hybrid_bc_inverse(const Ring& ring, index_t a, index_t b, index_t c) {
    index_t found = kNoIndex;
    for (index_t y = 0; y < ring.order(); ++y) {
        if (!accepts_hybrid(ring, a, b, c, y)) continue;
        if (found != kNoIndex)
            throw InternalCheckError("hybrid_bc_inverse: two acceptors in " + ring.spec_string());
        found = y;
    }
    if (found == kNoIndex)
        return InverseResult::make_not_found(InverseMethod::definition_search);
    return InverseResult::make_found(found, InverseMethod::definition_search);
}

/// The annihilator (b,c)-inverse of a (yay = y, l(y) = l(b), r(y) = r(c)).
inline InverseResult annihilator_bc_inverse(const Ring& ring, index_t a, index_t b, index_t c) {
    index_t found = kNoIndex;
    for (index_t y = 0; y < ring.order(); ++y) {
        if (!accepts_annihilator(ring, a, b, c, y)) continue;
        if (found != kNoIndex)
            throw InternalCheckError("annihilator_bc_inverse: two acceptors in " +
                                     ring.spec_string());
        found = y;
    }
    if (found == kNoIndex)
        return InverseResult::make_not_found(InverseMethod::definition_search);
    return InverseResult::make_found(found, InverseMethod::definition_search);
}

/// Bott-Duffin (e,f)-inverse: y = ey = yf, yae = e, fay = f. When e = f the
/// scan is cross-checked against the closed form e*(ae+1-e)^(-1).
inline InverseResult bott_duffin(const Ring& ring, index_t a, index_t e, index_t f) {
    if (!ring.is_idempotent(e))
        throw std::invalid_argument("bott_duffin: e = " + ring.format_element(e) +
                                    " is not idempotent");
    if (!ring.is_idempotent(f))
        throw std::invalid_argument("bott_duffin: f = " + ring.format_element(f) +
                                    " is not idempotent");
    index_t found = kNoIndex;
    for (index_t y = 0; y < ring.order(); ++y) {
        if (ring.mul(e, y) != y) continue;
        if (ring.mul(y, f) != y) continue;
        if (ring.mul(ring.mul(y, a), e) != e) continue;
        if (ring.mul(ring.mul(f, a), y) != f) continue;
        if (found != kNoIndex)
            throw InternalCheckError("bott_duffin: two acceptors in " + ring.spec_string());
        found = y;
    }
    if (e == f) {
        index_t u = ring.add(ring.mul(a, e), ring.sub(ring.one(), e));
        std::optional<index_t> u_inv = ring.try_unit_inverse(u);
        index_t by_formula = u_inv ? ring.mul(e, *u_inv) : kNoIndex;
        if (by_formula != found)
            throw InternalCheckError("bott_duffin: closed form disagrees with the scan for a=" +
                                     ring.format_element(a) + ", e=" + ring.format_element(e) +
                                     " in " + ring.spec_string());
    }
    if (found == kNoIndex)
        return InverseResult::make_not_found(InverseMethod::definition_search);
    return InverseResult::make_found(found, InverseMethod::definition_search);
}

/// Image-kernel (p,q)-inverse: the unique y with yay = y, yaR = pR and
/// (1-ay)R = qR.
inline InverseResult image_kernel_inverse(const Ring& ring, index_t a, index_t p, index_t q) {
    if (!ring.is_idempotent(p))
        throw std::invalid_argument("image_kernel_inverse: p = " + ring.format_element(p) +
                                    " is not idempotent");
    if (!ring.is_idempotent(q))
        throw std::invalid_argument("image_kernel_inverse: q = " + ring.format_element(q) +
                                    " is not idempotent");
    Subset pR = right_ideal(ring, p);
    Subset qR = right_ideal(ring, q);
    index_t found = kNoIndex;
    for (index_t y = 0; y < ring.order(); ++y) {
        if (ring.mul(ring.mul(y, a), y) != y) continue;
        if (right_ideal(ring, ring.mul(y, a)) != pR) continue;
        if (right_ideal(ring, ring.sub(ring.one(), ring.mul(a, y))) != qR) continue;
        if (found != kNoIndex)
            throw InternalCheckError("image_kernel_inverse: two acceptors in " +
                                     ring.spec_string());
        found = y;
    }
    if (found == kNoIndex)
        return InverseResult::make_not_found(InverseMethod::definition_search);
    return InverseResult::make_found(found, InverseMethod::definition_search);
}

/// Moore-Penrose inverse under the ring's transpose involution: the unique x
/// with axa = a, xax = x, (ax)^T = ax, (xa)^T = xa.
inline InverseResult moore_penrose_inverse(const Ring& ring, index_t a) {
    index_t found = kNoIndex;
    for (index_t x = 0; x < ring.order(); ++x) {
        index_t ax = ring.mul(a, x), xa = ring.mul(x, a);
        if (ring.mul(ax, a) != a) continue;
        if (ring.mul(x, ax) != x) continue;
        if (ring.transpose(ax) != ax) continue;
        if (ring.transpose(xa) != xa) continue;
        if (found != kNoIndex)
            throw InternalCheckError("moore_penrose_inverse: two acceptors in " +
                                     ring.spec_string());
        found = x;
    }
    if (found == kNoIndex)
        return InverseResult::make_not_found(InverseMethod::definition_search);
    return InverseResult::make_found(found, InverseMethod::definition_search);
}

/// Moves a known (b,c)-inverse of a over to d: with e = b*b_inner, when
/// x = a_bc*d*e + 1 - e is a unit the (b,c)-inverse of d is x^(-1)*a_bc,
/// and when x is not a unit no (b,c)-inverse of d exists. Both branches are
/// verified against the definition scan.
inline InverseResult transfer_d_inverse(const Ring& ring, index_t a, index_t d, index_t b,
                                        index_t c, index_t b_inner) {
    if (ring.mul(ring.mul(b, b_inner), b) != b)
        throw std::invalid_argument("transfer_d_inverse: " + ring.format_element(b_inner) +
                                    " is not an inner inverse of " + ring.format_element(b));
    InverseResult a_bc = bc_inverse(ring, a, b, c);
    if (!a_bc.found())
        throw std::invalid_argument("transfer_d_inverse: a = " + ring.format_element(a) +
                                    " has no (b,c)-inverse");
    index_t e = ring.mul(b, b_inner);
    index_t x = ring.add(ring.mul(ring.mul(a_bc.value, d), e), ring.sub(ring.one(), e));
    InverseResult by_scan = bc_inverse(ring, d, b, c);
    std::optional<index_t> x_inv = ring.try_unit_inverse(x);
    if (!x_inv) {
        if (by_scan.found())
            throw InternalCheckError("transfer_d_inverse: unit test says no inverse but the scan "
                                     "found one in " +
                                     ring.spec_string());
        return InverseResult::make_not_found(InverseMethod::closed_formula);
    }
    index_t value = ring.mul(*x_inv, a_bc.value);
    if (!by_scan.found() || by_scan.value != value)
        throw InternalCheckError("transfer_d_inverse: formula value disagrees with the scan in " +
                                 ring.spec_string());
    return InverseResult::make_found(value, InverseMethod::closed_formula,
                                     {{"e", e}, {"x", x}, {"x_inverse", *x_inv}});
}

/// Dual transfer: with f = c_inner*c, d's (b,c)-inverse is
/// a_bc*(f*d*a_bc + 1 - f)^(-1) exactly when the argument is a unit.
inline InverseResult transfer_d_inverse_dual(const Ring& ring, index_t a, index_t d, index_t b,
                                             index_t c, index_t c_inner) {
    if (ring.mul(ring.mul(c, c_inner), c) != c)
        throw std::invalid_argument("transfer_d_inverse_dual: " + ring.format_element(c_inner) +
                                    " is not an inner inverse of " + ring.format_element(c));
    InverseResult a_bc = bc_inverse(ring, a, b, c);
    if (!a_bc.found())
        throw std::invalid_argument("transfer_d_inverse_dual: a = " + ring.format_element(a) +
                                    " has no (b,c)-inverse");
    index_t f = ring.mul(c_inner, c);
    index_t x = ring.add(ring.mul(ring.mul(f, d), a_bc.value), ring.sub(ring.one(), f));
    InverseResult by_scan = bc_inverse(ring, d, b, c);
    std::optional<index_t> x_inv = ring.try_unit_inverse(x);
    if (!x_inv) {
        if (by_scan.found())
            throw InternalCheckError("transfer_d_inverse_dual: unit test says no inverse but the "
                                     "scan found one in " +
                                     ring.spec_string());
        return InverseResult::make_not_found(InverseMethod::closed_formula);
    }
    index_t value = ring.mul(a_bc.value, *x_inv);
    if (!by_scan.found() || by_scan.value != value)
        throw InternalCheckError(
            "transfer_d_inverse_dual: formula value disagrees with the scan in " +
            ring.spec_string());
    return InverseResult::make_found(value, InverseMethod::closed_formula,
                                     {{"f", f}, {"x", x}, {"x_inverse", *x_inv}});
}

/// For an outer inverse y of a, the pair (y*a, a*y); both are idempotent.
inline std::pair<index_t, index_t> bc_idempotents(const Ring& ring, index_t a, index_t y) {
    if (ring.mul(ring.mul(y, a), y) != y)
        throw std::invalid_argument("bc_idempotents: " + ring.format_element(y) +
                                    " is not an outer inverse of " + ring.format_element(a));
    index_t ya = ring.mul(y, a), ay = ring.mul(a, y);
    if (!ring.is_idempotent(ya) || !ring.is_idempotent(ay))
        throw InternalCheckError("bc_idempotents: products of an outer inverse failed to be "
                                 "idempotent in " +
                                 ring.spec_string());
    return {ya, ay};
}

// Element-level conveniences. All require the elements to share one ring.

namespace detail {
inline const Ring& common_ring(std::initializer_list<const Element*> xs) {
    const Ring* ring = nullptr;
    for (const Element* x : xs) {
        if (!ring) ring = &x->ring();
        if (&x->ring() != ring)
            throw std::invalid_argument("elements belong to different rings");
    }
    return *ring;
}
}  // namespace detail

inline Subset inner_inverses(Element a) { return inner_inverses(a.ring(), a.index()); }
inline bool is_regular(Element a) { return is_regular(a.ring(), a.index()); }
inline InverseResult group_inverse(Element a) { return group_inverse(a.ring(), a.index()); }
inline std::optional<DrazinResult> drazin_inverse(Element a) {
    return drazin_inverse(a.ring(), a.index());
}
inline InverseResult bc_inverse(Element a, Element b, Element c) {
    const Ring& ring = detail::common_ring({&a, &b, &c});
    return bc_inverse(ring, a.index(), b.index(), c.index());
}
inline InverseResult bc_inverse_via_lemma(Element a, Element b, Element c) {
    const Ring& ring = detail::common_ring({&a, &b, &c});
    return bc_inverse_via_lemma(ring, a.index(), b.index(), c.index());
}
inline bool bc_exists_via_ideals(Element a, Element b, Element c) {
    const Ring& ring = detail::common_ring({&a, &b, &c});
    return bc_exists_via_ideals(ring, a.index(), b.index(), c.index());
}
inline InverseResult hybrid_bc_inverse(Element a, Element b, Element c) {
    const Ring& ring = detail::common_ring({&a, &b, &c});
    return hybrid_bc_inverse(ring, a.index(), b.index(), c.index());
}
inline InverseResult annihilator_bc_inverse(Element a, Element b, Element c) {
    const Ring& ring = detail::common_ring({&a, &b, &c});
    return annihilator_bc_inverse(ring, a.index(), b.index(), c.index());
}
inline InverseResult bott_duffin(Element a, Element e, Element f) {
    const Ring& ring = detail::common_ring({&a, &e, &f});
    return bott_duffin(ring, a.index(), e.index(), f.index());
}
inline InverseResult image_kernel_inverse(Element a, Element p, Element q) {
    const Ring& ring = detail::common_ring({&a, &p, &q});
    return image_kernel_inverse(ring, a.index(), p.index(), q.index());
}
inline InverseResult transfer_d_inverse(Element a, Element d, Element b, Element c,
                                        Element b_inner) {
    const Ring& ring = detail::common_ring({&a, &d, &b, &c, &b_inner});
    return transfer_d_inverse(ring, a.index(), d.index(), b.index(), c.index(), b_inner.index());
}
inline InverseResult transfer_d_inverse_dual(Element a, Element d, Element b, Element c,
                                             Element c_inner) {
    const Ring& ring = detail::common_ring({&a, &d, &b, &c, &c_inner});
    return transfer_d_inverse_dual(ring, a.index(), d.index(), b.index(), c.index(),
                                   c_inner.index());
}
inline std::pair<Element, Element> bc_idempotents(Element a, Element y) {
    const Ring& ring = detail::common_ring({&a, &y});
    auto [ya, ay] = bc_idempotents(ring, a.index(), y.index());
    return {Element(ring, ya), Element(ring, ay)};
}

}  // namespace bcinv
