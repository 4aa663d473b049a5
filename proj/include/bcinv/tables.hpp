#pragma once

#include <vector>

#include "bcinv/ring.hpp"
#include "bcinv/subset.hpp"

namespace bcinv {

/// Per-element lattice data for one ring, precomputed once so that sweep
/// loops reduce ideal and annihilator comparisons to bitmap equality.
/// Quadratic in the ring order to build; meant for rings small enough to
/// sweep exhaustively.
struct RingTables {
    explicit RingTables(const Ring& r) : ring(&r) {
        const index_t n = r.order();
        right_ideals.reserve(n);
        left_ideals.reserve(n);
        right_anns.reserve(n);
        left_anns.reserve(n);
        inner_inverses.reserve(n);
        idempotent.resize(n);
        regular.resize(n);
        e_choices.resize(n);
        f_choices.resize(n);
        for (index_t a = 0; a < n; ++a) {
            right_ideals.push_back(bcinv::right_ideal(r, a));
            left_ideals.push_back(bcinv::left_ideal(r, a));
            right_anns.push_back(bcinv::right_annihilator(r, a));
            left_anns.push_back(bcinv::left_annihilator(r, a));
            idempotent[a] = r.is_idempotent(a) ? 1 : 0;

            Subset inner(r);
            for (index_t x = 0; x < n; ++x)
                if (r.mul(r.mul(a, x), a) == a) inner.insert(x);
            regular[a] = inner.empty() ? 0 : 1;

            // Distinct idempotents a*a^- and a^-*a over all inner inverses a^-,
            // in ascending index order.
            Subset left_e(r), right_f(r);
            inner.for_each([&](index_t x) {
                left_e.insert(r.mul(a, x));
                right_f.insert(r.mul(x, a));
            });
            e_choices[a] = left_e.indices();
            f_choices[a] = right_f.indices();
            inner_inverses.push_back(std::move(inner));
        }
    }

    bool is_regular(index_t a) const { return regular[a] != 0; }
    bool is_idempotent(index_t a) const { return idempotent[a] != 0; }

    const Subset& right_ideal(index_t a) const { return right_ideals[a]; }
    const Subset& left_ideal(index_t a) const { return left_ideals[a]; }
    const Subset& right_ann(index_t a) const { return right_anns[a]; }
    const Subset& left_ann(index_t a) const { return left_anns[a]; }

    /// Existence of the (b,c)-inverse of a via the principal-ideal test on
    /// t = c*a*b: Rb = Rt and cR = tR.
    bool bc_exists(index_t a, index_t b, index_t c) const {
        index_t t = ring->mul(ring->mul(c, a), b);
        return left_ideals[b] == left_ideals[t] && right_ideals[c] == right_ideals[t];
    }

    const Ring* ring;
    std::vector<Subset> right_ideals, left_ideals, right_anns, left_anns;
    std::vector<Subset> inner_inverses;
    std::vector<char> idempotent, regular;
    std::vector<std::vector<index_t>> e_choices;  // {b * b^-} per b
    std::vector<std::vector<index_t>> f_choices;  // {c^- * c} per c
};

}  // namespace bcinv
