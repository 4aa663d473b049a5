#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcinv/harness.hpp"
#include "bcinv/inverses.hpp"
#include "bcinv/ring.hpp"
#include "bcinv/tables.hpp"

namespace bcinv {

/// Targets the miner can search for. Each one is an implication that is known
/// to fail in some ring but has no known finite witness; an empty sweep is
/// inconclusive, not a refutation.
///   iii-not-iv        r(t)=r(b), tR=cR holds, t not regular, yet Rt=Rb or
///                     l(t)=l(c) fails
///   v-not-i           l(t)=l(c), r(t)=r(b) holds, yet no (b,c)-inverse exists
///   annihilator-not-bc  an annihilator (b,c)-inverse exists, the plain
///                     (b,c)-inverse does not
inline const std::vector<std::string>& miner_targets() {
    static const std::vector<std::string> targets = {"iii-not-iv", "v-not-i",
                                                     "annihilator-not-bc"};
    return targets;
}

inline const std::vector<std::string>& miner_families() {
    static const std::vector<std::string> families = {"zn", "mat2"};
    return families;
}

struct MinerQuery {
    std::string target;
    std::string family = "zn";
    std::uint32_t max_n = 8;
    std::uint64_t budget = 50'000'000;  // triples examined across the whole sweep
    BuildOptions build;
};

struct MinerWitness {
    std::string ring;
    index_t a = 0, b = 0, c = 0;
    index_t t = 0;
    index_t y = kNoIndex;  // annihilator inverse, when the target involves one
    bool t_regular = false, b_regular = false, c_regular = false;
};

struct MinerReport {
    std::string target;
    std::string family;
    std::uint32_t max_n = 0;
    std::vector<std::string> rings;
    std::uint64_t instances = 0;
    std::uint64_t witness_count = 0;
    std::vector<MinerWitness> witnesses;  // first few, in sweep order
    bool budget_exhausted = false;

    bool none_found() const { return witness_count == 0; }
};

namespace detail {

constexpr std::size_t kMinerWitnessCap = 50;

inline bool miner_condition(const Ring& ring, const RingTables& tab, const std::string& target,
                            index_t a, index_t b, index_t c, MinerWitness& w) {
    const index_t t = ring.mul(ring.mul(c, a), b);
    w.t = t;
    w.t_regular = tab.is_regular(t);
    w.b_regular = tab.is_regular(b);
    w.c_regular = tab.is_regular(c);
    if (target == "iii-not-iv") {
        if (w.t_regular) return false;
        bool iii =
            tab.right_ann(t) == tab.right_ann(b) && tab.right_ideal(t) == tab.right_ideal(c);
        if (!iii) return false;
        bool iv = tab.left_ann(t) == tab.left_ann(c) && tab.left_ideal(t) == tab.left_ideal(b);
        return !iv;
    }
    if (target == "v-not-i") {
        bool v = tab.left_ann(t) == tab.left_ann(c) && tab.right_ann(t) == tab.right_ann(b);
        if (!v) return false;
        return !bc_inverse(ring, a, b, c).found();
    }
    if (target == "annihilator-not-bc") {
        index_t ann = kNoIndex;
        for (index_t y = 0; y < ring.order(); ++y) {
            if (accepts_annihilator(ring, tab, a, b, c, y)) {
                ann = y;
                break;
            }
        }
        if (ann == kNoIndex) return false;
        w.y = ann;
        return !bc_inverse(ring, a, b, c).found();
    }
    throw std::invalid_argument("unknown miner target: " + target);
}

}  // namespace detail

/// Re-derives a witness through the table-free engine primitives; a recorded
/// witness must replay to true.
inline bool replay_witness(const MinerWitness& w, const std::string& target,
                           const BuildOptions& build = {}) {
    RingHandle ring = build_ring(w.ring, build);
    const Ring& r = *ring;
    index_t t = r.mul(r.mul(w.c, w.a), w.b);
    if (t != w.t) return false;
    if (target == "iii-not-iv") {
        bool iii = right_annihilator(r, t) == right_annihilator(r, w.b) &&
                   right_ideal(r, t) == right_ideal(r, w.c);
        bool iv = left_annihilator(r, t) == left_annihilator(r, w.c) &&
                  left_ideal(r, t) == left_ideal(r, w.b);
        return !is_regular(r, t) && iii && !iv;
    }
    if (target == "v-not-i") {
        bool v = left_annihilator(r, t) == left_annihilator(r, w.c) &&
                 right_annihilator(r, t) == right_annihilator(r, w.b);
        return v && !bc_inverse(r, w.a, w.b, w.c).found();
    }
    if (target == "annihilator-not-bc") {
        return w.y != kNoIndex && accepts_annihilator(r, w.a, w.b, w.c, w.y) &&
               !bc_inverse(r, w.a, w.b, w.c).found();
    }
    throw std::invalid_argument("unknown miner target: " + target);
}

/// Sweeps a ring family for triples realizing the target gap. Deterministic:
/// rings in ascending modulus, triples in canonical (a,b,c) order. Stops when
/// the triple budget runs out and says so.
inline MinerReport mine_gap(const MinerQuery& query) {
    bool known_target = false;
    for (const std::string& t : miner_targets()) known_target |= (t == query.target);
    if (!known_target) throw std::invalid_argument("unknown miner target: " + query.target);
    if (query.family != "zn" && query.family != "mat2")
        throw std::invalid_argument("unknown ring family: " + query.family);
    if (query.budget == 0) throw std::invalid_argument("miner budget must be positive");

    MinerReport report;
    report.target = query.target;
    report.family = query.family;
    report.max_n = query.max_n;

    for (std::uint32_t n = 2; n <= query.max_n; ++n) {
        RingSpec spec = query.family == "zn"
                            ? RingSpec::residue(n)
                            : RingSpec::matrix(2, RingSpec::residue(n));
        RingHandle ring;
        try {
            ring = build_ring(spec, query.build);
        } catch (const CardinalityError&) {
            break;  // family members only grow from here
        }
        report.rings.push_back(ring->spec_string());
        RingTables tables(*ring);
        const index_t order = ring->order();
        for (index_t a = 0; a < order && !report.budget_exhausted; ++a) {
            for (index_t b = 0; b < order && !report.budget_exhausted; ++b) {
                for (index_t c = 0; c < order; ++c) {
                    if (report.instances == query.budget) {
                        report.budget_exhausted = true;
                        break;
                    }
                    ++report.instances;
                    MinerWitness w;
                    w.ring = ring->spec_string();
                    w.a = a;
                    w.b = b;
                    w.c = c;
                    if (detail::miner_condition(*ring, tables, query.target, a, b, c, w)) {
                        ++report.witness_count;
                        if (report.witnesses.size() < detail::kMinerWitnessCap)
                            report.witnesses.push_back(w);
                    }
                }
            }
        }
        if (report.budget_exhausted) break;
    }
    return report;
}

}  // namespace bcinv
