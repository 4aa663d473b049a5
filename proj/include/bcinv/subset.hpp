#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "bcinv/ring.hpp"

namespace bcinv {

/// Dense membership map over a ring's element indices. Used for principal
/// one-sided ideals, annihilators and element-set products. Immutable value
/// semantics once built.
class Subset {
public:
    explicit Subset(const Ring& ring)
        : ring_(&ring), words_((ring.order() + 63) / 64, 0), count_(0) {}

    static Subset full(const Ring& ring) {
        Subset s(ring);
        for (index_t i = 0; i < ring.order(); ++i) s.insert(i);
        return s;
    }

    static Subset single(const Ring& ring, index_t x) {
        Subset s(ring);
        s.insert(x);
        return s;
    }

    const Ring& ring() const { return *ring_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(index_t x) const { return (words_[x >> 6] >> (x & 63)) & 1; }

    void insert(index_t x) {
        std::uint64_t& w = words_[x >> 6];
        std::uint64_t bit = std::uint64_t(1) << (x & 63);
        if (!(w & bit)) {
            w |= bit;
            ++count_;
        }
    }

    bool operator==(const Subset& other) const {
        require_same_ring(other);
        return words_ == other.words_;
    }
    bool operator!=(const Subset& other) const { return !(*this == other); }

    bool is_subset_of(const Subset& other) const {
        require_same_ring(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    /// Serialized form: the sorted list of member indices.
    std::vector<index_t> indices() const {
        std::vector<index_t> out;
        out.reserve(count_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                out.push_back(static_cast<index_t>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                fn(static_cast<index_t>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    friend Subset subset_intersection(const Subset& s, const Subset& t) {
        s.require_same_ring(t);
        Subset out(*s.ring_);
        for (std::size_t i = 0; i < s.words_.size(); ++i) {
            out.words_[i] = s.words_[i] & t.words_[i];
            out.count_ += std::size_t(std::popcount(out.words_[i]));
        }
        return out;
    }

private:
    void require_same_ring(const Subset& other) const {
        if (ring_ != other.ring_)
            throw std::invalid_argument("subsets of " + ring_->spec_string() + " and " +
                                        other.ring_->spec_string() + " cannot be combined");
    }

    const Ring* ring_;
    std::vector<std::uint64_t> words_;
    std::size_t count_;
};

/// aR = {a*x : x in R}, by full scan.
inline Subset right_ideal(const Ring& ring, index_t a) {
    Subset out(ring);
    for (index_t x = 0; x < ring.order(); ++x) out.insert(ring.mul(a, x));
    return out;
}

/// Ra = {x*a : x in R}.
inline Subset left_ideal(const Ring& ring, index_t a) {
    Subset out(ring);
    for (index_t x = 0; x < ring.order(); ++x) out.insert(ring.mul(x, a));
    return out;
}

/// xRz = {x*r*z : r in R}.
inline Subset sandwich_set(const Ring& ring, index_t x, index_t z) {
    Subset out(ring);
    for (index_t r = 0; r < ring.order(); ++r) out.insert(ring.mul(ring.mul(x, r), z));
    return out;
}

/// l(a) = {y : y*a = 0}.
inline Subset left_annihilator(const Ring& ring, index_t a) {
    Subset out(ring);
    for (index_t y = 0; y < ring.order(); ++y)
        if (ring.mul(y, a) == 0) out.insert(y);
    return out;
}

/// r(a) = {y : a*y = 0}.
inline Subset right_annihilator(const Ring& ring, index_t a) {
    Subset out(ring);
    for (index_t y = 0; y < ring.order(); ++y)
        if (ring.mul(a, y) == 0) out.insert(y);
    return out;
}

/// l(S) = {y : y*s = 0 for every s in S}. Scans the actual members, so no
/// assumption about S being an ideal is needed.
inline Subset left_annihilator(const Subset& s) {
    const Ring& ring = s.ring();
    std::vector<index_t> members = s.indices();
    Subset out(ring);
    for (index_t y = 0; y < ring.order(); ++y) {
        bool kills = true;
        for (index_t m : members) {
            if (ring.mul(y, m) != 0) {
                kills = false;
                break;
            }
        }
        if (kills) out.insert(y);
    }
    return out;
}

/// r(S) = {y : s*y = 0 for every s in S}.
inline Subset right_annihilator(const Subset& s) {
    const Ring& ring = s.ring();
    std::vector<index_t> members = s.indices();
    Subset out(ring);
    for (index_t y = 0; y < ring.order(); ++y) {
        bool kills = true;
        for (index_t m : members) {
            if (ring.mul(m, y) != 0) {
                kills = false;
                break;
            }
        }
        if (kills) out.insert(y);
    }
    return out;
}

/// (rl(a), lr(a)).
inline std::pair<Subset, Subset> double_annihilators(const Ring& ring, index_t a) {
    return {right_annihilator(left_annihilator(ring, a)),
            left_annihilator(right_annihilator(ring, a))};
}

/// {s + t : s in S, t in T}; stops early once every element is reached.
inline Subset subset_sum(const Subset& s, const Subset& t) {
    const Ring& ring = s.ring();
    if (&ring != &t.ring())
        throw std::invalid_argument("subset_sum: subsets belong to different rings");
    Subset out(ring);
    std::vector<index_t> left = s.indices(), right = t.indices();
    for (index_t a : left) {
        for (index_t b : right) out.insert(ring.add(a, b));
        if (out.size() == ring.order()) break;
    }
    return out;
}

inline bool subset_equal(const Subset& s, const Subset& t) { return s == t; }

/// True iff S + T = R and S meets T only in 0.
inline bool is_direct_sum_of_ring(const Subset& s, const Subset& t) {
    Subset meet = subset_intersection(s, t);
    if (meet.size() != 1 || !meet.contains(0)) return false;
    return subset_sum(s, t).size() == s.ring().order();
}

// Element-level conveniences.
inline Subset right_ideal(Element a) { return right_ideal(a.ring(), a.index()); }
inline Subset left_ideal(Element a) { return left_ideal(a.ring(), a.index()); }
inline Subset sandwich_set(Element x, Element z) {
    if (&x.ring() != &z.ring())
        throw std::invalid_argument("sandwich_set: elements belong to different rings");
    return sandwich_set(x.ring(), x.index(), z.index());
}
inline Subset left_annihilator(Element a) { return left_annihilator(a.ring(), a.index()); }
inline Subset right_annihilator(Element a) { return right_annihilator(a.ring(), a.index()); }
inline std::pair<Subset, Subset> double_annihilators(Element a) {
    return double_annihilators(a.ring(), a.index());
}

}  // namespace bcinv
