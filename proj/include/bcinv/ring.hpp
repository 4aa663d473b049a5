#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcinv {

/// Canonical element index inside a finite ring. Index 0 is always the zero
/// element; the unit's index is cached by the ring.
using index_t = std::uint32_t;

inline constexpr index_t kNoIndex = std::numeric_limits<index_t>::max();

/// Malformed ring-spec or element-literal text.
class SpecParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The described ring is larger than the configured cardinality cap.
class CardinalityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematically impossible situation (e.g. two distinct (b,c)-inverses).
/// Signals a bug in this library, never bad user input.
class InternalCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Splits on `sep`, ignoring separators nested inside parentheses.
inline std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') {
            ++depth;
        } else if (ch == ')') {
            --depth;
        } else if (ch == sep && depth == 0) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

inline std::uint64_t parse_uint(std::string_view token, std::string_view what) {
    if (token.empty())
        throw SpecParseError(std::string(what) + ": empty number in '" + std::string(token) + "'");
    std::uint64_t value = 0;
    for (char ch : token) {
        if (ch < '0' || ch > '9')
            throw SpecParseError(std::string(what) + ": '" + std::string(token) + "' is not a number");
        std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
            throw SpecParseError(std::string(what) + ": '" + std::string(token) + "' is out of range");
        value = value * 10 + digit;
    }
    return value;
}

}  // namespace detail

/// Description of a finite unital ring: a residue ring Z_n, a k-by-k matrix
/// ring over another spec, or a finite direct product.
struct RingSpec {
    enum class Kind { residue, matrix, product };

    Kind kind = Kind::residue;
    std::uint64_t modulus = 0;    // residue rings
    std::uint32_t dim = 0;        // matrix rings
    std::vector<RingSpec> parts;  // matrix: one entry-ring; product: the factors

    static RingSpec residue(std::uint64_t n) {
        RingSpec s;
        s.kind = Kind::residue;
        s.modulus = n;
        return s;
    }

    static RingSpec matrix(std::uint32_t k, RingSpec entries) {
        RingSpec s;
        s.kind = Kind::matrix;
        s.dim = k;
        s.parts.push_back(std::move(entries));
        return s;
    }

    static RingSpec product(std::vector<RingSpec> factors) {
        RingSpec s;
        s.kind = Kind::product;
        s.parts = std::move(factors);
        return s;
    }

    std::string str() const {
        switch (kind) {
            case Kind::residue:
                return "zn:" + std::to_string(modulus);
            case Kind::matrix:
                return "mat:" + std::to_string(dim) + ":" + parts.front().str();
            case Kind::product: {
                std::string out = "prod:";
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (i != 0) out += ',';
                    out += parts[i].str();
                }
                return out;
            }
        }
        return {};
    }
};

/// Parses the ring-spec grammar `zn:<n> | mat:<k>:<spec> | prod:<spec>,<spec>,...`.
inline RingSpec parse_ring_spec(std::string_view text) {
    if (text.substr(0, 3) == "zn:") {
        return RingSpec::residue(detail::parse_uint(text.substr(3), "ring spec modulus"));
    }
    if (text.substr(0, 4) == "mat:") {
        std::string_view rest = text.substr(4);
        std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw SpecParseError("ring spec '" + std::string(text) + "': expected mat:<k>:<spec>");
        std::uint64_t k = detail::parse_uint(rest.substr(0, colon), "matrix dimension");
        return RingSpec::matrix(static_cast<std::uint32_t>(k), parse_ring_spec(rest.substr(colon + 1)));
    }
    if (text.substr(0, 5) == "prod:") {
        std::vector<RingSpec> factors;
        for (std::string_view part : detail::split_top_level(text.substr(5), ','))
            factors.push_back(parse_ring_spec(part));
        return RingSpec::product(std::move(factors));
    }
    throw SpecParseError("ring spec '" + std::string(text) +
                         "': expected zn:<n>, mat:<k>:<spec> or prod:<spec>,...");
}

/// Construction knobs for build_ring.
struct BuildOptions {
    enum class AxiomCheck { off, sampled, full };

    /// Construction fails when the ring would have more elements than this.
    std::uint64_t max_order = 65536;
    /// Spot-verify ring axioms on a pseudo-random sample (default) or on every
    /// triple (`full`; cubic in the order).
    AxiomCheck axiom_check = AxiomCheck::sampled;
    /// Memoize full add/mul tables when the order is at most this (hard cap 4096).
    index_t table_threshold = 4096;
};

namespace detail {

// Structural arithmetic node. Computes everything on the fly from the spec;
// the Ring facade layers memoized tables on top.
class RingImpl {
public:
    virtual ~RingImpl() = default;

    index_t order() const { return order_; }
    index_t one() const { return one_; }

    virtual index_t add(index_t, index_t) const = 0;
    virtual index_t mul(index_t, index_t) const = 0;
    virtual index_t neg(index_t) const = 0;
    virtual index_t transpose(index_t) const = 0;
    virtual std::string format(index_t) const = 0;
    virtual index_t parse(std::string_view) const = 0;

protected:
    index_t order_ = 0;
    index_t one_ = 0;
};

class ResidueImpl final : public RingImpl {
public:
    explicit ResidueImpl(std::uint64_t n) : n_(n) {
        order_ = static_cast<index_t>(n);
        one_ = 1;
    }

    index_t add(index_t x, index_t y) const override {
        std::uint64_t s = std::uint64_t(x) + y;
        return static_cast<index_t>(s >= n_ ? s - n_ : s);
    }
    index_t mul(index_t x, index_t y) const override {
        return static_cast<index_t>((std::uint64_t(x) * y) % n_);
    }
    index_t neg(index_t x) const override { return x == 0 ? 0 : static_cast<index_t>(n_ - x); }
    index_t transpose(index_t x) const override { return x; }

    std::string format(index_t x) const override { return std::to_string(x); }
    index_t parse(std::string_view text) const override {
        std::uint64_t v = parse_uint(text, "residue literal");
        if (v >= n_)
            throw SpecParseError("residue literal '" + std::string(text) + "' is not below " +
                                 std::to_string(n_));
        return static_cast<index_t>(v);
    }

private:
    std::uint64_t n_;
};

class MatrixImpl final : public RingImpl {
public:
    MatrixImpl(std::uint32_t k, std::unique_ptr<RingImpl> inner, index_t order)
        : k_(k), cells_(k * k), inner_(std::move(inner)) {
        order_ = order;
        // Row-major base-|inner| digit encoding, first cell most significant.
        strides_.resize(cells_);
        std::uint64_t s = 1;
        for (std::size_t i = cells_; i-- > 0;) {
            strides_[i] = s;
            s *= inner_->order();
        }
        Cells id{};
        for (std::uint32_t r = 0; r < k_; ++r) id[r * k_ + r] = inner_->one();
        one_ = encode(id);
    }

    index_t add(index_t x, index_t y) const override {
        Cells a = decode(x), b = decode(y), out{};
        for (std::uint32_t i = 0; i < cells_; ++i) out[i] = inner_->add(a[i], b[i]);
        return encode(out);
    }

    index_t mul(index_t x, index_t y) const override {
        Cells a = decode(x), b = decode(y), out{};
        for (std::uint32_t r = 0; r < k_; ++r)
            for (std::uint32_t c = 0; c < k_; ++c) {
                index_t acc = 0;
                for (std::uint32_t t = 0; t < k_; ++t)
                    acc = inner_->add(acc, inner_->mul(a[r * k_ + t], b[t * k_ + c]));
                out[r * k_ + c] = acc;
            }
        return encode(out);
    }

    index_t neg(index_t x) const override {
        Cells a = decode(x), out{};
        for (std::uint32_t i = 0; i < cells_; ++i) out[i] = inner_->neg(a[i]);
        return encode(out);
    }

    // Transpose combined with the entry ring's involution, so the result is an
    // anti-automorphism even when entries are themselves matrices.
    index_t transpose(index_t x) const override {
        Cells a = decode(x), out{};
        for (std::uint32_t r = 0; r < k_; ++r)
            for (std::uint32_t c = 0; c < k_; ++c)
                out[r * k_ + c] = inner_->transpose(a[c * k_ + r]);
        return encode(out);
    }

    std::string format(index_t x) const override {
        Cells a = decode(x);
        std::string out;
        for (std::uint32_t i = 0; i < cells_; ++i) {
            if (i != 0) out += ',';
            out += inner_->format(a[i]);
        }
        return out;
    }

    index_t parse(std::string_view text) const override {
        std::vector<std::string_view> entries = split_top_level(text, ',');
        if (entries.size() != cells_)
            throw SpecParseError("matrix literal '" + std::string(text) + "' needs " +
                                 std::to_string(cells_) + " row-major entries");
        Cells a{};
        for (std::uint32_t i = 0; i < cells_; ++i) a[i] = inner_->parse(entries[i]);
        return encode(a);
    }

private:
    // order <= 2^32 bounds k*k by 32; 64 leaves headroom.
    using Cells = std::array<index_t, 64>;

    Cells decode(index_t x) const {
        Cells out{};
        std::uint64_t rem = x;
        for (std::uint32_t i = 0; i < cells_; ++i) {
            out[i] = static_cast<index_t>(rem / strides_[i]);
            rem %= strides_[i];
        }
        return out;
    }

    index_t encode(const Cells& a) const {
        std::uint64_t idx = 0;
        for (std::uint32_t i = 0; i < cells_; ++i) idx += std::uint64_t(a[i]) * strides_[i];
        return static_cast<index_t>(idx);
    }

    std::uint32_t k_;
    std::uint32_t cells_;
    std::unique_ptr<RingImpl> inner_;
    std::vector<std::uint64_t> strides_;
};

class ProductImpl final : public RingImpl {
public:
    ProductImpl(std::vector<std::unique_ptr<RingImpl>> factors, index_t order)
        : factors_(std::move(factors)) {
        order_ = order;
        strides_.resize(factors_.size());
        std::uint64_t s = 1;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            strides_[i] = s;
            s *= factors_[i]->order();
        }
        Slots ones{};
        for (std::size_t i = 0; i < factors_.size(); ++i) ones[i] = factors_[i]->one();
        one_ = encode(ones);
    }

    index_t add(index_t x, index_t y) const override { return map2(x, y, &RingImpl::add); }
    index_t mul(index_t x, index_t y) const override { return map2(x, y, &RingImpl::mul); }
    index_t neg(index_t x) const override { return map1(x, &RingImpl::neg); }
    index_t transpose(index_t x) const override { return map1(x, &RingImpl::transpose); }

    std::string format(index_t x) const override {
        Slots a = decode(x);
        std::string out = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i != 0) out += ';';
            out += factors_[i]->format(a[i]);
        }
        return out + ")";
    }

    index_t parse(std::string_view text) const override {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')')
            throw SpecParseError("product literal '" + std::string(text) +
                                 "' must be parenthesized: (<lit>;<lit>;...)");
        std::vector<std::string_view> entries =
            split_top_level(text.substr(1, text.size() - 2), ';');
        if (entries.size() != factors_.size())
            throw SpecParseError("product literal '" + std::string(text) + "' needs " +
                                 std::to_string(factors_.size()) + " components");
        Slots a{};
        for (std::size_t i = 0; i < factors_.size(); ++i) a[i] = factors_[i]->parse(entries[i]);
        return encode(a);
    }

private:
    using Slots = std::array<index_t, 64>;

    Slots decode(index_t x) const {
        Slots out{};
        std::uint64_t rem = x;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            out[i] = static_cast<index_t>(rem / strides_[i]);
            rem %= strides_[i];
        }
        return out;
    }

    index_t encode(const Slots& a) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx += std::uint64_t(a[i]) * strides_[i];
        return static_cast<index_t>(idx);
    }

    index_t map1(index_t x, index_t (RingImpl::*op)(index_t) const) const {
        Slots a = decode(x), out{};
        for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (factors_[i].get()->*op)(a[i]);
        return encode(out);
    }

    index_t map2(index_t x, index_t y, index_t (RingImpl::*op)(index_t, index_t) const) const {
        Slots a = decode(x), b = decode(y), out{};
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out[i] = (factors_[i].get()->*op)(a[i], b[i]);
        return encode(out);
    }

    std::vector<std::unique_ptr<RingImpl>> factors_;
    std::vector<std::uint64_t> strides_;
};

// Validates the spec and returns the ring order, or throws.
inline std::uint64_t checked_order(const RingSpec& spec, const BuildOptions& options) {
    constexpr std::uint64_t kIndexLimit = std::numeric_limits<index_t>::max();
    const std::uint64_t cap = std::min(options.max_order, kIndexLimit);
    switch (spec.kind) {
        case RingSpec::Kind::residue: {
            if (spec.modulus < 2)
                throw SpecParseError("residue ring needs modulus >= 2, got " +
                                     std::to_string(spec.modulus));
            if (spec.modulus > cap)
                throw CardinalityError("ring " + spec.str() + " has " +
                                       std::to_string(spec.modulus) +
                                       " elements, above the cap of " + std::to_string(cap));
            return spec.modulus;
        }
        case RingSpec::Kind::matrix: {
            if (spec.dim < 1 || spec.dim > 8)
                throw SpecParseError("matrix ring dimension must be in 1..8, got " +
                                     std::to_string(spec.dim));
            if (spec.parts.size() != 1)
                throw SpecParseError("matrix ring needs exactly one entry-ring spec");
            std::uint64_t inner = checked_order(spec.parts.front(), options);
            std::uint64_t total = 1;
            for (std::uint32_t i = 0; i < spec.dim * spec.dim; ++i) {
                if (total > cap / inner)
                    throw CardinalityError("ring " + spec.str() + " exceeds the cap of " +
                                           std::to_string(cap) + " elements");
                total *= inner;
            }
            return total;
        }
        case RingSpec::Kind::product: {
            if (spec.parts.empty())
                throw SpecParseError("product ring needs at least one factor");
            if (spec.parts.size() > 64)
                throw SpecParseError("product ring supports at most 64 factors");
            std::uint64_t total = 1;
            for (const RingSpec& part : spec.parts) {
                std::uint64_t inner = checked_order(part, options);
                if (total > cap / inner)
                    throw CardinalityError("ring " + spec.str() + " exceeds the cap of " +
                                           std::to_string(cap) + " elements");
                total *= inner;
            }
            return total;
        }
    }
    throw SpecParseError("unknown ring spec kind");
}

inline std::unique_ptr<RingImpl> build_impl(const RingSpec& spec, const BuildOptions& options) {
    switch (spec.kind) {
        case RingSpec::Kind::residue:
            return std::make_unique<ResidueImpl>(spec.modulus);
        case RingSpec::Kind::matrix: {
            index_t order = static_cast<index_t>(checked_order(spec, options));
            return std::make_unique<MatrixImpl>(spec.dim, build_impl(spec.parts.front(), options),
                                                order);
        }
        case RingSpec::Kind::product: {
            index_t order = static_cast<index_t>(checked_order(spec, options));
            std::vector<std::unique_ptr<RingImpl>> factors;
            factors.reserve(spec.parts.size());
            for (const RingSpec& part : spec.parts) factors.push_back(build_impl(part, options));
            return std::make_unique<ProductImpl>(std::move(factors), order);
        }
    }
    throw SpecParseError("unknown ring spec kind");
}

}  // namespace detail

/// A finite unital ring with deterministic element enumeration. Immutable
/// after construction; every operation is a pure function of its arguments
/// and safe to call from any number of threads.
///
/// Index arithmetic (`add`, `mul`, ...) assumes in-range indices; the Element
/// wrapper adds cross-ring and range validation for user-facing code.
class Ring {
public:
    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

    const RingSpec& spec() const { return spec_; }
    const std::string& spec_string() const { return spec_string_; }
    index_t order() const { return impl_->order(); }

    index_t zero() const { return 0; }
    index_t one() const { return impl_->one(); }

    index_t add(index_t x, index_t y) const {
        return add_tab_.empty() ? impl_->add(x, y) : add_tab_[flat(x, y)];
    }
    index_t mul(index_t x, index_t y) const {
        return mul_tab_.empty() ? impl_->mul(x, y) : mul_tab_[flat(x, y)];
    }
    index_t neg(index_t x) const { return neg_tab_.empty() ? impl_->neg(x) : neg_tab_[x]; }
    index_t sub(index_t x, index_t y) const { return add(x, neg(y)); }
    index_t transpose(index_t x) const {
        return trans_tab_.empty() ? impl_->transpose(x) : trans_tab_[x];
    }

    /// x^j for j >= 1, by binary exponentiation.
    index_t pow(index_t x, std::uint64_t j) const {
        if (j == 0) throw std::invalid_argument("pow: exponent must be >= 1");
        index_t base = x;
        index_t acc = kNoIndex;  // lazily avoids needing x^0
        while (j > 0) {
            if (j & 1) acc = (acc == kNoIndex) ? base : mul(acc, base);
            j >>= 1;
            if (j > 0) base = mul(base, base);
        }
        return acc;
    }

    bool is_idempotent(index_t x) const { return mul(x, x) == x; }

    /// Two-sided inverse found by full scan, or nullopt.
    std::optional<index_t> try_unit_inverse(index_t x) const {
        if (!unit_inv_.empty())
            return unit_inv_[x] == kNoIndex ? std::nullopt : std::optional<index_t>(unit_inv_[x]);
        for (index_t y = 0; y < order(); ++y)
            if (mul(x, y) == one() && mul(y, x) == one()) return y;
        return std::nullopt;
    }

    bool is_unit(index_t x) const { return try_unit_inverse(x).has_value(); }

    index_t unit_inverse(index_t x) const {
        std::optional<index_t> inv = try_unit_inverse(x);
        if (!inv)
            throw std::invalid_argument("unit_inverse: element " + format_element(x) +
                                        " is not a unit in " + spec_string_);
        return *inv;
    }

    std::string format_element(index_t x) const { return impl_->format(x); }

    index_t parse_element(std::string_view text) const {
        index_t idx = impl_->parse(text);
        if (idx >= order()) throw SpecParseError("element literal out of range");
        return idx;
    }

private:
    friend std::shared_ptr<const Ring> build_ring(const RingSpec&, const BuildOptions&);

    Ring(RingSpec spec, std::unique_ptr<const detail::RingImpl> impl, const BuildOptions& options)
        : spec_(std::move(spec)), spec_string_(spec_.str()), impl_(std::move(impl)) {
        const index_t n = impl_->order();
        const index_t threshold = std::min<index_t>(options.table_threshold, 4096);
        if (n <= threshold) {
            const std::size_t nn = std::size_t(n) * n;
            add_tab_.resize(nn);
            mul_tab_.resize(nn);
            neg_tab_.resize(n);
            trans_tab_.resize(n);
            for (index_t x = 0; x < n; ++x) {
                neg_tab_[x] = impl_->neg(x);
                trans_tab_[x] = impl_->transpose(x);
                for (index_t y = 0; y < n; ++y) {
                    add_tab_[flat(x, y)] = static_cast<std::uint16_t>(impl_->add(x, y));
                    mul_tab_[flat(x, y)] = static_cast<std::uint16_t>(impl_->mul(x, y));
                }
            }
            unit_inv_.assign(n, kNoIndex);
            for (index_t x = 0; x < n; ++x) {
                for (index_t y = 0; y < n; ++y) {
                    if (mul(x, y) == one() && mul(y, x) == one()) {
                        unit_inv_[x] = y;
                        break;
                    }
                }
            }
        }
        verify_axioms(options);
    }

    std::size_t flat(index_t x, index_t y) const { return std::size_t(x) * impl_->order() + y; }

    void check_triple(index_t x, index_t y, index_t z) const {
        bool ok = add(add(x, y), z) == add(x, add(y, z)) && add(x, y) == add(y, x) &&
                  mul(mul(x, y), z) == mul(x, mul(y, z)) &&
                  mul(x, add(y, z)) == add(mul(x, y), mul(x, z)) &&
                  mul(add(x, y), z) == add(mul(x, z), mul(y, z)) && add(x, 0) == x &&
                  add(x, neg(x)) == 0 && mul(x, one()) == x && mul(one(), x) == x;
        if (!ok)
            throw InternalCheckError("ring axioms violated in " + spec_string_ + " at (" +
                                     format_element(x) + ", " + format_element(y) + ", " +
                                     format_element(z) + ")");
    }

    void verify_axioms(const BuildOptions& options) const {
        const index_t n = impl_->order();
        if (options.axiom_check == BuildOptions::AxiomCheck::off) return;
        if (options.axiom_check == BuildOptions::AxiomCheck::full) {
            for (index_t x = 0; x < n; ++x)
                for (index_t y = 0; y < n; ++y)
                    for (index_t z = 0; z < n; ++z) check_triple(x, y, z);
            return;
        }
        std::uint64_t rng = 0x5eedULL ^ n;
        for (int i = 0; i < 128; ++i) {
            index_t x = static_cast<index_t>(detail::splitmix64(rng) % n);
            index_t y = static_cast<index_t>(detail::splitmix64(rng) % n);
            index_t z = static_cast<index_t>(detail::splitmix64(rng) % n);
            check_triple(x, y, z);
        }
    }

    RingSpec spec_;
    std::string spec_string_;
    std::unique_ptr<const detail::RingImpl> impl_;
    // Memoized operation tables (order <= threshold); u16 entries suffice below 65536.
    std::vector<std::uint16_t> add_tab_, mul_tab_;
    std::vector<index_t> neg_tab_, trans_tab_, unit_inv_;
};

using RingHandle = std::shared_ptr<const Ring>;

inline RingHandle build_ring(const RingSpec& spec, const BuildOptions& options = {}) {
    detail::checked_order(spec, options);
    std::unique_ptr<const detail::RingImpl> impl = detail::build_impl(spec, options);
    return std::shared_ptr<const Ring>(new Ring(spec, std::move(impl), options));
}

inline RingHandle build_ring(std::string_view spec_text, const BuildOptions& options = {}) {
    return build_ring(parse_ring_spec(spec_text), options);
}

/// An element of a specific Ring, identified by canonical index. Mixing
/// elements of different rings throws.
class Element {
public:
    Element(const Ring& ring, index_t index) : ring_(&ring), index_(index) {
        if (index >= ring.order())
            throw std::invalid_argument("element index " + std::to_string(index) +
                                        " out of range for " + ring.spec_string());
    }

    const Ring& ring() const { return *ring_; }
    index_t index() const { return index_; }
    std::string str() const { return ring_->format_element(index_); }

    friend Element operator+(Element x, Element y) {
        same_ring(x, y);
        return Element(*x.ring_, x.ring_->add(x.index_, y.index_));
    }
    friend Element operator*(Element x, Element y) {
        same_ring(x, y);
        return Element(*x.ring_, x.ring_->mul(x.index_, y.index_));
    }
    friend Element operator-(Element x, Element y) {
        same_ring(x, y);
        return Element(*x.ring_, x.ring_->sub(x.index_, y.index_));
    }
    friend Element operator-(Element x) { return Element(*x.ring_, x.ring_->neg(x.index_)); }
    friend bool operator==(Element x, Element y) {
        same_ring(x, y);
        return x.index_ == y.index_;
    }
    friend bool operator!=(Element x, Element y) { return !(x == y); }

private:
    static void same_ring(const Element& x, const Element& y) {
        if (x.ring_ != y.ring_)
            throw std::invalid_argument("elements of " + x.ring_->spec_string() + " and " +
                                        y.ring_->spec_string() + " cannot be combined");
    }

    const Ring* ring_;
    index_t index_;
};

inline Element add(Element x, Element y) { return x + y; }
inline Element mul(Element x, Element y) { return x * y; }
inline Element neg(Element x) { return -x; }
inline Element power(Element x, std::uint64_t j) {
    return Element(x.ring(), x.ring().pow(x.index(), j));
}
inline Element transpose(Element x) { return Element(x.ring(), x.ring().transpose(x.index())); }
inline bool is_idempotent(Element x) { return x.ring().is_idempotent(x.index()); }
inline bool is_unit(Element x) { return x.ring().is_unit(x.index()); }
inline Element unit_inverse(Element x) {
    return Element(x.ring(), x.ring().unit_inverse(x.index()));
}

}  // namespace bcinv
