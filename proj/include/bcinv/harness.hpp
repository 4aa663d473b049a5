#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bcinv/inverses.hpp"
#include "bcinv/ring.hpp"
#include "bcinv/subset.hpp"
#include "bcinv/tables.hpp"

namespace bcinv {

/// The requested sweep is larger than the configured instance budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Counterexample {
    std::vector<std::pair<std::string, index_t>> inputs;  // named element indices
    std::string detail;                                   // which clause(s) failed
};

/// Verdict of one theorem sweep over one ring. `instances` counts tuples where
/// the theorem's hypothesis held; tuples where it did not are `vacuous`, never
/// hidden inside passes. Wall time is informational only and excluded from
/// structured records.
struct PropertyReport {
    std::string theorem;
    std::string ring;
    std::uint64_t instances = 0;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
    std::uint64_t vacuous = 0;
    std::optional<Counterexample> first_counterexample;
    double wall_ms = 0.0;

    bool pass() const { return failures == 0; }
};

struct CheckConfig {
    unsigned threads = 0;                       // 0 = available parallelism
    std::uint64_t max_instances = 200'000'000;  // per-sweep budget
};

namespace detail {

// Accumulates one hypothesis branch of a sweep. Failure records keep the
// smallest canonical instance key, so merged results do not depend on how
// the index space was chunked across threads.
struct BranchAcc {
    std::uint64_t instances = 0, passes = 0, vacuous = 0;
    std::uint64_t fail_key = std::uint64_t(-1);
    std::optional<Counterexample> fail;

    template <typename MakeCe>
    void record(bool hypothesis, bool ok, std::uint64_t key, MakeCe&& make_ce) {
        if (!hypothesis) {
            ++vacuous;
            return;
        }
        ++instances;
        if (ok) {
            ++passes;
            return;
        }
        if (key < fail_key) {
            fail_key = key;
            fail = make_ce();
        }
    }

    void merge(const BranchAcc& other) {
        instances += other.instances;
        passes += other.passes;
        vacuous += other.vacuous;
        if (other.fail_key < fail_key) {
            fail_key = other.fail_key;
            fail = other.fail;
        }
    }
};

inline unsigned effective_threads(unsigned requested, std::uint64_t total) {
    unsigned t = requested;
    if (t == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        t = hw ? hw : 1;
    }
    if (total < 4096) t = 1;  // below this, spawning costs more than it saves
    if (std::uint64_t(t) > total && total > 0) t = static_cast<unsigned>(total);
    return t ? t : 1;
}

// Splits [0, total) into contiguous chunks, runs `body(local, begin, end)` on
// each, and merges the locals in chunk order. Exceptions are rethrown, first
// chunk first, so engine assertions behave as in a serial run.
template <typename Local, typename Body>
Local chunked_sweep(std::uint64_t total, unsigned threads, Body&& body) {
    threads = effective_threads(threads, total);
    if (threads <= 1) {
        Local local{};
        body(local, std::uint64_t(0), total);
        return local;
    }
    std::vector<Local> locals(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::uint64_t chunk = total / threads, rem = total % threads, begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t size = chunk + (t < rem ? 1 : 0);
        pool.emplace_back([&body, &locals, &errors, t, begin, size] {
            try {
                body(locals[t], begin, begin + size);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
        begin += size;
    }
    for (std::thread& th : pool) th.join();
    for (std::exception_ptr& err : errors)
        if (err) std::rethrow_exception(err);
    Local out{};
    for (const Local& local : locals) out.merge(local);
    return out;
}

inline void require_budget(const char* what, std::uint64_t total, const CheckConfig& cfg) {
    if (total > cfg.max_instances)
        throw BudgetExceeded(std::string(what) + " needs " + std::to_string(total) +
                             " instances, above the budget of " +
                             std::to_string(cfg.max_instances));
}

inline Counterexample make_ce(std::initializer_list<std::pair<const char*, index_t>> inputs,
                              std::string detail) {
    Counterexample ce;
    for (const auto& [name, idx] : inputs) ce.inputs.emplace_back(name, idx);
    ce.detail = std::move(detail);
    return ce;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline PropertyReport finish(std::string id, const Ring& ring, const BranchAcc& acc, double ms) {
    PropertyReport r;
    r.theorem = std::move(id);
    r.ring = ring.spec_string();
    r.instances = acc.instances;
    r.passes = acc.passes;
    r.failures = acc.instances - acc.passes;
    r.vacuous = acc.vacuous;
    r.first_counterexample = acc.fail;
    r.wall_ms = ms;
    return r;
}

inline std::string flag(bool v) { return v ? "1" : "0"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-instance evaluators. Public so that failure records can be replayed
// through exactly the computation that produced them.
// ---------------------------------------------------------------------------

/// Truth values of the five existence conditions for the (b,c)-inverse of a,
/// with t = c*a*b:
///   i   a is (b,c)-invertible (definition scan)
///   ii  r(a) meets bR only in 0, and R = abR (+) r(c)
///   iii r(t) = r(b) and tR = cR
///   iv  l(t) = l(c) and Rt = Rb
///   v   l(t) = l(c) and r(t) = r(b)
struct ExistenceClauses {
    bool i = false, ii = false, iii = false, iv = false, v = false;
    bool t_regular = false, b_regular = false, c_regular = false;
    index_t t = 0;

    std::string detail() const {
        return "clauses i=" + detail::flag(i) + " ii=" + detail::flag(ii) +
               " iii=" + detail::flag(iii) + " iv=" + detail::flag(iv) + " v=" + detail::flag(v);
    }
};

inline ExistenceClauses existence_clauses(const Ring& ring, const RingTables& tab, index_t a,
                                          index_t b, index_t c) {
    ExistenceClauses out;
    const index_t t = ring.mul(ring.mul(c, a), b);
    out.t = t;
    out.t_regular = tab.is_regular(t);
    out.b_regular = tab.is_regular(b);
    out.c_regular = tab.is_regular(c);

    out.i = bc_inverse(ring, a, b, c).found();

    Subset meet = subset_intersection(tab.right_ann(a), tab.right_ideal(b));
    bool trivial_meet = meet.size() == 1 && meet.contains(0);
    out.ii = trivial_meet &&
             is_direct_sum_of_ring(tab.right_ideal(ring.mul(a, b)), tab.right_ann(c));

    out.iii = tab.right_ann(t) == tab.right_ann(b) && tab.right_ideal(t) == tab.right_ideal(c);
    out.iv = tab.left_ann(t) == tab.left_ann(c) && tab.left_ideal(t) == tab.left_ideal(b);
    out.v = tab.left_ann(t) == tab.left_ann(c) && tab.right_ann(t) == tab.right_ann(b);
    return out;
}

/// The three acceptance predicates whose coincidence the harness checks.
struct CoincidencePredicates {
    bool bc = false, hybrid = false, annihilator = false;

    bool agree() const { return bc == hybrid && hybrid == annihilator; }
    std::string detail() const {
        return "predicates bc=" + detail::flag(bc) + " hybrid=" + detail::flag(hybrid) +
               " annihilator=" + detail::flag(annihilator);
    }
};

inline CoincidencePredicates coincidence_predicates(const Ring& ring, const RingTables& tab,
                                                    index_t a, index_t b, index_t c, index_t y) {
    CoincidencePredicates out;
    out.bc = accepts_bc(ring, a, b, c, y);
    out.hybrid = accepts_hybrid(ring, tab, a, b, c, y);
    out.annihilator = accepts_annihilator(ring, tab, a, b, c, y);
    return out;
}

/// For an idempotent e: e in eaeR /\ Reae, invertibility of eae+1-e, and of
/// ae+1-e. The three must agree.
struct IdempotentLemmaClauses {
    bool membership = false, unit_eae = false, unit_ae = false;

    bool agree() const { return membership == unit_eae && unit_eae == unit_ae; }
    std::string detail() const {
        return "membership=" + detail::flag(membership) + " unit(eae+1-e)=" +
               detail::flag(unit_eae) + " unit(ae+1-e)=" + detail::flag(unit_ae);
    }
};

inline IdempotentLemmaClauses idempotent_lemma_clauses(const Ring& ring, const RingTables& tab,
                                                       index_t a, index_t e) {
    IdempotentLemmaClauses out;
    index_t eae = ring.mul(ring.mul(e, a), e);
    out.membership = tab.right_ideal(eae).contains(e) && tab.left_ideal(eae).contains(e);
    index_t one_minus_e = ring.sub(ring.one(), e);
    out.unit_eae = ring.is_unit(ring.add(eae, one_minus_e));
    out.unit_ae = ring.is_unit(ring.add(ring.mul(a, e), one_minus_e));
    return out;
}

// ---------------------------------------------------------------------------
// Theorem checkers. Each returns one report per hypothesis branch; failure
// records carry the smallest failing tuple in enumeration order.
// ---------------------------------------------------------------------------

/// Existence equivalences: the five conditions agree whenever t = cab is
/// regular, conditions i-iv agree whenever b and c are both regular, and
/// i => ii => iii hold unconditionally.
inline std::vector<PropertyReport> check_existence_equivalences(const Ring& ring,
                                                                const RingTables& tab,
                                                                const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    const std::uint64_t total = n * n * n;
    detail::require_budget("thm-3.4-equiv", total, cfg);

    struct Local {
        detail::BranchAcc t_reg, bc_reg, uncond;
        void merge(const Local& o) {
            t_reg.merge(o.t_reg);
            bc_reg.merge(o.bc_reg);
            uncond.merge(o.uncond);
        }
    };

    detail::Stopwatch clock;
    Local acc = detail::chunked_sweep<Local>(
        total, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i / (n * n));
                const index_t b = static_cast<index_t>((i / n) % n);
                const index_t c = static_cast<index_t>(i % n);
                ExistenceClauses cl = existence_clauses(ring, tab, a, b, c);
                auto mk = [&] {
                    return detail::make_ce({{"a", a}, {"b", b}, {"c", c}, {"t", cl.t}},
                                           cl.detail());
                };
                bool five = cl.i == cl.ii && cl.ii == cl.iii && cl.iii == cl.iv && cl.iv == cl.v;
                bool four = cl.i == cl.ii && cl.ii == cl.iii && cl.iii == cl.iv;
                bool implications = (!cl.i || cl.ii) && (!cl.ii || cl.iii);
                local.t_reg.record(cl.t_regular, five, i, mk);
                local.bc_reg.record(cl.b_regular && cl.c_regular, four, i, mk);
                local.uncond.record(true, implications, i, mk);
            }
        });
    double ms = clock.ms();
    return {detail::finish("thm-3.4-equiv/t-regular", ring, acc.t_reg, ms),
            detail::finish("thm-3.4-equiv/bc-regular", ring, acc.bc_reg, ms),
            detail::finish("thm-3.4-equiv/unconditional", ring, acc.uncond, ms)};
}

/// The (b,c)-, hybrid and annihilator acceptance predicates select exactly
/// the same elements y, under "t regular" and under "b, c regular".
inline std::vector<PropertyReport> check_inverse_coincidence(const Ring& ring,
                                                             const RingTables& tab,
                                                             const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    const std::uint64_t total = n * n * n * n;
    detail::require_budget("thm-3.11-coincidence", total, cfg);

    struct Local {
        detail::BranchAcc t_reg, bc_reg;
        void merge(const Local& o) {
            t_reg.merge(o.t_reg);
            bc_reg.merge(o.bc_reg);
        }
    };

    detail::Stopwatch clock;
    Local acc = detail::chunked_sweep<Local>(
        total, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i / (n * n * n));
                const index_t b = static_cast<index_t>((i / (n * n)) % n);
                const index_t c = static_cast<index_t>((i / n) % n);
                const index_t y = static_cast<index_t>(i % n);
                const index_t t = ring.mul(ring.mul(c, a), b);
                bool t_reg = tab.is_regular(t);
                bool bc_reg = tab.is_regular(b) && tab.is_regular(c);
                if (!t_reg && !bc_reg) {
                    local.t_reg.record(false, true, i, [] { return Counterexample{}; });
                    local.bc_reg.record(false, true, i, [] { return Counterexample{}; });
                    continue;
                }
                CoincidencePredicates preds = coincidence_predicates(ring, tab, a, b, c, y);
                auto mk = [&] {
                    return detail::make_ce({{"a", a}, {"b", b}, {"c", c}, {"y", y}},
                                           preds.detail());
                };
                local.t_reg.record(t_reg, preds.agree(), i, mk);
                local.bc_reg.record(bc_reg, preds.agree(), i, mk);
            }
        });
    double ms = clock.ms();
    return {detail::finish("thm-3.11-coincidence/t-regular", ring, acc.t_reg, ms),
            detail::finish("thm-3.11-coincidence/bc-regular", ring, acc.bc_reg, ms)};
}

/// For every a and idempotent e: e in eaeR /\ Reae iff eae+1-e is a unit iff
/// ae+1-e is a unit.
inline std::vector<PropertyReport> check_idempotent_lemma(const Ring& ring,
                                                          const RingTables& tab,
                                                          const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    const std::uint64_t total = n * n;
    detail::require_budget("lem-3.13-idempotent", total, cfg);

    struct Local {
        detail::BranchAcc main;
        void merge(const Local& o) { main.merge(o.main); }
    };

    detail::Stopwatch clock;
    Local acc = detail::chunked_sweep<Local>(
        total, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i / n);
                const index_t e = static_cast<index_t>(i % n);
                if (!tab.is_idempotent(e)) {
                    local.main.record(false, true, i, [] { return Counterexample{}; });
                    continue;
                }
                IdempotentLemmaClauses cl = idempotent_lemma_clauses(ring, tab, a, e);
                local.main.record(true, cl.agree(), i, [&] {
                    return detail::make_ce({{"a", a}, {"e", e}}, cl.detail());
                });
            }
        });
    return {detail::finish("lem-3.13-idempotent", ring, acc.main, clock.ms())};
}

/// Transfer theorems: with y0 = a's (b,c)-inverse and any e = b*b^-, the
/// conditions "d is (b,c)-invertible", "e in (e y0 d e)R /\ R(e y0 d e)" and
/// "y0*d*e + 1 - e is a unit" agree, the closed formula reproduces the
/// scanned inverse, and the inverse-pair identities hold; dually for
/// f = c^-*c.
inline std::vector<PropertyReport> check_transfer_theorems(const Ring& ring,
                                                           const RingTables& tab,
                                                           const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    const std::uint64_t total = n * n * n * n;
    detail::require_budget("thm-3.14-transfer", total, cfg);

    struct Local {
        detail::BranchAcc e_form, f_form, remark;
        void merge(const Local& o) {
            e_form.merge(o.e_form);
            f_form.merge(o.f_form);
            remark.merge(o.remark);
        }
    };

    detail::Stopwatch clock;
    Local acc = detail::chunked_sweep<Local>(
        total, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t cached_prefix = std::uint64_t(-1);
            InverseResult a_bc;
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i / (n * n * n));
                const index_t b = static_cast<index_t>((i / (n * n)) % n);
                const index_t c = static_cast<index_t>((i / n) % n);
                const index_t d = static_cast<index_t>(i % n);
                if (i / n != cached_prefix) {
                    cached_prefix = i / n;
                    a_bc = bc_inverse(ring, a, b, c);
                }
                if (!a_bc.found()) {
                    local.e_form.record(false, true, i, [] { return Counterexample{}; });
                    local.f_form.record(false, true, i, [] { return Counterexample{}; });
                    local.remark.record(false, true, i, [] { return Counterexample{}; });
                    continue;
                }
                const index_t y0 = a_bc.value;
                const index_t one = ring.one();
                InverseResult d_bc = bc_inverse(ring, d, b, c);
                const bool exists = d_bc.found();

                std::string why;
                bool e_ok = true;
                for (index_t e : tab.e_choices[b]) {
                    index_t g = ring.mul(ring.mul(ring.mul(e, y0), d), e);
                    bool member =
                        tab.right_ideal(g).contains(e) && tab.left_ideal(g).contains(e);
                    index_t x =
                        ring.add(ring.mul(ring.mul(y0, d), e), ring.sub(one, e));
                    std::optional<index_t> x_inv = ring.try_unit_inverse(x);
                    bool ok = member == exists && x_inv.has_value() == exists;
                    if (ok && exists) ok = ring.mul(*x_inv, y0) == d_bc.value;
                    if (!ok) {
                        e_ok = false;
                        why = "e=" + std::to_string(e) + ": exists=" + detail::flag(exists) +
                              " membership=" + detail::flag(member) +
                              " unit=" + detail::flag(x_inv.has_value());
                        break;
                    }
                }
                local.e_form.record(true, e_ok, i, [&] {
                    return detail::make_ce({{"a", a}, {"b", b}, {"c", c}, {"d", d}}, why);
                });

                bool f_ok = true;
                for (index_t f : tab.f_choices[c]) {
                    index_t g = ring.mul(ring.mul(ring.mul(f, d), y0), f);
                    bool member =
                        tab.right_ideal(g).contains(f) && tab.left_ideal(g).contains(f);
                    index_t x =
                        ring.add(ring.mul(ring.mul(f, d), y0), ring.sub(one, f));
                    std::optional<index_t> x_inv = ring.try_unit_inverse(x);
                    bool ok = member == exists && x_inv.has_value() == exists;
                    if (ok && exists) ok = ring.mul(y0, *x_inv) == d_bc.value;
                    if (!ok) {
                        f_ok = false;
                        why = "f=" + std::to_string(f) + ": exists=" + detail::flag(exists) +
                              " membership=" + detail::flag(member) +
                              " unit=" + detail::flag(x_inv.has_value());
                        break;
                    }
                }
                local.f_form.record(true, f_ok, i, [&] {
                    return detail::make_ce({{"a", a}, {"b", b}, {"c", c}, {"d", d}}, why);
                });

                // Inverse-pair identities when both inverses exist:
                // (y0*d*e+1-e)^(-1) = d_bc*a*e+1-e and (f*d*y0+1-f)^(-1) = f*a*d_bc+1-f.
                bool remark_ok = true;
                if (exists) {
                    for (index_t e : tab.e_choices[b]) {
                        index_t x = ring.add(ring.mul(ring.mul(y0, d), e), ring.sub(one, e));
                        std::optional<index_t> x_inv = ring.try_unit_inverse(x);
                        index_t mirror = ring.add(ring.mul(ring.mul(d_bc.value, a), e),
                                                  ring.sub(one, e));
                        if (!x_inv || *x_inv != mirror) {
                            remark_ok = false;
                            why = "e=" + std::to_string(e) + ": inverse-pair identity failed";
                            break;
                        }
                    }
                    if (remark_ok) {
                        for (index_t f : tab.f_choices[c]) {
                            index_t x =
                                ring.add(ring.mul(ring.mul(f, d), y0), ring.sub(one, f));
                            std::optional<index_t> x_inv = ring.try_unit_inverse(x);
                            index_t mirror = ring.add(ring.mul(ring.mul(f, a), d_bc.value),
                                                      ring.sub(one, f));
                            if (!x_inv || *x_inv != mirror) {
                                remark_ok = false;
                                why = "f=" + std::to_string(f) +
                                      ": inverse-pair identity failed";
                                break;
                            }
                        }
                    }
                }
                local.remark.record(exists, remark_ok, i, [&] {
                    return detail::make_ce({{"a", a}, {"b", b}, {"c", c}, {"d", d}}, why);
                });
            }
        });
    double ms = clock.ms();
    return {detail::finish("thm-3.14-transfer/e-form", ring, acc.e_form, ms),
            detail::finish("thm-3.14-transfer/f-form", ring, acc.f_form, ms),
            detail::finish("thm-3.14-transfer/remark", ring, acc.remark, ms)};
}

namespace detail {

// Image-kernel inverse through the memoized ideal tables; same predicate as
// image_kernel_inverse, usable inside quartic sweeps.
inline index_t ik_inverse_fast(const Ring& ring, const RingTables& tab, index_t a, index_t p,
                               index_t q) {
    index_t found = kNoIndex;
    const Subset& pR = tab.right_ideal(p);
    const Subset& qR = tab.right_ideal(q);
    for (index_t y = 0; y < ring.order(); ++y) {
        if (ring.mul(ring.mul(y, a), y) != y) continue;
        if (tab.right_ideal(ring.mul(y, a)) != pR) continue;
        if (tab.right_ideal(ring.sub(ring.one(), ring.mul(a, y))) != qR) continue;
        if (found != kNoIndex)
            throw InternalCheckError("image-kernel inverse not unique in " + ring.spec_string());
        found = y;
    }
    return found;
}

}  // namespace detail

/// Image-kernel corollary: for idempotents p, q and a with a^x existing,
/// d^x exists iff 1-p+a^x*d*p is a unit iff q+(1-q)*d*a^x is a unit. Also
/// cross-checks that image-kernel (p,q)-invertibility matches Bott-Duffin
/// (p, 1-q)-invertibility, value included.
inline std::vector<PropertyReport> check_image_kernel_corollary(const Ring& ring,
                                                                const RingTables& tab,
                                                                const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    detail::require_budget("cor-3.17-image-kernel", n * n * n * n, cfg);

    struct Local {
        detail::BranchAcc transfer, bott;
        void merge(const Local& o) {
            transfer.merge(o.transfer);
            bott.merge(o.bott);
        }
    };

    detail::Stopwatch clock;
    // Main sweep over (p, q, a, d).
    Local acc = detail::chunked_sweep<Local>(
        n * n * n * n, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t cached_prefix = std::uint64_t(-1);
            index_t a_ik = kNoIndex;
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t p = static_cast<index_t>(i / (n * n * n));
                const index_t q = static_cast<index_t>((i / (n * n)) % n);
                const index_t a = static_cast<index_t>((i / n) % n);
                const index_t d = static_cast<index_t>(i % n);
                bool idem = tab.is_idempotent(p) && tab.is_idempotent(q);
                if (idem) {
                    if (i / n != cached_prefix) {
                        cached_prefix = i / n;
                        a_ik = detail::ik_inverse_fast(ring, tab, a, p, q);
                    }
                } else {
                    a_ik = kNoIndex;
                }
                if (!idem || a_ik == kNoIndex) {
                    local.transfer.record(false, true, i, [] { return Counterexample{}; });
                    continue;
                }
                bool d_exists = detail::ik_inverse_fast(ring, tab, d, p, q) != kNoIndex;
                index_t lhs = ring.add(ring.sub(ring.one(), p),
                                       ring.mul(ring.mul(a_ik, d), p));
                index_t rhs = ring.add(q, ring.mul(ring.mul(ring.sub(ring.one(), q), d), a_ik));
                bool u1 = ring.is_unit(lhs);
                bool u2 = ring.is_unit(rhs);
                bool ok = d_exists == u1 && u1 == u2;
                local.transfer.record(true, ok, i, [&] {
                    return detail::make_ce(
                        {{"p", p}, {"q", q}, {"a", a}, {"d", d}},
                        "exists=" + detail::flag(d_exists) + " unit(1-p+a^x d p)=" +
                            detail::flag(u1) + " unit(q+(1-q) d a^x)=" + detail::flag(u2));
                });
            }
        });

    // Equivalence with the Bott-Duffin (p, 1-q)-inverse over (a, p, q).
    struct BdLocal {
        detail::BranchAcc acc;
        void merge(const BdLocal& o) { acc.merge(o.acc); }
    };
    BdLocal bd = detail::chunked_sweep<BdLocal>(
        n * n * n, cfg.threads, [&](BdLocal& local, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i / (n * n));
                const index_t p = static_cast<index_t>((i / n) % n);
                const index_t q = static_cast<index_t>(i % n);
                if (!tab.is_idempotent(p) || !tab.is_idempotent(q)) {
                    local.acc.record(false, true, i, [] { return Counterexample{}; });
                    continue;
                }
                InverseResult ik = image_kernel_inverse(ring, a, p, q);
                index_t fast = detail::ik_inverse_fast(ring, tab, a, p, q);
                InverseResult bott = bott_duffin(ring, a, p, ring.sub(ring.one(), q));
                bool ok = ik.found() == bott.found() &&
                          (ik.found() ? ik.value : kNoIndex) == fast &&
                          (!ik.found() || ik.value == bott.value);
                local.acc.record(true, ok, i, [&] {
                    return detail::make_ce(
                        {{"a", a}, {"p", p}, {"q", q}},
                        "ik=" + detail::flag(ik.found()) + " bott-duffin=" +
                            detail::flag(bott.found()));
                });
            }
        });

    double ms = clock.ms();
    return {detail::finish("cor-3.17-image-kernel/transfer", ring, acc.transfer, ms),
            detail::finish("cor-3.17-image-kernel/bott-duffin", ring, bd.acc, ms)};
}

/// Outer-inverse consequences: for yay = y, r(a) and l(a) meet yR and Ry only
/// in 0 and Ray = Ry, yaR = yR; for regular a, rl(a) = aR, lr(a) = Ra and
/// regularity transfers along Ra = Rb.
inline std::vector<PropertyReport> check_outer_lemmas(const Ring& ring, const RingTables& tab,
                                                      const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    detail::require_budget("lem-3.1-3.2-outer", n * n, cfg);

    struct Local {
        detail::BranchAcc outer, transfer, double_ann;
        void merge(const Local& o) {
            outer.merge(o.outer);
            transfer.merge(o.transfer);
            double_ann.merge(o.double_ann);
        }
    };

    detail::Stopwatch clock;
    Local acc = detail::chunked_sweep<Local>(
        n * n, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i / n);
                const index_t y = static_cast<index_t>(i % n);

                bool outer_hyp = ring.mul(ring.mul(y, a), y) == y;
                bool outer_ok = true;
                std::string why;
                if (outer_hyp) {
                    Subset m1 = subset_intersection(tab.right_ann(a), tab.right_ideal(y));
                    Subset m2 = subset_intersection(tab.left_ann(a), tab.left_ideal(y));
                    bool c1 = m1.size() == 1 && m1.contains(0);
                    bool c2 = m2.size() == 1 && m2.contains(0);
                    bool c3 = tab.left_ideal(ring.mul(a, y)) == tab.left_ideal(y);
                    bool c4 = tab.right_ideal(ring.mul(y, a)) == tab.right_ideal(y);
                    outer_ok = c1 && c2 && c3 && c4;
                    if (!outer_ok)
                        why = "clauses " + detail::flag(c1) + detail::flag(c2) +
                              detail::flag(c3) + detail::flag(c4);
                }
                local.outer.record(outer_hyp, outer_ok, i, [&] {
                    return detail::make_ce({{"a", a}, {"y", y}}, why);
                });

                // Here the second loop variable plays the role of b.
                const index_t b = y;
                bool transfer_hyp =
                    tab.is_regular(a) && tab.left_ideal(a) == tab.left_ideal(b);
                local.transfer.record(transfer_hyp, !transfer_hyp || tab.is_regular(b), i, [&] {
                    return detail::make_ce({{"a", a}, {"b", b}}, "b not regular");
                });

                if (b == 0) {  // once per a
                    bool reg = tab.is_regular(a);
                    bool ok = true;
                    if (reg) {
                        ok = right_annihilator(tab.left_ann(a)) == tab.right_ideal(a) &&
                             left_annihilator(tab.right_ann(a)) == tab.left_ideal(a);
                    }
                    local.double_ann.record(reg, ok, i, [&] {
                        return detail::make_ce({{"a", a}}, "double annihilator mismatch");
                    });
                }
            }
        });
    double ms = clock.ms();
    return {detail::finish("lem-3.1-3.2-outer/lem-3.1", ring, acc.outer, ms),
            detail::finish("lem-3.1-3.2-outer/lem-3.2-transfer", ring, acc.transfer, ms),
            detail::finish("lem-3.1-3.2-outer/lem-3.2-double-ann", ring, acc.double_ann, ms)};
}

/// Shared identities of two (b,c)-inverses A = a_bc, D = d_bc and the
/// idempotents e = b*b^-, f = c^-*c.
inline std::vector<PropertyReport> check_lemma_4_1(const Ring& ring, const RingTables& tab,
                                                   const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    const std::uint64_t total = n * n * n * n;
    detail::require_budget("lem-4.1-identities", total, cfg);

    struct Local {
        detail::BranchAcc main;
        void merge(const Local& o) { main.merge(o.main); }
    };

    detail::Stopwatch clock;
    Local acc = detail::chunked_sweep<Local>(
        total, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i / (n * n * n));
                const index_t d = static_cast<index_t>((i / (n * n)) % n);
                const index_t b = static_cast<index_t>((i / n) % n);
                const index_t c = static_cast<index_t>(i % n);
                // Cheap existence pre-filter before the definition scans.
                if (!tab.bc_exists(a, b, c) || !tab.bc_exists(d, b, c)) {
                    local.main.record(false, true, i, [] { return Counterexample{}; });
                    continue;
                }
                InverseResult ra = bc_inverse(ring, a, b, c);
                InverseResult rd = bc_inverse(ring, d, b, c);
                if (!ra.found() || !rd.found())
                    throw InternalCheckError("ideal criterion and definition scan disagree in " +
                                             ring.spec_string());
                const index_t A = ra.value, D = rd.value;

                bool ok = D == ring.mul(ring.mul(D, a), A) && D == ring.mul(ring.mul(A, a), D) &&
                          A == ring.mul(ring.mul(A, d), D) && A == ring.mul(ring.mul(D, d), A);
                std::string why = ok ? "" : "group (i)/(ii)";
                if (ok) {
                    for (index_t e : tab.e_choices[b]) {
                        index_t eD = ring.mul(e, D);
                        bool g3 =
                            e == ring.mul(ring.mul(ring.mul(ring.mul(eD, a), A), d), e) &&
                            e == ring.mul(ring.mul(ring.mul(e, A), a), e) &&
                            e == ring.mul(ring.mul(eD, d), e);
                        if (!g3) {
                            ok = false;
                            why = "group (iii) at e=" + std::to_string(e);
                            break;
                        }
                    }
                }
                if (ok) {
                    for (index_t f : tab.f_choices[c]) {
                        index_t fd = ring.mul(f, d);
                        bool g4 =
                            f == ring.mul(ring.mul(ring.mul(ring.mul(fd, A), a), D), f) &&
                            f == ring.mul(ring.mul(fd, D), f) &&
                            f == ring.mul(ring.mul(ring.mul(f, a), A), f);
                        if (!g4) {
                            ok = false;
                            why = "group (iv) at f=" + std::to_string(f);
                            break;
                        }
                    }
                }
                local.main.record(true, ok, i, [&] {
                    return detail::make_ce({{"a", a}, {"d", d}, {"b", b}, {"c", c}}, why);
                });
            }
        });
    return {detail::finish("lem-4.1-identities", ring, acc.main, clock.ms())};
}

namespace detail {

// Five-clause equivalence helper shared by the equal-idempotent theorems.
struct FiveClauses {
    bool cl[5] = {false, false, false, false, false};

    bool all_equal() const {
        for (int i = 1; i < 5; ++i)
            if (cl[i] != cl[0]) return false;
        return true;
    }
    std::string detail_str() const {
        std::string out = "clauses ";
        for (int i = 0; i < 5; ++i) out += flag(cl[i]);
        return out;
    }
};

}  // namespace detail

/// Equal-idempotent characterizations and the reverse order rule: three
/// five-way equivalences on (a, d, b, c) with both inverses present, the
/// group-inverse clauses evaluated by scan, and the mixed theorem's product
/// rule asserted whenever its first clause holds.
inline std::vector<PropertyReport> check_equal_idempotents(const Ring& ring,
                                                           const RingTables& tab,
                                                           const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    const std::uint64_t total = n * n * n * n;
    detail::require_budget("thm-4.2/4.3/4.5", total, cfg);

    struct Local {
        detail::BranchAcc right_idem, left_idem, mixed;
        void merge(const Local& o) {
            right_idem.merge(o.right_idem);
            left_idem.merge(o.left_idem);
            mixed.merge(o.mixed);
        }
    };

    detail::Stopwatch clock;
    Local acc = detail::chunked_sweep<Local>(
        total, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i / (n * n * n));
                const index_t d = static_cast<index_t>((i / (n * n)) % n);
                const index_t b = static_cast<index_t>((i / n) % n);
                const index_t c = static_cast<index_t>(i % n);
                if (!tab.bc_exists(a, b, c) || !tab.bc_exists(d, b, c)) {
                    local.right_idem.record(false, true, i, [] { return Counterexample{}; });
                    local.left_idem.record(false, true, i, [] { return Counterexample{}; });
                    local.mixed.record(false, true, i, [] { return Counterexample{}; });
                    continue;
                }
                InverseResult ra = bc_inverse(ring, a, b, c);
                InverseResult rd = bc_inverse(ring, d, b, c);
                if (!ra.found() || !rd.found())
                    throw InternalCheckError("ideal criterion and definition scan disagree in " +
                                             ring.spec_string());
                const index_t A = ra.value, D = rd.value;
                const index_t aA = ring.mul(a, A), dD = ring.mul(d, D);
                const index_t Aa = ring.mul(A, a), Dd = ring.mul(D, d);
                const index_t aD = ring.mul(a, D), dA = ring.mul(d, A);
                const index_t Ad = ring.mul(A, d), Da = ring.mul(D, a);
                auto mk = [&](const std::string& why) {
                    return [&, why] {
                        return detail::make_ce({{"a", a}, {"d", d}, {"b", b}, {"c", c}}, why);
                    };
                };

                // aa_bc = dd_bc equivalences.
                detail::FiveClauses t42;
                t42.cl[0] = aA == dD;
                t42.cl[1] = ring.mul(aA, dD) == ring.mul(dD, aA);
                t42.cl[2] = ring.mul(aD, dA) == ring.mul(dA, aD);
                InverseResult g1 = group_inverse(ring, aD);
                t42.cl[3] = g1.found() && g1.value == dA;
                InverseResult g2 = group_inverse(ring, dA);
                t42.cl[4] = g2.found() && g2.value == aD;
                local.right_idem.record(true, t42.all_equal(), i, mk(t42.detail_str()));

                // a_bc a = d_bc d equivalences.
                detail::FiveClauses t43;
                t43.cl[0] = Aa == Dd;
                t43.cl[1] = ring.mul(Dd, Aa) == ring.mul(Aa, Dd);
                t43.cl[2] = ring.mul(Ad, Da) == ring.mul(Da, Ad);
                InverseResult g3 = group_inverse(ring, Ad);
                t43.cl[3] = g3.found() && g3.value == Da;
                InverseResult g4 = group_inverse(ring, Da);
                t43.cl[4] = g4.found() && g4.value == Ad;
                local.left_idem.record(true, t43.all_equal(), i, mk(t43.detail_str()));

                // a_bc a = d d_bc equivalences, plus the product rule coda.
                detail::FiveClauses t45;
                t45.cl[0] = Aa == dD;
                t45.cl[1] = ring.mul(ring.mul(A, dD), a) == ring.mul(ring.mul(dD, a), A);
                t45.cl[2] = ring.mul(ring.mul(D, dA), a) == ring.mul(ring.mul(dA, a), D);
                t45.cl[3] = A == ring.mul(dD, A) && D == ring.mul(ring.mul(D, A), a);
                t45.cl[4] = ring.mul(Aa, D) == ring.mul(ring.mul(D, A), a) &&
                            ring.mul(ring.mul(A, d), D) == ring.mul(dD, A);
                bool ok45 = t45.all_equal();
                std::string why45 = ok45 ? "" : t45.detail_str();
                if (ok45 && t45.cl[0]) {
                    InverseResult prod = bc_inverse(ring, ring.mul(a, d), b, c);
                    if (!prod.found() || prod.value != ring.mul(D, A)) {
                        ok45 = false;
                        why45 = "product rule (ad)_bc = d_bc a_bc failed";
                    }
                }
                local.mixed.record(true, ok45, i, mk(why45));
            }
        });
    double ms = clock.ms();
    return {detail::finish("thm-4.2-equal-idempotents", ring, acc.right_idem, ms),
            detail::finish("thm-4.3-equal-idempotents", ring, acc.left_idem, ms),
            detail::finish("thm-4.5-mixed-idempotents", ring, acc.mixed, ms)};
}

/// Reverse order rule: (ad)_bc exists and equals d_bc * a_bc exactly when the
/// two absorption identities hold.
inline std::vector<PropertyReport> check_reverse_order(const Ring& ring, const RingTables& tab,
                                                       const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    const std::uint64_t total = n * n * n * n;
    detail::require_budget("thm-4.4-reverse-order", total, cfg);

    struct Local {
        detail::BranchAcc main;
        void merge(const Local& o) { main.merge(o.main); }
    };

    detail::Stopwatch clock;
    Local acc = detail::chunked_sweep<Local>(
        total, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i / (n * n * n));
                const index_t d = static_cast<index_t>((i / (n * n)) % n);
                const index_t b = static_cast<index_t>((i / n) % n);
                const index_t c = static_cast<index_t>(i % n);
                if (!tab.bc_exists(a, b, c) || !tab.bc_exists(d, b, c)) {
                    local.main.record(false, true, i, [] { return Counterexample{}; });
                    continue;
                }
                InverseResult ra = bc_inverse(ring, a, b, c);
                InverseResult rd = bc_inverse(ring, d, b, c);
                if (!ra.found() || !rd.found())
                    throw InternalCheckError("ideal criterion and definition scan disagree in " +
                                             ring.spec_string());
                const index_t A = ra.value, D = rd.value;
                const index_t ad = ring.mul(a, d), DA = ring.mul(D, A);

                InverseResult prod = bc_inverse(ring, ad, b, c);
                bool cl1 = prod.found() && prod.value == DA;
                bool cl2 = D == ring.mul(ring.mul(ring.mul(D, ad), D), A) &&
                           D == ring.mul(ring.mul(ring.mul(D, A), ad), D);
                bool cl3 = A == ring.mul(ring.mul(ring.mul(A, ad), D), A) &&
                           A == ring.mul(ring.mul(ring.mul(D, A), ad), A);
                bool ok = cl1 == cl2 && cl2 == cl3;
                local.main.record(true, ok, i, [&] {
                    return detail::make_ce(
                        {{"a", a}, {"d", d}, {"b", b}, {"c", c}},
                        "clauses i=" + detail::flag(cl1) + " ii=" + detail::flag(cl2) +
                            " iii=" + detail::flag(cl3));
                });
            }
        });
    return {detail::finish("thm-4.4-reverse-order", ring, acc.main, clock.ms())};
}

/// Specialization cross-checks: the group inverse is the (a,a)-inverse, the
/// Drazin inverse is the (a^j,a^j)-inverse at its index, and the (a^T,a^T)-
/// inverse satisfies the four Moore-Penrose equations under transpose.
inline std::vector<PropertyReport> check_specializations(const Ring& ring, const RingTables&,
                                                         const CheckConfig& cfg) {
    const std::uint64_t n = ring.order();
    detail::require_budget("specializations", n, cfg);

    struct Local {
        detail::BranchAcc group, drazin, moore_penrose;
        void merge(const Local& o) {
            group.merge(o.group);
            drazin.merge(o.drazin);
            moore_penrose.merge(o.moore_penrose);
        }
    };

    detail::Stopwatch clock;
    Local acc = detail::chunked_sweep<Local>(
        n, cfg.threads, [&](Local& local, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const index_t a = static_cast<index_t>(i);

                InverseResult g = group_inverse(ring, a);
                InverseResult gaa = bc_inverse(ring, a, a, a);
                bool g_ok =
                    g.found() == gaa.found() && (!g.found() || g.value == gaa.value);
                local.group.record(true, g_ok, i, [&] {
                    return detail::make_ce({{"a", a}},
                                           "group=" + detail::flag(g.found()) +
                                               " (a,a)-inverse=" + detail::flag(gaa.found()));
                });

                std::optional<DrazinResult> dz = drazin_inverse(ring, a);
                bool dz_ok = dz.has_value();
                std::string dz_why = "no Drazin inverse found";
                if (dz_ok) {
                    index_t p = ring.pow(a, dz->index);
                    InverseResult viabc = bc_inverse(ring, a, p, p);
                    dz_ok = viabc.found() && viabc.value == dz->value;
                    if (!dz_ok) dz_why = "(a^j,a^j)-inverse mismatch at j=" +
                                         std::to_string(dz->index);
                }
                local.drazin.record(true, dz_ok, i, [&] {
                    return detail::make_ce({{"a", a}}, dz_why);
                });

                index_t at = ring.transpose(a);
                InverseResult mp = moore_penrose_inverse(ring, a);
                InverseResult star = bc_inverse(ring, a, at, at);
                bool mp_ok =
                    mp.found() == star.found() && (!mp.found() || mp.value == star.value);
                if (mp_ok && star.found()) {
                    index_t x = star.value;
                    index_t ax = ring.mul(a, x), xa = ring.mul(x, a);
                    mp_ok = ring.mul(ax, a) == a && ring.mul(x, ax) == x &&
                            ring.transpose(ax) == ax && ring.transpose(xa) == xa;
                }
                local.moore_penrose.record(true, mp_ok, i, [&] {
                    return detail::make_ce(
                        {{"a", a}}, "mp=" + detail::flag(mp.found()) +
                                        " (a*,a*)-inverse=" + detail::flag(star.found()));
                });
            }
        });
    double ms = clock.ms();
    return {detail::finish("specializations/group", ring, acc.group, ms),
            detail::finish("specializations/drazin", ring, acc.drazin, ms),
            detail::finish("specializations/moore-penrose", ring, acc.moore_penrose, ms)};
}

// ---------------------------------------------------------------------------
// Catalog and drivers.
// ---------------------------------------------------------------------------

using CheckerFn = std::vector<PropertyReport> (*)(const Ring&, const RingTables&,
                                                  const CheckConfig&);

struct TheoremGroup {
    std::vector<std::string> ids;  // base ids produced by this checker
    CheckerFn fn;
    std::string summary;
};

inline const std::vector<TheoremGroup>& theorem_groups() {
    static const std::vector<TheoremGroup> groups = {
        {{"thm-3.4-equiv"},
         &check_existence_equivalences,
         "five-way existence equivalences (direct sum, ideal and annihilator forms)"},
        {{"thm-3.11-coincidence"},
         &check_inverse_coincidence,
         "bc/hybrid/annihilator acceptance predicates coincide"},
        {{"lem-3.13-idempotent"},
         &check_idempotent_lemma,
         "corner membership of an idempotent vs unit tests"},
        {{"thm-3.14-transfer"},
         &check_transfer_theorems,
         "transfer of (b,c)-invertibility between elements, with closed formulas"},
        {{"cor-3.17-image-kernel"},
         &check_image_kernel_corollary,
         "image-kernel transfer corollary and Bott-Duffin equivalence"},
        {{"lem-3.1-3.2-outer"},
         &check_outer_lemmas,
         "outer-inverse annihilator facts and regularity transfer"},
        {{"lem-4.1-identities"},
         &check_lemma_4_1,
         "absorption identities shared by two (b,c)-inverses"},
        {{"thm-4.2-equal-idempotents", "thm-4.3-equal-idempotents", "thm-4.5-mixed-idempotents"},
         &check_equal_idempotents,
         "equal (b,c)-idempotent characterizations incl. group-inverse clauses"},
        {{"thm-4.4-reverse-order"},
         &check_reverse_order,
         "reverse order rule for the (b,c)-inverse of a product"},
        {{"specializations"},
         &check_specializations,
         "group / Drazin / Moore-Penrose forms agree with their (b,c) versions"},
    };
    return groups;
}

inline std::vector<std::string> theorem_ids() {
    std::vector<std::string> ids;
    for (const TheoremGroup& g : theorem_groups())
        for (const std::string& id : g.ids) ids.push_back(id);
    return ids;
}

inline bool is_theorem_id(const std::string& id) {
    for (const TheoremGroup& g : theorem_groups())
        for (const std::string& known : g.ids)
            if (known == id) return true;
    return false;
}

inline std::string base_theorem_id(const std::string& report_id) {
    return report_id.substr(0, report_id.find('/'));
}

/// Runs the named theorems (or all of them for ids = {}) over one ring.
/// Reports come back in catalog order regardless of thread count.
inline std::vector<PropertyReport> run_theorems(const Ring& ring,
                                                const std::vector<std::string>& ids,
                                                const CheckConfig& cfg) {
    for (const std::string& id : ids)
        if (!is_theorem_id(id)) throw std::invalid_argument("unknown theorem id: " + id);

    const std::uint64_t n = ring.order();
    detail::require_budget("lattice tables", n * n, cfg);
    RingTables tables(ring);
    std::vector<PropertyReport> out;
    for (const TheoremGroup& group : theorem_groups()) {
        bool wanted = ids.empty();
        for (const std::string& id : ids)
            for (const std::string& gid : group.ids)
                if (id == gid) wanted = true;
        if (!wanted) continue;
        std::vector<PropertyReport> reports = group.fn(ring, tables, cfg);
        for (PropertyReport& r : reports) {
            bool selected = ids.empty();
            for (const std::string& id : ids)
                if (base_theorem_id(r.theorem) == id) selected = true;
            if (selected) out.push_back(std::move(r));
        }
    }
    return out;
}

inline std::vector<PropertyReport> run_all(const Ring& ring, const CheckConfig& cfg = {}) {
    return run_theorems(ring, {}, cfg);
}

inline bool all_pass(const std::vector<PropertyReport>& reports) {
    for (const PropertyReport& r : reports)
        if (!r.pass()) return false;
    return true;
}

}  // namespace bcinv
