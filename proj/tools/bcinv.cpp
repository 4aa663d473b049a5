// bcinv: compute generalized inverses in finite rings, inspect ideal
// lattices, verify the characterization properties exhaustively, and mine
// ring families for gap witnesses.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcinv/bcinv.hpp"
#include "bcinv/report.hpp"

namespace {

using namespace bcinv;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;

std::string iso_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string braces(const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (index_t i : s.indices()) {
        if (!first) out += ", ";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

struct GlobalOptions {
    std::string format = "human";
    unsigned threads = 0;
    std::uint64_t ring_cap = 65536;

    BuildOptions build() const {
        BuildOptions b;
        b.max_order = ring_cap;
        return b;
    }
    bool records() const { return format == "records"; }
};

struct InverseArgs {
    std::string ring_spec;
    std::string kind;
    std::string a, b, c, e, f, p, q;
};

void require_args(const CLI::App& cmd, std::initializer_list<const char*> names) {
    for (const char* name : names) {
        if (cmd.count(name) == 0)
            throw CLI::RequiredError(std::string(name));
    }
}

void reject_args(const CLI::App& cmd, const std::string& kind,
                 std::initializer_list<const char*> names) {
    for (const char* name : names) {
        if (cmd.count(name) != 0)
            throw CLI::ValidationError(std::string(name) + " is not used by kind '" + kind + "'");
    }
}

int run_inverse(const GlobalOptions& global, const CLI::App& cmd, const InverseArgs& args) {
    RingHandle ring = build_ring(args.ring_spec, global.build());
    const Ring& r = *ring;

    std::vector<std::pair<std::string, index_t>> inputs;
    auto take = [&](const char* name, const std::string& text) {
        index_t idx = r.parse_element(text);
        inputs.emplace_back(name, idx);
        return idx;
    };

    InverseResult res;
    std::string extra;
    if (args.kind == "bc" || args.kind == "hybrid" || args.kind == "annihilator") {
        require_args(cmd, {"--a", "--b", "--c"});
        reject_args(cmd, args.kind, {"--e", "--f", "--p", "--q"});
        index_t a = take("a", args.a), b = take("b", args.b), c = take("c", args.c);
        if (args.kind == "bc")
            res = bc_inverse(r, a, b, c);
        else if (args.kind == "hybrid")
            res = hybrid_bc_inverse(r, a, b, c);
        else
            res = annihilator_bc_inverse(r, a, b, c);
    } else if (args.kind == "group") {
        require_args(cmd, {"--a"});
        reject_args(cmd, args.kind, {"--b", "--c", "--e", "--f", "--p", "--q"});
        res = group_inverse(r, take("a", args.a));
    } else if (args.kind == "drazin") {
        require_args(cmd, {"--a"});
        reject_args(cmd, args.kind, {"--b", "--c", "--e", "--f", "--p", "--q"});
        auto dz = drazin_inverse(r, take("a", args.a));
        if (dz) {
            res = InverseResult::make_found(dz->value, InverseMethod::definition_search);
            extra = "index: " + std::to_string(dz->index);
            res.witnesses.push_back({"index", dz->index});
        } else {
            res = InverseResult::make_not_found(InverseMethod::definition_search);
        }
    } else if (args.kind == "bott-duffin") {
        require_args(cmd, {"--a", "--e", "--f"});
        reject_args(cmd, args.kind, {"--b", "--c", "--p", "--q"});
        index_t a = take("a", args.a), e = take("e", args.e), f = take("f", args.f);
        res = bott_duffin(r, a, e, f);
    } else if (args.kind == "image-kernel") {
        require_args(cmd, {"--a", "--p", "--q"});
        reject_args(cmd, args.kind, {"--b", "--c", "--e", "--f"});
        index_t a = take("a", args.a), p = take("p", args.p), q = take("q", args.q);
        res = image_kernel_inverse(r, a, p, q);
    } else {
        throw CLI::ValidationError("unknown inverse kind '" + args.kind + "'");
    }

    if (global.records()) {
        std::cout << make_header("inverse", iso_timestamp(), global.threads).dump() << "\n";
        std::cout << to_record(r, args.kind, inputs, res).dump() << "\n";
    } else {
        std::cout << "ring: " << r.spec_string() << " (order " << r.order() << ")\n";
        std::cout << "kind: " << args.kind;
        for (const auto& [name, idx] : inputs)
            std::cout << "  " << name << "=" << r.format_element(idx);
        std::cout << "\n";
        if (res.found()) {
            std::cout << "status: found\n";
            std::cout << "y = " << r.format_element(res.value) << "  (index " << res.value
                      << ")\n";
            std::cout << "method: " << to_string(res.method) << "\n";
            if (!res.witnesses.empty()) {
                std::cout << "witnesses:";
                for (const Witness& w : res.witnesses)
                    std::cout << " " << w.label << "=" << w.value;
                std::cout << "\n";
            }
            if (!extra.empty()) std::cout << extra << "\n";
        } else {
            std::cout << "status: not-found\n";
        }
    }
    return res.found() ? kExitFound : kExitNotFound;
}

int run_ideals(const GlobalOptions& global, const std::string& ring_spec,
               const std::string& a_text) {
    RingHandle ring = build_ring(ring_spec, global.build());
    const Ring& r = *ring;
    index_t a = r.parse_element(a_text);

    Subset aR = right_ideal(r, a);
    Subset Ra = left_ideal(r, a);
    Subset la = left_annihilator(r, a);
    Subset ra = right_annihilator(r, a);
    auto [rl, lr] = double_annihilators(r, a);

    if (global.records()) {
        std::cout << make_header("ideals", iso_timestamp(), global.threads).dump() << "\n";
        json j;
        j["record"] = "ideals";
        j["ring"] = r.spec_string();
        j["a"] = json{{"index", a}, {"literal", r.format_element(a)}};
        j["aR"] = aR.indices();
        j["Ra"] = Ra.indices();
        j["l(a)"] = la.indices();
        j["r(a)"] = ra.indices();
        j["rl(a)"] = rl.indices();
        j["lr(a)"] = lr.indices();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "ring: " << r.spec_string() << " (order " << r.order() << ")\n";
        std::cout << "a = " << r.format_element(a) << "  (index " << a << ")\n";
        std::cout << "aR    = " << braces(aR) << "\n";
        std::cout << "Ra    = " << braces(Ra) << "\n";
        std::cout << "l(a)  = " << braces(la) << "\n";
        std::cout << "r(a)  = " << braces(ra) << "\n";
        std::cout << "rl(a) = " << braces(rl) << "\n";
        std::cout << "lr(a) = " << braces(lr) << "\n";
    }
    return kExitFound;
}

int run_verify(const GlobalOptions& global, const std::string& ring_spec,
               const std::string& theorem, std::uint64_t budget) {
    if (theorem != "all" && !is_theorem_id(theorem)) {
        std::ostringstream msg;
        msg << "unknown theorem id '" << theorem << "'; valid ids:\n  all";
        for (const std::string& id : theorem_ids()) msg << "\n  " << id;
        throw CLI::ValidationError(msg.str());
    }
    RingHandle ring = build_ring(ring_spec, global.build());

    CheckConfig cfg;
    cfg.threads = global.threads;
    if (budget != 0) cfg.max_instances = budget;
    std::vector<std::string> ids;
    if (theorem != "all") ids.push_back(theorem);

    std::vector<PropertyReport> reports = run_theorems(*ring, ids, cfg);
    bool ok = all_pass(reports);

    if (global.records()) {
        std::cout << make_header("verify", iso_timestamp(), global.threads).dump() << "\n";
        for (const PropertyReport& r : reports) std::cout << to_record(r).dump() << "\n";
    } else {
        std::printf("%-42s %-14s %10s %10s %9s %8s %9s\n", "theorem", "ring", "instances",
                    "passes", "failures", "vacuous", "time");
        for (const PropertyReport& r : reports) {
            std::printf("%-42s %-14s %10llu %10llu %9llu %8llu %8.1fms\n", r.theorem.c_str(),
                        r.ring.c_str(), static_cast<unsigned long long>(r.instances),
                        static_cast<unsigned long long>(r.passes),
                        static_cast<unsigned long long>(r.failures),
                        static_cast<unsigned long long>(r.vacuous), r.wall_ms);
            if (r.first_counterexample) {
                std::cout << "    first counterexample:";
                for (const auto& [name, idx] : r.first_counterexample->inputs)
                    std::cout << " " << name << "=" << idx;
                std::cout << "  " << r.first_counterexample->detail << "\n";
            }
        }
        std::cout << (ok ? "all properties passed" : "PROPERTY FAILURES PRESENT") << " ("
                  << reports.size() << " reports)\n";
    }
    return ok ? kExitFound : kExitNotFound;
}

int run_mine(const GlobalOptions& global, const std::string& family, std::uint32_t max_n,
             const std::string& target, std::uint64_t budget) {
    bool known = false;
    for (const std::string& t : miner_targets()) known |= (t == target);
    if (!known) {
        std::ostringstream msg;
        msg << "unknown mine target '" << target << "'; valid targets:";
        for (const std::string& t : miner_targets()) msg << "\n  " << t;
        throw CLI::ValidationError(msg.str());
    }
    for (const std::string& f : miner_families())
        if (f == family) known = true;

    MinerQuery query;
    query.target = target;
    query.family = family;
    query.max_n = max_n;
    if (budget != 0) query.budget = budget;
    query.build = global.build();

    MinerReport rep = mine_gap(query);

    if (global.records()) {
        std::cout << make_header("mine", iso_timestamp(), global.threads).dump() << "\n";
        for (const MinerWitness& w : rep.witnesses) {
            RingHandle ring = build_ring(w.ring, global.build());
            std::cout << to_record(*ring, w).dump() << "\n";
        }
        std::cout << to_record(rep).dump() << "\n";
    } else {
        std::cout << "target: " << rep.target << "  family: " << rep.family
                  << "  max n: " << rep.max_n << "\n";
        std::cout << "rings swept: " << rep.rings.size() << "  triples examined: "
                  << rep.instances << "\n";
        if (rep.budget_exhausted) std::cout << "budget exhausted before the sweep finished\n";
        if (rep.none_found()) {
            std::cout << "witnesses: none found\n";
        } else {
            std::cout << "witnesses: " << rep.witness_count << " (showing "
                      << rep.witnesses.size() << ")\n";
            for (const MinerWitness& w : rep.witnesses) {
                RingHandle ring = build_ring(w.ring, global.build());
                std::cout << "  " << w.ring << "  a=" << ring->format_element(w.a)
                          << " b=" << ring->format_element(w.b)
                          << " c=" << ring->format_element(w.c)
                          << " t=" << ring->format_element(w.t);
                if (w.y != kNoIndex) std::cout << " y=" << ring->format_element(w.y);
                std::cout << "  [t_regular=" << (w.t_regular ? "1" : "0") << "]\n";
            }
        }
        std::cout << "note: finite-family sweep; an empty result is inconclusive, not a "
                     "refutation\n";
    }
    return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bcinv: (b,c)-inverses and their relatives in finite rings"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Config file (same keys as the flags; flags win)");

    GlobalOptions global;
    app.add_option("--format", global.format, "Output mode")
        ->check(CLI::IsMember({"human", "records"}))
        ->capture_default_str();
    app.add_option("--threads", global.threads,
                   "Worker threads for sweeps (0 = available parallelism)")
        ->capture_default_str();
    app.add_option("--ring-cap", global.ring_cap, "Cardinality cap for ring construction")
        ->envname("BCINV_RING_CAP")
        ->capture_default_str();

    InverseArgs inv;
    CLI::App* inverse = app.add_subcommand("inverse", "Compute one inverse");
    inverse->fallthrough();
    inverse->add_option("--ring", inv.ring_spec, "Ring spec (zn:<n> | mat:<k>:zn:<n> | prod:...)")
        ->required();
    inverse->add_option("--kind", inv.kind, "One of bc, hybrid, annihilator, group, drazin, "
                                            "bott-duffin, image-kernel")
        ->required()
        ->check(CLI::IsMember(
            {"bc", "hybrid", "annihilator", "group", "drazin", "bott-duffin", "image-kernel"}));
    inverse->add_option("--a", inv.a, "Element literal");
    inverse->add_option("--b", inv.b, "Element literal");
    inverse->add_option("--c", inv.c, "Element literal");
    inverse->add_option("--e", inv.e, "Idempotent literal (bott-duffin)");
    inverse->add_option("--f", inv.f, "Idempotent literal (bott-duffin)");
    inverse->add_option("--p", inv.p, "Idempotent literal (image-kernel)");
    inverse->add_option("--q", inv.q, "Idempotent literal (image-kernel)");

    std::string ideals_ring, ideals_a;
    CLI::App* ideals = app.add_subcommand("ideals", "Print aR, Ra, l(a), r(a), rl(a), lr(a)");
    ideals->fallthrough();
    ideals->add_option("--ring", ideals_ring, "Ring spec")->required();
    ideals->add_option("--a", ideals_a, "Element literal")->required();

    std::string verify_ring, verify_theorem;
    std::uint64_t verify_budget = 0;
    CLI::App* verify = app.add_subcommand("verify", "Run theorem sweeps over a ring");
    verify->fallthrough();
    verify->add_option("--ring", verify_ring, "Ring spec")->required();
    verify->add_option("--theorem", verify_theorem, "Theorem id or 'all'")->required();
    verify->add_option("--budget", verify_budget, "Instance budget per sweep (0 = default)");

    std::string mine_family = "zn", mine_target;
    std::uint32_t mine_max_n = 8;
    std::uint64_t mine_budget = 0;
    CLI::App* mine = app.add_subcommand("mine", "Search ring families for gap witnesses");
    mine->fallthrough();
    mine->add_option("--family", mine_family, "zn or mat2")
        ->check(CLI::IsMember({"zn", "mat2"}))
        ->capture_default_str();
    mine->add_option("--max-n", mine_max_n, "Largest modulus to sweep")->capture_default_str();
    mine->add_option("--target", mine_target, "iii-not-iv, v-not-i or annihilator-not-bc")
        ->required();
    mine->add_option("--budget", mine_budget, "Triple budget (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*inverse) return run_inverse(global, *inverse, inv);
        if (*ideals) return run_ideals(global, ideals_ring, ideals_a);
        if (*verify) return run_verify(global, verify_ring, verify_theorem, verify_budget);
        if (*mine) return run_mine(global, mine_family, mine_max_n, mine_target, mine_budget);
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const CLI::RequiredError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const SpecParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const CardinalityError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const InternalCheckError& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
