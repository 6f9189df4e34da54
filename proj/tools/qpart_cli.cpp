// qpart: construct, verify, and search extremal subspace partitions and
// partial spreads of V(n,q).
//
// Exit codes are the machine contract: 0 success, 1 mathematical violation,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "qpart/construct.hpp"
#include "qpart/formulas.hpp"
#include "qpart/json_io.hpp"
#include "qpart/search.hpp"
#include "qpart/suite.hpp"

using nlohmann::json;
using namespace qpart;

namespace {

struct RangeSpec {
    std::uint32_t lo = 0, hi = 0;
};

RangeSpec parse_range(const std::string& s) {
    RangeSpec r;
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        r.lo = r.hi = static_cast<std::uint32_t>(std::stoul(s));
    } else {
        r.lo = static_cast<std::uint32_t>(std::stoul(s.substr(0, pos)));
        r.hi = static_cast<std::uint32_t>(std::stoul(s.substr(pos + 2)));
    }
    if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range " + s);
    return r;
}

gf::FieldSpec make_field_from_flags(std::uint32_t q, std::uint32_t p, std::uint32_t e) {
    if (q != 0) {
        // factor q as p^e
        for (std::uint32_t base = 2; base <= q; ++base) {
            if (!gf::is_prime(base)) continue;
            std::uint32_t deg = 0;
            std::uint64_t v = 1;
            while (v < q) {
                v *= base;
                ++deg;
            }
            if (v == q) return gf::FieldSpec::make(base, deg);
        }
        throw gf::FieldError("q = " + std::to_string(q) + " is not a prime power");
    }
    return gf::FieldSpec::make(p, e);
}

std::string extremal_string(const formulas::ExtremalValue& v) {
    if (v.status == formulas::Status::Defined) return v.value.str();
    return formulas::to_string(v.status);
}

int cmd_formulas(const std::string& n_range, const std::string& t_range, std::uint32_t q,
                 bool as_json) {
    auto nr = parse_range(n_range);
    auto tr = parse_range(t_range);
    json rows = json::array();
    for (std::uint32_t n = nr.lo; n <= nr.hi; ++n)
        for (std::uint32_t t = tr.lo; t <= tr.hi; ++t) {
            if (t > n) continue;
            auto s = formulas::sigma(n, t, q);
            auto r = formulas::rho(n, t, q);
            auto tv = formulas::tau(n, t, q);
            if (as_json) {
                rows.push_back({{"n", n},
                                {"t", t},
                                {"q", q},
                                {"sigma", extremal_string(s)},
                                {"rho", extremal_string(r)},
                                {"tau", extremal_string(tv)},
                                {"status", formulas::to_string(s.status)}});
            } else {
                std::cout << "n=" << n << " t=" << t << " q=" << q
                          << "  sigma=" << extremal_string(s) << "  rho=" << extremal_string(r)
                          << "  tau=" << extremal_string(tv) << "\n";
            }
        }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& path) {
    std::optional<io::ParsedPartition> maybe;
    try {
        maybe = io::partition_from_json(io::load_file(path));
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    auto& parsed = *maybe;
    try {
        geom::Space space(parsed.n, parsed.field);
        auto pi = part::validate(space, parsed.parts);
        std::cout << "partition of V(" << parsed.n << "," << parsed.field.q() << "), size "
                  << pi.size() << ": valid\n";

        bool ok = true;
        for (const auto& H : space.hyperplanes()) {
            auto rep = part::check_size_identity(space, pi, H);
            if (!rep.holds) {
                std::cout << "FAIL size identity: |Pi|=" << rep.size
                          << " formula=" << rep.formula_value << "\n";
                ok = false;
            }
        }
        if (ok) std::cout << "size identity: exact at all hyperplanes\n";

        auto ty = part::partition_type(pi);
        for (std::uint32_t d = 1; d + 2 <= space.n(); ++d) {
            if (ty.m[d] == 0) continue;
            for (std::uint32_t dp = d; dp + 2 <= space.n(); ++dp) {
                if (ty.m[dp] == 0) continue;
                auto rep = part::check_packing_identities(space, pi, d, dp);
                for (const auto& item : rep.items)
                    if (!item.holds()) {
                        std::cout << "FAIL " << item.name << ": lhs=" << item.lhs
                                  << " rhs=" << item.rhs << " (d=" << d << ",d'=" << dp << ")\n";
                        ok = false;
                    }
            }
        }
        if (ok) std::cout << "packing identities: exact for all admissible (d,d')\n";

        std::map<std::uint32_t, std::int64_t> by_dim;
        for (const auto& W : pi.parts) ++by_dim[W.dim];
        if (by_dim.size() >= 2) {
            for (std::uint32_t j = 1; j < by_dim.size(); ++j) {
                auto rep = part::check_conjecture(space, pi, j);
                std::string st = rep.status == part::ConjectureStatus::Pass ? "pass"
                                 : rep.status == part::ConjectureStatus::Fail ? "FAIL"
                                                                              : "unverifiable";
                std::cout << "conjecture j=" << j << ": " << st << " (lhs=" << rep.lhs << ")\n";
                if (rep.status == part::ConjectureStatus::Fail) ok = false;
            }
        }
        return ok ? 0 : 1;
    } catch (const part::NotAPartition& e) {
        std::cout << "not a partition: " << e.what() << " (witness point "
                  << e.witness_point << ", parts " << e.part_a << "," << e.part_b << ")\n";
        return 1;
    }
}

int cmd_construct(const std::string& kind, std::uint32_t n, std::uint32_t t, std::uint32_t d,
                  const gf::FieldSpec& F, const std::string& out) {
    json j;
    std::vector<std::string> recipe;
    if (kind == "pi-m") {
        auto cert = construct::pi_m(n, t, F);
        j = io::partition_to_json(F, cert.partition);
        recipe = cert.recipe;
    } else if (kind == "pi-M") {
        auto cert = construct::pi_M(n, t, F);
        j = io::partition_to_json(F, cert.partition);
        recipe = cert.recipe;
    } else if (kind == "spread") {
        auto pi = construct::desarguesian_spread(n / t, t, F);
        j = io::partition_to_json(F, pi);
        recipe = {"desarguesian t-spread k=" + std::to_string(n / t) +
                  " t=" + std::to_string(t)};
    } else if (kind == "beutelspacher") {
        auto cert = construct::beutelspacher_partition(n, d, F);
        j = io::partition_to_json(F, cert.partition);
        recipe = cert.recipe;
    } else if (kind == "maximal-embed") {
        auto S = construct::embedded_spread_maximal(n, t, F);
        j = io::spread_to_json(F, S);
        recipe = {"embedded maximal spread n=" + std::to_string(n) +
                  " t=" + std::to_string(t)};
    } else {
        std::cerr << "unknown construction: " << kind << "\n";
        return 2;
    }
    for (const auto& line : recipe) std::cerr << "# " << line << "\n";
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        io::save_file(out, j);
    return 0;
}

int cmd_spread(const std::string& action, const std::string& path,
               const std::string& blocking_path, const std::string& out) {
    std::optional<io::ParsedSpread> maybe;
    try {
        maybe = io::spread_from_json(io::load_file(path));
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    auto& parsed = *maybe;
    geom::Space space(parsed.n, parsed.field);
    spread::PartialSpread S;
    try {
        S = spread::validate_spread(space, parsed.t, parsed.members);
    } catch (const spread::SpreadError& e) {
        std::cout << "invalid spread: " << e.what() << "\n";
        return 1;
    }
    if (action == "validate") {
        std::cout << "valid partial " << S.t << "-spread of V(" << S.n << ","
                  << parsed.field.q() << "), size " << S.size() << "\n";
        return 0;
    }
    if (action == "holes") {
        auto holes = S.holes();
        std::cout << "holes: " << holes.count() << " of " << space.num_points() << "\n";
        return 0;
    }
    if (action == "maximal") {
        auto mx = spread::is_maximal(space, S);
        if (mx.maximal) {
            std::cout << "maximal\n";
            return 0;
        }
        std::cout << "extendable; witness:\n"
                  << io::subspace_to_json(*mx.extension).dump() << "\n";
        return 1;
    }
    if (action == "complete") {
        auto done = spread::greedy_complete(space, S);
        json j = io::spread_to_json(parsed.field, done);
        if (out.empty())
            std::cout << j.dump(2) << "\n";
        else
            io::save_file(out, j);
        std::cerr << "# greedy completion: size " << S.size() << " -> " << done.size() << "\n";
        return 0;
    }
    if (action == "induce") {
        if (blocking_path.empty()) {
            std::cerr << "induce requires --blocking <subspace.json>\n";
            return 2;
        }
        geom::Subspace B;
        try {
            B = io::subspace_from_json(io::load_file(blocking_path), parsed.field);
        } catch (const io::ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return 2;
        }
        try {
            auto pi = spread::induced_partition(space, S, B);
            json j = io::partition_to_json(parsed.field, pi);
            if (out.empty())
                std::cout << j.dump(2) << "\n";
            else
                io::save_file(out, j);
            return 0;
        } catch (const std::runtime_error& e) {
            std::cout << "induced partition failed: " << e.what() << "\n";
            return 1;
        }
    }
    if (action == "block") {
        bool blocking = spread::is_blocking_set(space, S.covered, S.t);
        std::cout << "union of spread is " << (blocking ? "" : "not ")
                  << "a blocking set w.r.t. " << S.t << "-spaces\n";
        return blocking ? 0 : 1;
    }
    std::cerr << "unknown spread action: " << action << "\n";
    return 2;
}

int cmd_search(const std::string& kind, std::uint32_t n, std::uint32_t t, std::int64_t target,
               const gf::FieldSpec& F, const search::Budget& budget, bool symmetry,
               const std::string& cert_out) {
    geom::Space space(n, F);
    search::Result r;
    if (kind == "sigma")
        r = search::min_partition_size(space, t, budget, symmetry);
    else if (kind == "rho")
        r = search::max_partition_size(space, t, budget, symmetry);
    else if (kind == "tau")
        r = search::min_maximal_spread_size(space, t, budget, symmetry);
    else if (kind == "max-spread")
        r = search::max_partial_spread_size(space, t, budget, symmetry);
    else if (kind == "find-maximal")
        r = search::find_maximal_spread_of_size(space, t, target, budget, symmetry);
    else {
        std::cerr << "unknown search kind: " << kind << "\n";
        return 2;
    }
    json j{{"optimum", r.found ? json(r.optimum) : json(nullptr)},
           {"status", search::to_string(r.status)},
           {"nodes", r.nodes},
           {"proof", r.proof},
           {"certificate_file", cert_out.empty() ? json(nullptr) : json(cert_out)}};
    if (!cert_out.empty() && r.found) {
        json cert = json::array();
        for (const auto& W : r.certificate) cert.push_back(io::subspace_to_json(W));
        io::save_file(cert_out, json{{"field", io::field_to_json(F)},
                                     {"n", n},
                                     {"t", t},
                                     {"parts", cert}});
    }
    std::cout << j.dump(2) << "\n";
    return r.status == search::Status::BudgetExceeded ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal subspace partitions and maximal partial spreads of V(n,q)"};
    app.require_subcommand(1);

    std::uint32_t q = 0, p = 2, e = 1, n = 0, t = 0, d = 0;
    std::uint64_t seed = 12345;
    app.add_option("--seed", seed, "RNG seed for randomized smoke checks");

    // formulas
    auto* sf = app.add_subcommand("formulas", "closed-form sigma/rho/tau tables");
    std::string n_range, t_range = "2";
    bool as_json = false;
    sf->add_option("--n", n_range, "n or a..b range")->required();
    sf->add_option("--t", t_range, "t or a..b range");
    sf->add_option("--q", q, "field order")->required();
    sf->add_flag("--json", as_json, "emit JSON rows");

    // construct
    auto* sc = app.add_subcommand("construct", "explicit partition/spread constructions");
    std::string kind, out;
    sc->add_option("kind", kind, "pi-m|pi-M|spread|beutelspacher|maximal-embed")->required();
    sc->add_option("--n", n)->required();
    sc->add_option("--t", t);
    sc->add_option("--d", d);
    sc->add_option("--q", q);
    sc->add_option("--p", p);
    sc->add_option("--e", e);
    sc->add_option("--out", out, "write JSON here instead of stdout");

    // verify
    auto* sv = app.add_subcommand("verify", "validate a partition file and run the identity suites");
    std::string verify_path;
    sv->add_option("file", verify_path)->required();

    // spread
    auto* ss = app.add_subcommand("spread", "partial-spread analysis");
    std::string spread_action, spread_path, blocking_path;
    ss->add_option("action", spread_action, "validate|holes|maximal|complete|induce|block")
        ->required();
    ss->add_option("file", spread_path)->required();
    ss->add_option("--blocking", blocking_path, "subspace JSON for induce");
    ss->add_option("--out", out);

    // search
    auto* sr = app.add_subcommand("search", "exact branch-and-bound verification");
    std::string search_kind, cert_out;
    std::int64_t target = 0;
    search::Budget budget;
    unsigned threads = 1;
    bool no_symmetry = false;
    sr->add_option("kind", search_kind, "sigma|rho|tau|max-spread|find-maximal")->required();
    sr->add_option("--n", n)->required();
    sr->add_option("--t", t)->required();
    sr->add_option("--q", q);
    sr->add_option("--p", p);
    sr->add_option("--e", e);
    sr->add_option("--target", target, "target size for find-maximal");
    sr->add_option("--budget-nodes", budget.max_nodes);
    sr->add_option("--budget-secs", budget.max_seconds);
    sr->add_option("--threads", threads, "accepted for compatibility; search runs sequentially");
    sr->add_flag("--no-symmetry", no_symmetry, "disable canonical-first symmetry breaking");
    sr->add_option("--certificate-out", cert_out);

    // paper-suite
    auto* sp = app.add_subcommand("paper-suite", "run the full reproduction battery");
    suite::Options sopts;
    sp->add_flag("--quick", sopts.quick, "skip stretch items");
    sp->add_option("--budget-nodes", sopts.budget_nodes);
    sp->add_option("--budget-secs", sopts.budget_secs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sf) return cmd_formulas(n_range, t_range, q, as_json);
        if (*sc) return cmd_construct(kind, n, t, d, make_field_from_flags(q, p, e), out);
        if (*sv) return cmd_verify(verify_path);
        if (*ss) return cmd_spread(spread_action, spread_path, blocking_path, out);
        if (*sr)
            return cmd_search(search_kind, n, t, target, make_field_from_flags(q, p, e), budget,
                              !no_symmetry, cert_out);
        if (*sp) {
            sopts.seed = seed;
            auto results = suite::run_paper_suite(sopts);
            suite::print_results(std::cout, results);
            return suite::all_passed(results) ? 0 : 1;
        }
    } catch (const io::ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
