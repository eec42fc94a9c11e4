#include "recip/cli.hpp"

#include <map>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "recip/congruence.hpp"
#include "recip/counting.hpp"
#include "recip/table_io.hpp"
#include "recip/theorem.hpp"

namespace recip::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

Format format_or(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

std::uint64_t require_odd_prime(std::optional<std::uint64_t> p, const char* flag = "--p") {
    if (!p) throw UsageError(std::string(flag) + " is required");
    if (*p % 2 == 0) throw UsageError("even modulus " + std::to_string(*p) + " is not supported: " + flag + " must be an odd prime");
    if (!is_prime(*p)) throw UsageError(std::to_string(*p) + " is not prime: " + flag + " must be an odd prime");
    return *p;
}

// --p P, --p P --k K, or --n N.
Structure resolve_structure(const RunConfig& c) {
    if (c.p && c.n) throw UsageError("give either --p or --n, not both");
    if (c.n) {
        if (c.k) throw UsageError("--k applies to --p only");
        if (*c.n < 2) throw UsageError("--n must be at least 2");
        return Structure::residue_ring(*c.n);
    }
    const std::uint64_t p = require_odd_prime(c.p);
    if (c.k) {
        if (*c.k < 1 || *c.k > max_extension_degree) throw UsageError("--k must be in [1, 8]");
        return Structure::extension_field(p, *c.k);
    }
    return Structure::prime_field(p);
}

void note_even(const Structure& s, std::ostream& err) {
    if (s.even_modulus())
        err << "note: " << s.descriptor() << " has even modulus; counts are by brute force and no lemma applies\n";
}

ordered_json parse_ordered(const std::string& text) { return ordered_json::parse(text); }

ordered_json values_json(const std::vector<std::uint32_t>& values) {
    ordered_json j = ordered_json::object();
    for (std::size_t i = 0; i < values.size(); ++i) j[std::to_string(i)] = values[i];
    return j;
}

ordered_json checks_json(const VerificationReport& report) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json j;
        j["check"] = c.name;
        j["universe"] = c.universe;
        j["pass"] = c.passed;
        if (c.counterexample) j["counterexample"] = *c.counterexample;
        arr.push_back(std::move(j));
    }
    return arr;
}

MTable cached_mtable(const Structure& s, const std::optional<TableCache>& cache) {
    if (cache) {
        if (auto m = cache->load_mtable(s)) return *m;
    }
    MTable m = m_table(s);
    if (cache) cache->store(m, s);
    return m;
}

NTable cached_ntable(const Structure& s, const std::optional<TableCache>& cache, bool bruteforce) {
    if (cache) {
        if (auto n = cache->load_ntable(s)) return *n;
    }
    NTable n = bruteforce ? n_table_bruteforce(s) : n_table(s);
    if (cache) cache->store(n, s);
    return n;
}

std::optional<TableCache> make_cache(const RunConfig& c) {
    if (!c.cache_dir) return std::nullopt;
    return TableCache(*c.cache_dir, c.trust_cache);
}

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Structure s = resolve_structure(c);
    note_even(s, err);
    const auto cache = make_cache(c);
    const bool json = format_or(c, Format::csv) == Format::json;
    if (c.command == Command::mtable) {
        const MTable m = cached_mtable(s, cache);
        if (!json) {
            write_csv(out, m);
            return exit_ok;
        }
        ordered_json j = parse_ordered(to_json(m));
        if (s.even_modulus()) j["flags"] = {"even-modulus"};
        out << j.dump() << '\n';
        return exit_ok;
    }
    const NTable n = cached_ntable(s, cache, false);
    if (!json) {
        write_csv(out, n);
        return exit_ok;
    }
    ordered_json j = parse_ordered(to_json(n));
    if (s.even_modulus()) j["flags"] = {"even-modulus"};
    out << j.dump() << '\n';
    return exit_ok;
}

int cmd_coeffs(const RunConfig& c, std::ostream& out) {
    const std::uint64_t p = require_odd_prime(c.p);
    const CoefficientVector cv = coefficient_vector(Modulus::odd_prime(p));
    if (format_or(c, Format::json) == Format::json) {
        out << to_json(cv) << '\n';
        return exit_ok;
    }
    out << "k,c\n";
    for (const auto& [k, v] : cv.coeffs) out << k << ',' << v << '\n';
    return exit_ok;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    std::vector<std::uint64_t> primes;
    if (c.p && c.max_p) throw UsageError("give either --p or --max-p, not both");
    if (c.p) {
        primes.push_back(require_odd_prime(c.p));
    } else if (c.max_p) {
        primes = odd_primes_up_to(*c.max_p);
        if (primes.empty()) throw UsageError("--max-p must be at least 3");
    } else {
        throw UsageError("verify needs --p or --max-p");
    }
    const auto reports = verify_primes(primes, c.jobs);
    const bool json = format_or(c, Format::csv) == Format::json;
    bool all_passed = true;
    for (const auto& r : reports) {
        if (json)
            write_json_lines(out, r);
        else
            write_summary(out, r);
        all_passed = all_passed && r.passed();
    }
    return all_passed ? exit_ok : exit_counterexample;
}

int cmd_symmetries(const RunConfig& c, std::ostream& out) {
    const std::uint64_t p = require_odd_prime(c.p);
    if (p > 2000) throw UsageError("symmetry search is O(p^3); --p is capped at 2000");
    const SymmetryReport r = search_symmetries(p);
    if (format_or(c, Format::json) == Format::csv) {
        out << "kind,a,b\n";
        for (const auto& [a, b] : r.affine) out << "affine," << a << ',' << b << '\n';
        for (auto a : r.inversive) out << "inversive," << a << ",\n";
        return exit_ok;
    }
    ordered_json j;
    j["p"] = r.p;
    ordered_json affine = ordered_json::array();
    for (const auto& [a, b] : r.affine) affine.push_back({a, b});
    j["affine"] = std::move(affine);
    j["inversive"] = r.inversive;
    out << j.dump() << '\n';
    return exit_ok;
}

int cmd_sets(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Structure s = resolve_structure(c);
    note_even(s, err);
    const ImageSets sets = image_sets(s);
    if (format_or(c, Format::csv) == Format::csv) {
        out << "set,cardinality\n";
        out << "A," << sets.a.size() << '\n';
        out << "A+A," << sets.a_plus_a.size() << '\n';
        out << "A*A," << sets.a_times_a.size() << '\n';
        return exit_ok;
    }
    ordered_json j;
    j["structure"] = s.descriptor();
    j["A"] = sets.a;
    j["A+A"] = sets.a_plus_a;
    j["A*A"] = sets.a_times_a;
    j["cardinality"] = {{"A", sets.a.size()}, {"A+A", sets.a_plus_a.size()}, {"A*A", sets.a_times_a.size()}};
    out << j.dump() << '\n';
    return exit_ok;
}

int cmd_ext(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (!c.k) throw UsageError("ext needs --k");
    if (c.n) throw UsageError("ext takes --p and --k");
    const Structure s = resolve_structure(c);
    const auto cache = make_cache(c);
    const MTable m = cached_mtable(s, cache);
    const NTable n = cached_ntable(s, cache, true);
    // verify_field recomputes its own brute-force table so the verdict never rests on the cache.
    const VerificationReport report = verify_field(s);

    if (format_or(c, Format::csv) == Format::csv) {
        write_csv(out, m, n);
        write_summary(err, report);
        return exit_ok;
    }
    ordered_json j;
    j["structure"] = s.descriptor();
    j["q"] = s.size();
    j["irreducible"] = s.field()->spec().irreducible;
    j["mtable"] = values_json(m.values);
    j["ntable"] = values_json(n.values);
    j["checks"] = checks_json(report);
    out << j.dump() << '\n';
    return exit_ok;
}

int cmd_zn(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (!c.n) throw UsageError("zn needs --n");
    if (c.p || c.k) throw UsageError("zn takes --n only");
    const Structure s = resolve_structure(c);
    note_even(s, err);
    const auto cache = make_cache(c);
    const MTable m = [&] {
        if (cache) {
            if (auto cached = cache->load_mtable(s)) return *cached;
        }
        MTable fresh = m_table_bruteforce(s);
        if (cache) cache->store(fresh, s);
        return fresh;
    }();
    const NTable n = cached_ntable(s, cache, true);
    const CheckResult theorem = verify_main_theorem(s, n);

    if (format_or(c, Format::csv) == Format::csv) {
        write_csv(out, m, n);
        err << s.descriptor() << ": N(16/t) = N(t) over units " << (theorem.passed ? "holds" : "fails");
        if (theorem.counterexample) err << " (" << *theorem.counterexample << ")";
        err << '\n';
        return exit_ok;
    }
    ordered_json j;
    j["structure"] = s.descriptor();
    j["n"] = s.size();
    if (s.even_modulus()) j["flags"] = {"even-modulus"};
    j["units"] = s.units().size();
    j["mtable"] = values_json(m.values);
    j["ntable"] = values_json(n.values);
    ordered_json verdict;
    verdict["holds"] = theorem.passed;
    if (theorem.counterexample) verdict["counterexample"] = *theorem.counterexample;
    j["sixteen_over_t"] = std::move(verdict);
    out << j.dump() << '\n';
    return exit_ok;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
        switch (config.command) {
        case Command::mtable:
        case Command::ntable: return cmd_table(config, out, err);
        case Command::coeffs: return cmd_coeffs(config, out);
        case Command::verify: return cmd_verify(config, out);
        case Command::symmetries: return cmd_symmetries(config, out);
        case Command::sets: return cmd_sets(config, out, err);
        case Command::ext: return cmd_ext(config, out, err);
        case Command::zn: return cmd_zn(config, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        // Library precondition failures (bad modulus, oversize input) are usage errors too.
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts solutions of x + 1/x + y + 1/y = t and checks the 16/t symmetry"};
    app.require_subcommand(1);

    RunConfig config;
    std::uint64_t p = 0, n = 0, max_p = 0;
    int k = 0;
    std::string format;
    std::string cache_dir;

    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    struct Spec {
        const char* name;
        Command command;
        const char* help;
        bool wants_n, wants_k, wants_max_p, wants_jobs, wants_cache;
    };
    const Spec specs[] = {
        {"mtable", Command::mtable, "M(a) for every a", true, true, false, false, true},
        {"ntable", Command::ntable, "N(t) for every t", true, true, false, false, true},
        {"coeffs", Command::coeffs, "coefficients of the mod-p polynomial for N", false, false, false, false, false},
        {"verify", Command::verify, "check the lemmas, congruences and 16/t theorem per prime", false, false, true, true,
         false},
        {"symmetries", Command::symmetries, "affine and inversive maps preserving N", false, false, false, false, false},
        {"sets", Command::sets, "the image set A and its sum and product sets", true, true, false, false, false},
        {"ext", Command::ext, "tables and checks over F_q, q = p^k", false, true, false, false, true},
        {"zn", Command::zn, "tables over Z/nZ by brute force", true, false, false, false, true},
    };

    std::vector<std::pair<CLI::App*, Command>> subs;
    std::map<CLI::App*, std::vector<std::pair<CLI::Option*, int>>> opts;
    enum { opt_p, opt_n, opt_k, opt_max_p };
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        subs.emplace_back(sub, spec.command);
        auto& o = opts[sub];
        if (spec.command != Command::zn) o.emplace_back(sub->add_option("--p", p, "odd prime"), opt_p);
        if (spec.wants_n) o.emplace_back(sub->add_option("--n", n, "modulus of Z/nZ"), opt_n);
        if (spec.wants_k) o.emplace_back(sub->add_option("--k", k, "extension degree"), opt_k);
        if (spec.wants_max_p) o.emplace_back(sub->add_option("--max-p", max_p, "check every odd prime up to this"), opt_max_p);
        if (spec.wants_jobs) sub->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        if (spec.wants_cache) {
            sub->add_option("--cache-dir", cache_dir, "directory for cached tables");
            sub->add_flag("--trust-cache", config.trust_cache, "skip spot checks of cached tables");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    for (const auto& [sub, command] : subs) {
        if (!sub->parsed()) continue;
        config.command = command;
        for (const auto& [opt, id] : opts[sub]) {
            if (opt->count() == 0) continue;
            switch (id) {
            case opt_p: config.p = p; break;
            case opt_n: config.n = n; break;
            case opt_k: config.k = k; break;
            case opt_max_p: config.max_p = max_p; break;
            }
        }
    }
    if (!format.empty()) config.format = formats.at(format);
    if (!cache_dir.empty()) config.cache_dir = cache_dir;
    return run(config, out, err);
}

} // namespace recip::cli
