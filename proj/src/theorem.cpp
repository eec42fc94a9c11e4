#include "recip/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "json.hpp"

#include "recip/congruence.hpp"

namespace recip {

namespace {

std::string at_t(std::uint64_t t, std::uint64_t value) {
    return "t=" + std::to_string(t) + " N=" + std::to_string(value);
}

Elem sixteen_over(const Structure& s, Elem t) { return s.mul(s.from_integer(16), s.inv(t)); }

bool is_plus_minus_four(const Structure& s, Elem t) {
    const Elem four = s.from_integer(4);
    return t == four || t == s.neg(four);
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::chrono::nanoseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult verify_majoration(const Structure& s, const NTable& n) {
    const std::int64_t bound = 2 * static_cast<std::int64_t>(s.size()) - 4;
    if (static_cast<std::int64_t>(n.values[0]) != bound)
        return CheckResult::fail("majoration", s.size(), at_t(0, n.values[0]) + " expected " + std::to_string(bound));
    for (Elem t = 0; t < s.size(); ++t) {
        if (static_cast<std::int64_t>(n.values[t]) > bound)
            return CheckResult::fail("majoration", s.size(), at_t(t, n.values[t]) + " exceeds " + std::to_string(bound));
    }
    return CheckResult::pass("majoration", s.size());
}

CheckResult verify_majoration(std::uint64_t p) {
    const Structure s = Structure::prime_field(p);
    return verify_majoration(s, n_table(s));
}

CheckResult verify_parity(const Structure& s, const NTable& n) {
    for (Elem t = 0; t < s.size(); ++t) {
        const bool odd = n.values[t] % 2 == 1;
        if (odd != is_plus_minus_four(s, t)) return CheckResult::fail("parity", s.size(), at_t(t, n.values[t]));
    }
    return CheckResult::pass("parity", s.size());
}

CheckResult verify_parity(std::uint64_t p) {
    const Structure s = Structure::prime_field(p);
    return verify_parity(s, n_table(s));
}

CheckResult verify_main_theorem(const Structure& s, const NTable& n) {
    std::uint64_t checked = 0;
    for (Elem t : s.units()) {
        const Elem image = sixteen_over(s, t);
        ++checked;
        if (n.values[t] != n.values[image]) {
            return CheckResult::fail("main_theorem", checked,
                                     at_t(t, n.values[t]) + " vs 16/t=" + std::to_string(image) +
                                         " N=" + std::to_string(n.values[image]));
        }
    }
    return CheckResult::pass("main_theorem", checked);
}

CheckResult verify_main_theorem(const Structure& s) { return verify_main_theorem(s, n_table(s)); }

CheckResult verify_m_distribution(const Structure& s, const MTable& m) {
    const std::uint64_t q = s.size();
    std::uint64_t count[3] = {0, 0, 0};
    std::uint64_t total = 0;
    for (Elem a = 0; a < q; ++a) {
        const auto v = m.values[a];
        if (v > 2) return CheckResult::fail("m_distribution", q, "a=" + std::to_string(a) + " M=" + std::to_string(v));
        ++count[v];
        total += v;
    }
    const bool ok = count[0] == (q - 1) / 2 && count[1] == 2 && count[2] == (q - 3) / 2 && total == q - 1;
    if (!ok) {
        return CheckResult::fail("m_distribution", q,
                                 "zeros=" + std::to_string(count[0]) + " ones=" + std::to_string(count[1]) +
                                     " twos=" + std::to_string(count[2]) + " sum=" + std::to_string(total));
    }
    return CheckResult::pass("m_distribution", q);
}

bool ProofTrace::holds() const {
    return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const ProofStep& s) { return s.holds; });
}

ProofTrace proof_replay(std::uint64_t p, std::uint64_t t) {
    const Structure s = Structure::prime_field(p);
    return proof_replay(n_table(s), coefficient_vector(s.base_modulus()), t);
}

ProofTrace proof_replay(const NTable& n, const CoefficientVector& cv, std::uint64_t t) {
    const Structure s = Structure::prime_field(cv.p);
    if (n.values.size() != cv.p) throw SpecMismatch("N table and coefficients disagree on p");
    const Modulus& mod = s.base_modulus();
    const Residue tr(static_cast<std::int64_t>(t), mod);
    if (tr.is_zero()) throw ZeroInverse("proof replay needs t != 0");

    ProofTrace trace;
    trace.p = cv.p;
    trace.t = tr.value();
    trace.image = sixteen_over(s, static_cast<Elem>(trace.t));
    trace.n_t = n.values[trace.t];
    trace.n_image = n.values[trace.image];
    trace.difference = static_cast<std::int64_t>(trace.n_image) - static_cast<std::int64_t>(trace.n_t);
    const auto p_signed = static_cast<std::int64_t>(cv.p);

    // 1. congruence mod p, by the polynomial and by the counts
    trace.steps.push_back({"N(16/t) = N(t) mod p", congruence_16_over_t(cv, n, tr),
                           "N(t)=" + std::to_string(trace.n_t) + " N(16/t)=" + std::to_string(trace.n_image)});

    // 2. both counts bounded by N(0) = 2p - 4
    const std::int64_t bound = 2 * p_signed - 4;
    const bool bounded = trace.n_t <= bound && trace.n_image <= bound && n.values[0] == bound;
    trace.steps.push_back({"0 <= N(t), N(16/t) <= 2p-4", bounded, "bound=" + std::to_string(bound)});

    // 3. t = +-4 iff 16/t = +-4, so both counts share a parity
    const bool t_special = is_plus_minus_four(s, static_cast<Elem>(trace.t));
    const bool image_special = is_plus_minus_four(s, static_cast<Elem>(trace.image));
    const bool same_parity = t_special == image_special && (trace.n_t % 2 == 1) == t_special &&
                             (trace.n_image % 2 == 1) == image_special;
    trace.steps.push_back({"N(t) and N(16/t) have the same parity", same_parity,
                           t_special ? "both odd (t = +-4)" : "both even"});

    // 4. difference in {-p, 0, p} and even, hence 0
    const std::int64_t d = trace.difference;
    const bool in_window = d == -p_signed || d == 0 || d == p_signed;
    const bool forced_zero = in_window && d % 2 == 0 && d == 0;
    trace.steps.push_back({"difference in {-p, 0, p} and even, so 0", forced_zero, "difference=" + std::to_string(d)});
    return trace;
}

std::vector<std::pair<Elem, Elem>> search_affine_symmetries(const Structure& s, const NTable& n) {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem a : s.units()) {
        for (Elem b = 0; b < s.size(); ++b) {
            bool preserved = true;
            for (Elem t = 0; t < s.size() && preserved; ++t) preserved = n.values[s.add(s.mul(a, t), b)] == n.values[t];
            if (preserved) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<Elem> search_inversive_symmetries(const Structure& s, const NTable& n) {
    const auto units = s.units();
    std::vector<Elem> inverses;
    inverses.reserve(units.size());
    for (Elem t : units) inverses.push_back(s.inv(t));

    std::vector<Elem> out;
    for (Elem a : units) {
        bool preserved = true;
        for (std::size_t i = 0; i < units.size() && preserved; ++i)
            preserved = n.values[s.mul(a, inverses[i])] == n.values[units[i]];
        if (preserved) out.push_back(a);
    }
    return out;
}

SymmetryReport search_symmetries(std::uint64_t p) {
    const Structure s = Structure::prime_field(p);
    const NTable n = n_table(s);
    return SymmetryReport{p, search_affine_symmetries(s, n), search_inversive_symmetries(s, n)};
}

VerificationReport verify_prime(std::uint64_t p) {
    const Stopwatch clock;
    const Structure s = Structure::prime_field(p);
    const Modulus& mod = s.base_modulus();
    const MTable m = m_table(s);
    const NTable n = n_table_formula(m, s);
    const FactorialTable facts(mod);
    const CoefficientVector cv = coefficient_vector(facts);

    VerificationReport report{s.descriptor(), {}, {}};
    auto& checks = report.checks;
    checks.push_back(verify_m_distribution(s, m));
    checks.push_back(verify_majoration(s, n));
    checks.push_back(verify_parity(s, n));
    checks.push_back(verify_main_theorem(s, n));

    [&] {
        for (std::uint64_t t = 0; t < p; ++t) {
            const Residue tr = Residue::from_unsigned(t, mod);
            if (congruence_eval(cv, tr).value() != n.values[t] % p) {
                checks.push_back(CheckResult::fail("congruence_poly", p, at_t(t, n.values[t])));
                return;
            }
        }
        checks.push_back(CheckResult::pass("congruence_poly", p));
    }();

    [&] {
        for (std::uint64_t t = 1; t < p; ++t) {
            if (!congruence_16_over_t(cv, n, Residue::from_unsigned(t, mod))) {
                checks.push_back(CheckResult::fail("congruence_16_over_t", p - 1, at_t(t, n.values[t])));
                return;
            }
        }
        checks.push_back(CheckResult::pass("congruence_16_over_t", p - 1));
    }();

    [&] {
        for (std::uint64_t k = 0; k < p; k += 2) {
            if (!mirror_identity_check(facts, k)) {
                checks.push_back(CheckResult::fail("mirror_identity", (p + 1) / 2, "k=" + std::to_string(k)));
                return;
            }
        }
        checks.push_back(CheckResult::pass("mirror_identity", (p + 1) / 2));
    }();

    [&] {
        std::uint64_t steps = 0;
        for (std::uint64_t k = 0; k + 2 <= p - 1; k += 2, ++steps) {
            if (!mirror_recurrence_check(mod, k)) {
                checks.push_back(CheckResult::fail("mirror_recurrence", (p - 1) / 2, "k=" + std::to_string(k)));
                return;
            }
        }
        checks.push_back(CheckResult::pass("mirror_recurrence", steps));
    }();

    if (p <= max_power_sum_prime) {
        [&] {
            for (std::uint64_t t = 0; t < p; ++t) {
                if (!power_sum_check(mod, Residue::from_unsigned(t, mod), n)) {
                    checks.push_back(CheckResult::fail("power_sum", p, at_t(t, n.values[t])));
                    return;
                }
            }
            checks.push_back(CheckResult::pass("power_sum", p));
        }();
    }

    [&] {
        for (std::uint64_t t = 1; t < p; ++t) {
            const ProofTrace trace = proof_replay(n, cv, t);
            if (!trace.holds()) {
                checks.push_back(CheckResult::fail("proof_replay", p - 1, at_t(t, n.values[t])));
                return;
            }
        }
        checks.push_back(CheckResult::pass("proof_replay", p - 1));
    }();

    report.elapsed = clock.elapsed();
    return report;
}

VerificationReport verify_field(const Structure& s) {
    const Stopwatch clock;
    if (!s.is_field()) throw UnsupportedStructure(s.descriptor() + " is not a field");
    const NTable brute = n_table_bruteforce(s);
    const MTable m = m_table(s);

    VerificationReport report{s.descriptor(), {}, {}};
    report.checks.push_back(verify_m_distribution(s, m));
    report.checks.push_back(verify_majoration(s, brute));
    report.checks.push_back(verify_parity(s, brute));
    report.checks.push_back(verify_main_theorem(s, brute));

    const NTable formula = n_table_formula(m, s);
    const MTable m_brute = m_table_bruteforce(s);
    CheckResult equiv = CheckResult::pass("formula_matches_bruteforce", 2 * std::uint64_t{s.size()});
    for (Elem x = 0; x < s.size(); ++x) {
        if (m.values[x] != m_brute.values[x] || formula.values[x] != brute.values[x]) {
            equiv = CheckResult::fail("formula_matches_bruteforce", equiv.universe,
                                      "element " + std::to_string(x) + ": M " + std::to_string(m.values[x]) + "/" +
                                          std::to_string(m_brute.values[x]) + ", N " +
                                          std::to_string(formula.values[x]) + "/" + std::to_string(brute.values[x]));
            break;
        }
    }
    report.checks.push_back(std::move(equiv));
    report.elapsed = clock.elapsed();
    return report;
}

std::vector<VerificationReport> verify_primes(std::span<const std::uint64_t> primes, unsigned jobs) {
    std::vector<VerificationReport> results(primes.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) results[i] = verify_prime(primes[i]);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < primes.size(); i = next++) {
                    try {
                        results[i] = verify_prime(primes[i]);
                    } catch (...) {
                        const std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t max_p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n <= max_p; n += 2) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

void write_json_lines(std::ostream& out, const VerificationReport& report) {
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["structure"] = report.structure;
        j["check"] = c.name;
        j["universe"] = c.universe;
        j["pass"] = c.passed;
        if (c.counterexample) j["counterexample"] = *c.counterexample;
        out << j.dump() << '\n';
    }
}

void write_summary(std::ostream& out, const VerificationReport& report) {
    const auto passed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const CheckResult& c) { return c.passed; });
    out << report.structure << ": " << passed << '/' << report.checks.size() << " checks passed\n";
    for (const auto& c : report.checks) {
        if (!c.passed) out << "  FAIL " << c.name << " (" << c.universe << " cases): " << c.counterexample.value_or("") << '\n';
    }
}

} // namespace recip
