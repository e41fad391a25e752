// mahonia: batch front end for exact inversion / composition counts, the
// identity verification suites, and algorithm benchmarks.
//
// Exit codes: 0 success, 1 identity failure, 2 usage error, 3 resource guard.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mahonia/bipoly.hpp"
#include "mahonia/compositions.hpp"
#include "mahonia/errors.hpp"
#include "mahonia/hilbert.hpp"
#include "mahonia/inversions.hpp"
#include "mahonia/posets.hpp"
#include "mahonia/qanalog.hpp"
#include "mahonia/unipoly.hpp"

using namespace mahonia;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;

unsigned long choose2(unsigned n) { return n < 2 ? 0 : static_cast<unsigned long>(n) * (n - 1) / 2; }

// ---------------------------------------------------------------------------
// output records

struct OutputRecord {
    std::string kind;
    std::vector<std::pair<std::string, long long>> params;
    std::vector<std::pair<unsigned long, ExactInt>> values;
    bool single_value = false;
};

void write_record(const OutputRecord& record, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        os << "t,value\n";
        for (const auto& [index, value] : record.values)
            os << index << "," << value.get_str() << "\n";
    } else if (format == "json") {
        ordered_json doc;
        doc["kind"] = record.kind;
        doc["params"] = ordered_json::object();
        for (const auto& [name, value] : record.params) doc["params"][name] = value;
        doc["values"] = ordered_json::array();
        for (const auto& [index, value] : record.values)
            doc["values"].push_back({index, value.get_str()});
        os << doc.dump() << "\n";
    } else {
        if (record.single_value) {
            os << record.values.front().second.get_str() << "\n";
        } else {
            os << "[";
            for (std::size_t i = 0; i < record.values.size(); ++i) {
                if (i > 0) os << ",";
                os << record.values[i].second.get_str();
            }
            os << "]\n";
        }
    }
}

int emit(const OutputRecord& record, const std::string& format, const std::string& out_path) {
    if (out_path.empty()) {
        write_record(record, format, std::cout);
        return kExitOk;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitUsage;
    }
    write_record(record, format, file);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// inversions / compositions commands

std::vector<ExactInt> inversion_row(unsigned n, const std::string& algo) {
    if (algo == "recurrence") return inv_recurrence_row(n).values;
    if (algo == "genfun") return inv_genfun(n).values;
    if (algo == "brute") return inv_bruteforce(n).values;
    if (algo == "closed") {
        std::vector<ExactInt> row(choose2(n) + 1);
        for (unsigned long t = 0; t < row.size(); ++t) row[t] = inv_closed(n, t);
        return row;
    }
    throw std::invalid_argument("inversions: algorithm '" + algo +
                                "' cannot produce a full row (give an explicit t <= n)");
}

ExactInt inversion_value(unsigned n, unsigned long t, const std::string& algo) {
    if (t > choose2(n)) throw std::invalid_argument("inversions: t must be at most n(n-1)/2");
    if (algo == "recurrence") return inv_recurrence(n, t);
    if (algo == "genfun") return inv_genfun(n).values[t];
    if (algo == "closed") return inv_closed(n, t);
    if (algo == "pentagonal") return inv_pentagonal(n, t);
    return inv_bruteforce(n).values[t];
}

std::vector<ExactInt> composition_row(unsigned n, unsigned d, const std::string& algo) {
    if (algo == "recurrence") return comp_recurrence_row(n, d).values;
    if (algo == "genfun") return comp_genfun(n, d).values;
    if (algo == "brute") return comp_bruteforce(n, d).values;
    std::vector<ExactInt> row(static_cast<unsigned long>(n) * (d - 1) + 1);
    for (unsigned long t = 0; t < row.size(); ++t) row[t] = comp_closed(n, d, t);
    return row;
}

ExactInt composition_value(unsigned n, unsigned d, unsigned long t, const std::string& algo) {
    if (t > static_cast<unsigned long>(n) * (d - 1))
        throw std::invalid_argument("compositions: t must be at most n(d-1)");
    if (algo == "recurrence") return comp_recurrence(n, d, static_cast<long long>(t));
    if (algo == "genfun") return comp_genfun(n, d).values[t];
    if (algo == "closed") return comp_closed(n, d, t);
    return comp_bruteforce(n, d).values[t];
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
    std::string name;
    unsigned long cases = 0;
    bool ok = true;
    std::string failure;
};

using Check = std::function<CheckResult(unsigned)>;

CheckResult check_named(std::string name, unsigned long cases) {
    return CheckResult{std::move(name), cases, true, {}};
}

CheckResult check_failed(std::string name, unsigned long cases, std::string failure) {
    return CheckResult{std::move(name), cases, false, std::move(failure)};
}

// Each check takes the effective bound (from --max-n or its own default).
// Enumeration-backed checks are additionally clamped so the default guards
// are never tripped by a large --max-n.

CheckResult inv_four_way(unsigned bound) {
    const unsigned top = std::min(bound, 8u);
    for (unsigned n = 1; n <= top; ++n) {
        const InversionTable brute = inv_bruteforce(n);
        const InversionTable genfun = inv_genfun(n);
        const InversionTable recurrence = inv_recurrence_row(n);
        for (unsigned long t = 0; t <= choose2(n); ++t) {
            const ExactInt& expected = brute.values[t];
            if (genfun.values[t] != expected || recurrence.values[t] != expected ||
                inv_closed(n, t) != expected)
                return check_failed("inversion four-way agreement", n,
                                    "n=" + std::to_string(n) + ", t=" + std::to_string(t));
        }
    }
    return check_named("inversion four-way agreement", top);
}

CheckResult inv_pentagonal_check(unsigned bound) {
    const unsigned top = std::min(bound, 8u);
    for (unsigned n = 1; n <= top; ++n) {
        const InversionTable brute = inv_bruteforce(n);
        for (unsigned long t = 0; t <= n && t <= choose2(n); ++t)
            if (inv_pentagonal(n, t) != brute.values[t])
                return check_failed("pentagonal formula", n,
                                    "n=" + std::to_string(n) + ", t=" + std::to_string(t));
    }
    return check_named("pentagonal formula", top);
}

CheckResult inv_symmetry(unsigned bound) {
    for (unsigned n = 1; n <= bound; ++n)
        for (unsigned long t = 0; t <= choose2(n); ++t)
            if (inv_closed(n, t) != inv_closed(n, choose2(n) - t))
                return check_failed("inversion closed-form symmetry", n,
                                    "n=" + std::to_string(n) + ", t=" + std::to_string(t));
    return check_named("inversion closed-form symmetry", bound);
}

CheckResult inv_prefix(unsigned bound) {
    for (unsigned n = 1; n <= bound; ++n) {
        ExactInt running(0);
        for (unsigned long t = 0; t <= choose2(n); ++t) {
            running += inv_closed(n, t);
            if (inv_prefix_closed(n, t) != running || standard_monomial_count_L(n, t) != running)
                return check_failed("inversion prefix consistency", n,
                                    "n=" + std::to_string(n) + ", t=" + std::to_string(t));
        }
    }
    return check_named("inversion prefix consistency", bound);
}

CheckResult inv_total_mass(unsigned bound) {
    for (unsigned n = 1; n <= bound; ++n) {
        ExactInt total(0);
        for (unsigned long t = 0; t <= choose2(n); ++t) total += inv_closed(n, t);
        if (total != factorial(n))
            return check_failed("inversion total mass", n, "n=" + std::to_string(n));
    }
    return check_named("inversion total mass", bound);
}

CheckResult comp_four_way(unsigned bound) {
    const unsigned top = std::min(bound, 7u);
    for (unsigned n = 1; n <= top; ++n) {
        for (unsigned d = 1; d <= 5; ++d) {
            const CompositionTable brute = comp_bruteforce(n, d);
            const CompositionTable genfun = comp_genfun(n, d);
            const CompositionTable recurrence = comp_recurrence_row(n, d);
            for (unsigned long t = 0; t < brute.values.size(); ++t) {
                const ExactInt& expected = brute.values[t];
                if (genfun.values[t] != expected || recurrence.values[t] != expected ||
                    comp_closed(n, d, t) != expected)
                    return check_failed("composition four-way agreement", n,
                                        "n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                                            ", t=" + std::to_string(t));
            }
        }
    }
    return check_named("composition four-way agreement", top);
}

CheckResult comp_symmetry(unsigned bound) {
    for (unsigned n = 1; n <= bound; ++n) {
        for (unsigned d = 1; d <= 5; ++d) {
            const unsigned long top = static_cast<unsigned long>(n) * (d - 1);
            for (unsigned long t = 0; t <= top; ++t)
                if (comp_closed(n, d, t) != comp_closed(n, d, top - t))
                    return check_failed("composition closed-form symmetry", n,
                                        "n=" + std::to_string(n) + ", d=" + std::to_string(d));
        }
    }
    return check_named("composition closed-form symmetry", bound);
}

CheckResult comp_prefix(unsigned bound) {
    for (unsigned n = 1; n <= bound; ++n) {
        for (unsigned d = 1; d <= 5; ++d) {
            ExactInt running(0);
            for (unsigned long t = 0; t <= static_cast<unsigned long>(n) * (d - 1); ++t) {
                running += comp_closed(n, d, t);
                if (comp_prefix_closed(n, d, t) != running ||
                    standard_monomial_count_M(n, d, t) != running)
                    return check_failed("composition prefix consistency", n,
                                        "n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                                            ", t=" + std::to_string(t));
            }
        }
    }
    return check_named("composition prefix consistency", bound);
}

CheckResult comp_binomial_rows(unsigned bound) {
    for (unsigned n = 1; n <= bound; ++n) {
        const CompositionTable row = comp_genfun(n, 2);
        for (unsigned t = 0; t <= n; ++t)
            if (row.values[t] != binomial(n, t))
                return check_failed("composition binomial specialization", n,
                                    "n=" + std::to_string(n) + ", t=" + std::to_string(t));
    }
    return check_named("composition binomial specialization", bound);
}

CheckResult gauss_symmetry(unsigned bound) {
    for (unsigned n = 0; n <= bound; ++n) {
        const auto row = gaussian_binomial_row(n);
        for (unsigned m = 0; m <= n; ++m) {
            if (row[m] != row[n - m])
                return check_failed("gaussian symmetry", n, "n=" + std::to_string(n));
            if (row[m].eval(ExactInt(1)) != binomial(n, m))
                return check_failed("gaussian q=1 specialization", n, "n=" + std::to_string(n));
        }
    }
    return check_named("gaussian symmetry and q=1 specialization", bound + 1);
}

CheckResult gauss_division(unsigned bound) {
    const unsigned top = std::min(bound, 16u);
    for (unsigned n = 0; n <= top; ++n) {
        const auto row = gaussian_binomial_row(n);
        for (unsigned m = 0; m <= n; ++m)
            if (row[m] != gaussian_binomial(n, m))
                return check_failed("q-Pascal vs q-factorial division", n,
                                    "n=" + std::to_string(n) + ", m=" + std::to_string(m));
    }
    return check_named("q-Pascal vs q-factorial division", top + 1);
}

CheckResult cauchy_identity(unsigned bound) {
    for (unsigned n = 1; n <= bound; ++n) {
        BiPoly rhs;
        for (unsigned m = 0; m <= n; ++m)
            rhs = rhs + BiPoly::from_unipoly(gaussian_binomial(n, m), m, m * (m + 1) / 2);
        if (cauchy_product(n) != rhs)
            return check_failed("cauchy identity", n, "n=" + std::to_string(n));
    }
    return check_named("cauchy identity", bound);
}

CheckResult gauss_oracle(unsigned bound) {
    const unsigned top = std::min(bound, 16u);
    for (unsigned n = 1; n <= top; ++n) {
        const unsigned long kmax = static_cast<unsigned long>(n) * (n + 1) / 2;
        std::vector<std::vector<ExactInt>> hist(n + 1, std::vector<ExactInt>(kmax + 1));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            unsigned j = 0;
            unsigned long k = 0;
            for (unsigned i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i)) {
                    ++j;
                    k += i + 1;
                }
            hist[j][k] += 1;
        }
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned long k = 0; k <= kmax; ++k)
                if (gauss_coefficient_C(n, j, k) != hist[j][k])
                    return check_failed("subset-sum oracle", n,
                                        "n=" + std::to_string(n) + ", j=" + std::to_string(j) +
                                            ", k=" + std::to_string(k));
    }
    return check_named("subset-sum oracle", top);
}

CheckResult koszul_staircase(unsigned bound) {
    for (unsigned n = 1; n <= bound; ++n) {
        const DegreeSequence seq = DegreeSequence::staircase(n);
        for (unsigned long t = 0; t <= choose2(n) + 2; ++t)
            if (koszul_hilbert(seq, t) != standard_monomial_count_L(n, t))
                return check_failed("koszul vs staircase count", n,
                                    "n=" + std::to_string(n) + ", t=" + std::to_string(t));
        if (koszul_hilbert(seq, choose2(n) + 10) != factorial(n))
            return check_failed("koszul staircase tail", n, "n=" + std::to_string(n));
    }
    return check_named("koszul vs staircase count", bound);
}

CheckResult koszul_box(unsigned bound) {
    for (unsigned n = 1; n <= bound; ++n) {
        for (unsigned d = 1; d <= 5; ++d) {
            const DegreeSequence seq = DegreeSequence::uniform(n, d);
            const unsigned long top = static_cast<unsigned long>(n) * (d - 1);
            for (unsigned long t = 0; t <= top + 2; ++t)
                if (koszul_hilbert(seq, t) != standard_monomial_count_M(n, d, t))
                    return check_failed("koszul vs box count", n,
                                        "n=" + std::to_string(n) + ", d=" + std::to_string(d));
            if (koszul_hilbert(seq, top + 10) != pow_ui(ExactInt(d), n))
                return check_failed("koszul box tail", n,
                                    "n=" + std::to_string(n) + ", d=" + std::to_string(d));
        }
    }
    return check_named("koszul vs box count", bound);
}

CheckResult koszul_paths(unsigned bound) {
    std::mt19937 rng(1234321);
    std::uniform_int_distribution<unsigned> len_dist(1, std::min(bound, 12u));
    std::uniform_int_distribution<unsigned> deg_dist(1, 6);
    std::uniform_int_distribution<unsigned long> t_dist(0, 40);
    constexpr int kCases = 40;
    for (int iter = 0; iter < kCases; ++iter) {
        std::vector<unsigned> ds(len_dist(rng));
        for (auto& d : ds) d = deg_dist(rng);
        const DegreeSequence seq = DegreeSequence::of(ds);
        const unsigned long t = t_dist(rng);
        if (koszul_hilbert(seq, t) != koszul_hilbert_by_subsets(seq, t))
            return check_failed("koszul path agreement", iter, "case " + std::to_string(iter));
    }
    return check_named("koszul path agreement", kCases);
}

CheckResult orbit_vanishing_check(unsigned bound) {
    const unsigned top = std::min(bound, 8u);
    std::uint64_t evaluations = 0;
    for (unsigned n = 1; n <= top; ++n) {
        const OrbitVanishingReport report = verify_orbit_vanishing(n);
        evaluations += report.evaluations;
        if (!report.all_zero)
            return check_failed("orbit vanishing", evaluations,
                                "n=" + std::to_string(n) +
                                    ", k=" + std::to_string(report.failing_k));
    }
    return check_named("orbit vanishing", evaluations);
}

CheckResult divisor_enumeration(unsigned) {
    constexpr unsigned long kLimit = 10000;
    for (unsigned long N = 1; N <= kLimit; ++N)
        if (divisor_rank_genfun(factorize(N)) != brute_divisor_rank_genfun(N))
            return check_failed("divisor lattice vs enumeration", N, "N=" + std::to_string(N));
    return check_named("divisor lattice vs enumeration", kLimit);
}

constexpr unsigned long kFirstPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

CheckResult divisor_inversions(unsigned bound) {
    const unsigned top = std::min(bound, 8u);
    for (unsigned n = 1; n <= top; ++n) {
        std::vector<PrimePower> pps;
        for (unsigned i = 2; i <= n; ++i) pps.push_back({kFirstPrimes[i - 2], i - 1});
        if (divisor_rank_genfun(Factorization::of(pps)) != inv_genfun(n).to_poly())
            return check_failed("divisor lattice vs inversions", n, "n=" + std::to_string(n));
    }
    return check_named("divisor lattice vs inversions", top);
}

CheckResult divisor_compositions(unsigned bound) {
    const unsigned top = std::min(bound, 6u);
    for (unsigned n = 1; n <= top; ++n) {
        for (unsigned d = 2; d <= 4; ++d) {
            std::vector<PrimePower> pps;
            for (unsigned i = 0; i < n; ++i) pps.push_back({kFirstPrimes[i], d - 1});
            if (divisor_rank_genfun(Factorization::of(pps)) != comp_genfun(n, d).to_poly())
                return check_failed("divisor lattice vs compositions", n,
                                    "n=" + std::to_string(n) + ", d=" + std::to_string(d));
        }
    }
    return check_named("divisor lattice vs compositions", top);
}

CheckResult involution_product(unsigned bound) {
    const unsigned top = std::min(bound, 6u);
    for (unsigned n = 1; n <= top; ++n) {
        UniPoly expected = UniPoly::constant(ExactInt(1));
        for (unsigned i = 1; i <= n; ++i) expected = expected * UniPoly::geometric(2 * i - 1);
        const UniPoly actual = involution_rank_genfun(n);
        if (actual != expected || actual.eval(ExactInt(1)) != odd_double_factorial(n))
            return check_failed("involution rank product", n, "n=" + std::to_string(n));
    }
    return check_named("involution rank product", top);
}

struct SuiteCheck {
    Check run;
    unsigned default_bound;
};

const std::vector<std::pair<std::string, std::vector<SuiteCheck>>> kSuites = {
    {"inversions",
     {{inv_four_way, 8},
      {inv_pentagonal_check, 8},
      {inv_symmetry, 20},
      {inv_prefix, 12},
      {inv_total_mass, 20}}},
    {"compositions",
     {{comp_four_way, 7}, {comp_symmetry, 7}, {comp_prefix, 7}, {comp_binomial_rows, 12}}},
    {"qanalog",
     {{gauss_symmetry, 30},
      {gauss_division, 16},
      {cauchy_identity, 30},
      {gauss_oracle, 16}}},
    {"hilbert",
     {{koszul_staircase, 10}, {koszul_box, 8}, {koszul_paths, 12}, {orbit_vanishing_check, 8}}},
    {"posets",
     {{divisor_enumeration, 0},
      {divisor_inversions, 8},
      {divisor_compositions, 6},
      {involution_product, 6}}},
};

int run_verify(const std::string& suite, std::optional<unsigned> max_n, const std::string& format,
               const std::string& out_path) {
    std::vector<CheckResult> results;
    bool all_ok = true;
    for (const auto& [name, checks] : kSuites) {
        if (suite != "all" && suite != name) continue;
        for (const SuiteCheck& check : checks) {
            const unsigned bound = max_n.value_or(check.default_bound);
            results.push_back(check.run(bound));
            if (!results.back().ok) {
                all_ok = false;
                break;  // report the first failing identity and stop
            }
        }
        if (!all_ok) break;
    }

    std::ostringstream body;
    if (format == "json") {
        ordered_json doc;
        doc["kind"] = "verify";
        doc["suite"] = suite;
        if (max_n) doc["max_n"] = *max_n;
        doc["checks"] = ordered_json::array();
        for (const CheckResult& r : results) {
            ordered_json entry{{"name", r.name}, {"cases", r.cases}, {"ok", r.ok}};
            if (!r.ok) entry["failure"] = r.failure;
            doc["checks"].push_back(entry);
        }
        doc["ok"] = all_ok;
        body << doc.dump() << "\n";
    } else {
        for (const CheckResult& r : results) {
            if (r.ok)
                body << r.name << ": OK (" << r.cases << " cases)\n";
            else
                body << r.name << ": FAIL (" << r.failure << ")\n";
        }
        body << (all_ok ? "all checks passed" : "verification failed") << "\n";
    }

    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return kExitUsage;
        }
        file << body.str();
    }
    return all_ok ? kExitOk : kExitIdentityFailure;
}

// ---------------------------------------------------------------------------
// bench

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int run_bench(const std::string& target, unsigned n, std::optional<unsigned> d,
              const std::string& algos_csv, unsigned repeat, bool inject_mismatch,
              const std::string& format, const std::string& out_path) {
    const std::vector<std::string> algos = split_list(algos_csv);
    if (algos.empty()) throw std::invalid_argument("bench: --algos list is empty");
    if (target == "comp-row" && !d) throw std::invalid_argument("bench: comp-row requires d");

    const auto make_row = [&](const std::string& algo) -> std::vector<ExactInt> {
        static const std::vector<std::string> known{"recurrence", "genfun", "closed", "brute"};
        if (std::find(known.begin(), known.end(), algo) == known.end())
            throw std::invalid_argument("bench: unknown algorithm '" + algo + "'");
        return target == "inv-row" ? inversion_row(n, algo) : composition_row(n, *d, algo);
    };

    // correctness precedes speed: all algorithms must produce the same row
    std::vector<std::vector<ExactInt>> rows;
    rows.reserve(algos.size());
    for (const std::string& algo : algos) rows.push_back(make_row(algo));
    if (inject_mismatch && !rows.empty()) rows.front()[0] += 1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i] != rows.front()) {
            std::cerr << "bench: output mismatch between '" << algos.front() << "' and '"
                      << algos[i] << "'\n";
            return kExitIdentityFailure;
        }
    }

    struct Timing {
        std::string algo;
        std::int64_t median_us;
    };
    std::vector<Timing> timings;
    for (const std::string& algo : algos) {
        std::vector<std::int64_t> samples;
        samples.reserve(repeat);
        for (unsigned r = 0; r < repeat; ++r) {
            const auto start = std::chrono::steady_clock::now();
            volatile std::size_t sink = make_row(algo).size();
            (void)sink;
            samples.push_back(std::chrono::duration_cast<std::chrono::microseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count());
        }
        std::sort(samples.begin(), samples.end());
        timings.push_back({algo, samples[samples.size() / 2]});
    }

    std::ostringstream body;
    if (format == "csv") {
        body << "algo,median_us\n";
        for (const Timing& t : timings) body << t.algo << "," << t.median_us << "\n";
    } else if (format == "json") {
        ordered_json doc;
        doc["kind"] = "bench";
        doc["params"] = {{"target", target}, {"n", n}, {"repeat", repeat}};
        if (d) doc["params"]["d"] = *d;
        doc["timings"] = ordered_json::array();
        for (const Timing& t : timings)
            doc["timings"].push_back({{"algo", t.algo}, {"median_us", t.median_us}});
        body << doc.dump() << "\n";
    } else {
        for (const Timing& t : timings)
            body << t.algo << ": " << t.median_us << " us (median of " << repeat << ")\n";
    }

    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return kExitUsage;
        }
        file << body.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mahonia: exact inversion-number and bounded-composition counts"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // inversions -------------------------------------------------------------
    unsigned inv_n = 0;
    unsigned long inv_t = 0;
    std::string inv_algo = "recurrence", inv_format = "text", inv_out;
    auto* inv_cmd = app.add_subcommand("inversions", "I_n(t): permutations of [n] by inversions");
    inv_cmd->add_option("n", inv_n, "permutation length")->required();
    auto* inv_t_opt = inv_cmd->add_option("t", inv_t, "inversion count (omit for the full row)");
    inv_cmd->add_option("--algo", inv_algo, "algorithm")
        ->check(CLI::IsMember({"recurrence", "genfun", "closed", "pentagonal", "brute"}));
    inv_cmd->add_option("--format", inv_format)->check(CLI::IsMember({"text", "csv", "json"}));
    inv_cmd->add_option("--out", inv_out, "write output to a file");
    inv_cmd->callback([&] {
        OutputRecord record;
        record.kind = "inversion";
        record.params = {{"n", inv_n}};
        if (inv_t_opt->count() > 0) {
            record.params.emplace_back("t", static_cast<long long>(inv_t));
            record.values.emplace_back(inv_t, inversion_value(inv_n, inv_t, inv_algo));
            record.single_value = true;
        } else {
            const std::vector<ExactInt> row = inversion_row(inv_n, inv_algo);
            for (unsigned long t = 0; t < row.size(); ++t) record.values.emplace_back(t, row[t]);
        }
        exit_code = emit(record, inv_format, inv_out);
    });

    // compositions -----------------------------------------------------------
    unsigned comp_n = 0, comp_d = 0;
    unsigned long comp_t = 0;
    std::string comp_algo = "recurrence", comp_format = "text", comp_out;
    auto* comp_cmd =
        app.add_subcommand("compositions", "H(n,d,t): vectors in {0..d-1}^n by coordinate sum");
    comp_cmd->add_option("n", comp_n, "number of parts")->required();
    comp_cmd->add_option("d", comp_d, "parts range over 0..d-1")->required();
    auto* comp_t_opt = comp_cmd->add_option("t", comp_t, "coordinate sum (omit for the full row)");
    comp_cmd->add_option("--algo", comp_algo, "algorithm")
        ->check(CLI::IsMember({"recurrence", "genfun", "closed", "brute"}));
    comp_cmd->add_option("--format", comp_format)->check(CLI::IsMember({"text", "csv", "json"}));
    comp_cmd->add_option("--out", comp_out, "write output to a file");
    comp_cmd->callback([&] {
        OutputRecord record;
        record.kind = "composition";
        record.params = {{"n", comp_n}, {"d", comp_d}};
        if (comp_t_opt->count() > 0) {
            record.params.emplace_back("t", static_cast<long long>(comp_t));
            record.values.emplace_back(comp_t, composition_value(comp_n, comp_d, comp_t, comp_algo));
            record.single_value = true;
        } else {
            const std::vector<ExactInt> row = composition_row(comp_n, comp_d, comp_algo);
            for (unsigned long t = 0; t < row.size(); ++t) record.values.emplace_back(t, row[t]);
        }
        exit_code = emit(record, comp_format, comp_out);
    });

    // verify -----------------------------------------------------------------
    std::string verify_suite = "all", verify_format = "text", verify_out;
    unsigned verify_max_n = 0;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity verification suites");
    verify_cmd->add_option("--suite", verify_suite)
        ->check(CLI::IsMember({"inversions", "compositions", "qanalog", "hilbert", "posets", "all"}));
    auto* max_n_opt = verify_cmd->add_option(
        "--max-n", verify_max_n,
        "cap identity ranges (enumeration-backed checks stay within their guards)");
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--out", verify_out, "write the report to a file");
    verify_cmd->callback([&] {
        const std::optional<unsigned> max_n =
            max_n_opt->count() > 0 ? std::optional<unsigned>(verify_max_n) : std::nullopt;
        exit_code = run_verify(verify_suite, max_n, verify_format, verify_out);
    });

    // bench ------------------------------------------------------------------
    std::string bench_target = "inv-row", bench_algos = "recurrence,genfun,closed";
    std::string bench_format = "text", bench_out;
    unsigned bench_n = 0, bench_d = 0, bench_repeat = 3;
    bool bench_inject = false;
    auto* bench_cmd = app.add_subcommand("bench", "time row algorithms against each other");
    bench_cmd->add_option("--target", bench_target)
        ->check(CLI::IsMember({"inv-row", "comp-row"}));
    bench_cmd->add_option("n", bench_n, "row size")->required();
    auto* bench_d_opt = bench_cmd->add_option("d", bench_d, "parts bound (comp-row only)");
    bench_cmd->add_option("--algos", bench_algos, "comma-separated algorithm list");
    bench_cmd->add_option("--repeat", bench_repeat, "timed repetitions per algorithm")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--format", bench_format)->check(CLI::IsMember({"text", "csv", "json"}));
    bench_cmd->add_option("--out", bench_out, "write output to a file");
    bench_cmd->add_flag("--inject-mismatch", bench_inject)->group("");  // test hook, hidden
    bench_cmd->callback([&] {
        const std::optional<unsigned> d =
            bench_d_opt->count() > 0 ? std::optional<unsigned>(bench_d) : std::nullopt;
        exit_code = run_bench(bench_target, bench_n, d, bench_algos, bench_repeat, bench_inject,
                              bench_format, bench_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const resource_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentityFailure;
    }
    return exit_code;
}
