// meandric: enumeration, evaluation, census and verification commands for
// meandric systems and the tensor-invariant expectation values they count.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "meandric/factor.hpp"
#include "meandric/gauss.hpp"
#include "meandric/meander.hpp"
#include "meandric/numbers.hpp"
#include "meandric/serialize.hpp"

using namespace meandric;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw std::invalid_argument("--format expects text, json or csv");
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total,
                                                                 int pieces) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    const std::uint64_t p = static_cast<std::uint64_t>(std::max(1, pieces));
    for (std::uint64_t w = 0; w < p; ++w) {
        const std::uint64_t lo = total / p * w + std::min(w, total % p);
        const std::uint64_t hi = lo + total / p + (w < total % p ? 1 : 0);
        if (lo < hi) ranges.emplace_back(lo, hi);
    }
    return ranges;
}

// Runs jobs 0..count-1 on at most `workers` threads; the results vector is
// indexed by job, so any later merge is in job order and the outcome never
// depends on the worker count.
template <typename T, typename Fn>
std::vector<T> run_jobs(int count, int workers, Fn fn) {
    std::vector<T> results(static_cast<std::size_t>(count));
    const int pool_size = std::min(workers, count);
    if (pool_size <= 1) {
        for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = fn(i);
        return results;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(pool_size));
    for (int w = 0; w < pool_size; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                results[static_cast<std::size_t>(i)] = fn(i);
        });
    for (auto& t : pool) t.join();
    return results;
}

template <typename Fn>
BigCount parallel_count(std::uint64_t total, int workers, Fn fn) {
    const auto ranges = split_range(total, std::max(1, workers) * 4);
    const auto parts = run_jobs<BigCount>(
        static_cast<int>(ranges.size()), workers,
        [&](int i) { return fn(ranges[static_cast<std::size_t>(i)].first,
                               ranges[static_cast<std::size_t>(i)].second); });
    BigCount sum = 0;
    for (const BigCount& part : parts) sum += part;
    return sum;
}

template <typename Fn>
bool parallel_all(std::uint64_t total, int workers, Fn fn) {
    const auto ranges = split_range(total, std::max(1, workers) * 4);
    const auto parts = run_jobs<char>(
        static_cast<int>(ranges.size()), workers,
        [&](int i) { return fn(ranges[static_cast<std::size_t>(i)].first,
                               ranges[static_cast<std::size_t>(i)].second) ? 1 : 0; });
    return std::all_of(parts.begin(), parts.end(), [](char ok) { return ok != 0; });
}

// All permutations of [1, n] with the given first image, in lexicographic
// order of the remaining entries. The n slices partition S_n.
template <typename Visitor>
void for_each_permutation_with_first(int n, int first, Visitor&& visit) {
    std::vector<int> images(static_cast<std::size_t>(n));
    images[0] = first;
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
    const std::vector<int>& view = images;
    do {
        std::copy(rest.begin(), rest.end(), images.begin() + 1);
        visit(view);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

// Deterministic per-slice merge over S_n: fn(first_image) -> map increment.
template <typename Fn>
std::map<int, BigCount> parallel_census_over_sn(int n, int workers, Fn fn) {
    const auto parts =
        run_jobs<std::map<int, BigCount>>(n, workers, [&](int i) { return fn(i + 1); });
    std::map<int, BigCount> result;
    for (const auto& part : parts)
        for (const auto& [k, c] : part) result[k] += c;
    return result;
}

struct CacheFile {
    SifCache cache;
    std::string path;
    bool loaded = false;

    void open(const std::string& cli_path) {
        path = cli_path;
        if (path.empty())
            if (const char* env = std::getenv("MEANDRIC_CACHE")) path = env;
        if (!path.empty() && std::filesystem::exists(path)) {
            cache.load_file(path);
            loaded = true;
        }
    }

    void close() {
        if (!path.empty()) cache.save_file(path);
    }
};

// ---------------------------------------------------------------------------
// expectation

struct ExpectationOptions {
    int n = 0;
    std::string sigma_text;
    std::string sigma_white_text;
    std::string method = "auto";
    bool full = false;
    std::string format = "text";
    int workers = 1;
    std::string cache_path;
    int max_n = kDefaultFactorialLimit;
};

int run_expectation(const ExpectationOptions& opt) {
    const Permutation sigma = parse_permutation(opt.sigma_text, opt.n);
    const Permutation sigma_white = opt.sigma_white_text.empty()
                                        ? Permutation::identity(opt.n)
                                        : parse_permutation(opt.sigma_white_text, opt.n);
    const bool white_is_id = sigma_white == Permutation::identity(opt.n);

    std::string method = opt.method;
    if (method == "auto") method = white_is_id ? "factor" : "brute";
    if ((method == "factor" || method == "both") && !white_is_id) {
        std::cerr << "error: the factor method needs an identity --sigma-white\n";
        return kExitUsage;
    }
    if (method != "brute" && method != "factor" && method != "both") {
        std::cerr << "error: --method must be brute, factor or both\n";
        return kExitUsage;
    }

    CacheFile cache;
    cache.open(opt.cache_path);

    std::optional<BigCount> brute, factored;
    if (method == "brute" || method == "both") {
        const std::uint64_t total = planar_count_u64(opt.n);
        brute = parallel_count(total, opt.workers, [&](std::uint64_t lo, std::uint64_t hi) {
            return expectation_leading(sigma_white, sigma, lo, hi);
        });
    }
    if (method == "factor" || method == "both")
        factored = evaluate(sigma, cache.cache);

    if (method == "both" && *brute != *factored) {
        std::cerr << "mismatch: brute=" << brute->str() << " factor=" << factored->str() << "\n";
        return kExitFail;
    }
    const BigCount value = factored ? *factored : *brute;

    std::optional<ExpansionCoefficients> expansion;
    if (opt.full) {
        if (opt.n > opt.max_n) {
            std::cerr << "error: --full needs n <= " << opt.max_n
                      << " (raise --max-n to override)\n";
            return kExitUsage;
        }
        ExpansionCoefficients merged;
        merged.n = opt.n;
        merged.coeffs = parallel_census_over_sn(opt.n, opt.workers, [&](int first) {
            return full_expansion_slice(sigma_white, sigma, first).coeffs;
        });
        expansion = std::move(merged);
        const BigCount leading =
            expansion->coeffs.contains(0) ? expansion->coeffs.at(0) : BigCount(0);
        if (leading != value) {
            std::cerr << "mismatch: leading coefficient " << leading.str()
                      << " differs from leading count " << value.str() << "\n";
            return kExitFail;
        }
    }

    const Format format = parse_format(opt.format);
    if (format == Format::Json) {
        nlohmann::json out{{"command", "expectation"},
                           {"n", opt.n},
                           {"sigma", sigma.images()},
                           {"sigma_white", sigma_white.images()},
                           {"method", method},
                           {"value", value.str()}};
        if (expansion) out["expansion"] = to_json(*expansion);
        std::cout << out.dump() << "\n";
    } else if (format == Format::Csv) {
        if (expansion) {
            std::cout << "n,k,count\n";
            for (const auto& [k, c] : expansion->coeffs)
                std::cout << opt.n << "," << k << "," << c.str() << "\n";
        } else {
            std::cout << "n,value\n" << opt.n << "," << value.str() << "\n";
        }
    } else {
        std::cout << "leading = " << value.str() << "\n";
        if (method == "both") std::cout << "brute and factor methods agree\n";
        if (expansion) {
            std::cout << "expansion (omega = " << ExpansionCoefficients::leading_exponent
                      << "):\n";
            for (const auto& [k, c] : expansion->coeffs)
                std::cout << "  k=" << k << "  " << c.str() << "\n";
        }
    }

    cache.close();
    return kExitPass;
}

// ---------------------------------------------------------------------------
// meanders

struct MeandersOptions {
    int n = 0;
    int components = 0;  // 0 = full census
    bool irreducible = false;
    bool check_closed_forms = false;
    std::string format = "text";
    int workers = 1;
};

int run_meanders(const MeandersOptions& opt) {
    const std::uint64_t cn = planar_count_u64(opt.n);
    const std::uint64_t total = cn * cn;

    using Census = std::map<int, BigCount>;
    const auto ranges = split_range(total, std::max(1, opt.workers) * 4);
    const auto parts = run_jobs<Census>(
        static_cast<int>(ranges.size()), opt.workers, [&](int i) {
            const auto [lo, hi] = ranges[static_cast<std::size_t>(i)];
            return count_by_components(opt.n, lo, hi, opt.irreducible);
        });
    Census census;
    for (const auto& part : parts)
        for (const auto& [k, c] : part) census[k] += c;

    BigCount sum = 0;
    for (const auto& [k, c] : census) sum += c;

    if (!opt.irreducible && sum != system_count(opt.n)) {
        std::cerr << "census total " << sum.str() << " != C_n^2 "
                  << system_count(opt.n).str() << "\n";
        return kExitFail;
    }

    bool closed_forms_match = true;
    if (opt.check_closed_forms) {
        const MeandricTopCounts closed = meandric_top_counts(opt.n);
        const auto lookup = [&](int k) {
            return census.contains(k) ? census.at(k) : BigCount(0);
        };
        closed_forms_match = lookup(opt.n) == closed.top;
        if (opt.n >= 2)
            closed_forms_match = closed_forms_match && lookup(opt.n - 1) == closed.top_minus_one;
        if (opt.n >= 3)
            closed_forms_match = closed_forms_match && lookup(opt.n - 2) == *closed.top_minus_two;
    }

    const Format format = parse_format(opt.format);
    if (format == Format::Json) {
        nlohmann::json rows = nlohmann::json::object();
        for (const auto& [k, c] : census) rows[std::to_string(k)] = c.str();
        nlohmann::json out{{"command", "meanders"},
                           {"n", opt.n},
                           {"irreducible", opt.irreducible},
                           {"census", rows},
                           {"total", sum.str()}};
        if (opt.components > 0) {
            const BigCount c = census.contains(opt.components) ? census.at(opt.components)
                                                               : BigCount(0);
            out["components"] = opt.components;
            out["count"] = c.str();
        }
        if (opt.check_closed_forms) out["closed_forms_match"] = closed_forms_match;
        std::cout << out.dump() << "\n";
    } else if (format == Format::Csv) {
        std::cout << "n,k,count\n";
        for (const auto& [k, c] : census) {
            if (opt.components > 0 && k != opt.components) continue;
            std::cout << opt.n << "," << k << "," << c.str() << "\n";
        }
    } else {
        if (opt.components > 0) {
            const BigCount c = census.contains(opt.components) ? census.at(opt.components)
                                                               : BigCount(0);
            std::cout << c.str() << "\n";
        } else {
            std::cout << "k  count\n";
            for (const auto& [k, c] : census) std::cout << k << "  " << c.str() << "\n";
            std::cout << "total = " << sum.str();
            if (!opt.irreducible) std::cout << " (= C_n^2)";
            std::cout << "\n";
        }
        if (opt.check_closed_forms)
            std::cout << "closed forms " << (closed_forms_match ? "match" : "MISMATCH") << "\n";
    }
    return closed_forms_match ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string suite;
    int max_n = 0;  // 0 = suite default
    int workers = 1;
    std::string format = "text";
};

struct SuiteReport {
    std::vector<std::pair<std::string, bool>> cases;

    void add(const std::string& name, bool pass) { cases.emplace_back(name, pass); }
    bool all_pass() const {
        return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.second; });
    }
};

void suite_planar_catalan(int max_n, int workers, SuiteReport& report) {
    for (int n = 1; n <= max_n; ++n) {
        const BigCount streamed = parallel_count(
            planar_count_u64(n), workers, [&](std::uint64_t lo, std::uint64_t hi) {
                BigCount count = 0;
                for_each_planar(n, lo, hi, [&](const std::vector<int>&) { ++count; });
                return count;
            });
        bool pass = streamed == catalan(n);
        if (n <= 9) {  // exhaustive filter over S_n stays cheap up to here
            BigCount filtered = 0;
            std::vector<int> partner, stack;
            for (int first = 1; first <= n; ++first)
                for_each_permutation_with_first(n, first, [&](const std::vector<int>& images) {
                    if (detail::is_planar_images(images, partner, stack)) ++filtered;
                });
            pass = pass && filtered == catalan(n);
        }
        report.add("planar census n=" + std::to_string(n), pass);
    }
}

void suite_sum_cn2(int max_n, int workers, SuiteReport& report) {
    for (int n = 1; n <= max_n; ++n) {
        const auto parts = run_jobs<BigCount>(n, workers, [&](int i) {
            BigCount partial = 0;
            for_each_permutation_with_first(n, i + 1, [&](const std::vector<int>& images) {
                partial += expectation_leading_single(Permutation(images));
            });
            return partial;
        });
        BigCount sum = 0;
        for (const BigCount& part : parts) sum += part;
        report.add("sum of expectations n=" + std::to_string(n),
                   sum == catalan(n) * catalan(n));
    }
}

void suite_rho_square(int max_n, int /*workers*/, SuiteReport& report) {
    for (int n = 1; n <= max_n; ++n) {
        bool pass = true;
        long systems = 0;
        const Permutation id = Permutation::identity(n);
        for (int first = 1; first <= n && pass; ++first)
            for_each_permutation_with_first(n, first, [&](const std::vector<int>& images) {
                const Permutation sigma_black(images);
                const Permutation inv_black = inverse(sigma_black);
                for_each_planar(n, [&](const std::vector<int>& pi_images) {
                    const Permutation pi(pi_images);
                    const Permutation lower = compose(inv_black, pi);
                    std::vector<int> partner, stack;
                    if (!detail::is_planar_images(lower.images(), partner, stack)) return;
                    ++systems;
                    if (!check_rho_square(MeandricSystem(pi, lower), id, sigma_black, pi))
                        pass = false;
                });
            });
        report.add("rho-square identities n=" + std::to_string(n) + " (" +
                       std::to_string(systems) + " systems)",
                   pass);
    }
}

void suite_theorem1(int max_n, int workers, SuiteReport& report) {
    SifCache cache;
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        const auto parts = run_jobs<char>(n, workers, [&](int i) {
            bool ok = true;
            for_each_permutation_with_first(n, i + 1, [&](const std::vector<int>& images) {
                const Permutation sigma(images);
                if (evaluate(sigma, cache) != expectation_leading_single(sigma)) ok = false;
            });
            return ok ? 1 : 0;
        });
        const bool pass = std::all_of(parts.begin(), parts.end(), [](char c) { return c != 0; });
        report.add("factorization vs brute force, all sigma, n=" + std::to_string(n), pass);
    }
    std::mt19937_64 rng(2026);
    for (int n = 7; n <= std::min(max_n, 9); ++n) {
        bool pass = true;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<int> images(static_cast<std::size_t>(n));
            std::iota(images.begin(), images.end(), 1);
            std::shuffle(images.begin(), images.end(), rng);
            const Permutation sigma(images);
            if (evaluate(sigma, cache) != expectation_leading_single(sigma)) pass = false;
        }
        report.add("factorization vs brute force, 1000 random sigma, n=" + std::to_string(n),
                   pass);
    }
}

void suite_theorem2(int max_n, int workers, SuiteReport& report) {
    for (int n = 1; n <= max_n; ++n) {
        const std::uint64_t cn = planar_count_u64(n);
        const Permutation id = Permutation::identity(n);
        const bool pass =
            parallel_all(cn * cn, workers, [&](std::uint64_t lo, std::uint64_t hi) {
                bool ok = true;
                for_each_system(n, lo, hi, [&](const MeandricSystem& s) {
                    const auto [pi, sigma_black] = reconstruct(s, id);
                    if (is_sif(sigma_black) == is_two_reducible(s)) ok = false;
                });
                return ok;
            });
        report.add("SIF labels = 2-irreducible systems n=" + std::to_string(n), pass);
    }
}

void suite_motzkin_bijection(int max_n, int /*workers*/, SuiteReport& report) {
    for (int n = 1; n <= max_n; ++n) {
        bool pass = true;
        BigCount paths = 0;
        for_each_motzkin(n, [&](const MotzkinPath& p) {
            ++paths;
            if (meander_to_motzkin(motzkin_to_meander(p)) != p) pass = false;
        });
        BigCount members = 0;
        for_each_planar(n, [&](const std::vector<int>& upper_images) {
            const Permutation upper(upper_images);
            const Permutation lower = compose(shift(n, 1), upper);
            if (!is_planar(lower)) return;
            ++members;
            const MeandricSystem s(upper, lower);
            if (motzkin_to_meander(meander_to_motzkin(s)) != s) pass = false;
        });
        pass = pass && paths == motzkin(n) && members == motzkin(n);
        report.add("Motzkin bijection n=" + std::to_string(n), pass);
    }
}

void suite_genus_planarity(int max_n, int workers, SuiteReport& report) {
    for (int n = 1; n <= max_n; ++n) {
        const Permutation id = Permutation::identity(n);
        const auto parts = run_jobs<char>(n, workers, [&](int i) {
            bool ok = true;
            std::vector<int> partner, stack;
            for_each_permutation_with_first(n, i + 1, [&](const std::vector<int>& images) {
                const Permutation sigma(images);
                const Permutation inv = inverse(sigma);
                for (int first = 1; first <= n; ++first)
                    for_each_permutation_with_first(n, first, [&](const std::vector<int>& pi_images) {
                        const Permutation pi(pi_images);
                        const auto [g12, g34] = genera(id, sigma, pi);
                        const bool upper = is_planar(pi);
                        const bool lower =
                            detail::is_planar_images(compose(inv, pi).images(), partner, stack);
                        if ((g12 == 0) != upper || (g34 == 0) != lower) ok = false;
                    });
            });
            return ok ? 1 : 0;
        });
        const bool pass = std::all_of(parts.begin(), parts.end(), [](char c) { return c != 0; });
        report.add("genus vanishes iff planar n=" + std::to_string(n), pass);
    }
}

void suite_face_trace(int max_n, int workers, SuiteReport& report) {
    for (int n = 1; n <= max_n; ++n) {
        const auto parts = run_jobs<char>(n, workers, [&](int i) {
            bool ok = true;
            for_each_permutation_with_first(n, i + 1, [&](const std::vector<int>& sw_images) {
                const Permutation sw(sw_images);
                for (int first = 1; first <= n; ++first)
                    for_each_permutation_with_first(n, first, [&](const std::vector<int>& sb_images) {
                        const Permutation sb(sb_images);
                        for (int pf = 1; pf <= n; ++pf)
                            for_each_permutation_with_first(
                                n, pf, [&](const std::vector<int>& pi_images) {
                                    const Permutation pi(pi_images);
                                    if (!(face_counts(sw, sb, pi) ==
                                          face_counts_traced(sw, sb, pi)))
                                        ok = false;
                                });
                    });
            });
            return ok ? 1 : 0;
        });
        const bool pass = std::all_of(parts.begin(), parts.end(), [](char c) { return c != 0; });
        report.add("face formulas vs trace n=" + std::to_string(n), pass);
    }
}

int run_verify(const VerifyOptions& opt) {
    const std::map<std::string, std::pair<int, void (*)(int, int, SuiteReport&)>> suites = {
        {"planar-catalan", {10, suite_planar_catalan}},
        {"sum-cn2", {6, suite_sum_cn2}},
        {"rho-square", {5, suite_rho_square}},
        {"theorem1", {9, suite_theorem1}},
        {"theorem2-sif-irreducible", {6, suite_theorem2}},
        {"motzkin-bijection", {8, suite_motzkin_bijection}},
        {"genus-planarity", {6, suite_genus_planarity}},
        {"face-trace-vs-formula", {5, suite_face_trace}},
    };
    const auto it = suites.find(opt.suite);
    if (it == suites.end()) {
        std::cerr << "error: unknown suite '" << opt.suite << "'; available:";
        for (const auto& [name, unused] : suites) std::cerr << " " << name;
        std::cerr << "\n";
        return kExitUsage;
    }
    const int max_n = opt.max_n > 0 ? opt.max_n : it->second.first;

    SuiteReport report;
    it->second.second(max_n, opt.workers, report);

    const Format format = parse_format(opt.format);
    if (format == Format::Json) {
        nlohmann::json cases = nlohmann::json::array();
        for (const auto& [name, pass] : report.cases)
            cases.push_back({{"name", name}, {"pass", pass}});
        std::cout << nlohmann::json{{"command", "verify"},
                                    {"suite", opt.suite},
                                    {"max_n", max_n},
                                    {"cases", cases},
                                    {"pass", report.all_pass()}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& [name, pass] : report.cases)
            std::cout << (pass ? "ok   " : "FAIL ") << name << "\n";
        std::cout << (report.all_pass() ? "suite passed" : "suite FAILED") << "\n";
    }
    return report.all_pass() ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// sif

struct SifOptions {
    int n = 0;
    bool count_only = false;
    bool list = false;
    bool vanishing = false;
    std::string format = "text";
    int workers = 1;
    std::string cache_path;
};

int run_sif(const SifOptions& opt) {
    if (!opt.count_only && !opt.list && !opt.vanishing) {
        std::cerr << "error: choose --count, --list or --vanishing\n";
        return kExitUsage;
    }

    CacheFile cache;
    cache.open(opt.cache_path);

    struct Slice {
        BigCount count = 0;
        std::vector<Permutation> sif;
        std::vector<Permutation> vanishing;
    };

    auto slices = run_jobs<Slice>(opt.n, opt.workers, [&](int i) {
        Slice slice;
        for_each_permutation_with_first(opt.n, i + 1, [&](const std::vector<int>& images) {
            const Permutation sigma(images);
            if (!is_sif(sigma)) return;
            slice.count += 1;
            if (opt.list) slice.sif.push_back(sigma);
            if (opt.vanishing && evaluate(sigma, cache.cache) == 0)
                slice.vanishing.push_back(sigma);
        });
        return slice;
    });

    Slice merged;
    for (Slice& slice : slices) {
        merged.count += slice.count;
        for (auto& p : slice.sif) merged.sif.push_back(std::move(p));
        for (auto& p : slice.vanishing) merged.vanishing.push_back(std::move(p));
    }

    const Format format = parse_format(opt.format);
    if (format == Format::Json) {
        nlohmann::json out{{"command", "sif"}, {"n", opt.n}, {"count", merged.count.str()}};
        if (opt.list) {
            nlohmann::json items = nlohmann::json::array();
            for (const auto& p : merged.sif) items.push_back(p.images());
            out["items"] = items;
        }
        if (opt.vanishing) {
            nlohmann::json items = nlohmann::json::array();
            for (const auto& p : merged.vanishing) items.push_back(p.images());
            out["vanishing"] = items;
        }
        std::cout << out.dump() << "\n";
    } else if (format == Format::Csv) {
        std::cout << "n,kind,permutation\n";
        if (opt.list)
            for (const auto& p : merged.sif)
                std::cout << opt.n << ",sif," << format_one_line(p) << "\n";
        if (opt.vanishing)
            for (const auto& p : merged.vanishing)
                std::cout << opt.n << ",vanishing," << format_one_line(p) << "\n";
        if (!opt.list && !opt.vanishing)
            std::cout << opt.n << ",count," << merged.count.str() << "\n";
    } else {
        if (opt.count_only) std::cout << merged.count.str() << "\n";
        if (opt.list)
            for (const auto& p : merged.sif)
                std::cout << format_one_line(p) << "   " << format_cycles(p) << "\n";
        if (opt.vanishing) {
            for (const auto& p : merged.vanishing)
                std::cout << format_one_line(p) << "   " << format_cycles(p) << "\n";
            std::cout << merged.vanishing.size() << " vanishing of " << merged.count.str()
                      << " SIF\n";
        }
    }

    cache.close();
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"meandric systems and Gaussian tensor expectation values"};
    app.require_subcommand(1);

    ExpectationOptions eopt;
    CLI::App* expectation = app.add_subcommand(
        "expectation", "Leading-order expectation value of a permutation-labeled invariant");
    expectation->add_option("--n", eopt.n, "order (number of arcs per side)")->required();
    expectation->add_option("--sigma", eopt.sigma_text, "black-vertex permutation")->required();
    expectation->add_option("--sigma-white", eopt.sigma_white_text,
                            "white-vertex permutation (default: identity)");
    expectation->add_option("--method", eopt.method, "brute, factor or both");
    expectation->add_flag("--full", eopt.full, "also compute the full 1/N expansion");
    expectation->add_option("--format", eopt.format, "text, json or csv");
    expectation->add_option("--workers", eopt.workers, "worker threads")->check(CLI::PositiveNumber);
    expectation->add_option("--cache", eopt.cache_path,
                            "SIF cache file (default: $MEANDRIC_CACHE)");
    expectation->add_option("--max-n", eopt.max_n, "guard for factorial-cost work");

    MeandersOptions mopt;
    CLI::App* meanders = app.add_subcommand("meanders", "Census of meandric systems");
    meanders->add_option("--n", mopt.n, "order")->required();
    meanders->add_option("--components", mopt.components, "print one census entry only");
    meanders->add_flag("--irreducible", mopt.irreducible, "restrict to 2-irreducible systems");
    meanders->add_flag("--check-closed-forms", mopt.check_closed_forms,
                       "compare the census against the closed-form top counts");
    meanders->add_option("--format", mopt.format, "text, json or csv");
    meanders->add_option("--workers", mopt.workers, "worker threads")->check(CLI::PositiveNumber);

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "Exhaustive verification suites");
    verify->add_option("--suite", vopt.suite, "suite name")->required();
    verify->add_option("--max-n", vopt.max_n, "largest order to check (0 = suite default)");
    verify->add_option("--workers", vopt.workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", vopt.format, "text or json");

    SifOptions sopt;
    CLI::App* sif = app.add_subcommand("sif", "Stabilized-interval-free permutations");
    sif->add_option("--n", sopt.n, "order")->required();
    sif->add_flag("--count", sopt.count_only, "print the number of SIF permutations");
    sif->add_flag("--list", sopt.list, "list all SIF permutations");
    sif->add_flag("--vanishing", sopt.vanishing,
                  "list SIF permutations with vanishing expectation value");
    sif->add_option("--format", sopt.format, "text, json or csv");
    sif->add_option("--workers", sopt.workers, "worker threads")->check(CLI::PositiveNumber);
    sif->add_option("--cache", sopt.cache_path, "SIF cache file (default: $MEANDRIC_CACHE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (expectation->parsed()) return run_expectation(eopt);
        if (meanders->parsed()) return run_meanders(mopt);
        if (verify->parsed()) return run_verify(vopt);
        if (sif->parsed()) return run_sif(sopt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
