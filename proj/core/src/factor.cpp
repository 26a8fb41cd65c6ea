#include "meandric/factor.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "meandric/gauss.hpp"

namespace meandric {

namespace {

#ifdef MEANDRIC_KEY_CYCLIC_ONLY
constexpr const char* kCacheHeader = "# meandric sif cache v1 orbit=cyclic";
#else
constexpr const char* kCacheHeader = "# meandric sif cache v1 orbit=cyclic+inversion";
#endif

// Delta_d if sigma is a cyclic shift, i.e. sigma(i) - i is constant mod n.
std::optional<long long> shift_offset(const Permutation& sigma) {
    const int n = sigma.size();
    const int d = (sigma(1) - 1 + n) % n;
    for (int i = 2; i <= n; ++i)
        if ((sigma(i) - i + n) % n != d) return std::nullopt;
    return d;
}

}  // namespace

std::optional<BigCount> SifCache::lookup(const std::vector<int>& key) const {
    std::shared_lock lock(mutex_);
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void SifCache::store(const std::vector<int>& key, const BigCount& value) {
    std::unique_lock lock(mutex_);
    const auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted && it->second != value)
        throw std::logic_error("SifCache: conflicting value for cached key");
}

std::size_t SifCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void SifCache::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("SifCache: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader)
        throw std::runtime_error("SifCache: unrecognized cache header in " + path);
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string n_field, key_field, value_field;
        if (!std::getline(fields, n_field, '\t') || !std::getline(fields, key_field, '\t') ||
            !std::getline(fields, value_field))
            throw std::runtime_error("SifCache: malformed record at line " +
                                     std::to_string(line_number));
        const int n = std::stoi(n_field);
        const Permutation key = parse_permutation(key_field, n);
        if (!is_sif(key))
            throw std::runtime_error("SifCache: non-SIF key at line " + std::to_string(line_number));
        if (canonical_key(key) != key.images())
            throw std::runtime_error("SifCache: non-canonical key at line " +
                                     std::to_string(line_number));
        const BigCount value(value_field);
        if (value < 0)
            throw std::runtime_error("SifCache: negative value at line " +
                                     std::to_string(line_number));
        store(key.images(), value);
    }
}

void SifCache::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("SifCache: cannot write " + path);
    out << kCacheHeader << '\n';
    std::shared_lock lock(mutex_);
    for (const auto& [key, value] : entries_) {
        out << key.size() << '\t' << format_one_line(Permutation(key)) << '\t' << value.str()
            << '\n';
    }
}

BigCount closed_delta(int n, long long k) {
    if (n < 1) throw std::invalid_argument("closed_delta: n must be positive");
    const long long r = ((k % n) + n) % n;
    if (r == 0) return catalan(n);
    if (r == 1 || r == n - 1) return motzkin(n);
    return BigCount(n);
}

std::vector<int> canonical_key(const Permutation& sigma) {
    if (!is_sif(sigma)) throw std::invalid_argument("canonical_key: permutation is not SIF");
    const int n = sigma.size();
    std::vector<int> best = sigma.images();
    const auto consider = [&](const Permutation& p) {
        for (int k = 0; k < n; ++k) {
            std::vector<int> candidate = conjugate_by_shift(p, k).images();
            if (candidate < best) best = std::move(candidate);
        }
    };
    consider(sigma);
#ifndef MEANDRIC_KEY_CYCLIC_ONLY
    consider(inverse(sigma));
#endif
    return best;
}

Theorem1Witness theorem1_witness(const Permutation& sigma) {
    Theorem1Witness w;
    w.decomposition = connected_blocks(sigma);
    w.p = static_cast<int>(w.decomposition.blocks.size());
    return w;
}

BigCount evaluate(const Permutation& sigma, SifCache& cache) {
    const int n = sigma.size();
    const auto interval = stabilized_proper_interval(sigma);
    if (interval) {
        // Rotate the stabilized interval to a prefix; the expectation value
        // is invariant under cyclic relabeling, and the rotated permutation
        // now splits into at least two connected blocks.
        const Permutation rotated = conjugate_by_shift(sigma, interval->lo - 1);
        const BlockDecomposition blocks = connected_blocks(rotated);
        BigCount value = catalan(static_cast<int>(blocks.blocks.size()));
        for (const Permutation& block : blocks.blocks) value *= evaluate(block, cache);
        return value;
    }

    if (const auto d = shift_offset(sigma)) return closed_delta(n, *d);

    const std::vector<int> key = canonical_key(sigma);
    if (const auto cached = cache.lookup(key)) return *cached;
    const BigCount value = expectation_leading_single(Permutation(key));
    cache.store(key, value);
    return value;
}

BigCount evaluate(const Permutation& sigma) {
    SifCache cache;
    return evaluate(sigma, cache);
}

}  // namespace meandric
