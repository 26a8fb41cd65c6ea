#include "meandric/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace meandric {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::vector<int> parse_ints(std::string_view text) {
    std::vector<int> out;
    std::istringstream in{std::string(text)};
    long long v;
    while (in >> v) {
        require(v >= 1 && v <= 1'000'000'000, "permutation entry out of range");
        out.push_back(static_cast<int>(v));
    }
    require(in.eof(), "malformed permutation text");
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    require(n >= 1, "permutation must act on at least one point");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
        require(v >= 1 && v <= n, "permutation value outside [1, n]");
        require(!seen[static_cast<std::size_t>(v - 1)], "repeated permutation value");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    require(n >= 1, "identity: n must be positive");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(images));
}

Permutation parse_permutation(std::string_view text, int n) {
    require(n >= 1, "parse: n must be positive");
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        std::vector<int> images = parse_ints(text);
        require(static_cast<int>(images.size()) == n, "one-line form has wrong length");
        return Permutation(std::move(images));
    }

    // Cycle form. Omitted points are fixed points.
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    std::size_t pos = 0;
    bool any_cycle = false;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
        require(text[pos] == '(', "expected '(' in cycle form");
        const auto close = text.find(')', pos);
        require(close != std::string_view::npos, "unbalanced '(' in cycle form");
        std::vector<int> cycle = parse_ints(text.substr(pos + 1, close - pos - 1));
        require(!cycle.empty(), "empty cycle");
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int from = cycle[i];
            const int to = cycle[(i + 1) % cycle.size()];
            require(from <= n, "cycle element exceeds n");
            require(images[static_cast<std::size_t>(from - 1)] == 0, "repeated cycle element");
            images[static_cast<std::size_t>(from - 1)] = to;
        }
        any_cycle = true;
        pos = close + 1;
    }
    require(any_cycle, "no cycles found");
    for (int i = 0; i < n; ++i)
        if (images[static_cast<std::size_t>(i)] == 0) images[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(images));
}

std::string format_one_line(const Permutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(p(i));
    }
    return out;
}

std::string format_cycles(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::string out;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        out += '(';
        int i = start;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(i);
            first = false;
            seen[static_cast<std::size_t>(i - 1)] = 1;
            i = p(i);
        } while (i != start);
        out += ')';
    }
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> images(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) images[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& a) {
    std::vector<int> images(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) images[static_cast<std::size_t>(a(i) - 1)] = i;
    return Permutation(std::move(images));
}

int cycle_count(const Permutation& a) {
    const int n = a.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        ++count;
        for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = a(i))
            seen[static_cast<std::size_t>(i - 1)] = 1;
    }
    return count;
}

Permutation shift(int n, long long p) {
    if (n < 1) throw std::invalid_argument("shift: n must be positive");
    const long long r = ((p % n) + n) % n;
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        images[static_cast<std::size_t>(i - 1)] = static_cast<int>((i - 1 + r) % n) + 1;
    return Permutation(std::move(images));
}

Permutation conjugate_by_shift(const Permutation& sigma, long long k) {
    const int n = sigma.size();
    const long long r = ((k % n) + n) % n;
    std::vector<int> images(static_cast<std::size_t>(n));
    // (Delta_{-k} o sigma o Delta_k)(i), computed pointwise.
    for (int i = 1; i <= n; ++i) {
        const int shifted = static_cast<int>((i - 1 + r) % n) + 1;
        const int mapped = sigma(shifted);
        images[static_cast<std::size_t>(i - 1)] =
            static_cast<int>(((mapped - 1 - r) % n + n) % n) + 1;
    }
    return Permutation(std::move(images));
}

bool is_connected(const Permutation& sigma) {
    const int n = sigma.size();
    int max_seen = 0;
    for (int k = 1; k < n; ++k) {
        max_seen = std::max(max_seen, sigma(k));
        if (max_seen == k) return false;
    }
    return true;
}

BlockDecomposition connected_blocks(const Permutation& sigma) {
    const int n = sigma.size();
    BlockDecomposition out;
    out.cuts.push_back(1);
    int start = 1;
    int max_seen = 0;
    for (int k = 1; k <= n; ++k) {
        max_seen = std::max(max_seen, sigma(k));
        if (max_seen == k) {
            std::vector<int> block(static_cast<std::size_t>(k - start + 1));
            for (int j = start; j <= k; ++j)
                block[static_cast<std::size_t>(j - start)] = sigma(j) - (start - 1);
            out.blocks.emplace_back(std::move(block));
            out.cuts.push_back(k + 1);
            start = k + 1;
        }
    }
    return out;
}

std::optional<Interval> stabilized_proper_interval(const Permutation& sigma) {
    const int n = sigma.size();
    for (int a = 1; a <= n; ++a) {
        int lo = n + 1, hi = 0;
        for (int b = a; b <= n; ++b) {
            lo = std::min(lo, sigma(b));
            hi = std::max(hi, sigma(b));
            if (lo == a && hi == b && !(a == 1 && b == n)) return Interval{a, b};
            if (lo < a) break;  // every longer interval from a maps below a
        }
    }
    return std::nullopt;
}

bool is_sif(const Permutation& sigma) {
    return !stabilized_proper_interval(sigma).has_value();
}

}  // namespace meandric
