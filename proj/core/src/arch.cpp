#include "meandric/arch.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace meandric {

namespace detail {

void fill_partners(const std::vector<int>& images, std::vector<int>& partner) {
    const int n = static_cast<int>(images.size());
    partner.resize(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        const int white = 2 * i;
        const int black = 2 * images[static_cast<std::size_t>(i - 1)] - 1;
        partner[static_cast<std::size_t>(white - 1)] = black;
        partner[static_cast<std::size_t>(black - 1)] = white;
    }
}

bool is_planar_images(const std::vector<int>& images, std::vector<int>& partner,
                      std::vector<int>& stack) {
    const int n = static_cast<int>(images.size());
    fill_partners(images, partner);
    stack.clear();
    for (int p = 1; p <= 2 * n; ++p) {
        const int q = partner[static_cast<std::size_t>(p - 1)];
        if (q > p) {
            stack.push_back(p);
        } else {
            if (stack.empty() || stack.back() != q) return false;
            stack.pop_back();
        }
    }
    return true;
}

}  // namespace detail

ArchConfiguration arch_of(const Permutation& rho) {
    ArchConfiguration arch{rho, {}};
    detail::fill_partners(rho.images(), arch.partner);
    return arch;
}

bool is_planar(const Permutation& rho) {
    std::vector<int> partner, stack;
    return detail::is_planar_images(rho.images(), partner, stack);
}

DyckPath::DyckPath(std::vector<int> heights) : heights_(std::move(heights)) {
    const auto len = heights_.size();
    if (len == 0 || len % 2 == 0)
        throw std::invalid_argument("Dyck profile must have odd length 2n-1");
    if (heights_.front() != 1) throw std::invalid_argument("Dyck profile must start at height 1");
    if (heights_.back() != 1) throw std::invalid_argument("Dyck profile must end at height 1");
    for (std::size_t j = 0; j < len; ++j) {
        if (heights_[j] < 0) throw std::invalid_argument("negative height in Dyck profile");
        if (j > 0 && std::abs(heights_[j] - heights_[j - 1]) != 1)
            throw std::invalid_argument("Dyck profile steps must change height by 1");
    }
}

DyckPath to_dyck(const Permutation& rho) {
    std::vector<int> partner, stack;
    if (!detail::is_planar_images(rho.images(), partner, stack))
        throw std::invalid_argument("to_dyck: non-planar arch configuration");
    const int n = rho.size();
    std::vector<int> heights(static_cast<std::size_t>(2 * n - 1));
    int h = 0;
    for (int p = 1; p <= 2 * n - 1; ++p) {
        h += partner[static_cast<std::size_t>(p - 1)] > p ? 1 : -1;
        heights[static_cast<std::size_t>(p - 1)] = h;
    }
    return DyckPath(std::move(heights));
}

Permutation from_dyck(const DyckPath& d) {
    const int n = d.order();
    const auto& h = d.heights();
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int p = 1; p <= 2 * n; ++p) {
        const int before = p == 1 ? 0 : h[static_cast<std::size_t>(p - 2)];
        const int after = p == 2 * n ? 0 : h[static_cast<std::size_t>(p - 1)];
        if (after > before) {
            stack.push_back(p);
        } else {
            if (stack.empty()) throw std::invalid_argument("invalid Dyck profile");
            const int q = stack.back();
            stack.pop_back();
            // Matched pair (q, p) has one odd (black) and one even (white) end.
            const int white = q % 2 == 0 ? q : p;
            const int black = q % 2 == 0 ? p : q;
            images[static_cast<std::size_t>(white / 2 - 1)] = (black + 1) / 2;
        }
    }
    return Permutation(std::move(images));
}

namespace {

constexpr int kMaxEnumerationOrder = 33;  // C_33 still fits in 63 bits

// completions[r][h] = number of ways to finish a Dyck path with r steps
// remaining at height h. Shared table, grown on demand under the mutex.
// Reads after a matching ensure() are lock-free: the outer vector is
// reserved up front so rows never relocate once published.
class CompletionTable {
  public:
    CompletionTable() { rows_.reserve(2 * kMaxEnumerationOrder + 2); }

    std::uint64_t get(int r, int h) const {
        if (h < 0 || h > r) return 0;
        return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(h)];
    }

    void ensure(int steps) {
        std::scoped_lock lock(mutex_);
        while (static_cast<int>(rows_.size()) <= steps) {
            const int r = static_cast<int>(rows_.size());
            std::vector<std::uint64_t> row(static_cast<std::size_t>(r) + 1, 0);
            if (r == 0) {
                row[0] = 1;
            } else {
                const auto& prev = rows_[static_cast<std::size_t>(r - 1)];
                for (int h = 0; h <= r; ++h) {
                    std::uint64_t v = 0;
                    if (h + 1 <= r - 1) v += prev[static_cast<std::size_t>(h + 1)];
                    if (h >= 1) v += prev[static_cast<std::size_t>(h - 1)];
                    row[static_cast<std::size_t>(h)] = v;
                }
            }
            rows_.push_back(std::move(row));
        }
    }

  private:
    std::mutex mutex_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

CompletionTable& completion_table() {
    static CompletionTable table;
    return table;
}

void unrank_steps(int n, std::uint64_t index, std::vector<signed char>& steps) {
    auto& table = completion_table();
    table.ensure(2 * n);
    steps.assign(static_cast<std::size_t>(2 * n), 0);
    int h = 0;
    for (int p = 0; p < 2 * n; ++p) {
        const int remaining_after = 2 * n - p - 1;
        const std::uint64_t with_up = table.get(remaining_after, h + 1);
        if (index < with_up) {
            steps[static_cast<std::size_t>(p)] = 1;
            ++h;
        } else {
            index -= with_up;
            if (h == 0) throw std::out_of_range("planar enumeration index out of range");
            steps[static_cast<std::size_t>(p)] = -1;
            --h;
        }
    }
    if (index != 0) throw std::out_of_range("planar enumeration index out of range");
}

// Lexicographic successor (up-step < down-step). Returns false from the last
// sequence (up^n down^n reversed, i.e. alternating UDUD...).
bool next_steps(std::vector<signed char>& steps) {
    const int len = static_cast<int>(steps.size());
    int h = 0;
    std::vector<int> height_before(static_cast<std::size_t>(len));
    for (int p = 0; p < len; ++p) {
        height_before[static_cast<std::size_t>(p)] = h;
        h += steps[static_cast<std::size_t>(p)];
    }
    for (int p = len - 1; p >= 0; --p) {
        if (steps[static_cast<std::size_t>(p)] == 1 && height_before[static_cast<std::size_t>(p)] >= 1) {
            steps[static_cast<std::size_t>(p)] = -1;
            const int tail = len - p - 1;
            const int target = height_before[static_cast<std::size_t>(p)] - 1;
            const int ups = (tail - target) / 2;
            for (int q = 0; q < tail; ++q)
                steps[static_cast<std::size_t>(p + 1 + q)] = q < ups ? 1 : -1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::uint64_t planar_count_u64(int n) {
    if (n < 1) throw std::invalid_argument("planar_count_u64: n must be positive");
    if (n > kMaxEnumerationOrder)
        throw std::invalid_argument("planar_count_u64: order too large for 64-bit indexing");
    auto& table = completion_table();
    table.ensure(2 * n);
    return table.get(2 * n, 0);
}

Permutation planar_at(int n, std::uint64_t index) {
    if (index >= planar_count_u64(n)) throw std::out_of_range("planar_at: index >= C_n");
    PlanarEnumerator it(n, index, index + 1);
    return Permutation(*it.next());
}

PlanarEnumerator::PlanarEnumerator(int n, std::uint64_t begin, std::uint64_t end) : n_(n) {
    const std::uint64_t total = planar_count_u64(n);
    if (begin > end || end > total) throw std::out_of_range("PlanarEnumerator: bad index range");
    remaining_ = end - begin;
    if (remaining_ > 0) unrank_steps(n, begin, steps_);
    images_.resize(static_cast<std::size_t>(n));
}

PlanarEnumerator::PlanarEnumerator(int n) : PlanarEnumerator(n, 0, planar_count_u64(n)) {}

void PlanarEnumerator::steps_to_images() {
    stack_.clear();
    for (int p = 1; p <= 2 * n_; ++p) {
        if (steps_[static_cast<std::size_t>(p - 1)] == 1) {
            stack_.push_back(p);
        } else {
            const int q = stack_.back();
            stack_.pop_back();
            const int white = q % 2 == 0 ? q : p;
            const int black = q % 2 == 0 ? p : q;
            images_[static_cast<std::size_t>(white / 2 - 1)] = (black + 1) / 2;
        }
    }
}

const std::vector<int>* PlanarEnumerator::next() {
    if (remaining_ == 0) return nullptr;
    if (first_) {
        first_ = false;
    } else if (!next_steps(steps_)) {
        remaining_ = 0;
        return nullptr;
    }
    --remaining_;
    steps_to_images();
    return &images_;
}

}  // namespace meandric
