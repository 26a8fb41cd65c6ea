#include "meandric/meander.hpp"

#include <stdexcept>

namespace meandric {

MeandricSystem::MeandricSystem(Permutation upper, Permutation lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (upper_.size() != lower_.size())
        throw std::invalid_argument("meandric system: size mismatch");
    if (!is_planar(upper_)) throw std::invalid_argument("meandric system: upper non-planar");
    if (!is_planar(lower_)) throw std::invalid_argument("meandric system: lower non-planar");
}

int components_trace(const MeandricSystem& s) {
    const int n = s.order();
    std::vector<int> up, low;
    detail::fill_partners(s.upper().images(), up);
    detail::fill_partners(s.lower().images(), low);
    std::vector<char> visited(static_cast<std::size_t>(2 * n), 0);
    int roads = 0;
    for (int start = 1; start <= 2 * n; ++start) {
        if (visited[static_cast<std::size_t>(start - 1)]) continue;
        ++roads;
        int p = start;
        bool take_upper = true;
        do {
            visited[static_cast<std::size_t>(p - 1)] = 1;
            p = take_upper ? up[static_cast<std::size_t>(p - 1)] : low[static_cast<std::size_t>(p - 1)];
            take_upper = !take_upper;
        } while (p != start);
    }
    return roads;
}

int components_formula(const MeandricSystem& s) {
    return cycle_count(compose(s.lower(), inverse(s.upper())));
}

MeandricPermutation meandric_permutation(const MeandricSystem& s) {
    const int n = s.order();
    std::vector<int> up, low;
    detail::fill_partners(s.upper().images(), up);
    detail::fill_partners(s.lower().images(), low);
    std::vector<int> images(static_cast<std::size_t>(2 * n));
    // Roads cross the line upward at black vertices (odd positions): leave a
    // black vertex along its upper arc, a white vertex along its lower arc.
    for (int p = 1; p <= 2 * n; ++p)
        images[static_cast<std::size_t>(p - 1)] =
            p % 2 == 1 ? up[static_cast<std::size_t>(p - 1)] : low[static_cast<std::size_t>(p - 1)];
    return MeandricPermutation{Permutation(std::move(images))};
}

bool check_rho_square(const MeandricSystem& s, const Permutation& sigma_white,
                      const Permutation& sigma_black, const Permutation& pi) {
    const int n = s.order();
    if (sigma_white.size() != n || sigma_black.size() != n || pi.size() != n)
        throw std::invalid_argument("check_rho_square: size mismatch");
    const Permutation expected_lower = compose(inverse(sigma_black), compose(pi, sigma_white));
    if (s.upper() != pi || s.lower() != expected_lower)
        throw std::invalid_argument("check_rho_square: system does not match the labeling");

    const Permutation rho = meandric_permutation(s).rho;
    const Permutation rho2 = compose(rho, rho);
    const Permutation on_black =
        compose(compose(inverse(sigma_black), pi), compose(sigma_white, inverse(pi)));
    const Permutation on_white =
        compose(compose(inverse(pi), inverse(sigma_black)), compose(pi, sigma_white));
    for (int i = 1; i <= n; ++i) {
        if (rho2(2 * i - 1) != 2 * on_black(i) - 1) return false;
        if (rho2(2 * i) != 2 * on_white(i)) return false;
    }
    return true;
}

std::pair<Permutation, Permutation> reconstruct(const MeandricSystem& s,
                                                const Permutation& sigma_white) {
    if (sigma_white.size() != s.order())
        throw std::invalid_argument("reconstruct: size mismatch");
    const Permutation& pi = s.upper();
    const Permutation sigma_black = compose(compose(pi, sigma_white), inverse(s.lower()));
    return {pi, sigma_black};
}

BigCount system_count(int n) {
    const BigCount cn = catalan(n);
    return cn * cn;
}

std::map<int, BigCount> count_by_components(int n, std::uint64_t begin, std::uint64_t end,
                                            bool irreducible_only) {
    std::map<int, BigCount> census;
    for_each_system(n, begin, end, [&](const MeandricSystem& s) {
        if (irreducible_only && is_two_reducible(s)) return;
        census[components_formula(s)] += 1;
    });
    return census;
}

std::map<int, BigCount> count_by_components(int n) {
    const std::uint64_t cn = planar_count_u64(n);
    return count_by_components(n, 0, cn * cn, false);
}

namespace {

// Windows of positions with no arc to the complement, scanned with a running
// count of arcs crossing the window boundary. Adding position b to the window
// [a, b-1] closes an arc whose partner is already inside, and opens one
// whose partner is outside.
bool has_closed_window(const std::vector<int>& up, const std::vector<int>& low, int total,
                       bool prefixes_only) {
    const int max_start = prefixes_only ? 1 : total;
    for (int a = 1; a <= max_start; ++a) {
        int crossing = 0;
        for (int b = a; b <= total; ++b) {
            for (const auto* partners : {&up, &low}) {
                const int q = (*partners)[static_cast<std::size_t>(b - 1)];
                crossing += (q >= a && q < b) ? -1 : +1;
            }
            if (crossing == 0 && !(a == 1 && b == total)) return true;
        }
    }
    return false;
}

}  // namespace

bool is_one_reducible(const MeandricSystem& s) {
    std::vector<int> up, low;
    detail::fill_partners(s.upper().images(), up);
    detail::fill_partners(s.lower().images(), low);
    return has_closed_window(up, low, 2 * s.order(), /*prefixes_only=*/true);
}

bool is_two_reducible(const MeandricSystem& s) {
    std::vector<int> up, low;
    detail::fill_partners(s.upper().images(), up);
    detail::fill_partners(s.lower().images(), low);
    return has_closed_window(up, low, 2 * s.order(), /*prefixes_only=*/false);
}

MotzkinPath::MotzkinPath(std::vector<MotzkinStep> steps) : steps_(std::move(steps)) {
    int height = 0;
    for (const MotzkinStep step : steps_) {
        if (step == MotzkinStep::Up) ++height;
        if (step == MotzkinStep::Down) --height;
        if (height < 0) throw std::invalid_argument("Motzkin path dips below zero");
    }
    if (height != 0) throw std::invalid_argument("Motzkin path must end at height zero");
}

bool is_shifted_by_one(const MeandricSystem& s) {
    const int n = s.order();
    for (int i = 1; i <= n; ++i)
        if (s.lower()(i) != s.upper()(i) % n + 1) return false;
    return true;
}

MotzkinPath meander_to_motzkin(const MeandricSystem& s) {
    if (!is_shifted_by_one(s))
        throw std::invalid_argument("meander_to_motzkin: lower is not Delta_1 o upper");
    const int n = s.order();
    std::vector<int> up;
    detail::fill_partners(s.upper().images(), up);
    std::vector<MotzkinStep> steps(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const bool black_opens = up[static_cast<std::size_t>(2 * i - 2)] > 2 * i - 1;
        const bool white_opens = up[static_cast<std::size_t>(2 * i - 1)] > 2 * i;
        if (black_opens && white_opens) {
            steps[static_cast<std::size_t>(i - 1)] = MotzkinStep::Up;
        } else if (!black_opens && !white_opens) {
            steps[static_cast<std::size_t>(i - 1)] = MotzkinStep::Down;
        } else if (black_opens && !white_opens) {
            // Planarity forces the pair to be joined to itself here.
            steps[static_cast<std::size_t>(i - 1)] = MotzkinStep::Flat;
        } else {
            throw std::logic_error("meander_to_motzkin: impossible down-then-up pattern");
        }
    }
    return MotzkinPath(std::move(steps));
}

MeandricSystem motzkin_to_meander(const MotzkinPath& p) {
    const int n = p.order();
    std::vector<int> heights;
    heights.reserve(static_cast<std::size_t>(2 * n - 1));
    int h = 0;
    for (int i = 0; i < n; ++i) {
        const MotzkinStep step = p.steps()[static_cast<std::size_t>(i)];
        const int first = step == MotzkinStep::Down ? -1 : +1;
        const int second = step == MotzkinStep::Up ? +1 : -1;
        heights.push_back(h += first);
        if (2 * i + 2 <= 2 * n - 1) heights.push_back(h += second);
    }
    const Permutation upper = from_dyck(DyckPath(std::move(heights)));
    const Permutation lower = compose(shift(n, 1), upper);
    return MeandricSystem(upper, lower);
}

}  // namespace meandric
