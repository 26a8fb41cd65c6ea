#include "meandric/gauss.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "meandric/arch.hpp"

namespace meandric {

namespace {

int cycle_count_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        ++count;
        for (int i = start; !seen[static_cast<std::size_t>(i - 1)];
             i = images[static_cast<std::size_t>(i - 1)])
            seen[static_cast<std::size_t>(i - 1)] = 1;
    }
    return count;
}

void require_equal_sizes(const Permutation& sigma_white, const Permutation& sigma_black,
                         const Permutation& pi) {
    if (sigma_white.size() != sigma_black.size() || sigma_white.size() != pi.size())
        throw std::invalid_argument("size mismatch");
}

// Walks the alternating color-(0, c) cycles given the two matchings as
// white-to-black image arrays; returns the number of closed walks.
int trace_faces(const std::vector<int>& color0, const std::vector<int>& color_c) {
    const int n = static_cast<int>(color0.size());
    std::vector<int> c_inv(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) c_inv[static_cast<std::size_t>(color_c[static_cast<std::size_t>(i - 1)] - 1)] = i;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    int faces = 0;
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start - 1)]) continue;
        ++faces;
        int white = start;
        do {
            visited[static_cast<std::size_t>(white - 1)] = 1;
            const int black = color0[static_cast<std::size_t>(white - 1)];
            white = c_inv[static_cast<std::size_t>(black - 1)];
        } while (white != start);
    }
    return faces;
}

}  // namespace

FaceCounts face_counts(const Permutation& sigma_white, const Permutation& sigma_black,
                       const Permutation& pi) {
    require_equal_sizes(sigma_white, sigma_black, pi);
    const int n = pi.size();
    // The color-2 partner of black vertex i is white vertex i-1, so the
    // (02)-walk advances black labels by pi o Delta_1^{-1}; composing the
    // other way round has the same cycle count. Using Delta_1 instead fails
    // the trace oracle already at pi = [2,3,1], n = 3.
    const Permutation back = shift(n, -1);
    const Permutation lower = compose(inverse(sigma_black), compose(pi, sigma_white));
    FaceCounts f;
    f.f01 = cycle_count(pi);
    f.f02 = cycle_count(compose(back, pi));
    f.f03 = cycle_count(lower);
    f.f04 = cycle_count(compose(back, lower));
    return f;
}

FaceCounts face_counts_traced(const Permutation& sigma_white, const Permutation& sigma_black,
                              const Permutation& pi) {
    require_equal_sizes(sigma_white, sigma_black, pi);
    const int n = pi.size();
    std::vector<int> color0(static_cast<std::size_t>(n));
    std::vector<int> color1(static_cast<std::size_t>(n));
    std::vector<int> color2(static_cast<std::size_t>(n));
    std::vector<int> color3(static_cast<std::size_t>(n));
    std::vector<int> color4(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        color0[static_cast<std::size_t>(i - 1)] = pi(i);
        color1[static_cast<std::size_t>(i - 1)] = i;
        color2[static_cast<std::size_t>(i - 1)] = i % n + 1;
    }
    for (int j = 1; j <= n; ++j) {
        color3[static_cast<std::size_t>(sigma_white(j) - 1)] = sigma_black(j);
        color4[static_cast<std::size_t>(sigma_white(j) - 1)] = sigma_black(j % n + 1);
    }
    return FaceCounts{trace_faces(color0, color1), trace_faces(color0, color2),
                      trace_faces(color0, color3), trace_faces(color0, color4)};
}

std::pair<int, int> genera(const Permutation& sigma_white, const Permutation& sigma_black,
                           const Permutation& pi) {
    const FaceCounts f = face_counts(sigma_white, sigma_black, pi);
    const int n = pi.size();
    const int two_g12 = n + 1 - f.f01 - f.f02;
    const int two_g34 = n + 1 - f.f03 - f.f04;
    if (two_g12 < 0 || two_g12 % 2 != 0 || two_g34 < 0 || two_g34 % 2 != 0)
        throw std::logic_error("genera: parity violation in face counts");
    return {two_g12 / 2, two_g34 / 2};
}

int wick_exponent(const Permutation& sigma_white, const Permutation& sigma_black,
                  const Permutation& pi) {
    const FaceCounts f = face_counts(sigma_white, sigma_black, pi);
    const int n = pi.size();
    const int omega = f.f01 + f.f02 + f.f03 + f.f04 - 2 * n;
    const auto [g12, g34] = genera(sigma_white, sigma_black, pi);
    if (omega != 2 - 2 * g12 - 2 * g34)
        throw std::logic_error("wick_exponent: face/genus routes disagree");
    return omega;
}

BigCount expectation_leading(const Permutation& sigma_white, const Permutation& sigma_black,
                             std::uint64_t begin, std::uint64_t end) {
    if (sigma_white.size() != sigma_black.size())
        throw std::invalid_argument("expectation_leading: size mismatch");
    const int n = sigma_white.size();
    const std::vector<int>& white = sigma_white.images();
    const std::vector<int> black_inv = inverse(sigma_black).images();

    std::vector<int> lower(static_cast<std::size_t>(n));
    std::vector<int> partner_scratch, stack_scratch;
    BigCount count = 0;
    for_each_planar(n, begin, end, [&](const std::vector<int>& pi) {
        for (int i = 1; i <= n; ++i) {
            const int through = pi[static_cast<std::size_t>(white[static_cast<std::size_t>(i - 1)] - 1)];
            lower[static_cast<std::size_t>(i - 1)] = black_inv[static_cast<std::size_t>(through - 1)];
        }
        if (detail::is_planar_images(lower, partner_scratch, stack_scratch)) ++count;
    });
    return count;
}

BigCount expectation_leading(const Permutation& sigma_white, const Permutation& sigma_black) {
    return expectation_leading(sigma_white, sigma_black, 0,
                               planar_count_u64(sigma_white.size()));
}

BigCount expectation_leading_single(const Permutation& sigma) {
    return expectation_leading(Permutation::identity(sigma.size()), sigma);
}

ExpansionCoefficients full_expansion_slice(const Permutation& sigma_white,
                                           const Permutation& sigma_black, int first_image) {
    if (sigma_white.size() != sigma_black.size())
        throw std::invalid_argument("full_expansion: size mismatch");
    const int n = sigma_white.size();
    if (first_image < 1 || first_image > n)
        throw std::invalid_argument("full_expansion_slice: first image outside [1, n]");

    const std::vector<int>& white = sigma_white.images();
    const std::vector<int> black_inv = inverse(sigma_black).images();

    ExpansionCoefficients out;
    out.n = n;

    std::vector<int> pi(static_cast<std::size_t>(n));
    pi[0] = first_image;
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (v != first_image) rest.push_back(v);

    std::vector<int> lower(static_cast<std::size_t>(n));
    std::vector<int> with_back(static_cast<std::size_t>(n));
    do {
        std::copy(rest.begin(), rest.end(), pi.begin() + 1);

        const int f01 = cycle_count_images(pi);
        for (int i = 1; i <= n; ++i)
            with_back[static_cast<std::size_t>(i - 1)] =
                (pi[static_cast<std::size_t>(i - 1)] + n - 2) % n + 1;
        const int f02 = cycle_count_images(with_back);
        for (int i = 1; i <= n; ++i) {
            const int through = pi[static_cast<std::size_t>(white[static_cast<std::size_t>(i - 1)] - 1)];
            lower[static_cast<std::size_t>(i - 1)] = black_inv[static_cast<std::size_t>(through - 1)];
        }
        const int f03 = cycle_count_images(lower);
        for (int i = 1; i <= n; ++i)
            with_back[static_cast<std::size_t>(i - 1)] =
                (lower[static_cast<std::size_t>(i - 1)] + n - 2) % n + 1;
        const int f04 = cycle_count_images(with_back);

        const int k = 2 * (n + 1) - f01 - f02 - f03 - f04;
        if (k < 0 || k % 2 != 0) throw std::logic_error("full_expansion: parity violation");
        out.coeffs[k] += 1;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

ExpansionCoefficients full_expansion(const Permutation& sigma_white,
                                     const Permutation& sigma_black, int limit) {
    const int n = sigma_white.size();
    if (n > limit) throw std::invalid_argument("full_expansion: order above configured limit");
    ExpansionCoefficients out;
    out.n = n;
    for (int first = 1; first <= n; ++first) {
        ExpansionCoefficients slice = full_expansion_slice(sigma_white, sigma_black, first);
        for (const auto& [k, c] : slice.coeffs) out.coeffs[k] += c;
    }
    return out;
}

std::map<int, BigCount> census_by_cycles(int n, int limit) {
    if (n < 1) throw std::invalid_argument("census_by_cycles: order must be positive");
    if (n > limit) throw std::invalid_argument("census_by_cycles: order above configured limit");
    std::map<int, BigCount> census;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        const Permutation sigma(images);
        census[cycle_count(sigma)] += expectation_leading_single(sigma);
    } while (std::next_permutation(images.begin(), images.end()));
    return census;
}

}  // namespace meandric
