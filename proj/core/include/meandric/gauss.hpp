#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "meandric/numbers.hpp"
#include "meandric/permutation.hpp"

namespace meandric {

// Expectation values of the degree-2n tensor invariants labeled by
// (sigma_white, sigma_black): each Wick pairing pi contributes
// N^(2 - 2 g12 - 2 g34), and at leading order the surviving pairings are
// exactly the meandric systems with upper = pi and
// lower = sigma_black^{-1} o pi o sigma_white.

/// Numbers of bicolored faces of the 5-colored pairing graph. Edge colors on
/// the 2n vertices (white i / black i):
///   color 1: i_white - i_black          color 2: i_white - (i+1)_black
///   color 3: sw(j)_white - sb(j)_black  color 4: sw(j)_white - sb(j+1)_black
///   color 0: i_white - pi(i)_black
struct FaceCounts {
    int f01 = 0;
    int f02 = 0;
    int f03 = 0;
    int f04 = 0;

    bool operator==(const FaceCounts&) const = default;
};

/// Face counts from cycle counts of composed permutations:
///   f01 = z(pi)                        f02 = z(Delta_1^{-1} o pi)
///   f03 = z(sb^{-1} o pi o sw)         f04 = z(Delta_1^{-1} o sb^{-1} o pi o sw)
/// Always equals face_counts_traced.
FaceCounts face_counts(const Permutation& sigma_white, const Permutation& sigma_black,
                       const Permutation& pi);

/// Face counts by literally walking the alternating color-(0,i) closed walks
/// on the 5-colored graph built from the edge definitions above. Independent
/// of the cycle-count route; the walks are the ground truth for the shift
/// direction in f02 and f04.
FaceCounts face_counts_traced(const Permutation& sigma_white, const Permutation& sigma_black,
                              const Permutation& pi);

/// Genera of the color-{0,1,2} and color-{0,3,4} subgraph surfaces:
/// g12 = (n + 1 - f01 - f02)/2, g34 = (n + 1 - f03 - f04)/2. Throws
/// std::logic_error on a parity or negativity violation (an implementation
/// bug, not bad input).
std::pair<int, int> genera(const Permutation& sigma_white, const Permutation& sigma_black,
                           const Permutation& pi);

/// Exponent of N contributed by the Wick pairing pi:
/// Omega = sum_i f0i - 2n = 2 - 2 g12 - 2 g34 (both routes checked).
int wick_exponent(const Permutation& sigma_white, const Permutation& sigma_black,
                  const Permutation& pi);

/// Leading-order expectation value: the number of planar pi such that
/// sigma_black^{-1} o pi o sigma_white is planar too. Costs O(C_n poly n),
/// never O(n!).
BigCount expectation_leading(const Permutation& sigma_white, const Permutation& sigma_black);

/// Partial count over planar-enumeration indices [begin, end); partial
/// counts merge by addition, independent of the split.
BigCount expectation_leading(const Permutation& sigma_white, const Permutation& sigma_black,
                             std::uint64_t begin, std::uint64_t end);

/// expectation_leading with sigma_white = id.
BigCount expectation_leading_single(const Permutation& sigma);

/// The full 1/N expansion <P> = N^2 sum_k coeffs[k] N^{-k}: coeffs[k] is the
/// number of Wick pairings with 2 g12 + 2 g34 = k. All keys are even,
/// sum_k coeffs[k] = n!, and coeffs[0] is the leading count.
struct ExpansionCoefficients {
    int n = 0;
    std::map<int, BigCount> coeffs;

    /// omega of this family; independent of n.
    static constexpr int leading_exponent = 2;
};

/// Iterating all n! pairings is guarded: throws std::invalid_argument when
/// n exceeds the limit.
inline constexpr int kDefaultFactorialLimit = 10;

ExpansionCoefficients full_expansion(const Permutation& sigma_white,
                                     const Permutation& sigma_black,
                                     int limit = kDefaultFactorialLimit);

/// The slice of full_expansion over pairings with pi(1) = first_image; the
/// n slices partition the sum, so per-slice coefficient maps merge by
/// addition into the full expansion.
ExpansionCoefficients full_expansion_slice(const Permutation& sigma_white,
                                           const Permutation& sigma_black, int first_image);

/// k -> sum over sigma with z(sigma) = k of expectation_leading_single(sigma);
/// equals the meandric census count_by_components(n). Factorial cost, guarded.
std::map<int, BigCount> census_by_cycles(int n, int limit = kDefaultFactorialLimit);

}  // namespace meandric
