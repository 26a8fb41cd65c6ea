#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "meandric/arch.hpp"
#include "meandric/numbers.hpp"
#include "meandric/permutation.hpp"

namespace meandric {

/// A pair of planar arch configurations on the same 2n positions, the upper
/// one drawn in the upper half-plane and the lower one below the line.
class MeandricSystem {
  public:
    /// Throws std::invalid_argument on a size mismatch or a non-planar side.
    MeandricSystem(Permutation upper, Permutation lower);

    int order() const { return upper_.size(); }
    const Permutation& upper() const { return upper_; }
    const Permutation& lower() const { return lower_; }

    bool operator==(const MeandricSystem&) const = default;

  private:
    Permutation upper_;
    Permutation lower_;
};

/// Number of closed roads, by walking them: from each unvisited position,
/// alternately follow upper and lower arcs until the walk closes.
int components_trace(const MeandricSystem& s);

/// Number of closed roads as z(lower o upper^{-1}); always equals
/// components_trace.
int components_formula(const MeandricSystem& s);

/// The permutation of the 2n position labels that advances one step along
/// the oriented roads (upward through every black vertex, so odd labels are
/// black, even labels white). Its cycles are the roads.
struct MeandricPermutation {
    Permutation rho;  // on [1, 2n]
};

MeandricPermutation meandric_permutation(const MeandricSystem& s);

/// Verifies both square identities of the road permutation against the
/// labeling permutations:
///   rho^2(2i-1) = (sigma_black^{-1} o pi o sigma_white o pi^{-1})(i)  on black labels,
///   rho^2(2i)   = (pi^{-1} o sigma_black^{-1} o pi o sigma_white)(i)  on white labels.
/// Throws std::invalid_argument unless s is exactly the system with
/// upper = pi and lower = sigma_black^{-1} o pi o sigma_white.
bool check_rho_square(const MeandricSystem& s, const Permutation& sigma_white,
                      const Permutation& sigma_black, const Permutation& pi);

/// For a fixed sigma_white, the unique (pi, sigma_black) with upper = pi and
/// lower = sigma_black^{-1} o pi o sigma_white.
std::pair<Permutation, Permutation> reconstruct(const MeandricSystem& s,
                                                const Permutation& sigma_white);

/// Number of systems of order n: C_n^2.
BigCount system_count(int n);

/// Streaming enumeration of all ordered pairs of planar permutations, indexed
/// by upper_index * C_n + lower_index in the planar enumeration order.
/// Sub-ranges split cleanly across workers.
template <typename Visitor>
void for_each_system(int n, std::uint64_t begin, std::uint64_t end, Visitor&& visit) {
    const std::uint64_t cn = planar_count_u64(n);
    std::uint64_t index = begin;
    while (index < end) {
        const std::uint64_t upper_index = index / cn;
        const std::uint64_t lower_begin = index % cn;
        const std::uint64_t lower_end = std::min<std::uint64_t>(cn, lower_begin + (end - index));
        const Permutation upper = planar_at(n, upper_index);
        for_each_planar(n, lower_begin, lower_end, [&](const std::vector<int>& lower_images) {
            visit(MeandricSystem(upper, Permutation(lower_images)));
        });
        index += lower_end - lower_begin;
    }
}

template <typename Visitor>
void for_each_system(int n, Visitor&& visit) {
    const std::uint64_t cn = planar_count_u64(n);
    for_each_system(n, 0, cn * cn, std::forward<Visitor>(visit));
}

/// Exhaustive census k -> M_n^(k) over the index range [begin, end) of the
/// system enumeration; with irreducible_only, only 2-irreducible systems are
/// tallied. Partial censuses merge by addition.
std::map<int, BigCount> count_by_components(int n, std::uint64_t begin, std::uint64_t end,
                                            bool irreducible_only = false);

/// Full census over all C_n^2 systems; satisfies sum_k M_n^(k) = C_n^2 and
/// M_n^(n) = C_n.
std::map<int, BigCount> count_by_components(int n);

/// True iff cutting the line at a single gap (so the interval is a proper
/// prefix of the positions) separates the system into two nonempty parts
/// with no arc across the cut.
bool is_one_reducible(const MeandricSystem& s);

/// True iff some contiguous proper nonempty window of positions has no arc
/// (upper or lower) joining it to its complement; the window may start and
/// end at any of the 2n+1 gaps, including inside a (black, white) pair.
bool is_two_reducible(const MeandricSystem& s);

enum class MotzkinStep : unsigned char { Up, Down, Flat };

/// A lattice path of Up/Down/Flat steps staying non-negative and ending at 0.
class MotzkinPath {
  public:
    explicit MotzkinPath(std::vector<MotzkinStep> steps);

    const std::vector<MotzkinStep>& steps() const { return steps_; }
    int order() const { return static_cast<int>(steps_.size()); }

    bool operator==(const MotzkinPath&) const = default;

  private:
    std::vector<MotzkinStep> steps_;
};

/// All Motzkin paths of length n, in a deterministic order (Up < Flat < Down
/// is not used; order is lexicographic in Up, Down, Flat encoding below).
template <typename Visitor>
void for_each_motzkin(int n, Visitor&& visit) {
    std::vector<MotzkinStep> steps(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int height) -> void {
        if (pos == n) {
            if (height == 0) visit(MotzkinPath(steps));
            return;
        }
        const int remaining = n - pos - 1;
        if (height + 1 <= remaining) {
            steps[static_cast<std::size_t>(pos)] = MotzkinStep::Up;
            self(self, pos + 1, height + 1);
        }
        if (height >= 1) {
            steps[static_cast<std::size_t>(pos)] = MotzkinStep::Down;
            self(self, pos + 1, height - 1);
        }
        if (height <= remaining) {
            steps[static_cast<std::size_t>(pos)] = MotzkinStep::Flat;
            self(self, pos + 1, height);
        }
    };
    rec(rec, 0, 0);
}

/// True iff the lower configuration is Delta_1 o upper, i.e. each upper arc
/// from i_white to j_black is shadowed by a lower arc from i_white to
/// (j+1)_black (mod n).
bool is_shifted_by_one(const MeandricSystem& s);

/// The Motzkin path of a system with lower = Delta_1 o upper: per vertex
/// pair, both upper arcs leaving rightward is Up, both leftward is Down, a
/// pair joined to itself is Flat. Throws std::invalid_argument when the
/// system is not of that form, std::logic_error if the impossible
/// down-then-up pattern is met.
MotzkinPath meander_to_motzkin(const MeandricSystem& s);

/// Inverse of meander_to_motzkin.
MeandricSystem motzkin_to_meander(const MotzkinPath& p);

}  // namespace meandric
