#pragma once

#include <cstdint>
#include <vector>

#include "meandric/permutation.hpp"

namespace meandric {

// Line convention, fixed once for the whole library: the 2n vertices sit at
// positions 1..2n in the order (1., 1o, 2., 2o, ..., n., no), black i at
// position 2i-1, white i at position 2i. Arc i joins position 2i (white i)
// to position 2*rho(i)-1 (black rho(i)).

/// A permutation viewed as n arcs on the 2n ordered positions.
/// `partner[p-1]` is the position paired with position p; derived from perm.
struct ArchConfiguration {
    Permutation perm;
    std::vector<int> partner;
};

ArchConfiguration arch_of(const Permutation& rho);

/// True iff no two arcs interleave as a < c < b < d on the 2n positions
/// (stack-based left-to-right scan).
bool is_planar(const Permutation& rho);

/// Heights profile of a planar arch configuration: heights[g-1] is the number
/// of arcs passing over the gap between positions g and g+1, g = 1..2n-1.
/// Equivalently the height of a Dyck path after each of its first 2n-1 steps.
class DyckPath {
  public:
    /// Validates: odd length, first and last entries 1, all entries >= 0,
    /// consecutive entries differ by exactly 1.
    explicit DyckPath(std::vector<int> heights);

    const std::vector<int>& heights() const { return heights_; }
    int order() const { return (static_cast<int>(heights_.size()) + 1) / 2; }

    bool operator==(const DyckPath&) const = default;

  private:
    std::vector<int> heights_;
};

/// Requires is_planar(rho); throws std::invalid_argument otherwise.
DyckPath to_dyck(const Permutation& rho);

/// The unique planar permutation with the given profile.
Permutation from_dyck(const DyckPath& d);

/// C_n as a machine word, for enumeration indexing. Guarded: n <= 33.
std::uint64_t planar_count_u64(int n);

/// The index-th planar permutation of order n, in the enumeration order
/// fixed below. Throws on index >= C_n.
Permutation planar_at(int n, std::uint64_t index);

/// Streaming enumeration of planar permutations of order n, indices
/// [begin, end) of the deterministic order: lexicographic on the Dyck step
/// sequence with up-step < down-step. Sub-ranges are independent, so the
/// stream splits cleanly across workers. next() returns a pointer to an
/// internal one-line image buffer (valid until the following call), or
/// nullptr when the range is exhausted.
class PlanarEnumerator {
  public:
    PlanarEnumerator(int n, std::uint64_t begin, std::uint64_t end);
    explicit PlanarEnumerator(int n);

    const std::vector<int>* next();

    int order() const { return n_; }

  private:
    void steps_to_images();

    int n_;
    std::uint64_t remaining_;
    bool first_ = true;
    std::vector<signed char> steps_;  // +1 up, -1 down, length 2n
    std::vector<int> images_;
    std::vector<int> stack_;
};

template <typename Visitor>
void for_each_planar(int n, std::uint64_t begin, std::uint64_t end, Visitor&& visit) {
    PlanarEnumerator it(n, begin, end);
    while (const std::vector<int>* images = it.next()) visit(*images);
}

template <typename Visitor>
void for_each_planar(int n, Visitor&& visit) {
    for_each_planar(n, 0, planar_count_u64(n), std::forward<Visitor>(visit));
}

namespace detail {

/// Planarity of a one-line image vector; no bijection validation. The two
/// scratch vectors avoid per-call allocation in enumeration loops.
bool is_planar_images(const std::vector<int>& images, std::vector<int>& partner_scratch,
                      std::vector<int>& stack_scratch);

/// partner_scratch[p-1] = position paired with p under the arc convention.
void fill_partners(const std::vector<int>& images, std::vector<int>& partner_scratch);

}  // namespace detail

}  // namespace meandric
