#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace meandric {

/// A permutation of [1, n] in one-line form, 1-based throughout.
///
/// Immutable after construction; all operations on permutations are pure
/// functions, so values are safely shareable across threads.
class Permutation {
  public:
    /// images[i] is the image of i+1. Throws std::invalid_argument unless
    /// the values are a bijection of [1, n] with n >= 1.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }

    /// Image of i, for i in [1, n].
    int operator()(int i) const { return images_[i - 1]; }

    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> images_;
};

/// Parses one-line form ("4 2 3 5 1") or cycle form ("(1 4 5)(2)(3)").
/// Elements omitted from cycle form are fixed points. Throws
/// std::invalid_argument on malformed text, out-of-range or repeated
/// elements, or a one-line length different from n.
Permutation parse_permutation(std::string_view text, int n);

/// One-line form, space separated: "4 2 3 5 1".
std::string format_one_line(const Permutation& p);

/// Cycle form with explicit fixed points: "(1 4 5)(2)(3)". Each cycle is
/// rotated to start at its smallest element; cycles sorted by that element.
std::string format_cycles(const Permutation& p);

/// Function composition "a after b": compose(a, b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

/// Number of disjoint cycles, fixed points included.
int cycle_count(const Permutation& a);

/// The cyclic shift Delta_p : i -> i + p (mod n), with values in [1, n].
/// p may be any integer; it is reduced mod n.
Permutation shift(int n, long long p);

/// Delta_{-k} o sigma o Delta_k.
Permutation conjugate_by_shift(const Permutation& sigma, long long k);

/// True iff no proper prefix [1, k], k < n, is stabilized by sigma.
bool is_connected(const Permutation& sigma);

/// The finest decomposition of sigma into consecutive stabilized intervals.
/// cuts is 1 = cuts[0] < ... < cuts[p] = n+1; blocks[j] lives on
/// [1, cuts[j+1]-cuts[j]] with blocks[j](k) = sigma(k + cuts[j] - 1) - (cuts[j] - 1).
struct BlockDecomposition {
    std::vector<int> cuts;
    std::vector<Permutation> blocks;
};

BlockDecomposition connected_blocks(const Permutation& sigma);

/// A subinterval [lo, hi] of [1, n].
struct Interval {
    int lo = 0;
    int hi = 0;
    bool operator==(const Interval&) const = default;
};

/// Some proper stabilized subinterval [a, b] of [1, n] (sigma([a,b]) = [a,b],
/// [a,b] != [1,n]), or nullopt if none exists. Deterministic choice: the
/// lexicographically least (smallest a, then smallest b).
std::optional<Interval> stabilized_proper_interval(const Permutation& sigma);

/// Stabilized-interval-free: no proper subinterval is stabilized.
bool is_sif(const Permutation& sigma);

}  // namespace meandric
