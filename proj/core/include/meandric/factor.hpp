#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "meandric/numbers.hpp"
#include "meandric/permutation.hpp"

namespace meandric {

/// Memo of expectation values of SIF-labeled invariants, keyed by the
/// canonical one-line form of the label. Safe for concurrent use; duplicate
/// computations of the same key are permitted and must store equal values.
class SifCache {
  public:
    SifCache() = default;

    std::optional<BigCount> lookup(const std::vector<int>& key) const;

    /// Idempotent; throws std::logic_error if the key is already present
    /// with a different value.
    void store(const std::vector<int>& key, const BigCount& value);

    std::size_t size() const;

    /// File format: a convention header line, then one record per entry:
    /// "n<TAB>one-line key<TAB>decimal value". Loading validates that every
    /// key is a bijection, is SIF, is canonical, and matches its n field;
    /// the header must match this build's key convention.
    void load_file(const std::string& path);
    void save_file(const std::string& path) const;

  private:
    mutable std::shared_mutex mutex_;
    std::map<std::vector<int>, BigCount> entries_;
};

/// Closed-form expectation value of the cyclic shift Delta_k on [1, n]:
/// C_n for k = 0 (mod n), Mot(n) for k = +-1 (mod n), n otherwise.
BigCount closed_delta(int n, long long k);

/// Canonical key of a SIF permutation: the lexicographically least one-line
/// form over the orbit of cyclic conjugates of sigma and of sigma^{-1} (the
/// inverse half is dropped when built with MEANDRIC_KEY_CYCLIC_ONLY).
/// Expectation values are constant on the orbit. Throws on non-SIF input.
std::vector<int> canonical_key(const Permutation& sigma);

/// The connected-block decomposition driving the factorization
/// |M_sigma| = C_p * prod_j |M_sigma_j|, exposed for testing it.
struct Theorem1Witness {
    BlockDecomposition decomposition;
    int p = 0;
};

Theorem1Witness theorem1_witness(const Permutation& sigma);

/// Expectation value of the invariant labeled by (id, sigma), by recursive
/// factorization:
///   - a stabilized proper interval is rotated to a prefix (which leaves the
///     value unchanged) and the connected blocks contribute
///     C_p * prod_j evaluate(block_j);
///   - SIF labels hit the Delta_k closed forms, then the cache, and only
///     then a direct planar-enumeration count (which is cached).
/// Always equals expectation_leading_single(sigma).
BigCount evaluate(const Permutation& sigma, SifCache& cache);

/// evaluate with a private throw-away cache.
BigCount evaluate(const Permutation& sigma);

}  // namespace meandric
