#ifndef INVAR_CONGRUENCE_HPP
#define INVAR_CONGRUENCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invar/errors.hpp"

namespace invar {

/// The monoid of nonnegative integer solutions of
///   w_1 x_1 + ... + w_r x_r == 0  (mod n)       for modulus n >= 1, or
///   w_1 x_1 + ... + w_r x_r == 0  over Z        for modulus 0.
class CongruenceSystem {
public:
    CongruenceSystem(std::vector<std::int64_t> weights, std::int64_t modulus);

    std::size_t rank() const { return weights_.size(); }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    std::int64_t modulus() const { return modulus_; }

    /// Weights reduced to [0, n) for modulus n >= 1; the original weights
    /// for modulus 0.  The solution monoid depends only on these.
    const std::vector<std::int64_t>& reduced_weights() const { return reduced_; }

    /// True when the weights are exactly 1, 2, ..., n-1 with modulus n.
    bool is_kac() const;

    /// Default search cap: n for modulus n >= 1 (minimal zero-sum multisets
    /// over Z_n have size at most n); 2*max|w| - 1 for modulus 0.
    std::int64_t default_degree_cap() const;

private:
    std::vector<std::int64_t> weights_;
    std::vector<std::int64_t> reduced_;
    std::int64_t modulus_;
};

/// A monomial exponent vector together with its total degree.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<std::int64_t> exponents);

    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    std::int64_t degree() const { return degree_; }
    std::size_t size() const { return exponents_.size(); }
    std::int64_t operator[](std::size_t i) const { return exponents_[i]; }

    bool is_zero() const { return degree_ == 0; }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::int64_t> exponents_;
    std::int64_t degree_;
};

/// Canonical order: by degree, then lexicographically on exponents.
bool canonical_less(const ExponentVector& a, const ExponentVector& b);

struct HilbertBasis {
    CongruenceSystem system;
    std::vector<ExponentVector> elements; // canonically ordered
    std::int64_t complete_to_degree = 0;
    std::map<std::int64_t, std::size_t> counts_by_degree;

    std::size_t count_in_degree(std::int64_t k) const;
};

struct SearchOptions {
    std::uint64_t work_budget = 100'000'000; // visited search nodes
    unsigned workers = 1;
};

/// True iff sum w_i a_i == 0 (mod n), or == 0 exactly for modulus 0.
bool is_solution(const CongruenceSystem& system, const ExponentVector& v);

/// True iff no solution u with 0 < u <= v componentwise and u != v exists.
/// (Equivalently, v is not a sum of two nonzero solutions: v - u is again
/// a solution whenever u is.)  v must be a nonzero solution.
bool is_indecomposable(const CongruenceSystem& system, const ExponentVector& v);

/// All indecomposable solutions of degree <= cap (default cap when absent),
/// canonically ordered.  Pruned depth-first search; deterministic for any
/// worker count.
HilbertBasis hilbert_basis(const CongruenceSystem& system,
                           std::optional<std::int64_t> degree_cap = std::nullopt,
                           const SearchOptions& options = {});

/// Independent oracle with the same output contract: exhaustively lists
/// every solution of degree <= cap and tests indecomposability of each by
/// scanning for a dominated smaller solution.  Shares no pruning machinery
/// with hilbert_basis.
HilbertBasis hilbert_basis_bruteforce(const CongruenceSystem& system,
                                      std::int64_t degree_cap,
                                      std::uint64_t work_budget = 100'000'000);

/// Weights (1, 2, ..., n-1) with modulus n.
CongruenceSystem kac_system(std::int64_t n);

/// Number of Hilbert-basis elements of degree exactly k.
std::size_t indecomposables_in_degree(const CongruenceSystem& system, std::int64_t k,
                                      const SearchOptions& options = {});

/// True iff some nonempty sub-multiset of residues sums to 0 mod n.
bool has_zero_subset_sum(const std::vector<std::int64_t>& residues, std::int64_t n);

/// Maximum cardinality of S in Z_n \ {0} no nonempty subset of which sums
/// to 0 mod n.  Exhaustive branch-and-prune; budget-guarded.
std::size_t max_zero_sum_free(std::int64_t n, std::uint64_t work_budget = 100'000'000);

struct OlsonReport {
    std::int64_t n = 0;
    std::size_t max_size = 0;            // max_zero_sum_free(n)
    std::vector<std::int64_t> witness;   // one set attaining the maximum
    double threshold = 0.0;              // 3 sqrt(n)
    bool pass = false;                   // max_size < 3 sqrt(n)
};

OlsonReport verify_olson(std::int64_t n, std::uint64_t work_budget = 100'000'000);

} // namespace invar

#endif
