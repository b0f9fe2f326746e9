#include "invar/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <thread>

#include <gmpxx.h>

#include "invar/arith.hpp"

namespace invar {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

i64 reduce_mod(i64 v, i64 n) {
    i64 r = v % n;
    return r < 0 ? r + n : r;
}

// ---------------------------------------------------------------------------
// Bitset of achievable sums.  Two geometries share one representation:
//   - modular: residues 0..n-1, shifts rotate;
//   - window:  integers lo..hi, shifts translate (valid inputs never leave
//              the window, which is sized from the degree cap).
// ---------------------------------------------------------------------------
class SumRing {
public:
    static SumRing modular(i64 n) {
        SumRing r;
        r.modular_ = true;
        r.n_ = n;
        r.lo_ = 0;
        r.nbits_ = static_cast<std::size_t>(n);
        r.words_ = (r.nbits_ + 63) / 64;
        return r;
    }

    static SumRing window(i64 lo, i64 hi) {
        SumRing r;
        r.modular_ = false;
        r.n_ = 0;
        r.lo_ = lo;
        r.nbits_ = static_cast<std::size_t>(hi - lo + 1);
        r.words_ = (r.nbits_ + 63) / 64;
        return r;
    }

    std::size_t words() const { return words_; }
    std::size_t bit_count() const { return nbits_; }

    std::vector<u64> make() const { return std::vector<u64>(words_, 0); }

    void set(std::vector<u64>& bits, i64 v) const {
        const std::size_t i = index(v);
        bits[i >> 6] |= u64{1} << (i & 63);
    }

    bool test(const std::vector<u64>& bits, i64 v) const {
        const std::size_t i = index(v);
        return (bits[i >> 6] >> (i & 63)) & 1;
    }

    bool test_zero(const std::vector<u64>& bits) const { return test(bits, 0); }

    // dst |= (src shifted by e).
    void or_shifted(std::vector<u64>& dst, const std::vector<u64>& src, i64 e) const {
        if (modular_) {
            const i64 k = reduce_mod(e, n_);
            if (k == 0) {
                for (std::size_t j = 0; j < words_; ++j)
                    dst[j] |= src[j];
                return;
            }
            // bit i -> i + k for i < n - k, and bit i -> i - (n - k) otherwise
            or_shl(dst, src, static_cast<std::size_t>(k));
            or_shr(dst, src, static_cast<std::size_t>(n_ - k));
            mask_top(dst);
        } else {
            if (e >= 0)
                or_shl(dst, src, static_cast<std::size_t>(e));
            else
                or_shr(dst, src, static_cast<std::size_t>(-e));
            mask_top(dst);
        }
    }

private:
    std::size_t index(i64 v) const {
        if (modular_)
            return static_cast<std::size_t>(reduce_mod(v, n_));
        assert(v >= lo_ && v - lo_ < static_cast<i64>(nbits_));
        return static_cast<std::size_t>(v - lo_);
    }

    void or_shl(std::vector<u64>& dst, const std::vector<u64>& src, std::size_t s) const {
        const std::size_t ws = s >> 6, bs = s & 63;
        for (std::size_t j = words_; j-- > 0;) {
            if (src[j] == 0)
                continue;
            const std::size_t t = j + ws;
            if (t < words_)
                dst[t] |= src[j] << bs;
            if (bs != 0 && t + 1 < words_)
                dst[t + 1] |= src[j] >> (64 - bs);
        }
    }

    void or_shr(std::vector<u64>& dst, const std::vector<u64>& src, std::size_t s) const {
        const std::size_t ws = s >> 6, bs = s & 63;
        for (std::size_t j = 0; j < words_; ++j) {
            const std::size_t t = j + ws;
            u64 v = 0;
            if (t < words_)
                v = src[t] >> bs;
            if (bs != 0 && t + 1 < words_)
                v |= src[t + 1] << (64 - bs);
            dst[j] |= v;
        }
    }

    void mask_top(std::vector<u64>& bits) const {
        const std::size_t rem = nbits_ & 63;
        if (rem != 0)
            bits[words_ - 1] &= (u64{1} << rem) - 1;
    }

    bool modular_ = true;
    i64 n_ = 1;
    i64 lo_ = 0;
    std::size_t nbits_ = 1;
    std::size_t words_ = 1;
};

void tick(std::atomic<u64>& counter, u64 budget, const char* what) {
    if (counter.fetch_add(1, std::memory_order_relaxed) >= budget)
        throw resource_error(std::string(what) + ": work budget exceeded");
}

struct RawVector {
    std::vector<i64> expo; // internal coordinate order
    i64 degree = 0;
};

// ---------------------------------------------------------------------------
// Depth-first enumeration of indecomposable solutions.
//
// State along the path is the multiset M of weight values picked so far,
// tracked as (P, T, m): P = sums of nonempty *proper* sub-multisets of M,
// T = total, m = |M|.  Appending one copy of e updates
//     P' = P  u  {T if m>0}  u  shift(P u {0 if m>0}, e).
// A prefix with 0 in P can only complete to decomposable solutions, so the
// branch is cut; a prefix with T == 0 (and 0 not in P) is emitted as a
// basis element and not extended, since every proper extension contains it.
// This is the indecomposability test run incrementally.
// ---------------------------------------------------------------------------
class BasisSearch {
public:
    BasisSearch(std::vector<i64> weights, i64 modulus, i64 cap, const SumRing& ring,
                std::atomic<u64>& counter, u64 budget)
        : w_(std::move(weights)), modulus_(modulus), cap_(cap), ring_(ring),
          counter_(&counter), budget_(budget) {
        const std::size_t r = w_.size();
        exps_.assign(r, 0);
        psums_ = ring_.make();
        scratch_ = ring_.make();
        snaps_.assign(static_cast<std::size_t>(cap_) + 1, ring_.make());
        copy_elems_.assign(static_cast<std::size_t>(cap_) + 1, 0);
        if (modulus_ == 0) {
            suf_maxpos_.assign(r + 1, 0);
            suf_maxneg_.assign(r + 1, 0);
            for (std::size_t j = r; j-- > 0;) {
                suf_maxpos_[j] = std::max(suf_maxpos_[j + 1], w_[j] > 0 ? w_[j] : 0);
                suf_maxneg_[j] = std::max(suf_maxneg_[j + 1], w_[j] < 0 ? -w_[j] : 0);
            }
        }
    }

    // Processes the top-level branches (first-coordinate exponent a0) with
    // a0 % stride == offset.  Output order within a worker is the DFS
    // order; callers merge and re-sort canonically.
    void run(unsigned offset, unsigned stride, std::vector<RawVector>& out) {
        if (w_.empty())
            return;
        out_ = &out;
        for (i64 a0 = 0; a0 <= cap_; ++a0) {
            if (a0 % static_cast<i64>(stride) != static_cast<i64>(offset))
                continue;
            reset();
            bool dead = false;
            for (i64 i = 1; i <= a0; ++i) {
                add_copy(w_[0]);
                exps_[0] = i;
                tick(*counter_, budget_, "hilbert_basis");
                if (ring_.test_zero(psums_)) {
                    dead = true;
                    break;
                }
                if (total_zero()) {
                    if (i == a0)
                        emit();
                    dead = true;
                    break;
                }
            }
            if (dead)
                break; // every larger a0 extends a dead or emitted prefix
            dfs(1);
        }
    }

private:
    void reset() {
        std::fill(exps_.begin(), exps_.end(), 0);
        std::fill(psums_.begin(), psums_.end(), 0);
        total_ = 0;
        used_ = 0;
        m_ = 0;
    }

    bool total_zero() const { return total_ == 0; }

    void add_copy(i64 e) {
        snaps_[static_cast<std::size_t>(m_)] = psums_;
        copy_elems_[static_cast<std::size_t>(m_)] = e;
        scratch_ = psums_;
        if (m_ > 0) {
            ring_.set(scratch_, 0);
            ring_.set(psums_, total_);
        }
        ring_.or_shifted(psums_, scratch_, e);
        total_ = modulus_ > 0 ? reduce_mod(total_ + e, modulus_) : total_ + e;
        ++m_;
        ++used_;
    }

    void undo_copy() {
        --m_;
        --used_;
        const i64 e = copy_elems_[static_cast<std::size_t>(m_)];
        total_ = modulus_ > 0 ? reduce_mod(total_ - e, modulus_) : total_ - e;
        psums_ = snaps_[static_cast<std::size_t>(m_)];
    }

    bool feasible(std::size_t coord) const {
        if (modulus_ != 0)
            return true;
        const i64 rem = cap_ - used_;
        if (total_ > 0)
            return total_ <= rem * suf_maxneg_[coord];
        if (total_ < 0)
            return -total_ <= rem * suf_maxpos_[coord];
        return true;
    }

    void dfs(std::size_t coord) {
        if (coord == w_.size())
            return;
        tick(*counter_, budget_, "hilbert_basis");
        if (!feasible(coord))
            return;
        dfs(coord + 1);
        const i64 e = w_[coord];
        i64 added = 0;
        while (used_ < cap_) {
            add_copy(e);
            ++added;
            exps_[coord] = added;
            tick(*counter_, budget_, "hilbert_basis");
            if (ring_.test_zero(psums_))
                break;
            if (total_zero()) {
                emit();
                break;
            }
            dfs(coord + 1);
        }
        for (; added > 0; --added)
            undo_copy();
        exps_[coord] = 0;
    }

    void emit() { out_->push_back(RawVector{exps_, used_}); }

    std::vector<i64> w_;
    i64 modulus_;
    i64 cap_;
    SumRing ring_;
    std::atomic<u64>* counter_;
    u64 budget_;

    std::vector<i64> suf_maxpos_, suf_maxneg_;

    std::vector<i64> exps_;
    std::vector<std::vector<u64>> snaps_;
    std::vector<i64> copy_elems_;
    std::vector<u64> psums_, scratch_;
    i64 total_ = 0;
    i64 used_ = 0;
    i64 m_ = 0;
    std::vector<RawVector>* out_ = nullptr;
};

SumRing ring_for(const CongruenceSystem& system, i64 cap, unsigned workers) {
    if (system.modulus() >= 1)
        return SumRing::modular(system.modulus());
    i64 maxpos = 0, maxneg = 0;
    for (i64 w : system.weights()) {
        maxpos = std::max(maxpos, w);
        maxneg = std::max(maxneg, -w);
    }
    const i64 lo = -cap * maxneg;
    const i64 hi = cap * maxpos;
    const SumRing ring = SumRing::window(lo, hi);
    // snapshot stack is (cap+1) bitsets per worker
    const double bytes = static_cast<double>(ring.words()) * 8.0 *
                         (static_cast<double>(cap) + 2.0) *
                         static_cast<double>(std::max(1u, workers));
    if (bytes > 1.5e9)
        throw resource_error("hilbert_basis: sum window too large for the "
                             "given weights and degree cap");
    return ring;
}

} // namespace

// ---------------------------------------------------------------------------
// CongruenceSystem / ExponentVector
// ---------------------------------------------------------------------------

CongruenceSystem::CongruenceSystem(std::vector<std::int64_t> weights, std::int64_t modulus)
    : weights_(std::move(weights)), modulus_(modulus) {
    if (weights_.empty())
        throw parameter_error("CongruenceSystem: weight list must be nonempty");
    if (modulus_ < 0)
        throw parameter_error("CongruenceSystem: modulus must be nonnegative");
    if (modulus_ >= 1) {
        reduced_.reserve(weights_.size());
        for (i64 w : weights_)
            reduced_.push_back(reduce_mod(w, modulus_));
    } else {
        reduced_ = weights_;
    }
}

bool CongruenceSystem::is_kac() const {
    if (modulus_ < 2 || static_cast<i64>(weights_.size()) != modulus_ - 1)
        return false;
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] != static_cast<i64>(i) + 1)
            return false;
    return true;
}

std::int64_t CongruenceSystem::default_degree_cap() const {
    if (modulus_ >= 1)
        return modulus_;
    i64 maxabs = 0;
    bool has_pos = false, has_neg = false;
    for (i64 w : weights_) {
        maxabs = std::max(maxabs, w < 0 ? -w : w);
        has_pos = has_pos || w > 0;
        has_neg = has_neg || w < 0;
    }
    // floor of 2 when both signs occur: the pair generators x_w x_{-w}
    // have degree 2, above 2 max|w| - 1 when max|w| = 1
    return std::max<i64>(2 * maxabs - 1, has_pos && has_neg ? 2 : 1);
}

ExponentVector::ExponentVector(std::vector<std::int64_t> exponents)
    : exponents_(std::move(exponents)), degree_(0) {
    for (i64 a : exponents_) {
        if (a < 0)
            throw parameter_error("ExponentVector: exponents must be nonnegative");
        degree_ += a;
    }
}

bool canonical_less(const ExponentVector& a, const ExponentVector& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return a.exponents() < b.exponents();
}

std::size_t HilbertBasis::count_in_degree(std::int64_t k) const {
    const auto it = counts_by_degree.find(k);
    return it == counts_by_degree.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// Membership and indecomposability
// ---------------------------------------------------------------------------

bool is_solution(const CongruenceSystem& system, const ExponentVector& v) {
    if (v.size() != system.rank())
        throw dimension_error("is_solution: vector length does not match rank");
    if (system.modulus() >= 1) {
        const i64 n = system.modulus();
        i64 acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const __int128 term = static_cast<__int128>(reduce_mod(v[i], n)) *
                                  system.reduced_weights()[i];
            acc = reduce_mod(acc + static_cast<i64>(term % n), n);
        }
        return acc == 0;
    }
    __int128 acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        acc += static_cast<__int128>(system.weights()[i]) * v[i];
    return acc == 0;
}

bool is_indecomposable(const CongruenceSystem& system, const ExponentVector& v) {
    if (v.size() != system.rank())
        throw dimension_error("is_indecomposable: vector length does not match rank");
    if (v.is_zero())
        throw domain_error("is_indecomposable: the zero vector is not in the domain");
    if (!is_solution(system, v))
        throw domain_error("is_indecomposable: vector is not a solution");

    SumRing ring = SumRing::modular(1);
    if (system.modulus() >= 1) {
        ring = SumRing::modular(system.modulus());
    } else {
        i64 lo = 0, hi = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const i64 c = system.weights()[i] * v[i];
            if (c > 0)
                hi += c;
            else
                lo += c;
        }
        ring = SumRing::window(lo, hi);
    }

    // Feed the copies of v through the proper-subset-sum update; v is
    // decomposable exactly when a proper nonempty sub-multiset reaches 0.
    std::vector<u64> psums = ring.make();
    std::vector<u64> scratch = ring.make();
    i64 total = 0;
    i64 m = 0;
    const i64 n = system.modulus();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const i64 e = system.reduced_weights()[i];
        for (i64 c = 0; c < v[i]; ++c) {
            scratch = psums;
            if (m > 0) {
                ring.set(scratch, 0);
                ring.set(psums, total);
            }
            ring.or_shifted(psums, scratch, e);
            total = n > 0 ? reduce_mod(total + e, n) : total + e;
            ++m;
        }
    }
    return !ring.test_zero(psums);
}

// ---------------------------------------------------------------------------
// Pruned enumeration
// ---------------------------------------------------------------------------

HilbertBasis hilbert_basis(const CongruenceSystem& system,
                           std::optional<std::int64_t> degree_cap,
                           const SearchOptions& options) {
    if (degree_cap && *degree_cap < 1)
        throw parameter_error("hilbert_basis: degree cap must be at least 1");
    const i64 cap = degree_cap.value_or(system.default_degree_cap());
    const std::size_t r = system.rank();

    // Zero-weight coordinates split off as unit vectors; no other basis
    // element can touch them without dominating the unit.
    std::vector<std::size_t> unit_coords, search_coords;
    for (std::size_t i = 0; i < r; ++i) {
        if (system.reduced_weights()[i] == 0)
            unit_coords.push_back(i);
        else
            search_coords.push_back(i);
    }
    if (system.modulus() == 0) {
        std::sort(search_coords.begin(), search_coords.end(),
                  [&](std::size_t a, std::size_t b) {
                      const i64 wa = system.weights()[a], wb = system.weights()[b];
                      const i64 ma = wa < 0 ? -wa : wa, mb = wb < 0 ? -wb : wb;
                      if (ma != mb)
                          return ma > mb; // large magnitudes first
                      if (wa != wb)
                          return wa < wb; // negative before positive
                      return a < b;
                  });
    }

    std::vector<ExponentVector> elements;
    for (std::size_t i : unit_coords) {
        std::vector<i64> e(r, 0);
        e[i] = 1;
        elements.emplace_back(std::move(e));
    }

    bool searchable = !search_coords.empty();
    if (searchable && system.modulus() == 0) {
        bool has_pos = false, has_neg = false;
        for (std::size_t i : search_coords) {
            has_pos = has_pos || system.weights()[i] > 0;
            has_neg = has_neg || system.weights()[i] < 0;
        }
        searchable = has_pos && has_neg; // otherwise only the zero solution
    }

    if (searchable) {
        std::vector<i64> internal_w;
        internal_w.reserve(search_coords.size());
        for (std::size_t i : search_coords)
            internal_w.push_back(system.reduced_weights()[i]);

        const unsigned workers = std::max(1u, options.workers);
        const SumRing ring = ring_for(system, cap, workers);
        std::atomic<u64> counter{0};
        std::vector<std::vector<RawVector>> found(workers);

        if (workers == 1) {
            BasisSearch search(internal_w, system.modulus(), cap, ring, counter,
                               options.work_budget);
            search.run(0, 1, found[0]);
        } else {
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> threads;
            threads.reserve(workers);
            for (unsigned t = 0; t < workers; ++t) {
                threads.emplace_back([&, t] {
                    try {
                        BasisSearch search(internal_w, system.modulus(), cap, ring,
                                           counter, options.work_budget);
                        search.run(t, workers, found[t]);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
            for (auto& th : threads)
                th.join();
            for (unsigned t = 0; t < workers; ++t)
                if (errors[t])
                    std::rethrow_exception(errors[t]);
        }

        for (const auto& bucket : found) {
            for (const RawVector& rv : bucket) {
                std::vector<i64> full(r, 0);
                for (std::size_t j = 0; j < search_coords.size(); ++j)
                    full[search_coords[j]] = rv.expo[j];
                elements.emplace_back(std::move(full));
            }
        }
    }

    std::sort(elements.begin(), elements.end(), canonical_less);
    assert(std::adjacent_find(elements.begin(), elements.end()) == elements.end());

    HilbertBasis basis{system, std::move(elements), cap, {}};
    for (const ExponentVector& e : basis.elements)
        ++basis.counts_by_degree[e.degree()];
    return basis;
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

namespace {

// Enumerates every exponent vector of degree <= cap in coordinate order,
// keeping the nonzero solutions.
void enumerate_solutions(const CongruenceSystem& system, i64 cap,
                         std::atomic<u64>& counter, u64 budget,
                         std::vector<RawVector>& out) {
    const std::size_t r = system.rank();
    std::vector<i64> expo(r, 0);
    const i64 n = system.modulus();

    // weighted partial sums maintained per coordinate
    std::vector<__int128> partial(r + 1, 0);

    std::size_t coord = 0;
    i64 used = 0;
    for (;;) {
        if (coord == r) {
            tick(counter, budget, "hilbert_basis_bruteforce");
            const __int128 sum = partial[r];
            const bool solves = n >= 1 ? (reduce_mod(static_cast<i64>(sum % n), n) == 0)
                                       : sum == 0;
            if (solves && used > 0)
                out.push_back(RawVector{expo, used});
            // backtrack to the deepest coordinate that can still grow
            for (;;) {
                if (coord == 0)
                    return;
                --coord;
                if (used < cap)
                    break;
                used -= expo[coord];
                expo[coord] = 0;
            }
            ++expo[coord];
            ++used;
            partial[coord + 1] =
                partial[coord] + static_cast<__int128>(system.weights()[coord]) * expo[coord];
            ++coord;
            continue;
        }
        // exponent 0 selected for this coordinate on first entry
        partial[coord + 1] = partial[coord];
        expo[coord] = 0;
        ++coord;
    }
}

bool dominates(const RawVector& small, const RawVector& big) {
    for (std::size_t i = 0; i < small.expo.size(); ++i)
        if (small.expo[i] > big.expo[i])
            return false;
    return true;
}

} // namespace

HilbertBasis hilbert_basis_bruteforce(const CongruenceSystem& system,
                                      std::int64_t degree_cap,
                                      std::uint64_t work_budget) {
    if (degree_cap < 1)
        throw parameter_error("hilbert_basis_bruteforce: degree cap must be at least 1");
    const std::size_t r = system.rank();

    const mpz_class vector_count =
        binomial(static_cast<i64>(r) + degree_cap, static_cast<i64>(r));
    if (vector_count > work_budget)
        throw resource_error("hilbert_basis_bruteforce: enumeration of " +
                             vector_count.get_str() + " vectors exceeds the work budget");

    std::atomic<u64> counter{0};
    std::vector<RawVector> solutions;
    enumerate_solutions(system, degree_cap, counter, work_budget, solutions);

    std::sort(solutions.begin(), solutions.end(),
              [](const RawVector& a, const RawVector& b) {
                  if (a.degree != b.degree)
                      return a.degree < b.degree;
                  return a.expo < b.expo;
              });

    // A solution is decomposable exactly when some smaller solution fits
    // under it componentwise; scan in degree order so small generators are
    // tried first.
    std::vector<ExponentVector> elements;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        bool decomposable = false;
        for (std::size_t j = 0; j < i && solutions[j].degree < solutions[i].degree; ++j) {
            if (dominates(solutions[j], solutions[i])) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable)
            elements.emplace_back(solutions[i].expo);
    }

    HilbertBasis basis{system, std::move(elements), degree_cap, {}};
    for (const ExponentVector& e : basis.elements)
        ++basis.counts_by_degree[e.degree()];
    return basis;
}

// ---------------------------------------------------------------------------
// Named systems and counting helpers
// ---------------------------------------------------------------------------

CongruenceSystem kac_system(std::int64_t n) {
    if (n < 2)
        throw parameter_error("kac_system: n must be at least 2");
    std::vector<i64> weights;
    weights.reserve(static_cast<std::size_t>(n - 1));
    for (i64 w = 1; w <= n - 1; ++w)
        weights.push_back(w);
    return CongruenceSystem(std::move(weights), n);
}

std::size_t indecomposables_in_degree(const CongruenceSystem& system, std::int64_t k,
                                      const SearchOptions& options) {
    if (k < 1)
        throw parameter_error("indecomposables_in_degree: k must be at least 1");
    const i64 cap = std::max(system.default_degree_cap(), k);
    return hilbert_basis(system, cap, options).count_in_degree(k);
}

bool has_zero_subset_sum(const std::vector<std::int64_t>& residues, std::int64_t n) {
    if (n < 1)
        throw parameter_error("has_zero_subset_sum: modulus must be positive");
    if (residues.empty())
        throw parameter_error("has_zero_subset_sum: residue multiset must be nonempty");
    const SumRing ring = SumRing::modular(n);
    std::vector<u64> reached = ring.make();
    std::vector<u64> scratch = ring.make();
    for (i64 e : residues) {
        scratch = reached;
        ring.set(scratch, 0);
        ring.or_shifted(reached, scratch, e);
        if (ring.test_zero(reached))
            return true;
    }
    return false;
}

namespace {

struct ZeroSumFreeSearch {
    i64 n;
    SumRing ring;
    std::atomic<u64>* counter;
    u64 budget;
    std::vector<i64> current, best;
    std::vector<u64> scratch;

    void dfs(i64 from, std::vector<u64>& sums) {
        if (current.size() > best.size())
            best = current;
        for (i64 v = from; v <= n - 1; ++v) {
            // even taking every remaining element cannot beat the best
            if (current.size() + 1 + static_cast<std::size_t>(n - 1 - v) <= best.size())
                break;
            tick(*counter, budget, "max_zero_sum_free");
            std::vector<u64> next = sums;
            scratch = sums;
            ring.set(scratch, 0);
            ring.or_shifted(next, scratch, v);
            if (ring.test_zero(next))
                continue;
            current.push_back(v);
            dfs(v + 1, next);
            current.pop_back();
        }
    }
};

ZeroSumFreeSearch make_zsf_search(i64 n, std::atomic<u64>& counter, u64 budget) {
    return ZeroSumFreeSearch{n, SumRing::modular(n), &counter, budget, {}, {}, {}};
}

} // namespace

std::size_t max_zero_sum_free(std::int64_t n, std::uint64_t work_budget) {
    return verify_olson(n, work_budget).max_size;
}

OlsonReport verify_olson(std::int64_t n, std::uint64_t work_budget) {
    if (n < 2)
        throw parameter_error("max_zero_sum_free: n must be at least 2");
    std::atomic<u64> counter{0};
    ZeroSumFreeSearch search = make_zsf_search(n, counter, work_budget);
    std::vector<u64> sums = search.ring.make();
    search.dfs(1, sums);

    OlsonReport report;
    report.n = n;
    report.max_size = search.best.size();
    report.witness = search.best;
    report.threshold = 3.0 * std::sqrt(static_cast<double>(n));
    // max < 3 sqrt(n)  <=>  max^2 < 9n, checked in exact integers
    const i64 m = static_cast<i64>(report.max_size);
    report.pass = m * m < 9 * n;
    return report;
}

} // namespace invar
