#ifndef INVAR_WEYL_HPP
#define INVAR_WEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "invar/errors.hpp"

namespace invar {

using RationalVector = std::vector<mpq_class>;
using RationalMatrix = std::vector<RationalVector>;

/// Positive roots, a Weyl-invariant inner product, and the half-sum delta,
/// enough to evaluate the Weyl dimension formula.  Construction validates
/// that the gram matrix is symmetric and positive-definite on the span of
/// the roots and that (delta, alpha) > 0 for every positive root.
class RootSystemData {
public:
    RootSystemData(std::size_t rank, std::vector<RationalVector> positive_roots,
                   RationalMatrix gram,
                   std::vector<RationalVector> fundamental_weights = {},
                   std::string name = "custom");

    /// Built-in systems: "A1", "A2", "B2", "G2".
    static const RootSystemData& preset(const std::string& name);
    static std::vector<std::string> preset_names();

    std::size_t rank() const { return rank_; }
    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<RationalVector>& positive_roots() const { return roots_; }
    const RationalVector& delta() const { return delta_; }
    const std::string& name() const { return name_; }
    bool has_fundamental_weights() const { return !fundamental_.empty(); }
    const std::vector<RationalVector>& fundamental_weights() const { return fundamental_; }

    mpq_class inner(const RationalVector& x, const RationalVector& y) const;

    /// Weight with the given coordinates in the fundamental-weight basis.
    RationalVector weight_from_fundamental(const std::vector<mpq_class>& coords) const;

    bool is_dominant(const RationalVector& lambda) const;

private:
    std::size_t rank_;
    std::size_t ambient_;
    std::vector<RationalVector> roots_;
    RationalMatrix gram_;
    RationalVector delta_;
    std::vector<RationalVector> fundamental_;
    std::string name_;
};

/// dim V_{n lambda} by the Weyl formula
///   prod(n lambda + delta, alpha) / prod(delta, alpha),
/// evaluated in exact rationals; the result is checked to be a positive
/// integer (a non-integral value means the root data is invalid).
mpz_class weyl_dimension(const RootSystemData& rs, const RationalVector& lambda,
                         std::int64_t n);

/// The map n -> dim V_{n lambda} as a polynomial with exact rational
/// coefficients; degree = #{alpha > 0 : (lambda, alpha) != 0}.
struct DimensionPolynomial {
    std::vector<mpq_class> coeffs; // coeffs[k] multiplies n^k
    std::size_t degree() const;
    mpz_class eval(std::int64_t n) const; // checked positive integer
};

DimensionPolynomial dimension_polynomial(const RootSystemData& rs,
                                         const RationalVector& lambda);

struct GrowthExponent {
    std::size_t positive_roots = 0; // r
    std::size_t rank = 0;           // dim T
    std::size_t group_dim = 0;      // 2r + rank
};

GrowthExponent growth_exponent(const RootSystemData& rs);

/// Loads {rank, positive_roots: [[..]], gram: [[..]]} (entries integers or
/// "p/q" strings; optional fundamental_weights, name); delta is recomputed.
RootSystemData root_system_from_json_text(const std::string& text);

} // namespace invar

#endif
