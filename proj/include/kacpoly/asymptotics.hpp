#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kacpoly/param.hpp"
#include "kacpoly/poly.hpp"
#include "kacpoly/quiver.hpp"

namespace kacpoly {

enum class LimitMode { componentwise, direction };

/// How the multiplicities go to infinity. Entries for non-varying arrows are
/// ignored throughout.
///
/// componentwise: `target` holds kInfinite on the arrows sent to infinity and
/// fixed values elsewhere. Needs a loop-free quiver unless
/// assume_direction_free is set.
///
/// direction: n = base + s * ray with s -> infinity.
struct LimitSpec {
    LimitMode mode = LimitMode::direction;
    MultVector target;
    MultVector base;
    MultVector ray;
    std::int64_t order = 10;
    bool assume_direction_free = false;

    static LimitSpec componentwise(MultVector target, std::int64_t order = 10, bool assume_direction_free = false);
    static LimitSpec direction(MultVector base, MultVector ray, std::int64_t order = 10);
    /// Every varying arrow to infinity together.
    static LimitSpec all_infinite(const Decomposition& dec, std::int64_t order = 10, bool assume_direction_free = false);
};

/// Power-series expansion N/Q at q = 0 with Q(0) != 0, coefficients 0..order.
std::vector<Integer> expand_series(const Poly& num, const Poly& den, std::int64_t order);

struct LimitResult {
    Poly numerator;    // limit = numerator / denominator, numerator(0) != 0
    Poly denominator;  // the decomposition's Q
    std::vector<std::size_t> survivors;  // group indices
    /// Renormalization q^{slope * s + offset} along n = base + s * ray.
    std::int64_t slope = 0;
    std::int64_t offset = 0;
    std::vector<Integer> coefficients;
};

/// Limit of A_n / q^{v(n)} where v(n) is the valuation of the surviving part.
/// Throws LimitError when the surviving part vanishes.
LimitResult limit_series(const Decomposition& dec, const LimitSpec& spec);

struct ReciprocalResult {
    Poly numerator;
    Poly denominator;  // reversed Q, constant term 1
    std::vector<std::size_t> survivors;
    std::vector<Integer> coefficients;
};

/// Limit of q^{deg A_n} A_n(1/q). Throws LimitError (no degree group) when no
/// group keeps a bounded reciprocal exponent and InvariantViolation when the
/// constant term is not 1.
ReciprocalResult reciprocal_limit(const Decomposition& dec, const LimitSpec& spec);

/// deg A_{Q_n, d} = 1 - <d,d> as an affine function of the varying arrows.
AffineExponent degree_exponent(const Decomposition& dec);

/// Predicted val(A_n / q^{v(n)} - limit) = slope * s + offset for large s.
struct RatePrediction {
    std::int64_t slope = 0;
    std::int64_t offset = 0;
    std::size_t group = 0;  // minimizing group
    std::int64_t at(std::int64_t s) const { return slope * s + offset; }
};

/// Throws LimitError when every group survives (the difference vanishes).
RatePrediction predicted_rate(const Decomposition& dec, const LimitSpec& spec);

/// The multiplicity vector at parameter s along the spec's path (componentwise
/// mode walks the diagonal of the infinite arrows).
MultVector path_point(const Decomposition& dec, const LimitSpec& spec, std::int64_t s);

/// val(A / q^{v} - limit) computed exactly; nullopt when the difference is 0.
std::optional<std::int64_t> measured_rate(const Poly& a, std::int64_t v, const LimitResult& limit);

/// Valuation of (a - prefix) modulo q^{prefix.size()}; nullopt when they agree
/// up to that order.
std::optional<std::int64_t> prefix_rate(const Poly& a, const std::vector<Integer>& prefix);

struct ValuationRecord {
    MultVector n;
    DimVector d;
    std::int64_t predicted_all = 0;
    std::int64_t predicted_supported = 0;
    std::int64_t actual = 0;
    bool match = false;  // actual == predicted_supported
    bool conventions_differ = false;
};

/// Every nonzero d <= d_box and n in {1..n_box}^arrows; zero polynomials are
/// skipped. Never asserts the conjecture.
std::vector<ValuationRecord> valuation_report(const Quiver& q, const DimVector& d_box, std::int64_t n_box,
                                              unsigned jobs = 1);

/// (1/|d|) sum_{e | gcd(d)} mu(e) (|d|/e)! / prod_i (d_i/e)!.
Integer witt_dim(const std::vector<std::int64_t>& d);

} // namespace kacpoly
