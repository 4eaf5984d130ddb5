#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace kacpoly {

struct Arrow {
    std::string name;
    std::string source;
    std::string target;
    std::int64_t multiplicity = 1;

    bool is_loop() const noexcept { return source == target; }
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver with multiplicity-weighted arrows; loops allowed. Vertex and
/// arrow order is declaration order and fixes every vector layout below.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }

    std::size_t vertex_index(const std::string& v) const;
    std::size_t arrow_index(const std::string& name) const;
    std::size_t source_index(std::size_t arrow) const { return vertex_index(arrows_[arrow].source); }
    std::size_t target_index(std::size_t arrow) const { return vertex_index(arrows_[arrow].target); }
    bool has_loops() const noexcept;

    /// Same quiver with one arrow reversed.
    Quiver with_reversed_arrow(const std::string& name) const;

    /// Deterministic text form used for hashing and equality.
    std::string canonical_string() const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// Dimension vector in vertex declaration order.
struct DimVector {
    std::vector<std::int64_t> entries;

    std::int64_t total() const noexcept;
    bool is_zero() const noexcept;
    std::string to_string() const;  // "2,3"
    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

/// Marks an arrow multiplicity that is sent to infinity.
inline constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();

/// Arrow multiplicities n_alpha in arrow declaration order; kInfinite allowed
/// where a limit is meant.
struct MultVector {
    std::vector<std::int64_t> entries;
    friend bool operator==(const MultVector&, const MultVector&) = default;
};

void check_dim(const Quiver& q, const DimVector& d);
void check_mult(const Quiver& q, const MultVector& n);
DimVector dim_from_map(const Quiver& q, const std::map<std::string, std::int64_t>& values);

/// Euler form sum_i d_i e_i - sum_{a: i -> j} mult(a) d_i e_j.
std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// Scales each arrow's multiplicity by n_alpha.
Quiver multi_arrow(const Quiver& q, const MultVector& n);

/// 1 - <d, d>.
std::int64_t degree_formula(const Quiver& q, const DimVector& d);

/// Vertices carrying at least one loop of nonzero multiplicity.
std::vector<std::size_t> imaginary_vertices(const Quiver& q);

struct ValuationPrediction {
    std::int64_t all_imaginary;       // sum over every imaginary vertex
    std::int64_t supported_imaginary; // sum restricted to vertices with d_i > 0
};

/// sum_{i imaginary} (1 + d_i (loops(i) - 1)), in both summation conventions.
ValuationPrediction predicted_valuation(const Quiver& q, const DimVector& d);

namespace families {

/// Two vertices, r arrows 1 -> 2 carried by one arrow "arrow" of multiplicity r.
Quiver kronecker(std::int64_t r);
/// One vertex with g loops carried by one loop "loop".
Quiver multiloop(std::int64_t g);
/// 1 -alpha-> 2 with loop beta at 2.
Quiver tennis_racket(std::int64_t n_alpha, std::int64_t n_beta);

} // namespace families

} // namespace kacpoly
