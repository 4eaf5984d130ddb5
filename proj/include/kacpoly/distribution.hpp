#pragma once

#include <iosfwd>
#include <vector>

#include "kacpoly/poly.hpp"

namespace kacpoly {

enum class Parity { even, odd };

const char* parity_name(Parity p);

struct GraphPoint {
    Rational x;
    Rational y;
    friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

/// Renormalized coefficients of a / q^{val a}: the point for index j is
/// (j / (deg - val), a_j / max coefficient), restricted to j of the given
/// parity. A normalized degree of 0 puts the single point at x = 0.
struct CoeffGraph {
    Parity parity = Parity::even;
    std::vector<GraphPoint> points;
};

CoeffGraph coefficient_graph(const Poly& a, Parity parity);

struct Unimodality {
    bool unimodal = true;
    std::size_t peak_index = 0;  // position of the first maximum in the sequence
};

/// Weakly increasing then weakly decreasing.
Unimodality unimodality_check(const std::vector<Integer>& seq);
Unimodality unimodality_check(const Poly& a, Parity parity);

/// Header plus one row per point; rows follow the order of `graphs`.
void write_distribution_csv(std::ostream& os, const std::vector<CoeffGraph>& graphs);

} // namespace kacpoly
