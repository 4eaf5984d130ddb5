#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "kacpoly/ratfunc.hpp"

namespace kacpoly {

/// Integer partition, parts weakly decreasing; the empty partition is the
/// unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    Partition conjugate() const;
    /// m_k: number of parts equal to k.
    int multiplicity(int k) const;
    /// m_1, m_2, ..., m_{largest part}.
    std::vector<int> multiplicities() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Partitions of n in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

/// Partitions of 0, 1, ..., n; each size block in the order of partitions_of.
std::vector<Partition> partitions_up_to(int n);

/// <a, b> = sum_i a'_i b'_i over conjugates.
std::int64_t pairing(const Partition& a, const Partition& b);

/// sum_{i,j} min(i, j) m_i(a) m_j(b); the defining form of the pairing.
std::int64_t pairing_by_multiplicities(const Partition& a, const Partition& b);

/// phi_r(1/q) = prod_{j=1..r} (1 - q^{-j}).
RationalFunction phi(int r);

/// b_lambda(1/q) = prod_k phi_{m_k}(1/q).
RationalFunction b_of(const Partition& lambda);

/// Same value built from conjugate differences lambda'_i - lambda'_{i+1}.
RationalFunction b_of_conjugate(const Partition& lambda);

} // namespace kacpoly
