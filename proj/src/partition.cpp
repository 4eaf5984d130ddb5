#include "kacpoly/partition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

#include "kacpoly/error.hpp"

namespace kacpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw InputError("partition parts must be positive");
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
        throw InputError("partition parts must be weakly decreasing");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i) ++conj[static_cast<std::size_t>(i)];
    return Partition(std::move(conj));
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::vector<int> Partition::multiplicities() const {
    if (parts_.empty()) return {};
    std::vector<int> m(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p - 1)];
    return m;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void emit(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InputError("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit(n, n, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto block = partitions_of(k);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::int64_t pairing_by_multiplicities(const Partition& a, const Partition& b) {
    const auto ma = a.multiplicities();
    const auto mb = b.multiplicities();
    std::int64_t s = 0;
    for (std::size_t i = 0; i < ma.size(); ++i)
        for (std::size_t j = 0; j < mb.size(); ++j)
            s += static_cast<std::int64_t>(std::min(i, j) + 1) * ma[i] * mb[j];
    return s;
}

std::int64_t pairing(const Partition& a, const Partition& b) {
    const Partition ac = a.conjugate();
    const Partition bc = b.conjugate();
    const std::size_t n = std::min(ac.length(), bc.length());
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<std::int64_t>(ac.parts()[i]) * bc.parts()[i];
    assert(s == pairing_by_multiplicities(a, b));
    return s;
}

RationalFunction phi(int r) {
    if (r < 0) throw InputError("phi: negative index");
    Poly num(1L);
    for (int j = 1; j <= r; ++j) num *= Poly::q_power(j) - Poly(1L);
    return RationalFunction::reduce(num, Poly::q_power(static_cast<std::int64_t>(r) * (r + 1) / 2));
}

RationalFunction b_of(const Partition& lambda) {
    RationalFunction b(1L);
    for (int m : lambda.multiplicities())
        if (m > 0) b *= phi(m);
    assert(b == b_of_conjugate(lambda));
    return b;
}

RationalFunction b_of_conjugate(const Partition& lambda) {
    std::vector<int> lc = lambda.conjugate().parts();
    lc.push_back(0);
    RationalFunction b(1L);
    for (std::size_t i = 0; i + 1 < lc.size(); ++i) b *= phi(lc[i] - lc[i + 1]);
    return b;
}

} // namespace kacpoly
