#include "kacpoly/arith.hpp"

#include <algorithm>
#include <numeric>

#include "kacpoly/error.hpp"

namespace kacpoly {

int moebius(std::int64_t n) {
    if (n < 1) throw InputError("moebius: argument must be positive");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw InputError("divisors: argument must be positive");
    std::vector<std::int64_t> low, high;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::int64_t totient(std::int64_t n) {
    if (n < 1) throw InputError("totient: argument must be positive");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::int64_t gcd_all(const std::vector<std::int64_t>& values) {
    std::int64_t g = 0;
    for (auto v : values) g = std::gcd(g, v);
    return g;
}

} // namespace kacpoly
