#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kacpoly/arith.hpp"
#include "kacpoly/error.hpp"
#include "kacpoly/quiver.hpp"

namespace kacpoly {

/// Coefficient contract for TruncatedSeries. adams(l) is the substitution
/// q -> q^l acting on the coefficient.
template <class C>
concept CoefficientRing = std::copyable<C> && std::equality_comparable<C> && std::constructible_from<C, long> &&
    requires(const C& a, const C& b, long n, std::int64_t l) {
        { a + b } -> std::convertible_to<C>;
        { a - b } -> std::convertible_to<C>;
        { a * b } -> std::convertible_to<C>;
        { -a } -> std::convertible_to<C>;
        { a.div_int(n) } -> std::convertible_to<C>;
        { a.adams(l) } -> std::convertible_to<C>;
        { a.is_zero() } -> std::convertible_to<bool>;
    };

/// Power series in z_1..z_k truncated to the box {e : 0 <= e <= box}.
///
/// Coefficients are stored densely in row-major order over the box; for
/// keys a, b with a + b inside the box, index(a + b) = index(a) + index(b).
template <CoefficientRing C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(DimVector box) : box_(std::move(box)) {
        for (auto b : box_.entries)
            if (b < 0) throw InputError("series box entries must be nonnegative");
        const std::size_t k = box_.entries.size();
        strides_.assign(k, 1);
        std::size_t size = 1;
        for (std::size_t i = k; i-- > 0;) {
            strides_[i] = size;
            size *= static_cast<std::size_t>(box_.entries[i] + 1);
        }
        coeffs_.assign(size, C(0L));
        keys_.resize(size);
        totals_.resize(size);
        for (std::size_t idx = 0; idx < size; ++idx) {
            std::vector<std::int64_t> key(k);
            std::size_t rest = idx;
            for (std::size_t i = 0; i < k; ++i) {
                key[i] = static_cast<std::int64_t>(rest / strides_[i]);
                rest %= strides_[i];
            }
            totals_[idx] = DimVector{key}.total();
            keys_[idx] = std::move(key);
        }
    }

    static TruncatedSeries one(DimVector box) {
        TruncatedSeries s(std::move(box));
        s.coeffs_[0] = C(1L);
        return s;
    }

    const DimVector& box() const noexcept { return box_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::int64_t total_degree() const noexcept { return box_.total(); }

    DimVector key(std::size_t idx) const { return DimVector{keys_[idx]}; }
    const std::vector<std::int64_t>& key_entries(std::size_t idx) const { return keys_[idx]; }
    std::int64_t key_total(std::size_t idx) const { return totals_[idx]; }

    bool contains(const DimVector& key) const {
        if (key.entries.size() != box_.entries.size()) return false;
        for (std::size_t i = 0; i < key.entries.size(); ++i)
            if (key.entries[i] < 0 || key.entries[i] > box_.entries[i]) return false;
        return true;
    }

    std::size_t index_of(const DimVector& key) const {
        if (!contains(key)) throw OutOfBox("key (" + key.to_string() + ") outside box (" + box_.to_string() + ")");
        std::size_t idx = 0;
        for (std::size_t i = 0; i < key.entries.size(); ++i)
            idx += static_cast<std::size_t>(key.entries[i]) * strides_[i];
        return idx;
    }

    const C& coefficient(const DimVector& key) const { return coeffs_[index_of(key)]; }
    const C& at(std::size_t idx) const { return coeffs_[idx]; }
    C& at(std::size_t idx) { return coeffs_[idx]; }
    void set(const DimVector& key, C value) { coeffs_[index_of(key)] = std::move(value); }
    const C& constant_term() const { return coeffs_[0]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return c.is_zero(); });
    }

    /// Whether key(a) + key(b) stays in the box.
    bool sum_fits(std::size_t a, std::size_t b) const {
        const auto& ka = keys_[a];
        const auto& kb = keys_[b];
        for (std::size_t i = 0; i < ka.size(); ++i)
            if (ka[i] + kb[i] > box_.entries[i]) return false;
        return true;
    }

    /// Whether key(a) <= key(b) componentwise.
    bool below(std::size_t a, std::size_t b) const {
        const auto& ka = keys_[a];
        const auto& kb = keys_[b];
        for (std::size_t i = 0; i < ka.size(); ++i)
            if (ka[i] > kb[i]) return false;
        return true;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_box(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!o.coeffs_[i].is_zero()) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_box(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!o.coeffs_[i].is_zero()) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.box_ == b.box_ && a.coeffs_ == b.coeffs_;
    }

    /// Coefficientwise product with a scalar.
    TruncatedSeries scaled(const C& c) const {
        TruncatedSeries out(box_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) out.coeffs_[i] = coeffs_[i] * c;
        return out;
    }

    void require_same_box(const TruncatedSeries& o) const {
        if (!(box_ == o.box_)) throw BoxMismatch("series boxes (" + box_.to_string() + ") and (" + o.box_.to_string() + ") differ");
    }

private:
    DimVector box_;
    std::vector<std::size_t> strides_;
    std::vector<C> coeffs_;
    std::vector<std::vector<std::int64_t>> keys_;
    std::vector<std::int64_t> totals_;
};

/// Cauchy product, keys outside the box discarded.
template <CoefficientRing C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
    a.require_same_box(b);
    TruncatedSeries<C> out(a.box());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.at(i).is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b.at(j).is_zero() || !a.sum_fits(i, j)) continue;
            C& slot = out.at(i + j);
            slot = slot + a.at(i) * b.at(j);
        }
    }
    return out;
}

/// log f for f(0) = 1.
///
/// Uses the Euler-operator identity E(log f) * f = E f with E z^e = |e| z^e,
/// which gives each coefficient from lower ones in one pass; the result equals
/// the Mercator sum -sum_{i=1}^{|box|} (1 - f)^i / i.
template <CoefficientRing C>
TruncatedSeries<C> series_log(const TruncatedSeries<C>& f) {
    if (!(f.constant_term() == C(1L))) throw BadConstantTerm("series_log: constant term must be 1");
    TruncatedSeries<C> g(f.box());
    for (std::size_t e = 1; e < f.size(); ++e) {
        // sum over 0 < e' < e of |e'| g_{e'} f_{e - e'}, grouped by |e'|.
        std::vector<C> by_degree(static_cast<std::size_t>(f.key_total(e)), C(0L));
        bool any = false;
        for (std::size_t ep = 1; ep < e; ++ep) {
            if (g.at(ep).is_zero() || !f.below(ep, e)) continue;
            const C& fc = f.at(e - ep);
            if (fc.is_zero()) continue;
            C& slot = by_degree[static_cast<std::size_t>(f.key_total(ep))];
            slot = slot + g.at(ep) * fc;
            any = true;
        }
        C acc(0L);
        if (any) {
            for (std::size_t k = 1; k < by_degree.size(); ++k)
                if (!by_degree[k].is_zero()) acc = acc + by_degree[k] * C(static_cast<long>(k));
            acc = acc.div_int(static_cast<long>(f.key_total(e)));
        }
        g.at(e) = f.at(e) - acc;
    }
    return g;
}

/// exp f for f(0) = 0, via E(exp f) = (E f) exp f.
template <CoefficientRing C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& f) {
    if (!f.constant_term().is_zero()) throw BadConstantTerm("series_exp: constant term must be 0");
    TruncatedSeries<C> g = TruncatedSeries<C>::one(f.box());
    for (std::size_t e = 1; e < f.size(); ++e) {
        std::vector<C> by_degree(static_cast<std::size_t>(f.key_total(e)) + 1, C(0L));
        bool any = false;
        for (std::size_t ep = 1; ep <= e; ++ep) {
            if (f.at(ep).is_zero() || !f.below(ep, e)) continue;
            const C& gc = g.at(e - ep);
            if (gc.is_zero()) continue;
            C& slot = by_degree[static_cast<std::size_t>(f.key_total(ep))];
            slot = slot + f.at(ep) * gc;
            any = true;
        }
        if (!any) continue;
        C acc(0L);
        for (std::size_t k = 1; k < by_degree.size(); ++k)
            if (!by_degree[k].is_zero()) acc = acc + by_degree[k] * C(static_cast<long>(k));
        g.at(e) = acc.div_int(static_cast<long>(f.key_total(e)));
    }
    return g;
}

/// psi_l: z_i -> z_i^l, and q -> q^l inside coefficients when include_q.
template <CoefficientRing C>
TruncatedSeries<C> adams(const TruncatedSeries<C>& f, std::int64_t l, bool include_q) {
    if (l < 1) throw InputError("adams: l must be positive");
    TruncatedSeries<C> out(f.box());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.at(i).is_zero()) continue;
        DimVector k = f.key(i);
        for (auto& v : k.entries) v *= l;
        if (!out.contains(k)) continue;
        out.set(k, include_q ? f.at(i).adams(l) : f.at(i));
    }
    return out;
}

/// Largest l for which psi_l keeps some nonconstant key inside the box.
inline std::int64_t adams_range(const DimVector& box) {
    std::int64_t m = 0;
    for (auto b : box.entries) m = std::max(m, b);
    return m;
}

/// Log(f) = sum_{l >= 1} mu(l)/l psi_l(log f).
template <CoefficientRing C>
TruncatedSeries<C> pleth_log(const TruncatedSeries<C>& f, bool include_q) {
    const TruncatedSeries<C> lg = series_log(f);
    TruncatedSeries<C> out(f.box());
    for (std::int64_t l = 1; l <= adams_range(f.box()); ++l) {
        const int mu = moebius(l);
        if (mu == 0) continue;
        TruncatedSeries<C> term = adams(lg, l, include_q);
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term.at(i).is_zero()) continue;
            C c = term.at(i).div_int(static_cast<long>(l));
            out.at(i) = mu > 0 ? out.at(i) + c : out.at(i) - c;
        }
    }
    return out;
}

/// Exp(f) = exp(sum_{l >= 1} psi_l(f) / l).
template <CoefficientRing C>
TruncatedSeries<C> pleth_exp(const TruncatedSeries<C>& f, bool include_q) {
    if (!f.constant_term().is_zero()) throw BadConstantTerm("pleth_exp: constant term must be 0");
    TruncatedSeries<C> sum(f.box());
    for (std::int64_t l = 1; l <= adams_range(f.box()); ++l) {
        TruncatedSeries<C> term = adams(f, l, include_q);
        for (std::size_t i = 0; i < term.size(); ++i)
            if (!term.at(i).is_zero()) sum.at(i) = sum.at(i) + term.at(i).div_int(static_cast<long>(l));
    }
    return series_exp(sum);
}

} // namespace kacpoly
