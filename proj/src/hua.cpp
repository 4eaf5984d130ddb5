#include "kacpoly/hua.hpp"

#include <algorithm>

#include "kacpoly/error.hpp"
#include "kacpoly/partition.hpp"

namespace kacpoly {

namespace {

struct PartitionData {
    std::vector<int> conjugate;
    RationalFunction inv_b;  // 1 / b_lambda(1/q)
};

std::vector<PartitionData> partition_data(std::int64_t n) {
    std::vector<PartitionData> out;
    for (const auto& p : partitions_of(static_cast<int>(n)))
        out.push_back({p.conjugate().parts(), b_of(p).inverse()});
    return out;
}

std::int64_t conj_pairing(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
    return s;
}

Poly q_minus_one() { return Poly::from_integers({-1, 1}); }

} // namespace

std::vector<HuaTerm> hua_terms(const Quiver& q, const DimVector& e, const std::vector<std::size_t>& varying) {
    check_dim(q, e);
    const std::size_t nv = q.vertex_count();
    std::vector<std::vector<PartitionData>> data;
    for (auto v : e.entries) data.push_back(partition_data(v));

    struct ArrowRef {
        std::size_t s, t;
        std::int64_t mult;
        std::ptrdiff_t slot;  // index into linear, or -1 for a fixed arrow
    };
    std::vector<ArrowRef> arrows;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        auto it = std::find(varying.begin(), varying.end(), a);
        const std::ptrdiff_t slot = it == varying.end() ? -1 : it - varying.begin();
        arrows.push_back({q.source_index(a), q.target_index(a), q.arrows()[a].multiplicity, slot});
    }

    std::map<std::vector<std::int64_t>, RationalFunction> grouped;
    std::vector<std::size_t> choice(nv, 0);
    for (;;) {
        std::int64_t exponent = 0;
        std::vector<std::int64_t> linear(varying.size(), 0);
        RationalFunction value(1L);
        for (std::size_t i = 0; i < nv; ++i) {
            const auto& pd = data[i][choice[i]];
            exponent -= conj_pairing(pd.conjugate, pd.conjugate);
            value *= pd.inv_b;
        }
        for (const auto& a : arrows) {
            const std::int64_t pr = conj_pairing(data[a.s][choice[a.s]].conjugate, data[a.t][choice[a.t]].conjugate);
            if (a.slot < 0)
                exponent += a.mult * pr;
            else
                linear[static_cast<std::size_t>(a.slot)] += a.mult * pr;
        }
        auto [it, fresh] = grouped.try_emplace(linear, value.shift(exponent));
        if (!fresh) it->second += value.shift(exponent);

        std::size_t i = 0;
        while (i < nv && ++choice[i] == data[i].size()) choice[i++] = 0;
        if (i == nv) break;
    }

    std::vector<HuaTerm> out;
    for (auto& [linear, value] : grouped)
        if (!value.is_zero()) out.push_back({linear, std::move(value)});
    return out;
}

TruncatedSeries<RationalFunction> hua_P(const Quiver& q, const DimVector& box) {
    return hua_P_over<RationalFunction>(q, box, {}, [](const std::vector<std::int64_t>&, const RationalFunction& v) {
        return v;
    });
}

RationalFunction hua_H(const TruncatedSeries<RationalFunction>& P, const DimVector& d) {
    if (d.is_zero()) throw InputError("hua_H: zero dimension vector");
    const std::size_t idx = P.index_of(d);
    const auto lg = series_log(P);
    return lg.at(idx) * RationalFunction(static_cast<long>(gcd_all(d.entries)));
}

namespace {

KacResult finish(const Quiver& q, const DimVector& d, const RationalFunction& value, KacPath path, bool checked) {
    Poly poly;
    try {
        poly = value.to_polynomial();
    } catch (const NotPolynomial&) {
        throw NotPolynomial("Kac computation for d = (" + d.to_string() + ") did not reduce to a polynomial: " +
                            value.to_string());
    }
    if (checked) check_kac_invariants(q, d, poly);
    return {q, d, std::move(poly), path};
}

} // namespace

KacResult kac_direct(const Quiver& q, const DimVector& d, bool checked) {
    check_dim(q, d);
    if (d.is_zero()) throw InputError("kac_direct: zero dimension vector");
    const auto lg = series_log(hua_P(q, d));
    return finish(q, d, kac_from_log(lg, d, RationalFunction(q_minus_one())), KacPath::moebius, checked);
}

KacResult kac_plethystic(const Quiver& q, const DimVector& d, bool checked) {
    check_dim(q, d);
    if (d.is_zero()) throw InputError("kac_plethystic: zero dimension vector");
    const auto value = kac_from_pleth_log(hua_P(q, d), d, RationalFunction(q_minus_one()));
    return finish(q, d, value, KacPath::plethystic, checked);
}

std::map<DimVector, Poly> kac_all(const Quiver& q, const DimVector& box) {
    const auto lg = series_log(hua_P(q, box));
    const RationalFunction qm1(q_minus_one());
    std::map<DimVector, Poly> out;
    for (std::size_t i = 1; i < lg.size(); ++i) {
        const DimVector e = lg.key(i);
        out.emplace(e, finish(q, e, kac_from_log(lg, e, qm1), KacPath::moebius, false).poly);
    }
    return out;
}

void check_kac_invariants(const Quiver& q, const DimVector& d, const Poly& poly) {
    if (poly.is_zero()) return;
    const std::string where = " for d = (" + d.to_string() + "): " + poly.to_string();
    if (!poly.is_integral()) throw InvariantViolation("non-integer coefficient" + where);
    for (const auto& c : poly.numerators())
        if (c < 0) throw InvariantViolation("negative coefficient" + where);
    if (poly.leading() != 1) throw InvariantViolation("not monic" + where);
    if (poly.degree() != degree_formula(q, d))
        throw InvariantViolation("degree " + std::to_string(poly.degree()) + " differs from 1 - <d,d> = " +
                                 std::to_string(degree_formula(q, d)) + where);
}

std::map<DimVector, Poly> counts_from_A(const Quiver& q, const DimVector& box, CountKind which) {
    const auto as = kac_all(q, box);
    TruncatedSeries<RationalFunction> a(box);
    for (const auto& [e, p] : as) a.set(e, RationalFunction(p));
    auto series = pleth_exp(a, true);
    if (which == CountKind::I) series = pleth_log(series, false);
    std::map<DimVector, Poly> out;
    for (std::size_t i = 1; i < series.size(); ++i) {
        try {
            out.emplace(series.key(i), series.at(i).to_polynomial());
        } catch (const NotPolynomial&) {
            throw NotPolynomial("count for d = (" + series.key(i).to_string() + ") is not a polynomial");
        }
    }
    return out;
}

} // namespace kacpoly
