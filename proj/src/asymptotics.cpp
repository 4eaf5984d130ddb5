#include "kacpoly/asymptotics.hpp"

#include <algorithm>
#include <limits>

#include "kacpoly/error.hpp"
#include "kacpoly/hua.hpp"
#include "kacpoly/parallel.hpp"

namespace kacpoly {

LimitSpec LimitSpec::componentwise(MultVector target, std::int64_t order, bool assume_direction_free) {
    LimitSpec s;
    s.mode = LimitMode::componentwise;
    s.target = std::move(target);
    s.order = order;
    s.assume_direction_free = assume_direction_free;
    return s;
}

LimitSpec LimitSpec::direction(MultVector base, MultVector ray, std::int64_t order) {
    LimitSpec s;
    s.mode = LimitMode::direction;
    s.base = std::move(base);
    s.ray = std::move(ray);
    s.order = order;
    return s;
}

LimitSpec LimitSpec::all_infinite(const Decomposition& dec, std::int64_t order, bool assume_direction_free) {
    MultVector t{std::vector<std::int64_t>(dec.quiver.arrow_count(), 1)};
    for (const auto& name : dec.varying) t.entries[dec.quiver.arrow_index(name)] = kInfinite;
    return componentwise(std::move(t), order, assume_direction_free);
}

std::vector<Integer> expand_series(const Poly& num, const Poly& den, std::int64_t order) {
    if (den.constant_term() == 0) throw InputError("series expansion needs a denominator with nonzero constant term");
    if (order < 0) throw InputError("series order must be nonnegative");
    const auto n = static_cast<std::size_t>(order) + 1;
    const Rational c0 = den.constant_term();
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = num.coefficient(static_cast<std::int64_t>(k));
        const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max<std::int64_t>(den.degree(), 0)));
        for (std::size_t i = 1; i <= top; ++i) acc -= den.coefficient(static_cast<std::int64_t>(i)) * out[k - i];
        out[k] = acc / c0;
    }
    std::vector<Integer> ints;
    for (const auto& r : out) {
        if (r.get_den() != 1) throw InvariantViolation("limit series has a non-integer coefficient " + r.get_str());
        ints.emplace_back(r.get_num());
    }
    return ints;
}

namespace {

struct Path {
    MultVector base;
    MultVector ray;
    std::vector<std::size_t> infinite;  // arrow indices, componentwise mode only
};

bool is_varying(const Decomposition& dec, std::size_t arrow) {
    const auto& name = dec.quiver.arrows()[arrow].name;
    return std::find(dec.varying.begin(), dec.varying.end(), name) != dec.varying.end();
}

Path resolve(const Decomposition& dec, const LimitSpec& spec) {
    const Quiver& q = dec.quiver;
    Path p;
    p.base.entries.assign(q.arrow_count(), 0);
    p.ray.entries.assign(q.arrow_count(), 0);
    if (spec.mode == LimitMode::componentwise) {
        if (spec.target.entries.size() != q.arrow_count())
            throw KeyMismatch("limit target must have one entry per arrow");
        if (q.has_loops() && !spec.assume_direction_free)
            throw InputError("componentwise limits on a quiver with loops are conjectural; pick a direction or pass "
                             "the direction-independence acknowledgment");
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            if (!is_varying(dec, a)) continue;
            const std::int64_t t = spec.target.entries[a];
            if (t == kInfinite) {
                p.ray.entries[a] = 1;
                p.infinite.push_back(a);
            } else {
                if (t < 0) throw InputError("limit target entries must be nonnegative");
                p.base.entries[a] = t;
            }
        }
        if (p.infinite.empty()) throw InputError("limit target sends no varying arrow to infinity");
        return p;
    }
    if (spec.base.entries.size() != q.arrow_count() || spec.ray.entries.size() != q.arrow_count())
        throw KeyMismatch("limit base and ray must have one entry per arrow");
    bool moving = false;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (!is_varying(dec, a)) continue;
        if (spec.base.entries[a] < 0 || spec.base.entries[a] == kInfinite || spec.ray.entries[a] < 0 ||
            spec.ray.entries[a] == kInfinite)
            throw InputError("limit base and ray entries must be finite and nonnegative");
        p.base.entries[a] = spec.base.entries[a];
        p.ray.entries[a] = spec.ray.entries[a];
        moving = moving || spec.ray.entries[a] > 0;
    }
    if (!moving) throw InputError("limit ray is zero on every varying arrow");
    return p;
}

std::int64_t dot(const Quiver& q, const AffineExponent& e, const MultVector& v) {
    std::int64_t s = 0;
    for (const auto& [name, c] : e.linear) s += c * v.entries[q.arrow_index(name)];
    return s;
}

// a_j = l_j(base), b_j = L_j . ray for an exponent family.
struct Line {
    std::int64_t a;
    std::int64_t b;
};

Line along(const Quiver& q, const AffineExponent& e, const Path& p) {
    return {e.constant + dot(q, e, p.base), dot(q, e, p.ray)};
}

std::vector<std::int64_t> restricted(const Quiver& q, const AffineExponent& e, const std::vector<std::size_t>& arrows) {
    std::vector<std::int64_t> v;
    for (std::size_t a : arrows) v.push_back(e.linear_coefficient(q.arrows()[a].name));
    return v;
}

// Survivors of the plain limit: minimal slope along the path, with the extra
// componentwise requirement that their restricted linear part is the
// elementwise minimum.
std::vector<std::size_t> limit_survivors(const Decomposition& dec, const Path& p, const std::vector<Line>& lines) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& l : lines) best = std::min(best, l.b);
    std::vector<std::size_t> J;
    for (std::size_t j = 0; j < lines.size(); ++j)
        if (lines[j].b == best) J.push_back(j);
    if (!p.infinite.empty()) {
        std::vector<std::int64_t> m;
        for (std::size_t j = 0; j < dec.groups.size(); ++j) {
            auto r = restricted(dec.quiver, dec.groups[j].exponent, p.infinite);
            if (m.empty())
                m = r;
            else
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], r[i]);
        }
        for (std::size_t j : J)
            if (restricted(dec.quiver, dec.groups[j].exponent, p.infinite) != m)
                throw LimitError("no group attains the componentwise minimal exponent; the limit depends on the "
                                 "direction");
    }
    return J;
}

// sum_j q^{a_j} P_j as q^{shift} * N with N(0) != 0.
std::pair<Poly, std::int64_t> laurent_sum(const std::vector<std::pair<std::int64_t, const Poly*>>& parts) {
    std::int64_t m = std::numeric_limits<std::int64_t>::max();
    for (const auto& [a, p] : parts) m = std::min(m, a);
    Poly s;
    for (const auto& [a, p] : parts) s += p->shift(a - m);
    if (s.is_zero()) return {s, 0};
    const std::int64_t v = s.valuation();
    return {s.shift(-v), m + v};
}

} // namespace

MultVector path_point(const Decomposition& dec, const LimitSpec& spec, std::int64_t s) {
    const Path p = resolve(dec, spec);
    MultVector n{std::vector<std::int64_t>(dec.quiver.arrow_count(), 1)};
    for (std::size_t a = 0; a < n.entries.size(); ++a)
        if (is_varying(dec, a)) n.entries[a] = p.base.entries[a] + s * p.ray.entries[a];
    return n;
}

LimitResult limit_series(const Decomposition& dec, const LimitSpec& spec) {
    if (dec.is_zero()) throw LimitError("the polynomials vanish identically; the limit is 0");
    const Path p = resolve(dec, spec);
    std::vector<Line> lines;
    for (const auto& g : dec.groups) lines.push_back(along(dec.quiver, g.exponent, p));
    LimitResult r;
    r.survivors = limit_survivors(dec, p, lines);
    std::vector<std::pair<std::int64_t, const Poly*>> parts;
    for (std::size_t j : r.survivors) parts.emplace_back(lines[j].a, &dec.groups[j].numerator);
    auto [num, v0] = laurent_sum(parts);
    if (num.is_zero()) throw LimitError("surviving groups cancel; the limit is 0");
    r.slope = lines[r.survivors.front()].b;
    r.offset = v0;
    r.numerator = std::move(num);
    r.denominator = dec.denominator;
    r.coefficients = expand_series(r.numerator, r.denominator, spec.order);
    return r;
}

AffineExponent degree_exponent(const Decomposition& dec) {
    const Quiver& q = dec.quiver;
    AffineExponent e;
    e.constant = 1;
    for (auto v : dec.dim.entries) e.constant -= v * v;
    for (const auto& name : dec.varying) e.linear.emplace_back(name, 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const std::int64_t w =
            q.arrows()[a].multiplicity * dec.dim.entries[q.source_index(a)] * dec.dim.entries[q.target_index(a)];
        auto it = std::find_if(e.linear.begin(), e.linear.end(),
                               [&](const auto& kv) { return kv.first == q.arrows()[a].name; });
        if (it == e.linear.end())
            e.constant += w;
        else
            it->second += w;
    }
    return e;
}

ReciprocalResult reciprocal_limit(const Decomposition& dec, const LimitSpec& spec) {
    if (dec.is_zero()) throw LimitError("the polynomials vanish identically; no reciprocal limit");
    const Path p = resolve(dec, spec);
    const AffineExponent deg = degree_exponent(dec);
    const std::int64_t degQ = dec.denominator.degree();
    ReciprocalResult r;
    std::vector<std::pair<std::int64_t, const Poly*>> parts;
    std::vector<Poly> reversed;
    reversed.reserve(dec.groups.size());
    for (std::size_t j = 0; j < dec.groups.size(); ++j) {
        const auto& g = dec.groups[j];
        AffineExponent e = deg;
        for (auto& [name, c] : e.linear) c -= g.exponent.linear_coefficient(name);
        e.constant += degQ - g.numerator.degree() - g.exponent.constant;
        const Line l = along(dec.quiver, e, p);
        if (l.b < 0) throw LimitError("a group exceeds the degree function along the limit");
        bool bounded = l.b == 0;
        if (!p.infinite.empty()) {
            const auto rv = restricted(dec.quiver, e, p.infinite);
            bounded = std::all_of(rv.begin(), rv.end(), [](std::int64_t c) { return c == 0; });
        }
        reversed.push_back(g.numerator.reversed(g.numerator.degree()));
        if (!bounded) continue;
        if (l.a < 0) throw LimitError("reciprocal limit has a negative exponent");
        r.survivors.push_back(j);
        parts.emplace_back(l.a, &reversed.back());
    }
    if (r.survivors.empty())
        throw LimitError("no group shares the linear part of the degree function (no degree group)");
    Poly num;
    for (const auto& [a, poly] : parts) num += poly->shift(a);
    r.numerator = std::move(num);
    r.denominator = dec.denominator.reversed(degQ);
    r.coefficients = expand_series(r.numerator, r.denominator, spec.order);
    if (r.coefficients.front() != 1)
        throw InvariantViolation("reciprocal limit has constant term " + r.coefficients.front().get_str() + ", not 1");
    return r;
}

RatePrediction predicted_rate(const Decomposition& dec, const LimitSpec& spec) {
    const LimitResult lim = limit_series(dec, spec);
    const Path p = resolve(dec, spec);
    std::optional<RatePrediction> best;
    for (std::size_t j = 0; j < dec.groups.size(); ++j) {
        if (std::find(lim.survivors.begin(), lim.survivors.end(), j) != lim.survivors.end()) continue;
        const Line l = along(dec.quiver, dec.groups[j].exponent, p);
        RatePrediction c{l.b - lim.slope, l.a - lim.offset, j};
        if (!best || c.slope < best->slope || (c.slope == best->slope && c.offset < best->offset)) best = c;
    }
    if (!best) throw LimitError("every group survives; the difference to the limit vanishes");
    return *best;
}

std::optional<std::int64_t> measured_rate(const Poly& a, std::int64_t v, const LimitResult& limit) {
    Poly t;
    std::int64_t base = 0;
    if (v >= 0) {
        t = a * limit.denominator - limit.numerator.shift(v);
        base = v;
    } else {
        t = (a * limit.denominator).shift(-v) - limit.numerator;
    }
    if (t.is_zero()) return std::nullopt;
    return t.valuation() - base;
}

std::optional<std::int64_t> prefix_rate(const Poly& a, const std::vector<Integer>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (a.coefficient(static_cast<std::int64_t>(i)) != Rational(prefix[i])) return static_cast<std::int64_t>(i);
    return std::nullopt;
}

std::vector<ValuationRecord> valuation_report(const Quiver& q, const DimVector& d_box, std::int64_t n_box,
                                              unsigned jobs) {
    check_dim(q, d_box);
    if (n_box < 1) throw InputError("multiplicity bound must be at least 1");
    std::vector<MultVector> grid;
    MultVector n{std::vector<std::int64_t>(q.arrow_count(), 1)};
    for (;;) {
        grid.push_back(n);
        std::size_t i = n.entries.size();
        while (i > 0 && n.entries[i - 1] == n_box) n.entries[--i] = 1;
        if (i == 0) break;
        ++n.entries[i - 1];
    }
    std::vector<std::vector<ValuationRecord>> slots(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t k) {
        const Quiver qn = multi_arrow(q, grid[k]);
        for (const auto& [d, a] : kac_all(qn, d_box)) {
            if (a.is_zero()) continue;
            const ValuationPrediction pred = predicted_valuation(qn, d);
            ValuationRecord rec;
            rec.n = grid[k];
            rec.d = d;
            rec.predicted_all = pred.all_imaginary;
            rec.predicted_supported = pred.supported_imaginary;
            rec.actual = a.valuation();
            rec.match = rec.actual == rec.predicted_supported;
            rec.conventions_differ = pred.all_imaginary != pred.supported_imaginary;
            slots[k].push_back(std::move(rec));
        }
    });
    std::vector<ValuationRecord> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

Integer witt_dim(const std::vector<std::int64_t>& d) {
    std::int64_t total = 0;
    for (auto v : d) {
        if (v < 0) throw InputError("witt_dim: negative entry");
        total += v;
    }
    if (total == 0) throw InputError("witt_dim: zero vector");
    std::vector<std::int64_t> nonzero;
    for (auto v : d)
        if (v > 0) nonzero.push_back(v);
    const std::int64_t g = gcd_all(nonzero);
    Integer sum = 0;
    for (std::int64_t e : divisors(g)) {
        const int mu = moebius(e);
        if (mu == 0) continue;
        Integer num, den = 1, f;
        mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(total / e));
        for (auto v : d) {
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v / e));
            den *= f;
        }
        sum += mu * (num / den);
    }
    if (sum % total != 0) throw InvariantViolation("Witt sum not divisible by |d|");
    return sum / total;
}

} // namespace kacpoly
