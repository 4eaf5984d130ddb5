#include "kacpoly/param.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "kacpoly/error.hpp"

namespace kacpoly {

namespace {

std::atomic<std::size_t> g_term_cap{1000000};

void trim(ParamElement::Linear& l) {
    while (!l.empty() && l.back() == 0) l.pop_back();
}

void accumulate(std::map<ParamElement::Linear, RationalFunction>& terms, ParamElement::Linear key,
                const RationalFunction& c) {
    auto [it, fresh] = terms.try_emplace(std::move(key), c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

} // namespace

ParamElement::ParamElement(long c) {
    if (c != 0) terms_.emplace(Linear{}, RationalFunction(c));
}

ParamElement::ParamElement(const RationalFunction& c) {
    if (!c.is_zero()) terms_.emplace(Linear{}, c);
}

ParamElement ParamElement::term(Linear linear, RationalFunction coeff) {
    ParamElement e;
    if (coeff.is_zero()) return e;
    trim(linear);
    e.terms_.emplace(std::move(linear), std::move(coeff));
    return e;
}

void ParamElement::set_term_cap(std::size_t cap) { g_term_cap.store(cap); }
std::size_t ParamElement::term_cap() { return g_term_cap.load(); }

void ParamElement::check_cap(std::size_t n) {
    if (n > term_cap())
        throw TermExplosion("parametric element exceeded " + std::to_string(term_cap()) +
                            " terms; fix more arrows to shrink the instance");
}

ParamElement ParamElement::operator-() const {
    ParamElement out = *this;
    for (auto& [l, c] : out.terms_) c = -c;
    return out;
}

ParamElement operator+(const ParamElement& a, const ParamElement& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    ParamElement out = a;
    for (const auto& [l, c] : b.terms_) accumulate(out.terms_, l, c);
    ParamElement::check_cap(out.terms_.size());
    return out;
}

ParamElement operator*(const ParamElement& a, const ParamElement& b) {
    ParamElement out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [la, ca] : a.terms_) {
        for (const auto& [lb, cb] : b.terms_) {
            ParamElement::Linear l(std::max(la.size(), lb.size()), 0);
            for (std::size_t i = 0; i < la.size(); ++i) l[i] += la[i];
            for (std::size_t i = 0; i < lb.size(); ++i) l[i] += lb[i];
            trim(l);
            accumulate(out.terms_, std::move(l), ca * cb);
        }
        ParamElement::check_cap(out.terms_.size());
    }
    return out;
}

ParamElement ParamElement::div_int(long n) const {
    if (n == 0) throw ZeroDenominator("division by integer zero");
    ParamElement out = *this;
    for (auto& [l, c] : out.terms_) c = c.div_int(n);
    return out;
}

ParamElement ParamElement::adams(std::int64_t l) const {
    if (l < 1) throw InputError("adams: exponent must be positive");
    if (l == 1) return *this;
    ParamElement out;
    for (const auto& [lin, c] : terms_) {
        Linear scaled = lin;
        for (auto& v : scaled) v *= l;
        out.terms_.emplace(std::move(scaled), c.adams(l));
    }
    return out;
}

std::string ParamElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        if (l.empty()) continue;
        os << "*q^(";
        for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
        os << ")";
    }
    return os.str();
}

std::vector<std::int64_t> AffineExponent::linear_values() const {
    std::vector<std::int64_t> v;
    for (const auto& [name, c] : linear) v.push_back(c);
    return v;
}

std::int64_t AffineExponent::linear_coefficient(const std::string& arrow) const {
    for (const auto& [name, c] : linear)
        if (name == arrow) return c;
    return 0;
}

std::int64_t AffineExponent::evaluate(const Quiver& q, const MultVector& n) const {
    check_mult(q, n);
    std::int64_t v = constant;
    for (const auto& [name, c] : linear) {
        const std::int64_t x = n.entries[q.arrow_index(name)];
        if (x == kInfinite) throw InputError("cannot evaluate an exponent at an infinite multiplicity");
        v += c * x;
    }
    return v;
}

std::string AffineExponent::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : linear) {
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << "n_" << name;
    }
    if (first) return std::to_string(constant);
    if (constant > 0) os << " + " << constant;
    if (constant < 0) os << " - " << -constant;
    return os.str();
}

std::vector<std::string> normalize_varying(const Quiver& q, const std::vector<std::string>& varying) {
    std::vector<bool> mark(q.arrow_count(), false);
    for (const auto& name : varying) {
        const std::size_t a = q.arrow_index(name);
        if (mark[a]) throw InputError("arrow '" + name + "' listed twice as varying");
        mark[a] = true;
    }
    std::vector<std::string> out;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        if (mark[a]) out.push_back(q.arrows()[a].name);
    return out;
}

ParamElement param_raw(const Quiver& q, const DimVector& d, const std::vector<std::string>& varying,
                       KacPath path) {
    check_dim(q, d);
    if (d.is_zero()) throw InputError("param_kac: zero dimension vector");
    std::vector<std::size_t> idx;
    for (const auto& name : normalize_varying(q, varying)) idx.push_back(q.arrow_index(name));
    const auto P = hua_P_over<ParamElement>(q, d, idx, [](const std::vector<std::int64_t>& l, const RationalFunction& v) {
        return ParamElement::term(l, v);
    });
    const ParamElement qm1(RationalFunction(Poly::from_integers({-1, 1})));
    if (path == KacPath::plethystic) return kac_from_pleth_log(P, d, qm1);
    return kac_from_log(series_log(P), d, qm1);
}

Decomposition param_kac(const Quiver& q, const DimVector& d, const std::vector<std::string>& varying,
                        KacPath path) {
    return canonicalize(param_raw(q, d, varying, path), q, d, varying);
}

namespace {

Poly lcm(const Poly& a, const Poly& b) {
    const Poly g = gcd(a, b);
    return exact_divide(a, g) * b;
}

bool exponent_less(const DecompositionGroup& a, const DecompositionGroup& b) {
    const auto la = a.exponent.linear_values();
    const auto lb = b.exponent.linear_values();
    if (la != lb) return la < lb;
    return a.exponent.constant < b.exponent.constant;
}

// Finishes canonicalization from one reduced rational function per linear part.
Decomposition assemble(std::map<std::vector<std::int64_t>, RationalFunction> by_linear, const Quiver& q,
                       const DimVector& d, const std::vector<std::string>& names) {
    Decomposition dec;
    dec.quiver = q;
    dec.dim = d;
    dec.varying = names;
    for (auto it = by_linear.begin(); it != by_linear.end();) {
        if (it->second.is_zero())
            it = by_linear.erase(it);
        else
            ++it;
    }
    if (by_linear.empty()) {
        dec.certificate = cyclotomic_certify(dec.denominator);
        return dec;
    }

    Poly Q(1L);
    for (const auto& [l, f] : by_linear) Q = lcm(Q, f.denominator());
    Q = Q.monic();
    const std::int64_t b = Q.valuation();
    Q = Q.shift(-b);

    std::vector<std::pair<std::vector<std::int64_t>, Poly>> nums;
    std::vector<std::int64_t> offsets;
    Poly g = Q;
    for (const auto& [l, f] : by_linear) {
        Poly p = f.numerator() * exact_divide(Q.shift(b), f.denominator());
        const std::int64_t a = p.valuation();
        nums.emplace_back(l, p.shift(-a));
        offsets.push_back(a - b);
        g = gcd(g, nums.back().second);
    }
    if (!g.is_one()) {
        Q = exact_divide(Q, g);
        for (auto& [l, p] : nums) p = exact_divide(p, g);
    }
    dec.denominator = Q;
    for (std::size_t j = 0; j < nums.size(); ++j) {
        AffineExponent e;
        e.constant = offsets[j];
        for (std::size_t i = 0; i < names.size(); ++i)
            e.linear.emplace_back(names[i], i < nums[j].first.size() ? nums[j].first[i] : 0);
        dec.groups.push_back({std::move(e), std::move(nums[j].second)});
    }
    std::sort(dec.groups.begin(), dec.groups.end(), exponent_less);
    dec.certificate = cyclotomic_certify(dec.denominator);
    return dec;
}

} // namespace

Decomposition canonicalize(const ParamElement& raw, const Quiver& q, const DimVector& d,
                           const std::vector<std::string>& varying) {
    const auto names = normalize_varying(q, varying);
    std::map<std::vector<std::int64_t>, RationalFunction> by_linear;
    for (const auto& [l, c] : raw.terms()) {
        if (l.size() > names.size()) throw InputError("parametric term has more slots than varying arrows");
        std::vector<std::int64_t> full = l;
        full.resize(names.size(), 0);
        by_linear[full] += c;
    }
    return assemble(std::move(by_linear), q, d, names);
}

Decomposition canonicalize(const std::vector<RawTerm>& raw, const Quiver& q, const DimVector& d,
                           const std::vector<std::string>& varying) {
    const auto names = normalize_varying(q, varying);
    std::map<std::vector<std::int64_t>, RationalFunction> by_linear;
    for (const auto& t : raw) {
        std::vector<std::int64_t> full;
        for (const auto& name : names) full.push_back(t.exponent.linear_coefficient(name));
        for (const auto& [name, c] : t.exponent.linear)
            if (c != 0 && std::find(names.begin(), names.end(), name) == names.end())
                throw KeyMismatch("exponent uses non-varying arrow '" + name + "'");
        by_linear[full] += ratfn_reduce(t.numerator, t.denominator).shift(t.exponent.constant);
    }
    return assemble(std::move(by_linear), q, d, names);
}

std::vector<RawTerm> raw_terms(const Decomposition& dec) {
    std::vector<RawTerm> out;
    for (const auto& g : dec.groups) out.push_back({g.exponent, g.numerator, dec.denominator});
    return out;
}

Poly specialize(const Decomposition& dec, const MultVector& n) {
    if (dec.is_zero()) return Poly();
    std::vector<std::int64_t> e;
    for (const auto& g : dec.groups) e.push_back(g.exponent.evaluate(dec.quiver, n));
    const std::int64_t m = std::min<std::int64_t>(0, *std::min_element(e.begin(), e.end()));
    Poly sum;
    for (std::size_t j = 0; j < e.size(); ++j) sum += dec.groups[j].numerator.shift(e[j] - m);
    try {
        return exact_divide(sum, dec.denominator).shift(m);
    } catch (const NotDivisible&) {
        throw NotPolynomial("decomposition does not specialize to a polynomial at this multiplicity vector");
    }
}

} // namespace kacpoly
