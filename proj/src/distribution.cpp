#include "kacpoly/distribution.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "kacpoly/error.hpp"

namespace kacpoly {

namespace {

std::vector<Integer> normalized_coefficients(const Poly& a) {
    if (a.is_zero()) throw ZeroPolynomial("coefficient data of the zero polynomial");
    if (!a.is_integral()) throw InputError("coefficient data needs integer coefficients");
    const auto& num = a.numerators();
    return {num.begin() + a.valuation(), num.end()};
}

std::string float_text(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(17) << r.get_d();
    return os.str();
}

} // namespace

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

CoeffGraph coefficient_graph(const Poly& a, Parity parity) {
    const auto c = normalized_coefficients(a);
    const Integer top = *std::max_element(c.begin(), c.end());
    const auto span = static_cast<long>(c.size() - 1);
    CoeffGraph g;
    g.parity = parity;
    for (std::size_t j = parity == Parity::even ? 0 : 1; j < c.size(); j += 2) {
        Rational x = span == 0 ? Rational(0) : Rational(static_cast<long>(j), span);
        Rational y(c[j], top);
        x.canonicalize();
        y.canonicalize();
        g.points.push_back({x, y});
    }
    return g;
}

Unimodality unimodality_check(const std::vector<Integer>& seq) {
    Unimodality u;
    if (seq.empty()) return u;
    u.peak_index = static_cast<std::size_t>(std::max_element(seq.begin(), seq.end()) - seq.begin());
    for (std::size_t i = 1; i <= u.peak_index; ++i)
        if (seq[i] < seq[i - 1]) u.unimodal = false;
    for (std::size_t i = u.peak_index + 1; i < seq.size(); ++i)
        if (seq[i] > seq[i - 1]) u.unimodal = false;
    return u;
}

Unimodality unimodality_check(const Poly& a, Parity parity) {
    const auto c = normalized_coefficients(a);
    std::vector<Integer> seq;
    for (std::size_t j = parity == Parity::even ? 0 : 1; j < c.size(); j += 2) seq.push_back(c[j]);
    return unimodality_check(seq);
}

void write_distribution_csv(std::ostream& os, const std::vector<CoeffGraph>& graphs) {
    os << "parity,x_num,x_den,y_num,y_den,x_float,y_float\n";
    for (const auto& g : graphs)
        for (const auto& p : g.points)
            os << parity_name(g.parity) << ',' << p.x.get_num() << ',' << p.x.get_den() << ',' << p.y.get_num() << ','
               << p.y.get_den() << ',' << float_text(p.x) << ',' << float_text(p.y) << '\n';
}

} // namespace kacpoly
