#include "kacpoly/quiver.hpp"

#include <algorithm>
#include <set>

#include "kacpoly/error.hpp"

namespace kacpoly {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second) throw InputError("duplicate vertex '" + v + "'");
    std::set<std::string> names;
    for (const auto& a : arrows_) {
        if (!names.insert(a.name).second) throw InputError("duplicate arrow '" + a.name + "'");
        if (!seen.count(a.source)) throw InputError("arrow '" + a.name + "' has unknown source '" + a.source + "'");
        if (!seen.count(a.target)) throw InputError("arrow '" + a.name + "' has unknown target '" + a.target + "'");
        if (a.multiplicity < 0) throw InputError("arrow '" + a.name + "' has negative multiplicity");
    }
}

std::size_t Quiver::vertex_index(const std::string& v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) throw KeyMismatch("unknown vertex '" + v + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& name) const {
    auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.name == name; });
    if (it == arrows_.end()) throw KeyMismatch("unknown arrow '" + name + "'");
    return static_cast<std::size_t>(it - arrows_.begin());
}

bool Quiver::has_loops() const noexcept {
    return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.is_loop(); });
}

Quiver Quiver::with_reversed_arrow(const std::string& name) const {
    Quiver q = *this;
    auto& a = q.arrows_[arrow_index(name)];
    std::swap(a.source, a.target);
    return q;
}

std::string Quiver::canonical_string() const {
    std::string s = "vertices:";
    for (const auto& v : vertices_) s += "[" + v + "]";
    s += ";arrows:";
    for (const auto& a : arrows_)
        s += "[" + a.name + "|" + a.source + "|" + a.target + "|" + std::to_string(a.multiplicity) + "]";
    return s;
}

std::int64_t DimVector::total() const noexcept {
    std::int64_t t = 0;
    for (auto v : entries) t += v;
    return t;
}

bool DimVector::is_zero() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](std::int64_t v) { return v == 0; });
}

std::string DimVector::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries[i]);
    }
    return s;
}

void check_dim(const Quiver& q, const DimVector& d) {
    if (d.entries.size() != q.vertex_count())
        throw KeyMismatch("dimension vector has " + std::to_string(d.entries.size()) + " entries, quiver has " +
                          std::to_string(q.vertex_count()) + " vertices");
    for (auto v : d.entries)
        if (v < 0) throw InputError("dimension vector entries must be nonnegative");
}

void check_mult(const Quiver& q, const MultVector& n) {
    if (n.entries.size() != q.arrow_count())
        throw KeyMismatch("multiplicity vector has " + std::to_string(n.entries.size()) + " entries, quiver has " +
                          std::to_string(q.arrow_count()) + " arrows");
    for (auto v : n.entries)
        if (v < 0) throw InputError("arrow multiplicities must be nonnegative");
}

DimVector dim_from_map(const Quiver& q, const std::map<std::string, std::int64_t>& values) {
    if (values.size() != q.vertex_count()) throw KeyMismatch("dimension vector must be keyed by every vertex");
    DimVector d;
    for (const auto& v : q.vertices()) {
        auto it = values.find(v);
        if (it == values.end()) throw KeyMismatch("dimension vector misses vertex '" + v + "'");
        d.entries.push_back(it->second);
    }
    return d;
}

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    check_dim(q, d);
    check_dim(q, e);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) s += d.entries[i] * e.entries[i];
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        s -= q.arrows()[a].multiplicity * d.entries[q.source_index(a)] * e.entries[q.target_index(a)];
    return s;
}

Quiver multi_arrow(const Quiver& q, const MultVector& n) {
    check_mult(q, n);
    std::vector<Arrow> arrows = q.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (n.entries[a] == kInfinite) throw InputError("multi_arrow needs finite multiplicities");
        arrows[a].multiplicity *= n.entries[a];
    }
    return Quiver(q.vertices(), std::move(arrows));
}

std::int64_t degree_formula(const Quiver& q, const DimVector& d) { return 1 - euler_form(q, d, d); }

std::vector<std::size_t> imaginary_vertices(const Quiver& q) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        const bool loop = std::any_of(q.arrows().begin(), q.arrows().end(), [&](const Arrow& a) {
            return a.is_loop() && a.multiplicity > 0 && a.source == q.vertices()[i];
        });
        if (loop) out.push_back(i);
    }
    return out;
}

ValuationPrediction predicted_valuation(const Quiver& q, const DimVector& d) {
    check_dim(q, d);
    ValuationPrediction p{0, 0};
    for (std::size_t i : imaginary_vertices(q)) {
        std::int64_t loops = 0;
        for (const auto& a : q.arrows())
            if (a.is_loop() && a.source == q.vertices()[i]) loops += a.multiplicity;
        const std::int64_t term = 1 + d.entries[i] * (loops - 1);
        p.all_imaginary += term;
        if (d.entries[i] > 0) p.supported_imaginary += term;
    }
    return p;
}

namespace families {

Quiver kronecker(std::int64_t r) { return Quiver({"1", "2"}, {{"arrow", "1", "2", r}}); }

Quiver multiloop(std::int64_t g) { return Quiver({"1"}, {{"loop", "1", "1", g}}); }

Quiver tennis_racket(std::int64_t n_alpha, std::int64_t n_beta) {
    return Quiver({"1", "2"}, {{"alpha", "1", "2", n_alpha}, {"beta", "2", "2", n_beta}});
}

} // namespace families

} // namespace kacpoly
