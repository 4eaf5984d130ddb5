#include "kacpoly/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "kacpoly/error.hpp"

namespace kacpoly {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    // nlohmann reports the 1-based index of the byte that broke the parse.
    const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

void reject_unknown(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) throw ParseError("unknown field '" + key + "' in " + where);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "' in " + where);
    return *it;
}

std::string require_string(const Json& obj, const char* key, const std::string& where) {
    const Json& v = require(obj, key, where);
    if (!v.is_string()) throw ParseError(std::string("field '") + key + "' in " + where + " must be a string");
    return v.get<std::string>();
}

std::int64_t parse_int(std::string_view s, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InputError(std::string("invalid ") + what + " entry '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view text) {
    std::vector<std::string_view> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        out.push_back(piece);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Quiver parse_quiver(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte);
        std::string msg = e.what();
        const auto cut = msg.find("syntax error");
        throw ParseError(cut == std::string::npos ? msg : msg.substr(cut), line, column);
    }
    if (!doc.is_object()) throw ParseError("quiver document must be an object");
    reject_unknown(doc, {"vertices", "arrows"}, "quiver");
    const Json& vs = require(doc, "vertices", "quiver");
    if (!vs.is_array()) throw ParseError("'vertices' must be a list");
    std::vector<std::string> vertices;
    for (const auto& v : vs) {
        if (!v.is_string()) throw ParseError("vertex identifiers must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<Arrow> arrows;
    auto it = doc.find("arrows");
    if (it != doc.end()) {
        if (!it->is_array()) throw ParseError("'arrows' must be a list");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& a = (*it)[i];
            const std::string where = "arrows[" + std::to_string(i) + "]";
            if (!a.is_object()) throw ParseError(where + " must be an object");
            reject_unknown(a, {"name", "from", "to", "mult"}, where);
            Arrow arrow{require_string(a, "name", where), require_string(a, "from", where),
                        require_string(a, "to", where), 1};
            auto m = a.find("mult");
            if (m != a.end()) {
                if (!m->is_number_integer()) throw ParseError("field 'mult' in " + where + " must be an integer");
                arrow.multiplicity = m->get<std::int64_t>();
            }
            arrows.push_back(std::move(arrow));
        }
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

Quiver load_quiver(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open quiver file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_quiver(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"from", a.source}, {"to", a.target}, {"mult", a.multiplicity}});
    return {{"vertices", q.vertices()}, {"arrows", std::move(arrows)}};
}

DimVector parse_dim(const Quiver& q, std::string_view text) {
    DimVector d;
    for (auto piece : split(text)) d.entries.push_back(parse_int(piece, "dimension"));
    check_dim(q, d);
    return d;
}

MultVector parse_mult(const Quiver& q, std::string_view text) {
    MultVector n;
    for (auto piece : split(text))
        n.entries.push_back(piece == "inf" || piece == "oo" ? kInfinite : parse_int(piece, "multiplicity"));
    if (n.entries.size() != q.arrow_count())
        throw KeyMismatch("multiplicity vector has " + std::to_string(n.entries.size()) + " entries, quiver has " +
                          std::to_string(q.arrow_count()) + " arrows");
    for (auto v : n.entries)
        if (v < 0) throw InputError("multiplicities must be nonnegative");
    return n;
}

std::vector<std::string> parse_names(std::string_view text) {
    std::vector<std::string> out;
    for (auto piece : split(text))
        if (!piece.empty()) out.emplace_back(piece);
    return out;
}

Json poly_record(const Poly& p) {
    Json coeffs = Json::array();
    if (p.is_zero()) return {{"valuation", 0}, {"coefficients", coeffs}};
    for (std::int64_t i = p.valuation(); i <= p.degree(); ++i) coeffs.push_back(p.coefficient(i).get_str());
    return {{"valuation", p.valuation()}, {"coefficients", std::move(coeffs)}};
}

Poly poly_from_record(const Json& j) {
    if (!j.is_object()) throw ParseError("polynomial record must be an object");
    reject_unknown(j, {"valuation", "coefficients"}, "polynomial record");
    const Json& v = require(j, "valuation", "polynomial record");
    const Json& cs = require(j, "coefficients", "polynomial record");
    if (!v.is_number_integer() || !cs.is_array()) throw ParseError("malformed polynomial record");
    std::vector<Rational> coeffs(static_cast<std::size_t>(v.get<std::int64_t>()), Rational(0));
    for (const auto& c : cs) {
        if (!c.is_string()) throw ParseError("polynomial coefficients must be strings");
        Rational r;
        if (r.set_str(c.get<std::string>(), 10) != 0) throw ParseError("bad coefficient '" + c.get<std::string>() + "'");
        r.canonicalize();
        coeffs.push_back(r);
    }
    return Poly::from_rationals(coeffs);
}

Json affine_to_json(const AffineExponent& e) {
    Json linear = Json::object();
    for (const auto& [name, c] : e.linear) linear[name] = c;
    return {{"constant", e.constant}, {"linear", std::move(linear)}};
}

Json decomposition_to_json(const Decomposition& dec) {
    Json groups = Json::array();
    for (const auto& g : dec.groups) {
        Json j = affine_to_json(g.exponent);
        j["numerator"] = poly_record(g.numerator);
        groups.push_back(std::move(j));
    }
    Json factors = Json::array();
    for (const auto& f : dec.certificate.factors) factors.push_back({f.index, f.multiplicity});
    return {{"quiver", quiver_to_json(dec.quiver)},
            {"dim", dec.dim.entries},
            {"varying", dec.varying},
            {"denominator", poly_record(dec.denominator)},
            {"cyclotomic_factors", std::move(factors)},
            {"groups", std::move(groups)}};
}

std::string decomposition_text(const Decomposition& dec) {
    std::ostringstream os;
    if (dec.is_zero()) return "0\n";
    os << "denominator: " << dec.denominator << "\n";
    os << "cyclotomic:";
    for (const auto& f : dec.certificate.factors) {
        os << " Phi_" << f.index;
        if (f.multiplicity > 1) os << "^" << f.multiplicity;
    }
    os << "\n";
    for (const auto& g : dec.groups) os << "q^(" << g.exponent.to_string() << ") * (" << g.numerator << ")\n";
    return os.str();
}

Json integers_to_json(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

std::string integers_text(const std::vector<Integer>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s;
}

Json valuation_record_json(const ValuationRecord& r) {
    return {{"n", r.n.entries},
            {"d", r.d.entries},
            {"predicted_all", r.predicted_all},
            {"predicted_supported", r.predicted_supported},
            {"actual", r.actual},
            {"match", r.match},
            {"conventions_differ", r.conventions_differ}};
}

Json graph_to_json(const CoeffGraph& g) {
    Json pts = Json::array();
    for (const auto& p : g.points) pts.push_back({{"x", p.x.get_str()}, {"y", p.y.get_str()}});
    return {{"parity", parity_name(g.parity)}, {"points", std::move(pts)}};
}

} // namespace kacpoly
