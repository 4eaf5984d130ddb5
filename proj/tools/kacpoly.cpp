// Command-line front end for the kacpoly library.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kacpoly/asymptotics.hpp"
#include "kacpoly/cache.hpp"
#include "kacpoly/distribution.hpp"
#include "kacpoly/error.hpp"
#include "kacpoly/hua.hpp"
#include "kacpoly/io.hpp"
#include "kacpoly/param.hpp"

using namespace kacpoly;

namespace {

struct Options {
    std::string cache_dir;
    bool no_cache = false;
    bool json = false;
    std::string csv;
    std::int64_t order = 10;
    bool check = false;
    unsigned jobs = 1;
    std::size_t term_cap = 1000000;

    std::string quiver_file;
    std::string dim;
    std::string path = "moebius";
    std::string vary;
    std::string target;
    std::string direction;
    std::string base;
    bool assume_direction_free = false;
    std::int64_t upto = 8;
    std::string dim_box;
    std::int64_t n_box = 2;
    std::string parity = "both";
    std::string which = "M";
};

// Everything a command writes; cached as one unit.
struct Output {
    std::string out;
    std::string csv;
};

Json output_to_json(const Output& o) { return {{"stdout", o.out}, {"csv", o.csv}}; }
Output output_from_json(const Json& j) { return {j.at("stdout").get<std::string>(), j.at("csv").get<std::string>()}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

KacPath parse_path(const std::string& s) {
    if (s == "moebius" || s == "direct") return KacPath::moebius;
    if (s == "plethystic") return KacPath::plethystic;
    throw InputError("unknown --path '" + s + "' (expected moebius or plethystic)");
}

Decomposition decompose(const Options& o, const Quiver& q) {
    const DimVector d = parse_dim(q, o.dim);
    auto varying = parse_names(o.vary);
    if (varying.empty()) throw InputError("--vary needs at least one arrow name");
    return param_kac(q, d, varying, parse_path(o.path));
}

LimitSpec limit_spec(const Options& o, const Decomposition& dec) {
    const Quiver& q = dec.quiver;
    if (!o.direction.empty()) {
        if (!o.target.empty()) throw InputError("--target and --direction are exclusive");
        MultVector base{std::vector<std::int64_t>(q.arrow_count(), 0)};
        if (!o.base.empty()) base = parse_mult(q, o.base);
        return LimitSpec::direction(base, parse_mult(q, o.direction), o.order);
    }
    if (!o.target.empty()) return LimitSpec::componentwise(parse_mult(q, o.target), o.order, o.assume_direction_free);
    return LimitSpec::all_infinite(dec, o.order, o.assume_direction_free);
}

void check_decomposition(const Decomposition& dec) {
    for (std::int64_t k = 1; k <= 3; ++k) {
        MultVector n{std::vector<std::int64_t>(dec.quiver.arrow_count(), 1)};
        for (const auto& name : dec.varying) n.entries[dec.quiver.arrow_index(name)] = k;
        const Poly expected = kac_direct(multi_arrow(dec.quiver, n), dec.dim, true).poly;
        if (!(specialize(dec, n) == expected))
            throw InvariantViolation("decomposition disagrees with the direct computation at n = " + std::to_string(k));
    }
}

Output run_compute(const Options& o, const Quiver& q) {
    const DimVector d = parse_dim(q, o.dim);
    const KacPath path = parse_path(o.path);
    const KacResult r = path == KacPath::plethystic ? kac_plethystic(q, d, o.check) : kac_direct(q, d, o.check);
    if (!o.json) return {r.poly.to_string() + "\n", ""};
    return {dump({{"quiver", quiver_to_json(q)},
                  {"dim", d.entries},
                  {"path", path == KacPath::plethystic ? "plethystic" : "moebius"},
                  {"text", r.poly.to_string()},
                  {"poly", poly_record(r.poly)}}),
            ""};
}

Output run_param(const Options& o, const Quiver& q) {
    const Decomposition dec = decompose(o, q);
    if (o.check) check_decomposition(dec);
    return {o.json ? dump(decomposition_to_json(dec)) : decomposition_text(dec), ""};
}

Output run_limit(const Options& o, const Quiver& q) {
    const Decomposition dec = decompose(o, q);
    const LimitResult r = limit_series(dec, limit_spec(o, dec));
    if (!o.json) return {integers_text(r.coefficients) + "\n", ""};
    return {dump({{"coefficients", integers_to_json(r.coefficients)},
                  {"numerator", poly_record(r.numerator)},
                  {"denominator", poly_record(r.denominator)},
                  {"survivors", r.survivors},
                  {"renormalization", {{"slope", r.slope}, {"offset", r.offset}}}}),
            ""};
}

Output run_reciprocal(const Options& o, const Quiver& q) {
    const Decomposition dec = decompose(o, q);
    const ReciprocalResult r = reciprocal_limit(dec, limit_spec(o, dec));
    if (!o.json) return {integers_text(r.coefficients) + "\n", ""};
    return {dump({{"coefficients", integers_to_json(r.coefficients)},
                  {"numerator", poly_record(r.numerator)},
                  {"denominator", poly_record(r.denominator)},
                  {"survivors", r.survivors}}),
            ""};
}

Output run_rate(const Options& o, const Quiver& q) {
    const Decomposition dec = decompose(o, q);
    const LimitSpec spec = limit_spec(o, dec);
    const LimitResult lim = limit_series(dec, spec);
    const RatePrediction pred = predicted_rate(dec, spec);
    std::ostringstream text;
    Json rows = Json::array();
    text << "predicted: " << pred.slope << "*s " << (pred.offset < 0 ? "- " : "+ ")
         << (pred.offset < 0 ? -pred.offset : pred.offset) << "\n";
    for (std::int64_t s = 1; s <= o.upto; ++s) {
        const MultVector n = path_point(dec, spec, s);
        const Poly a = kac_direct(multi_arrow(q, n), dec.dim).poly;
        const auto measured = measured_rate(a, lim.slope * s + lim.offset, lim);
        std::string n_text;
        for (std::size_t i = 0; i < n.entries.size(); ++i) n_text += (i ? "," : "") + std::to_string(n.entries[i]);
        text << "s=" << s << " n=(" << n_text << ") predicted=" << pred.at(s)
             << " measured=" << (measured ? std::to_string(*measured) : "none") << "\n";
        rows.push_back({{"s", s},
                        {"n", n.entries},
                        {"predicted", pred.at(s)},
                        {"measured", measured ? Json(*measured) : Json(nullptr)}});
    }
    if (!o.json) return {text.str(), ""};
    return {dump({{"slope", pred.slope}, {"offset", pred.offset}, {"rows", rows}}), ""};
}

Output run_valuation(const Options& o, const Quiver& q) {
    const DimVector box = parse_dim(q, o.dim_box);
    const auto records = valuation_report(q, box, o.n_box, o.jobs);
    std::size_t matches = 0;
    for (const auto& r : records) matches += r.match ? 1 : 0;
    if (o.json) {
        Json rows = Json::array();
        for (const auto& r : records) rows.push_back(valuation_record_json(r));
        return {dump({{"records", rows}, {"matches", matches}, {"total", records.size()}}), ""};
    }
    std::ostringstream os;
    for (const auto& r : records) {
        std::string n_text;
        for (std::size_t i = 0; i < r.n.entries.size(); ++i)
            n_text += (i ? "," : "") + std::to_string(r.n.entries[i]);
        os << "n=(" << n_text << ") d=(" << r.d.to_string() << ") predicted=" << r.predicted_supported
           << " (all imaginary: " << r.predicted_all << ") actual=" << r.actual << (r.match ? " match" : " MISMATCH")
           << "\n";
    }
    os << matches << "/" << records.size() << " instances match\n";
    return {os.str(), ""};
}

Output run_witt(const Options& o) {
    DimVector d;
    for (auto piece : parse_names(o.dim)) {
        try {
            d.entries.push_back(std::stoll(piece));
        } catch (const std::exception&) {
            throw InputError("invalid dimension entry '" + piece + "'");
        }
    }
    const Integer w = witt_dim(d.entries);
    if (!o.json) return {w.get_str() + "\n", ""};
    return {dump({{"dim", d.entries}, {"witt", w.get_str()}}), ""};
}

Output run_distribution(const Options& o, const Quiver& q) {
    const DimVector d = parse_dim(q, o.dim);
    const Poly a = kac_direct(q, d, o.check).poly;
    std::vector<Parity> parities;
    if (o.parity == "even" || o.parity == "both") parities.push_back(Parity::even);
    if (o.parity == "odd" || o.parity == "both") parities.push_back(Parity::odd);
    if (parities.empty()) throw InputError("--parity must be even, odd or both");
    std::vector<CoeffGraph> graphs;
    for (Parity p : parities) graphs.push_back(coefficient_graph(a, p));
    std::ostringstream csv;
    write_distribution_csv(csv, graphs);
    Output out;
    if (!o.csv.empty()) out.csv = csv.str();
    if (o.json) {
        Json gs = Json::array();
        Json uni = Json::array();
        for (const auto& g : graphs) {
            gs.push_back(graph_to_json(g));
            const auto u = unimodality_check(a, g.parity);
            uni.push_back({{"parity", parity_name(g.parity)}, {"unimodal", u.unimodal}, {"peak_index", u.peak_index}});
        }
        out.out = dump({{"poly", poly_record(a)}, {"graphs", gs}, {"unimodality", uni}});
    } else if (o.csv.empty()) {
        out.out = csv.str();
    } else {
        std::ostringstream os;
        for (const auto& g : graphs) {
            const auto u = unimodality_check(a, g.parity);
            os << parity_name(g.parity) << ": " << g.points.size() << " points, "
               << (u.unimodal ? "unimodal" : "NOT UNIMODAL") << ", peak index " << u.peak_index << "\n";
        }
        out.out = os.str();
    }
    return out;
}

Output run_counts(const Options& o, const Quiver& q) {
    const DimVector box = parse_dim(q, o.dim);
    CountKind kind;
    if (o.which == "M")
        kind = CountKind::M;
    else if (o.which == "I")
        kind = CountKind::I;
    else
        throw InputError("--which must be M or I");
    const auto counts = counts_from_A(q, box, kind);
    if (o.json) {
        Json rows = Json::array();
        for (const auto& [d, p] : counts) rows.push_back({{"dim", d.entries}, {"text", p.to_string()}, {"poly", poly_record(p)}});
        return {dump({{"which", o.which}, {"counts", rows}}), ""};
    }
    std::ostringstream os;
    for (const auto& [d, p] : counts) os << "d=(" << d.to_string() << "): " << p << "\n";
    return {os.str(), ""};
}

std::string cache_material(const std::string& command, const Options& o, const Quiver* q) {
    Json m = {{"command", command},
              {"quiver", q ? q->canonical_string() : ""},
              {"dim", o.dim},
              {"path", o.path},
              {"vary", o.vary},
              {"target", o.target},
              {"direction", o.direction},
              {"base", o.base},
              {"assume_direction_free", o.assume_direction_free},
              {"order", o.order},
              {"upto", o.upto},
              {"dim_box", o.dim_box},
              {"n_box", o.n_box},
              {"parity", o.parity},
              {"which", o.which},
              {"json", o.json},
              {"csv", !o.csv.empty()},
              {"check", o.check}};
    return m.dump();
}

int run(const std::string& command, const Options& o) {
    ParamElement::set_term_cap(o.term_cap);
    Quiver q;
    const bool needs_quiver = command != "witt";
    if (needs_quiver) q = load_quiver(o.quiver_file);

    ResultCache cache(o.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(o.cache_dir),
                      !o.no_cache);
    const std::string key = ResultCache::key(cache_material(command, o, needs_quiver ? &q : nullptr));
    Output out;
    std::optional<Output> cached;
    if (auto hit = cache.get(key)) {
        try {
            cached = output_from_json(Json::parse(*hit));
        } catch (const nlohmann::json::exception&) {
            cached.reset();
        }
    }
    if (cached) {
        out = *cached;
    } else {
        if (command == "compute") out = run_compute(o, q);
        else if (command == "param") out = run_param(o, q);
        else if (command == "limit") out = run_limit(o, q);
        else if (command == "reciprocal") out = run_reciprocal(o, q);
        else if (command == "rate") out = run_rate(o, q);
        else if (command == "valuation") out = run_valuation(o, q);
        else if (command == "witt") out = run_witt(o);
        else if (command == "distribution") out = run_distribution(o, q);
        else if (command == "counts") out = run_counts(o, q);
        cache.put(key, output_to_json(out).dump());
    }
    if (!o.csv.empty()) {
        std::ofstream f(o.csv, std::ios::binary | std::ios::trunc);
        if (!f) throw InputError("cannot write CSV file '" + o.csv + "'");
        f << out.csv;
    }
    std::cout << out.out;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kac polynomials of quivers, their parametric decompositions and limits"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--cache-dir", o.cache_dir, "Cache directory (default $XDG_CACHE_HOME/kacpoly or ~/.cache/kacpoly)");
    app.add_flag("--no-cache", o.no_cache, "Neither read nor write the cache");
    app.add_flag("--json", o.json, "Structured output");
    app.add_option("--csv", o.csv, "Write CSV data to this file (distribution)");
    app.add_option("--order", o.order, "Truncation order of series output")->check(CLI::NonNegativeNumber);
    app.add_flag("--check", o.check, "Verify invariants of computed polynomials");
    app.add_option("--jobs", o.jobs, "Worker threads for grid commands")->check(CLI::PositiveNumber);
    app.add_option("--term-cap", o.term_cap, "Largest allowed parametric term count")->check(CLI::PositiveNumber);

    auto add_quiver = [&](CLI::App* sub) { sub->add_option("quiver", o.quiver_file, "Quiver file")->required(); };
    auto add_limit_options = [&](CLI::App* sub) {
        sub->add_option("--dim", o.dim, "Dimension vector, e.g. 2,3")->required();
        sub->add_option("--vary", o.vary, "Comma-separated arrows whose multiplicity varies")->required();
        sub->add_option("--path", o.path, "moebius (default) or plethystic");
        sub->add_option("--target", o.target, "Per-arrow limit multiplicities, 'inf' for infinity");
        sub->add_option("--direction", o.direction, "Ray along which multiplicities grow");
        sub->add_option("--base", o.base, "Starting point of the ray (default all zero)");
        sub->add_flag("--assume-direction-free", o.assume_direction_free,
                      "Accept componentwise limits on quivers with loops (direction independence is conjectural)");
    };

    auto* compute = app.add_subcommand("compute", "Kac polynomial A_{Q,d}(q)");
    add_quiver(compute);
    compute->add_option("--dim", o.dim, "Dimension vector, e.g. 2,3")->required();
    compute->add_option("--path", o.path, "moebius (default) or plethystic");

    auto* param = app.add_subcommand("param", "Decomposition in the varying multiplicities");
    add_quiver(param);
    param->add_option("--dim", o.dim, "Dimension vector")->required();
    param->add_option("--vary", o.vary, "Comma-separated varying arrows")->required();
    param->add_option("--path", o.path, "moebius (default) or plethystic");

    auto* limit = app.add_subcommand("limit", "Limit power series of renormalized Kac polynomials");
    add_quiver(limit);
    add_limit_options(limit);

    auto* reciprocal = app.add_subcommand("reciprocal", "Limit of q^deg A(1/q)");
    add_quiver(reciprocal);
    add_limit_options(reciprocal);

    auto* rate = app.add_subcommand("rate", "Predicted and measured convergence rate");
    add_quiver(rate);
    add_limit_options(rate);
    rate->add_option("--upto", o.upto, "Largest path parameter to measure")->check(CLI::PositiveNumber);

    auto* valuation = app.add_subcommand("valuation", "Valuation report over a grid");
    add_quiver(valuation);
    valuation->add_option("--dim-box", o.dim_box, "Largest dimension vector")->required();
    valuation->add_option("--n-box", o.n_box, "Largest multiplicity factor per arrow")->check(CLI::PositiveNumber);

    auto* witt = app.add_subcommand("witt", "Witt dimension of a free Lie algebra graded piece");
    witt->add_option("--dim", o.dim, "Multidegree, e.g. 4,4")->required();

    auto* distribution = app.add_subcommand("distribution", "Renormalized coefficient graphs");
    add_quiver(distribution);
    distribution->add_option("--dim", o.dim, "Dimension vector")->required();
    distribution->add_option("--parity", o.parity, "even, odd or both");

    auto* counts = app.add_subcommand("counts", "Counts of all (M) or indecomposable (I) representations");
    add_quiver(counts);
    counts->add_option("--box", o.dim, "Largest dimension vector")->required();
    counts->add_option("--which", o.which, "M or I");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ComputationError& e) {
        std::cerr << "error (" << command << "): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
