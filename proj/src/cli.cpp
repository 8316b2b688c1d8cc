#include "glspec/cli.hpp"

#include "glspec/canonical.hpp"
#include "glspec/families.hpp"
#include "glspec/graph.hpp"
#include "glspec/graph6.hpp"
#include "glspec/spectra.hpp"
#include "glspec/sturm.hpp"
#include "glspec/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace glspec {

namespace {

using nlohmann::ordered_json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

long long coeff_ll(const BigInt& c) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
        throw std::domain_error("coefficient exceeds 64-bit range");
    return c.convert_to<long long>();
}

struct TargetOpts {
    std::string g6;
    std::string family;
    bool single() const { return !g6.empty() || !family.empty(); }
};

void add_target(CLI::App* sub, TargetOpts& t) {
    auto* og = sub->add_option("--g6", t.g6, "graph6 string of the target graph");
    auto* of = sub->add_option("--family", t.family, "family spec, e.g. K(2,3) or Y(8,3)");
    og->excludes(of);
}

// Applies fn to the target graph, or to every graph6 line on stdin when
// no target option was given; returns the worst exit code.
int for_each_target(const TargetOpts& t, std::istream& in, std::ostream& err,
                    const std::function<int(const Graph&)>& fn) {
    if (!t.g6.empty()) return fn(parse_graph6(t.g6));
    if (!t.family.empty()) return fn(make(t.family));
    int worst = 0;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            worst = std::max(worst, fn(parse_graph6(line)));
        } catch (const std::exception& e) {
            err << "line " << lineno << ": " << e.what() << "\n";
            return 2;
        }
    }
    return worst;
}

void emit(std::ostream& out, const ordered_json& j, bool single) {
    out << (single ? j.dump(2) : j.dump()) << "\n";
}

ordered_json classification_json(const Classification& c) {
    return {{"m", c.m},
            {"label", label_name(c.label)},
            {"matched", c.matched.empty() ? ordered_json() : ordered_json(c.matched)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Laplacian spectra of graphs: exact eigenvalue counts, girth "
                 "bounds, and exhaustive small-order verification"};
    app.require_subcommand(1);
    int code = 0;

    bool json = false;
    TargetOpts target;
    std::string interval_text, family_text;
    bool family_emit = false;
    int opt_k = 1, opt_n = 0, jobs = 1, nmax = 7;

    auto* spectrum = app.add_subcommand("spectrum", "numeric Laplacian eigenvalues");
    add_target(spectrum, target);
    spectrum->add_flag("--json", json, "JSON output");
    spectrum->callback([&] {
        code = for_each_target(target, in, err, [&](const Graph& g) {
            Spectrum s = eigenvalues_numeric(g);
            if (json) {
                ordered_json values = ordered_json::array();
                for (double v : s) values.push_back(std::stod(fmt12(v)));
                emit(out, {{"order", g.order()}, {"eigenvalues", values}}, target.single());
            } else {
                for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << fmt12(s[i]);
                out << "\n";
            }
            return 0;
        });
    });

    auto* charpoly_cmd = app.add_subcommand("charpoly", "exact Laplacian characteristic polynomial");
    add_target(charpoly_cmd, target);
    charpoly_cmd->add_flag("--json", json, "JSON output");
    charpoly_cmd->callback([&] {
        code = for_each_target(target, in, err, [&](const Graph& g) {
            IntPoly p = charpoly(g);
            if (json) {
                ordered_json coeffs = ordered_json::array();
                for (const auto& c : p.coeffs()) coeffs.push_back(coeff_ll(c));
                emit(out, {{"coefficients", coeffs}, {"text", p.to_string()}}, target.single());
            } else {
                out << p.to_string() << "\n";
            }
            return 0;
        });
    });

    auto* girth_cmd = app.add_subcommand("girth", "length of a shortest cycle");
    add_target(girth_cmd, target);
    girth_cmd->add_flag("--json", json, "JSON output");
    girth_cmd->callback([&] {
        code = for_each_target(target, in, err, [&](const Graph& g) {
            auto gir = girth(g);
            if (json)
                emit(out, {{"girth", gir ? ordered_json(*gir) : ordered_json()}}, target.single());
            else
                out << (gir ? std::to_string(*gir) : "none") << "\n";
            return 0;
        });
    });

    auto* count_cmd =
        app.add_subcommand("count", "exact number of Laplacian eigenvalues in an interval");
    add_target(count_cmd, target);
    count_cmd->add_option("--interval", interval_text,
                          "interval, e.g. \"[4,5]\", \"(2,inf)\", \"[n-g+2,n]\"")
        ->required();
    count_cmd->add_flag("--json", json, "JSON output");
    count_cmd->callback([&] {
        code = for_each_target(target, in, err, [&](const Graph& g) {
            std::map<std::string, BigRat> vars{{"n", BigRat(g.order())}};
            if (auto gir = girth(g)) vars["g"] = BigRat(*gir);
            IntervalSpec iv = IntervalSpec::parse(interval_text, vars);
            int m = m_interval(g, iv);
            if (json)
                emit(out, {{"interval", iv.text()}, {"count", m}}, target.single());
            else
                out << m << "\n";
            return 0;
        });
    });

    std::string catalog;
    for (const auto& name : family_names()) catalog += (catalog.empty() ? "" : " ") + name;
    auto* family_cmd = app.add_subcommand("family", "construct a named graph");
    family_cmd->add_option("spec", family_text,
                           "family spec, e.g. K(2,3) or Y(8,3); names: " + catalog)
        ->required();
    family_cmd->add_flag("--emit", family_emit, "print only the graph6 string");
    family_cmd->add_flag("--json", json, "JSON output");
    family_cmd->callback([&] {
        Graph g = make(family_text);
        auto gir = girth(g);
        if (family_emit) {
            out << emit_graph6(g) << "\n";
        } else if (json) {
            emit(out,
                 {{"family", FamilySpec::parse(family_text).text()},
                  {"order", g.order()},
                  {"size", g.size()},
                  {"girth", gir ? ordered_json(*gir) : ordered_json()},
                  {"graph6", emit_graph6(g)},
                  {"canonical", canonical_form(g)}},
                 true);
        } else {
            out << "order=" << g.order() << " size=" << g.size() << " girth="
                << (gir ? std::to_string(*gir) : "none") << " graph6=" << emit_graph6(g) << "\n";
        }
    });

    auto* verify_cmd = app.add_subcommand("verify", "check one graph or identity");
    verify_cmd->require_subcommand(1);

    auto* verify_gen = verify_cmd->add_subcommand("gen", "girth bound on one graph");
    add_target(verify_gen, target);
    verify_gen->add_option("--k", opt_k, "bound index k")->check(CLI::PositiveNumber);
    verify_gen->add_flag("--json", json, "JSON output");
    verify_gen->callback([&] {
        code = for_each_target(target, in, err, [&](const Graph& g) {
            GirthBoundResult r = check_girth_bound(g, opt_k);
            if (json)
                emit(out,
                     {{"n", r.n},
                      {"girth", r.girth_value},
                      {"k", r.k},
                      {"count", r.count},
                      {"bound", r.bound},
                      {"holds", r.holds},
                      {"is_equality", r.is_equality}},
                     target.single());
            else
                out << "n=" << r.n << " girth=" << r.girth_value << " k=" << r.k
                    << " count=" << r.count << " bound=" << r.bound
                    << " holds=" << (r.holds ? "yes" : "no")
                    << " equality=" << (r.is_equality ? "yes" : "no") << "\n";
            return r.holds ? 0 : 1;
        });
    });

    auto* verify_thr = verify_cmd->add_subcommand("thr", "girth-3 classification of one graph");
    add_target(verify_thr, target);
    verify_thr->add_flag("--json", json, "JSON output");
    verify_thr->callback([&] {
        code = for_each_target(target, in, err, [&](const Graph& g) {
            Classification mult = classify_girth3(g, ThrWhich::MULT_N);
            Classification top = classify_girth3(g, ThrWhich::TOP_INTERVAL);
            if (json) {
                emit(out,
                     {{"mult_n", classification_json(mult)},
                      {"top_interval", classification_json(top)}},
                     target.single());
            } else {
                auto line = [&](const char* name, const Classification& c) {
                    out << name << " m=" << c.m << " label=" << label_name(c.label);
                    if (!c.matched.empty()) out << " matched=" << c.matched;
                    out << "\n";
                };
                line("mult_n", mult);
                line("top_interval", top);
            }
            int n = g.order();
            auto unexplained = [&](const Classification& c) {
                return c.m >= n - 3 && c.label == ClassificationLabel::OTHER;
            };
            return unexplained(mult) || unexplained(top) ? 1 : 0;
        });
    });

    auto* verify_y1 = verify_cmd->add_subcommand("y1", "factorization identity of the double-pendant cycle");
    verify_y1->add_option("--n", opt_n, "order")->required();
    verify_y1->add_flag("--json", json, "JSON output");
    verify_y1->callback([&] {
        Y1Report r = y1_factorization_report(opt_n);
        if (json)
            out << r.to_json() << "\n";
        else
            out << "n=" << r.n << " divisible=" << (r.divisible ? "yes" : "no")
                << " recursion=" << (r.recursion_identity ? "yes" : "no")
                << " factor=" << (r.factor_match ? "yes" : "no")
                << " mu2=" << (r.odd_mu2_match ? "yes" : "no")
                << " pass=" << (r.pass ? "yes" : "no") << "\n";
        code = r.pass ? 0 : 1;
    });

    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive sweep over connected graphs");
    sweep_cmd->require_subcommand(1);

    auto sweep_common = [&](CLI::App* sub, bool with_k) {
        sub->add_option("--n", opt_n, "graph order")->required();
        if (with_k) sub->add_option("--k", opt_k, "bound index k")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--json", json, "JSON output");
    };

    auto print_report = [&](const TheoremReport& r) {
        if (json) {
            out << r.to_json() << "\n";
        } else {
            out << "theorem=" << r.theorem_id;
            for (const auto& [key, value] : r.parameters) out << " " << key << "=" << value;
            out << " checked=" << r.graphs_checked << " violations=" << r.violations.size()
                << " witnesses=" << r.equality_witnesses.size()
                << " match=" << (r.match ? "yes" : "no") << "\n";
            for (const auto& w : r.violations) out << "violation " << w << "\n";
            for (const auto& w : r.equality_witnesses) out << "witness " << w << "\n";
        }
        code = r.match ? 0 : 1;
    };

    auto* sweep_gen = sweep_cmd->add_subcommand("gen", "girth bound and equality class");
    sweep_common(sweep_gen, true);
    sweep_gen->callback([&] { print_report(exhaustive_equality_search(opt_n, opt_k, jobs)); });

    auto* sweep_thr = sweep_cmd->add_subcommand("thr", "girth-3 eigenvalue-count classes");
    sweep_common(sweep_thr, false);
    sweep_thr->callback([&] {
        ThrReport r = exhaustive_thr(opt_n, jobs);
        if (json) {
            out << r.to_json() << "\n";
        } else {
            out << "theorem=THR_G3 n=" << r.n << " checked=" << r.graphs_checked
                << " match=" << (r.match ? "yes" : "no") << "\n";
            for (const auto& s : r.sections)
                out << (s.which == ThrWhich::MULT_N ? "mult_n" : "top_interval")
                    << " target=" << s.target << " observed=" << s.observed.size()
                    << " expected=" << s.expected_canonical.size()
                    << " match=" << (s.match ? "yes" : "no") << "\n";
        }
        code = r.match ? 0 : 1;
    });

    auto* sweep_y1 = sweep_cmd->add_subcommand(
        "y1", "exploratory: top-segment count n-g-1 among girth >= 5 graphs");
    sweep_common(sweep_y1, false);
    sweep_y1->callback([&] { print_report(exploratory_y1_search(opt_n, jobs)); });

    auto* lemmas_cmd = app.add_subcommand("lemmas", "eigenvalue lemma suite over small graphs");
    lemmas_cmd->add_option("--nmax", nmax, "largest order to sweep");
    lemmas_cmd->add_flag("--json", json, "JSON output");
    lemmas_cmd->callback([&] {
        LemmaSuiteReport r = lemma_suite(nmax);
        if (json) {
            out << r.to_json() << "\n";
        } else {
            for (const auto& item : r.results)
                out << item.id << " cases=" << item.cases_checked
                    << " counterexamples=" << item.counterexamples.size()
                    << " pass=" << (item.pass ? "yes" : "no") << "\n";
            out << "all_pass=" << (r.all_pass ? "yes" : "no") << "\n";
        }
        code = r.all_pass ? 0 : 1;
    });

    std::vector<const char*> argv{"glspec"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int parse_code = app.exit(e, out, err);
        return parse_code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

}  // namespace glspec
