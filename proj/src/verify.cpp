#include "glspec/verify.hpp"

#include "glspec/canonical.hpp"
#include "glspec/enumerate.hpp"
#include "glspec/graph6.hpp"
#include "glspec/jacobi.hpp"
#include "glspec/spectra.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

namespace glspec {

namespace {

using nlohmann::ordered_json;

// Runs fn(state, i) for i in [0, count) across at most jobs threads,
// each with its own accumulator state.
template <typename State, typename Fn>
std::vector<State> run_parallel(size_t count, int jobs, Fn&& fn) {
    size_t threads = std::max(1, jobs);
    threads = std::min(threads, count ? count : 1);
    std::vector<State> states(threads);
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(states[0], i);
        return states;
    }
    std::atomic<size_t> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (size_t i; (i = cursor.fetch_add(1)) < count;) fn(states[t], i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return states;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// The equality class of the girth bound for k = 1 and k = 2.
std::vector<FamilySpec> gen_expected(int n, int k) {
    if (k == 1) {
        if (n == 5) return {{"K", {2, 3}}, {"U", {5}}};
        return {{"U", {n}}};
    }
    if (k == 2) {
        if (n == 6) return {{"K", {2, 4}}, {"K23Star", {}}};
        if (n == 7) return {{"K23DoubleStar", {}}, {"Y", {7, 3}}};
        if (n == 8) return {{"K23TripleStar", {}}, {"Y", {8, 4}}};
        std::vector<FamilySpec> out;
        for (int i = 3; i <= n / 2; ++i) out.push_back({"Y", {n, i}});
        return out;
    }
    return {};
}

struct CatalogEntry {
    Graph graph;
    ClassificationLabel label;
    std::string text;
};

Graph complete_graph(int n) { return make(FamilySpec{"K", {n}}); }

// Families with the stated eigenvalue count m on the given path, for
// connected girth-3 graphs of order n.
std::vector<CatalogEntry> thr_catalog(int n, ThrWhich which, int m) {
    std::vector<CatalogEntry> out;
    int drop = n - m;
    if (drop == 1) {
        out.push_back({complete_graph(n), ClassificationLabel::Kn, "K(" + std::to_string(n) + ")"});
        return out;
    }
    if (which == ThrWhich::MULT_N) {
        if (drop == 2)
            out.push_back({delete_edges(complete_graph(n), {{0, 1}}), ClassificationLabel::Kn_minus_e,
                           "K(" + std::to_string(n) + ")-e"});
        if (drop == 3) {
            out.push_back({join(complete_graph(n - 3), Graph(3)), ClassificationLabel::THREE_JOIN,
                           "K(" + std::to_string(n - 3) + ")v3K1"});
            out.push_back({join(complete_graph(n - 3), disjoint_union(Graph(1), complete_graph(2))),
                           ClassificationLabel::THREE_JOIN,
                           "K(" + std::to_string(n - 3) + ")v(K1+K2)"});
            out.push_back({join(complete_graph(n - 4), make(FamilySpec{"C", {4}})),
                           ClassificationLabel::THREE_JOIN, "K(" + std::to_string(n - 4) + ")vC4"});
        }
        return out;
    }
    if (drop == 2)
        for (int s = 1; s <= n - 2; ++s)
            out.push_back({make(FamilySpec{"KnMinusStar", {n, s}}), ClassificationLabel::KN_MINUS_STAR,
                           FamilySpec{"KnMinusStar", {n, s}}.text()});
    if (drop == 3) {
        auto add = [&](FamilySpec spec, ClassificationLabel label) {
            out.push_back({make(spec), label, spec.text()});
        };
        add({"H", {n}}, ClassificationLabel::H);
        for (int a = 1; a <= (n - 4) / 2; ++a) add({"H", {n, a}}, ClassificationLabel::HA);
        for (int s = 2; s <= n - 2; ++s) add({"FamilyA", {n, s}}, ClassificationLabel::A);
        for (int s = 1; s <= n - 3; ++s)
            for (int t = 1; t <= std::min(s, n - 2 - s); ++t)
                add({"FamilyB", {n, s, t}}, ClassificationLabel::B);
        for (int s = 2; s <= n - 2; ++s)
            for (int t = 1; t <= std::min(s - 1, n - 1 - s); ++t)
                add({"FamilyC", {n, s, t}}, ClassificationLabel::C);
    }
    return out;
}

std::string which_name(ThrWhich which) {
    return which == ThrWhich::MULT_N ? "mult_n" : "top_interval";
}

ordered_json report_json(const TheoremReport& r) {
    ordered_json j;
    j["theorem_id"] = r.theorem_id;
    j["parameters"] = r.parameters;
    j["graphs_checked"] = r.graphs_checked;
    j["violations"] = r.violations;
    j["equality_witnesses"] = r.equality_witnesses;
    j["expected_witnesses"] = r.expected_witnesses;
    j["expected_canonical"] = r.expected_canonical;
    j["open_equality_class"] = r.open_equality_class;
    j["match"] = r.match;
    return j;
}

}  // namespace

GirthBoundResult check_girth_bound(const Graph& g, int k) {
    int n = g.order();
    if (!is_connected(g)) throw std::invalid_argument("check_girth_bound: graph is not connected");
    auto gir = girth(g);
    if (!gir) throw std::invalid_argument("check_girth_bound: graph is acyclic");
    if (*gir < 4)
        throw std::invalid_argument("check_girth_bound: girth " + std::to_string(*gir) +
                                    " is below 4");
    int k_max = std::min(*gir - 1, n - *gir);
    if (k < 1 || k > k_max)
        throw std::invalid_argument("check_girth_bound: k=" + std::to_string(k) +
                                    " outside 1..min(girth-1, n-girth)=" + std::to_string(k_max));
    GirthBoundResult res;
    res.n = n;
    res.girth_value = *gir;
    res.k = k;
    res.bound = n - *gir;
    res.count = m_interval(g, IntervalSpec::closed(n - *gir - k + 4, n));
    res.holds = res.count <= res.bound;
    res.is_equality = res.count == res.bound;
    return res;
}

std::string TheoremReport::to_json() const { return report_json(*this).dump(2); }

TheoremReport exhaustive_equality_search(int n, int k, int jobs) {
    if (k < 1) throw std::invalid_argument("exhaustive_equality_search: k must be positive");
    auto graphs = connected_graphs(n);
    struct State {
        long long checked = 0;
        std::vector<std::string> violations, witnesses;
    };
    auto states = run_parallel<State>(graphs.size(), jobs, [&](State& st, size_t i) {
        const Graph& g = graphs[i];
        auto gir = girth(g);
        if (!gir || *gir < 4) return;
        if (k > std::min(*gir - 1, n - *gir)) return;
        ++st.checked;
        int m = m_interval(g, IntervalSpec::closed(n - *gir - k + 4, n));
        if (m > n - *gir)
            st.violations.push_back(emit_graph6(g));
        else if (m == n - *gir)
            st.witnesses.push_back(emit_graph6(g));
    });
    TheoremReport rep;
    rep.theorem_id = "GEN_K";
    rep.parameters = {{"n", n}, {"k", k}};
    for (auto& st : states) {
        rep.graphs_checked += st.checked;
        rep.violations.insert(rep.violations.end(), st.violations.begin(), st.violations.end());
        rep.equality_witnesses.insert(rep.equality_witnesses.end(), st.witnesses.begin(),
                                      st.witnesses.end());
    }
    rep.violations = sorted(std::move(rep.violations));
    rep.equality_witnesses = sorted(std::move(rep.equality_witnesses));
    for (const auto& spec : gen_expected(n, k)) {
        rep.expected_witnesses.push_back(spec.text());
        rep.expected_canonical.push_back(canonical_form(make(spec)));
    }
    rep.expected_canonical = sorted_unique(std::move(rep.expected_canonical));
    rep.open_equality_class = k >= 3;
    rep.match = rep.violations.empty() &&
                (rep.open_equality_class || rep.equality_witnesses == rep.expected_canonical);
    return rep;
}

TheoremReport exploratory_y1_search(int n, int jobs) {
    auto graphs = connected_graphs(n);
    struct State {
        long long checked = 0;
        std::vector<std::string> violations, witnesses;
    };
    auto states = run_parallel<State>(graphs.size(), jobs, [&](State& st, size_t i) {
        const Graph& g = graphs[i];
        auto gir = girth(g);
        if (!gir || *gir < 4 || *gir > n - 2) return;
        ++st.checked;
        int m = m_interval(g, IntervalSpec::closed(n - *gir + 3, n));
        if (m > n - *gir - 1)
            st.violations.push_back(emit_graph6(g));
        else if (*gir >= 5 && m == n - *gir - 1)
            st.witnesses.push_back(emit_graph6(g));
    });
    TheoremReport rep;
    rep.theorem_id = "Y1_UNIQUE";
    rep.parameters = {{"n", n}};
    for (auto& st : states) {
        rep.graphs_checked += st.checked;
        rep.violations.insert(rep.violations.end(), st.violations.begin(), st.violations.end());
        rep.equality_witnesses.insert(rep.equality_witnesses.end(), st.witnesses.begin(),
                                      st.witnesses.end());
    }
    rep.violations = sorted(std::move(rep.violations));
    rep.equality_witnesses = sorted(std::move(rep.equality_witnesses));
    if (n >= 7) {
        FamilySpec y{"Y", {n, 1}};
        rep.expected_witnesses.push_back(y.text());
        rep.expected_canonical.push_back(canonical_form(make(y)));
    }
    rep.match = rep.violations.empty() && rep.equality_witnesses == rep.expected_canonical;
    return rep;
}

std::string label_name(ClassificationLabel label) {
    switch (label) {
        case ClassificationLabel::Kn: return "Kn";
        case ClassificationLabel::Kn_minus_e: return "Kn_minus_e";
        case ClassificationLabel::THREE_JOIN: return "THREE_JOIN";
        case ClassificationLabel::KN_MINUS_STAR: return "KN_MINUS_STAR";
        case ClassificationLabel::A: return "A";
        case ClassificationLabel::B: return "B";
        case ClassificationLabel::C: return "C";
        case ClassificationLabel::H: return "H";
        case ClassificationLabel::HA: return "HA";
        case ClassificationLabel::OTHER: return "OTHER";
    }
    return "OTHER";
}

Classification classify_girth3(const Graph& g, ThrWhich which) {
    int n = g.order();
    if (n < 5) throw std::invalid_argument("classify_girth3: order below 5");
    if (!is_connected(g)) throw std::invalid_argument("classify_girth3: graph is not connected");
    if (girth(g) != std::optional<int>(3))
        throw std::invalid_argument("classify_girth3: girth is not 3");
    Classification out;
    out.m = which == ThrWhich::MULT_N
                ? m_interval(g, IntervalSpec::singleton(n))
                : m_interval(g, IntervalSpec::closed(n - 1, n));
    if (out.m < n - 3 || out.m > n - 1) return out;
    std::string canon = canonical_form(g);
    for (const auto& entry : thr_catalog(n, which, out.m)) {
        if (canonical_form(entry.graph) == canon) {
            out.label = entry.label;
            out.matched = entry.text;
            return out;
        }
    }
    return out;
}

std::string ThrReport::to_json() const {
    ordered_json j;
    j["theorem_id"] = "THR_G3";
    j["parameters"] = {{"n", n}};
    j["graphs_checked"] = graphs_checked;
    j["sections"] = ordered_json::array();
    for (const auto& s : sections) {
        ordered_json sec;
        sec["which"] = which_name(s.which);
        sec["target"] = s.target;
        sec["expected_witnesses"] = s.expected_witnesses;
        sec["expected_canonical"] = s.expected_canonical;
        sec["observed"] = s.observed;
        sec["match"] = s.match;
        j["sections"].push_back(std::move(sec));
    }
    j["match"] = match;
    return j.dump(2);
}

ThrReport exhaustive_thr(int n, int jobs) {
    if (n < 5) throw std::invalid_argument("exhaustive_thr: order below 5");
    auto graphs = connected_graphs(n);
    struct State {
        long long checked = 0;
        std::vector<std::string> observed[2][3];  // [which][n-1-m]
    };
    auto states = run_parallel<State>(graphs.size(), jobs, [&](State& st, size_t i) {
        const Graph& g = graphs[i];
        if (girth(g) != std::optional<int>(3)) return;
        ++st.checked;
        IntPoly p = charpoly(g);
        int m1 = count_in_interval(p, IntervalSpec::singleton(n));
        int m2 = count_in_interval(p, IntervalSpec::closed(n - 1, n));
        if (m1 >= n - 3 && m1 <= n - 1) st.observed[0][n - 1 - m1].push_back(emit_graph6(g));
        if (m2 >= n - 3 && m2 <= n - 1) st.observed[1][n - 1 - m2].push_back(emit_graph6(g));
    });
    ThrReport rep;
    rep.n = n;
    rep.match = true;
    for (int w = 0; w < 2; ++w) {
        ThrWhich which = w == 0 ? ThrWhich::MULT_N : ThrWhich::TOP_INTERVAL;
        for (int drop = 1; drop <= 3; ++drop) {
            ThrSection sec;
            sec.which = which;
            sec.target = n - drop;
            for (const auto& st : states)
                sec.observed.insert(sec.observed.end(), st.observed[w][drop - 1].begin(),
                                    st.observed[w][drop - 1].end());
            sec.observed = sorted(std::move(sec.observed));
            for (const auto& entry : thr_catalog(n, which, n - drop)) {
                sec.expected_witnesses.push_back(entry.text);
                sec.expected_canonical.push_back(canonical_form(entry.graph));
            }
            sec.expected_canonical = sorted_unique(std::move(sec.expected_canonical));
            sec.match = sec.observed == sec.expected_canonical;
            rep.match = rep.match && sec.match;
            rep.sections.push_back(std::move(sec));
        }
    }
    for (const auto& st : states) rep.graphs_checked += st.checked;
    return rep;
}

std::string Y1Report::to_json() const {
    ordered_json j;
    j["n"] = n;
    j["divisible"] = divisible;
    j["recursion_identity"] = recursion_identity;
    j["factor_match"] = factor_match;
    j["odd_mu2_match"] = odd_mu2_match;
    j["pass"] = pass;
    return j.dump(2);
}

Y1Report y1_factorization_report(int n) {
    if (n < 6 || n > kCharpolyBound)
        throw std::invalid_argument("y1 factorization: n outside 6.." +
                                    std::to_string(kCharpolyBound));
    Y1Report rep;
    rep.n = n;
    Graph y = make(FamilySpec{"Y", {n, 1}});
    Graph u = make(FamilySpec{"U", {n - 1}});
    Graph c = make(FamilySpec{"C", {n - 2}});
    IntPoly phi_y = charpoly(y);
    IntPoly phi_u = charpoly(u);
    IntPoly phi_c = charpoly(c);
    IntPoly phi_u1 = charpoly_vertex_deleted(u, 0);
    IntPoly phi_c1 = charpoly_vertex_deleted(c, 0);
    IntPoly x = IntPoly::x();
    IntPoly xm1 = x - IntPoly::constant(1);
    rep.recursion_identity = phi_y == phi_u * xm1 - phi_u1 * x &&
                             phi_u == phi_c * xm1 - phi_c1 * x &&
                             phi_u1 == xm1 * phi_c1 &&
                             phi_y == xm1 * xm1 * phi_c - (xm1 * x * phi_c1) * BigInt(2);
    IntPoly quotient;
    try {
        quotient = divide_exact(phi_y, x * xm1);
        rep.divisible = true;
    } catch (const std::domain_error&) {
        rep.divisible = false;
    }

    // Numeric expansion of (x-1) prod (x-2+2cos(2i pi/(n-2))) minus
    // 2 prod (x-2+2cos(i pi/(n-2))).
    int m = n - 2;
    auto expand = [](const std::vector<double>& roots) {
        std::vector<double> c{1.0};
        for (double r : roots) {
            std::vector<double> next(c.size() + 1, 0.0);
            for (size_t i = 0; i < c.size(); ++i) {
                next[i + 1] += c[i];
                next[i] -= r * c[i];
            }
            c = std::move(next);
        }
        return c;
    };
    std::vector<double> roots1{1.0}, roots2;
    for (int i = 1; i <= m - 1; ++i) {
        roots1.push_back(2 - 2 * std::cos(2 * i * std::numbers::pi / m));
        roots2.push_back(2 - 2 * std::cos(i * std::numbers::pi / m));
    }
    std::vector<double> f = expand(roots1);
    std::vector<double> f2 = expand(roots2);
    for (size_t i = 0; i < f2.size(); ++i) f[i] -= 2 * f2[i];

    if (rep.divisible) {
        double scale = 1;
        for (const auto& coeff : quotient.coeffs())
            scale = std::max(scale, std::abs(static_cast<double>(coeff)));
        bool coeffs_ok = static_cast<int>(f.size()) == quotient.degree() + 1;
        if (coeffs_ok)
            for (size_t i = 0; i < f.size(); ++i)
                coeffs_ok = coeffs_ok &&
                            std::abs(f[i] - static_cast<double>(quotient.coeffs()[i])) <=
                                1e-8 * scale;
        // The quotient's numeric roots are the spectrum without one 0
        // and one 1; f must vanish at each of them.
        Spectrum spec = eigenvalues_numeric(y);
        auto drop_closest = [&](double target) {
            auto it = std::min_element(spec.begin(), spec.end(), [&](double a, double b) {
                return std::abs(a - target) < std::abs(b - target);
            });
            spec.erase(it);
        };
        drop_closest(0.0);
        drop_closest(1.0);
        bool roots_ok = true;
        for (double mu : spec) {
            double value = 0;
            for (size_t i = f.size(); i-- > 0;) value = value * mu + f[i];
            double envelope = 0;
            double p = 1;
            for (size_t i = 0; i < f.size(); ++i) {
                envelope += std::abs(f[i]) * p;
                p *= std::abs(mu);
            }
            roots_ok = roots_ok && std::abs(value) <= 1e-8 * std::max(1.0, envelope);
        }
        rep.factor_match = coeffs_ok && roots_ok;
    }
    if (n % 2 == 1) {
        double closed = 2 + 2 * std::cos(std::numbers::pi / (n - 2));
        rep.odd_mu2_match = std::abs(mu_k(y, 2) - closed) <= 1e-8;
    }
    rep.pass = rep.divisible && rep.recursion_identity && rep.factor_match && rep.odd_mu2_match;
    return rep;
}

bool verify_y1_factorization(int n) { return y1_factorization_report(n).pass; }

std::string LemmaSuiteReport::to_json() const {
    ordered_json j;
    j["n_max"] = n_max;
    j["results"] = ordered_json::array();
    for (const auto& r : results) {
        ordered_json item;
        item["id"] = r.id;
        item["cases_checked"] = r.cases_checked;
        item["counterexamples"] = r.counterexamples;
        item["pass"] = r.pass;
        j["results"].push_back(std::move(item));
    }
    j["all_pass"] = all_pass;
    return j.dump(2);
}

LemmaSuiteReport lemma_suite(int n_max) {
    if (n_max < 2 || n_max > kEnumerationBound)
        throw std::invalid_argument("lemma_suite: n_max outside 2.." +
                                    std::to_string(kEnumerationBound));
    LemmaSuiteReport rep;
    rep.n_max = n_max;
    std::vector<std::vector<Graph>> by_order(n_max + 1);
    for (int n = 2; n <= n_max; ++n) by_order[n] = connected_graphs(n);
    int numeric_max = std::min(n_max, 6);
    const double tol = 1e-8;

    auto add = [&](LemmaResult r) {
        r.pass = r.counterexamples.empty();
        rep.results.push_back(std::move(r));
    };

    {
        LemmaResult r{"mu1_max_degree"};
        for (int n = 2; n <= n_max; ++n)
            for (const Graph& g : by_order[n]) {
                ++r.cases_checked;
                int max_deg = stats(g).max_degree;
                Cmp cmp = mu_k_compare(g, 1, max_deg + 1);
                bool ok = cmp != Cmp::less && ((cmp == Cmp::equal) == (max_deg == n - 1));
                if (!ok) r.counterexamples.push_back(emit_graph6(g));
            }
        add(std::move(r));
    }
    {
        LemmaResult r{"mu1_edge_degree_bound"};
        for (int n = 2; n <= n_max; ++n)
            for (const Graph& g : by_order[n]) {
                auto st = stats(g);
                if (!st.max_edge_degree_sum) continue;
                ++r.cases_checked;
                double bound = 2 + std::sqrt(double(*st.max_edge_degree_sum - 2) *
                                             double(*st.second_edge_degree_sum - 2));
                if (mu_k(g, 1) > bound + tol) r.counterexamples.push_back(emit_graph6(g));
            }
        add(std::move(r));
    }
    {
        LemmaResult r{"cycle_path_closed_forms"};
        for (int n = 3; n <= 12; ++n) {
            ++r.cases_checked;
            Spectrum cyc = eigenvalues_numeric(make(FamilySpec{"C", {n}}));
            std::vector<double> expect;
            for (int j = 0; j < n; ++j)
                expect.push_back(2 - 2 * std::cos(2 * j * std::numbers::pi / n));
            std::sort(expect.begin(), expect.end(), std::greater<>());
            bool ok = true;
            for (int i = 0; i < n; ++i) ok = ok && std::abs(cyc[i] - expect[i]) <= tol;
            if (!ok) r.counterexamples.push_back("C(" + std::to_string(n) + ")");
            ++r.cases_checked;
            double mu1 = mu_k(make(FamilySpec{"P", {n}}), 1);
            if (std::abs(mu1 - (2 + 2 * std::cos(std::numbers::pi / n))) > tol)
                r.counterexamples.push_back("P(" + std::to_string(n) + ")");
        }
        add(std::move(r));
    }
    {
        LemmaResult r{"weyl_inequality"};
        std::mt19937 rng(12345);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(numeric_max - 1));
            const auto& pool = by_order[n];
            const Graph& g1 = pool[rng() % pool.size()];
            const Graph& g2 = pool[rng() % pool.size()];
            ++r.cases_checked;
            std::vector<std::vector<double>> sum(n, std::vector<double>(n, 0));
            for (int i = 0; i < n; ++i) {
                sum[i][i] = g1.degree(i) + g2.degree(i);
                for (int j = 0; j < n; ++j) {
                    if (g1.has_edge(i, j)) sum[i][j] -= 1;
                    if (g2.has_edge(i, j)) sum[i][j] -= 1;
                }
            }
            auto rho_sum = jacobi_eigenvalues(std::move(sum));
            Spectrum rho1 = eigenvalues_numeric(g1), rho2 = eigenvalues_numeric(g2);
            bool ok = true;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; i + j - 1 <= n; ++j)
                    ok = ok && rho_sum[i + j - 2] <= rho1[i - 1] + rho2[j - 1] + tol;
            if (!ok) r.counterexamples.push_back(emit_graph6(g1) + "|" + emit_graph6(g2));
        }
        add(std::move(r));
    }
    {
        LemmaResult r{"cauchy_interlacing"};
        for (int n = 2; n <= numeric_max; ++n)
            for (const Graph& g : by_order[n]) {
                auto lap = laplacian(g);
                std::vector<std::vector<double>> md(n, std::vector<double>(n));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) md[i][j] = static_cast<double>(lap[i][j]);
                auto rho = jacobi_eigenvalues(md);
                for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
                    std::vector<int> keep;
                    for (int v = 0; v < n; ++v)
                        if (mask >> v & 1) keep.push_back(v);
                    int p = static_cast<int>(keep.size());
                    std::vector<std::vector<double>> sub(p, std::vector<double>(p));
                    for (int i = 0; i < p; ++i)
                        for (int j = 0; j < p; ++j) sub[i][j] = md[keep[i]][keep[j]];
                    auto rho_sub = jacobi_eigenvalues(std::move(sub));
                    ++r.cases_checked;
                    bool ok = true;
                    for (int i = 1; i <= p; ++i)
                        ok = ok && rho[n - p + i - 1] <= rho_sub[i - 1] + tol &&
                             rho_sub[i - 1] <= rho[i - 1] + tol;
                    if (!ok) {
                        r.counterexamples.push_back(emit_graph6(g) + "|" + std::to_string(mask));
                        break;
                    }
                }
            }
        add(std::move(r));
    }
    {
        LemmaResult r{"edge_interlacing"};
        for (int n = 2; n <= numeric_max; ++n)
            for (const Graph& g : by_order[n]) {
                Spectrum a = eigenvalues_numeric(g);
                for (const Edge& e : g.edge_list()) {
                    ++r.cases_checked;
                    Spectrum b = eigenvalues_numeric(delete_edges(g, {e}));
                    bool ok = true;
                    for (int i = 1; i <= n - 1; ++i)
                        ok = ok && a[i - 1] >= b[i - 1] - tol && b[i - 1] >= a[i] - tol;
                    if (!ok) r.counterexamples.push_back(emit_graph6(g));
                }
            }
        add(std::move(r));
    }
    {
        LemmaResult r{"mu2_second_degree"};
        for (int n = 3; n <= n_max; ++n)
            for (const Graph& g : by_order[n]) {
                int max_deg = stats(g).max_degree;
                for (int u = 0; u < n; ++u) {
                    if (g.degree(u) != max_deg) continue;
                    int d2 = 0;
                    for (int w = 0; w < n; ++w)
                        if (w != u) d2 = std::max(d2, g.degree(w));
                    for (int v = 0; v < n; ++v) {
                        if (v == u || g.degree(v) != d2 || g.has_edge(u, v)) continue;
                        if (g.neighbor_mask(u) & g.neighbor_mask(v)) continue;
                        ++r.cases_checked;
                        if (mu_k_compare(g, 2, d2 + 1) == Cmp::less)
                            r.counterexamples.push_back(emit_graph6(g));
                    }
                }
            }
        add(std::move(r));
    }
    {
        LemmaResult r{"cut_edge_recursion"};
        for (int n = 2; n <= n_max; ++n)
            for (const Graph& g : by_order[n]) {
                IntPoly p = charpoly(g);
                for (const Edge& e : g.edge_list()) {
                    Graph cut = delete_edges(g, {e});
                    if (is_connected(cut)) continue;
                    ++r.cases_checked;
                    if (!(charpoly_via_cut_edge(g, e) == p))
                        r.counterexamples.push_back(emit_graph6(g));
                }
            }
        add(std::move(r));
    }
    {
        LemmaResult r{"complement_eigenvalue_pairing"};
        for (int n = 3; n <= n_max; ++n)
            for (const Graph& g : by_order[n]) {
                ++r.cases_checked;
                IntPoly left =
                    (IntPoly::constant(n) - IntPoly::x()) * charpoly(complement(g));
                IntPoly right = IntPoly::x() * charpoly(g).compose_linear(n, -1);
                if (n % 2 == 0) right = -right;
                if (!(left == right)) r.counterexamples.push_back(emit_graph6(g));
            }
        add(std::move(r));
    }
    {
        LemmaResult r{"multiplicity_at_one"};
        for (int n = 2; n <= n_max; ++n)
            for (const Graph& g : by_order[n]) {
                ++r.cases_checked;
                auto st = stats(g);
                int m1 = m_interval(g, IntervalSpec::singleton(1));
                if (m1 < st.pendant_count - st.quasi_pendant_count)
                    r.counterexamples.push_back(emit_graph6(g));
            }
        add(std::move(r));
    }
    {
        LemmaResult r{"algebraic_connectivity_bound"};
        for (int n = 3; n <= n_max; ++n)
            for (const Graph& g : by_order[n]) {
                if (g.size() == n * (n - 1) / 2) continue;
                ++r.cases_checked;
                int kappa = *stats(g).vertex_connectivity;
                if (mu_k_compare(g, n - 1, kappa) == Cmp::greater)
                    r.counterexamples.push_back(emit_graph6(g));
            }
        add(std::move(r));
    }

    rep.all_pass = true;
    for (const auto& r : rep.results) rep.all_pass = rep.all_pass && r.pass;
    return rep;
}

}  // namespace glspec
