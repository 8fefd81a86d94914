#include "powpart/cli.hpp"

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "powpart/asymptotics.hpp"
#include "powpart/counting.hpp"
#include "powpart/gauss_sums.hpp"
#include "powpart/part_set.hpp"
#include "powpart/series.hpp"
#include "powpart/specfun.hpp"
#include "powpart/version.hpp"
#include "powpart/wright.hpp"

namespace powpart {

namespace {

using nlohmann::ordered_json;

struct Assertion {
    std::string name;
    bool passed;
    ordered_json detail;
};

ordered_json config_json(const RunConfig& c) {
    ordered_json j;
    j["command"] = c.command;
    j["spec"] = c.spec_text;
    j["N"] = c.N;
    j["m"] = c.m;
    j["k"] = c.k;
    j["a"] = c.a;
    j["b"] = c.b;
    j["M"] = c.M;
    j["L"] = c.L;
    j["tau_re"] = c.tau_re;
    j["tau_im"] = c.tau_im;
    j["kmax"] = c.kmax;
    j["bmax"] = c.bmax;
    j["n_list"] = c.n_list;
    j["y_list"] = c.y_list;
    j["tolerances"] = c.tolerances;
    j["report_only"] = c.report_only;
    j["output"] = c.output;
    j["threads"] = c.threads;
    return j;
}

double tol_or(const RunConfig& c, const std::string& name, double fallback) {
    auto it = c.tolerances.find(name);
    return it == c.tolerances.end() ? fallback : it->second;
}

// Fan-out over an atomic work index.  Each item writes only its own result
// slot, so output never depends on scheduling.
void parallel_for(long items, int threads, const std::function<void(long)>& fn) {
    const int t = std::max(1, threads);
    if (t == 1 || items < 2) {
        for (long i = 0; i < items; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (int w = 0; w < t; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= items) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

int emit(const RunConfig& c, const ordered_json& result,
         const std::vector<Assertion>& asserts, const std::string& csv = "") {
    bool all = true;
    ordered_json ja = ordered_json::array();
    for (const auto& a : asserts) {
        all = all && a.passed;
        ordered_json e;
        e["name"] = a.name;
        e["passed"] = a.passed;
        if (!a.detail.is_null()) e["detail"] = a.detail;
        ja.push_back(std::move(e));
    }

    std::string payload;
    if (c.output == "csv" && !csv.empty()) {
        payload = csv;
    } else {
        ordered_json top;
        top["tool"] = "powpart";
        top["version"] = POWPART_VERSION;
        top["command"] = c.command;
        top["config"] = config_json(c);
        top["result"] = result;
        top["assertions"] = std::move(ja);
        top["passed"] = all;
        payload = top.dump(2);
        payload += "\n";
    }

    if (c.output_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(c.output_path);
        if (!out) {
            std::cerr << "cannot write " << c.output_path << "\n";
            return 2;
        }
        out << payload;
    }
    return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

int cmd_count(const RunConfig& c) {
    const PartSetSpec spec = parse_part_set(c.spec_text);
    if (c.m >= 2) {
        // residue-refined table p_S(a, m, n)
        const ResidueProfile prof = count_by_parts_mod(spec, c.m, c.N);
        ordered_json res;
        res["m"] = c.m;
        auto rows = ordered_json::array();
        for (int a = 0; a < c.m; ++a) {
            auto row = ordered_json::array();
            for (long n = 0; n <= c.N; ++n) row.push_back(prof.at(a, n).get_str());
            rows.push_back(std::move(row));
        }
        res["table"] = std::move(rows);
        return emit(c, res, {}, profile_to_csv(prof));
    }
    const std::vector<BigInt> p = count_partitions(spec, c.N);
    ordered_json res;
    auto arr = ordered_json::array();
    for (const auto& v : p) arr.push_back(v.get_str());
    res["p"] = std::move(arr);
    std::string csv = "n,p\n";
    for (long n = 0; n <= c.N; ++n)
        csv += std::to_string(n) + "," + p[static_cast<size_t>(n)].get_str() + "\n";
    return emit(c, res, {}, csv);
}

int cmd_parity(const RunConfig& c) {
    const PartSetSpec spec = parse_part_set(c.spec_text);
    const AlternatingStream s = alternating_direct(spec, c.N);

    long last_zero = -1;
    bool nonneg = true;
    long bad_n = -1;
    for (long n = 0; n <= c.N; ++n) {
        const int sg = mpz_sgn(s.a[static_cast<size_t>(n)].get_mpz_t());
        if (sg == 0) last_zero = n;
        if (sg < 0 && bad_n < 0) { nonneg = false; bad_n = n; }
    }
    BigInt min_pos = 0;
    for (long n = last_zero + 1; n <= c.N; ++n) {
        const BigInt& v = s.a[static_cast<size_t>(n)];
        if (v > 0 && (min_pos == 0 || v < min_pos)) min_pos = v;
    }

    ordered_json res;
    res["last_zero"] = last_zero;
    res["min_positive_beyond"] = min_pos.get_str();
    res["stream"] = to_json(s);
    std::vector<Assertion> as;
    ordered_json detail;
    if (!nonneg) {
        detail["n"] = bad_n;
        detail["a_n"] = s.a[static_cast<size_t>(bad_n)].get_str();
    }
    as.push_back({"alternating_nonnegative", nonneg, nonneg ? ordered_json() : detail});
    std::string csv = "n,a\n";
    for (long n = 0; n <= c.N; ++n)
        csv += std::to_string(n) + "," + s.a[static_cast<size_t>(n)].get_str() + "\n";
    return emit(c, res, as, csv);
}

int cmd_equidist(const RunConfig& c) {
    const long n = c.N;
    const ResidueProfile prof =
        count_by_parts_mod(PartSetSpec::kth_powers(c.k), 2, n);
    const EquidistResult r = equidistribution_ratio(prof, n);
    const double tol = tol_or(c, "deviation", 1e-4);
    ordered_json res;
    res["n"] = n;
    res["p0"] = prof.at(0, n).get_str();
    res["p1"] = prof.at(1, n).get_str();
    res["ratio"] = r.ratio;
    res["deviation"] = r.deviation;
    std::vector<Assertion> as;
    ordered_json detail;
    detail["deviation"] = r.deviation;
    detail["tolerance"] = tol;
    as.push_back({"deviation_within_tolerance", std::abs(r.deviation) < tol, detail});
    return emit(c, res, as);
}

int cmd_convolution(const RunConfig& c) {
    const PartSetSpec spec = parse_part_set(c.spec_text);
    const AlternatingStream direct = alternating_direct(spec, c.N);
    const AlternatingStream conv = alternating_via_convolution(spec, c.N);
    long first_mismatch = -1;
    for (long n = 0; n <= c.N; ++n)
        if (direct.a[static_cast<size_t>(n)] != conv.a[static_cast<size_t>(n)]) {
            first_mismatch = n;
            break;
        }
    ordered_json res;
    res["N"] = c.N;
    res["identical"] = first_mismatch < 0;
    std::vector<Assertion> as;
    ordered_json detail;
    if (first_mismatch >= 0) {
        detail["n"] = first_mismatch;
        detail["direct"] = direct.a[static_cast<size_t>(first_mismatch)].get_str();
        detail["convolution"] = conv.a[static_cast<size_t>(first_mismatch)].get_str();
    }
    as.push_back({"convolution_matches_direct", first_mismatch < 0,
                  first_mismatch < 0 ? ordered_json() : detail});
    return emit(c, res, as);
}

int cmd_glaisher(const RunConfig& c) {
    const ResidueProfile prof =
        count_by_parts_mod(PartSetSpec::kth_powers(1), 2, c.N);
    const std::vector<BigInt> podd = glaisher_odd_distinct(c.N);
    long first_mismatch = -1;
    for (long n = 0; n <= c.N; ++n) {
        BigInt lhs = prof.at(0, n) - prof.at(1, n);
        BigInt rhs = (n % 2 == 0) ? podd[static_cast<size_t>(n)]
                                  : -podd[static_cast<size_t>(n)];
        if (lhs != rhs) { first_mismatch = n; break; }
    }
    ordered_json res;
    res["N"] = c.N;
    res["identical"] = first_mismatch < 0;
    std::vector<Assertion> as;
    ordered_json detail;
    if (first_mismatch >= 0) detail["n"] = first_mismatch;
    as.push_back({"glaisher_identity", first_mismatch < 0,
                  first_mismatch < 0 ? ordered_json() : detail});
    return emit(c, res, as);
}

int cmd_gauss(const RunConfig& c) {
    const long M = c.M > 0 ? c.M : choose_truncation(c.k, tol_or(c, "lambda", 1e-3)).M;
    const GaussData g = gauss_data(c.k, c.a, c.b, M);
    ordered_json res = to_json(g);
    std::vector<Assertion> as;
    if (c.b >= 2 && std::gcd(c.a, c.b) == 1) {
        const double ratio = stechkin_ratio(c.k, c.a, c.b);
        ordered_json detail;
        detail["ratio"] = ratio;
        detail["limit"] = kStechkinAssertLimit;
        as.push_back({"stechkin_ratio_bounded", ratio <= kStechkinAssertLimit, detail});
    }
    return emit(c, res, as);
}

int cmd_gauss_scan(const RunConfig& c) {
    struct Row {
        int k;
        long long a, b;
        double abs_s, ratio;
    };
    // flatten (k, b) cells; each cell scans its coprime a values
    std::vector<std::pair<int, long long>> cells;
    for (int k = 2; k <= c.kmax; ++k)
        for (long long b = 2; b <= c.bmax; ++b) cells.push_back({k, b});
    std::vector<std::vector<Row>> rows(cells.size());

    parallel_for(static_cast<long>(cells.size()), c.threads, [&](long i) {
        const auto [k, b] = cells[static_cast<size_t>(i)];
        for (long long a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const Complex s = gauss_sum(k, a, b);
            rows[static_cast<size_t>(i)].push_back(
                {k, a, b, std::abs(s), stechkin_ratio(k, a, b)});
        }
    });

    double max_ratio = 0.0;
    Row arg_max{0, 0, 0, 0.0, 0.0};
    std::string csv = "k,a,b,abs_S,ratio\n";
    char buf[160];
    for (const auto& cell : rows)
        for (const auto& r : cell) {
            if (r.ratio > max_ratio) { max_ratio = r.ratio; arg_max = r; }
            std::snprintf(buf, sizeof buf, "%d,%lld,%lld,%.17g,%.17g\n",
                          r.k, r.a, r.b, r.abs_s, r.ratio);
            csv += buf;
        }

    ordered_json res;
    res["kmax"] = c.kmax;
    res["bmax"] = c.bmax;
    res["max_ratio"] = max_ratio;
    res["argmax"] = {{"k", arg_max.k}, {"a", arg_max.a}, {"b", arg_max.b}};
    std::vector<Assertion> as;
    ordered_json detail;
    detail["max_ratio"] = max_ratio;
    detail["limit"] = kStechkinAssertLimit;
    as.push_back({"stechkin_ratio_bounded", max_ratio <= kStechkinAssertLimit, detail});
    return emit(c, res, as, csv);
}

int cmd_lambda(const RunConfig& c) {
    const double tol = tol_or(c, "lambda", 1e-3);
    const Truncation tr = choose_truncation(c.k, tol);
    const long M = c.M > 0 ? c.M : tr.M;
    const GaussData g = gauss_data(c.k, c.a, c.b, M);
    ordered_json res = to_json(g);
    res["truncation_capped"] = c.M > 0 ? false : tr.capped;
    const Complex precise = lambda_small_hurwitz(c.k, c.a, c.b);
    res["lambda_hurwitz"] = {{"re", precise.real()}, {"im", precise.imag()}};

    std::vector<Assertion> as;
    {
        // certified bound really does contain the exact value
        ordered_json detail;
        const double diff = std::abs(g.lambda.value - precise);
        detail["abs_diff_vs_hurwitz"] = diff;
        detail["error_bound"] = g.lambda.error_bound;
        as.push_back({"certified_error_contains_exact",
                      diff <= g.lambda.error_bound + 1e-12, detail});
    }
    if (c.b >= 2) {
        const double bound = lambda_divisor_bound(c.k, c.b);
        const double strong = lambda_divisor_bound_strong(c.k, c.b);
        const double lam = std::abs(g.lambda.value);
        res["divisor_bound_strong"] = strong;
        res["strong_bound_exceeded"] = lam + g.lambda.error_bound > strong;
        ordered_json detail;
        detail["abs_lambda_plus_error"] = lam + g.lambda.error_bound;
        detail["bound"] = bound;
        as.push_back({"lambda_divisor_bound", lam + g.lambda.error_bound <= bound, detail});
    }
    if (c.b == 1) {
        const AsymptoticModel m = asymptotic_model(c.k);
        const double closed = m.A * gamma_pos(1.0 / c.k) * zeta(1.0 + 1.0 / c.k);
        const double diff = std::abs(g.lambda.value - closed);
        ordered_json detail;
        detail["closed_form"] = closed;
        detail["abs_diff"] = diff;
        detail["allowance"] = g.lambda.error_bound + 1e-10;
        as.push_back({"lambda_closed_form_coherence",
                      diff <= g.lambda.error_bound + 1e-10, detail});
    }
    return emit(c, res, as);
}

int cmd_wright_check(const RunConfig& c) {
    if (c.k % 2 == 1 && c.b > 2 && !c.report_only) {
        // The quadratic-residue convention in the transform constants is
        // validated only for even k or b <= 2.
        std::cerr << "wright check: odd k with b > 2 is outside the validated "
                     "range; rerun with --report-only\n";
        return 2;
    }
    const double tol = tol_or(c, "residual", 1e-6);
    const Complex tau{c.tau_re, c.tau_im};
    const TransformEvaluation ev = compare_powers_transform(c.k, c.a, c.b, tau, tol);
    ordered_json res = to_json(ev);
    std::vector<Assertion> as;
    if (!c.report_only) {
        ordered_json detail;
        detail["residual"] = ev.residual;
        detail["tolerance"] = tol;
        as.push_back({"transform_matches_direct", ev.residual < tol, detail});
    }
    return emit(c, res, as);
}

int cmd_asym_compare(const RunConfig& c) {
    std::vector<long> ns = c.n_list;
    if (ns.empty()) ns = {1000, 2000, 5000};
    const long nmax = *std::max_element(ns.begin(), ns.end());
    const ResidueProfile prof =
        count_by_parts_mod(PartSetSpec::kth_powers(c.k), 2, nmax);

    ordered_json rows = ordered_json::array();
    std::string csv = "n,a,log_main,ratio\n";
    for (long n : ns) {
        BigInt a = prof.at(0, n) - prof.at(1, n);
        if (n % 2 != 0) a = -a;
        const MainTerm mt = main_term(c.k, static_cast<double>(n));
        const double ratio =
            mpz_sgn(a.get_mpz_t()) > 0 ? std::exp(log_big(a) - mt.log_value) : 0.0;
        ordered_json row;
        row["n"] = n;
        row["a"] = a.get_str();
        row["log_main"] = mt.log_value;
        row["ratio"] = ratio;
        rows.push_back(std::move(row));
        char buf[128];
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g\n", mt.log_value, ratio);
        csv += std::to_string(n) + "," + a.get_str() + buf;
    }
    ordered_json res;
    res["model"] = to_json(asymptotic_model(c.k));
    res["rows"] = std::move(rows);
    return emit(c, res, {}, csv);
}

int cmd_asym_lemma1(const RunConfig& c) {
    std::vector<double> ys = c.y_list;
    if (ys.empty()) ys = {0.2, 0.1, 0.05, 0.02};
    std::vector<double> resid;
    for (double y : ys) resid.push_back(parity_main_residual(c.k, y));
    const double slope = loglog_slope(ys, resid);

    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < ys.size(); ++i)
        rows.push_back({{"y", ys[i]}, {"residual", resid[i]}});
    ordered_json res;
    res["rows"] = std::move(rows);
    res["loglog_slope"] = slope;

    std::vector<Assertion> as;
    if (!c.report_only) {
        bool decreasing = true;
        for (size_t i = 1; i < ys.size(); ++i)
            if (!(resid[i] < resid[i - 1])) decreasing = false;
        ordered_json d1;
        d1["residuals"] = resid;
        as.push_back({"residual_strictly_decreasing", decreasing, d1});
        ordered_json d2;
        d2["slope"] = slope;
        as.push_back({"loglog_slope_positive", slope > 0.0, d2});
    }
    return emit(c, res, as);
}

// Expected strict orderings of (p(0), .., p(m-1)) per n mod 3 for the m=3
// exploration; measured against the table, first failure reported.
int cmd_explore(const RunConfig& c) {
    const PartSetSpec spec = parse_part_set(c.spec_text);
    const OrderingReport rep = ordering_sequence(spec, c.m, c.N);
    ordered_json res = to_json(rep);

    if (c.m == 3) {
        const ResidueProfile prof = count_by_parts_mod(spec, 3, c.N);
        static const int expected[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        auto holds = [&](long n) {
            const int* e = expected[n % 3];
            return prof.at(e[0], n) > prof.at(e[1], n) &&
                   prof.at(e[1], n) > prof.at(e[2], n);
        };
        long first_fail = -1, first_match = -1, violation_after_match = -1;
        for (long n = 1; n <= c.N; ++n) {
            const bool ok = holds(n);
            if (!ok && first_fail < 0) first_fail = n;
            if (ok && first_match < 0) first_match = n;
            if (!ok && first_match >= 0 && violation_after_match < 0)
                violation_after_match = n;
        }
        ordered_json mod3;
        mod3["first_n_not_matching"] = first_fail;
        mod3["first_match"] = first_match;
        mod3["matched_through"] =
            violation_after_match < 0 ? (first_match < 0 ? -1 : c.N)
                                      : violation_after_match - 1;
        mod3["first_violation_after_match"] = violation_after_match;
        res["mod3_pattern"] = std::move(mod3);
    }
    return emit(c, res, {});
}

} // namespace

int run(const RunConfig& config) {
    try {
        if (config.command == "count") return cmd_count(config);
        if (config.command == "parity") return cmd_parity(config);
        if (config.command == "equidist") return cmd_equidist(config);
        if (config.command == "convolution") return cmd_convolution(config);
        if (config.command == "glaisher") return cmd_glaisher(config);
        if (config.command == "gauss") return cmd_gauss(config);
        if (config.command == "gauss.scan") return cmd_gauss_scan(config);
        if (config.command == "lambda") return cmd_lambda(config);
        if (config.command == "wright.check") return cmd_wright_check(config);
        if (config.command == "asym.compare") return cmd_asym_compare(config);
        if (config.command == "asym.lemma1") return cmd_asym_lemma1(config);
        if (config.command == "explore") return cmd_explore(config);
        std::cerr << "unknown command: " << config.command << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_main(int argc, const char* const* argv) {
    RunConfig c;
    if (const char* env = std::getenv("POWPART_THREADS"))
        c.threads = std::max(1, std::atoi(env));

    CLI::App app{"exact and asymptotic statistics of power partitions"};
    app.require_subcommand(1);
    app.add_option("--threads", c.threads, "worker threads for scans");
    app.add_option("--out", c.output_path, "output file (default stdout)");
    app.add_option("--format", c.output, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto add_tol = [&](CLI::App* sub) {
        sub->add_option_function<std::vector<std::string>>(
            "--tol",
            [&c](const std::vector<std::string>& items) {
                for (const auto& item : items) {
                    const auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw CLI::ValidationError("--tol expects name=value");
                    c.tolerances[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
                }
            },
            "named tolerance(s), name=value");
    };

    auto* count = app.add_subcommand("count", "partition counts p_S(0..N)");
    count->add_option("--spec", c.spec_text);
    count->add_option("--N", c.N)->required();
    count->add_option("--m", c.m, "emit the residue-refined table p_S(a,m,n)");

    auto* parity = app.add_subcommand("parity", "alternating stream, zeros, positivity");
    parity->add_option("--spec", c.spec_text);
    parity->add_option("--N", c.N)->required();

    auto* equi = app.add_subcommand("equidist", "p_k(0,2,n)/p_k(n) vs 1/2");
    equi->add_option("--k", c.k);
    equi->add_option("--N", c.N)->required();
    add_tol(equi);

    auto* conv = app.add_subcommand("convolution", "convolution identity vs direct");
    conv->add_option("--spec", c.spec_text);
    conv->add_option("--N", c.N)->required();

    auto* gla = app.add_subcommand("glaisher", "odd-distinct parity identity");
    gla->add_option("--N", c.N)->required();

    auto* gauss = app.add_subcommand("gauss", "Gauss sum S_k(a,b)");
    gauss->add_option("--k", c.k);
    gauss->add_option("--a", c.a);
    gauss->add_option("--b", c.b);
    gauss->add_option("--M", c.M);
    add_tol(gauss);
    auto* scan = gauss->add_subcommand("scan", "ratio scan over k <= kmax, b <= bmax");
    scan->add_option("--kmax", c.kmax);
    scan->add_option("--bmax", c.bmax);
    scan->add_option("--report", c.output)->check(CLI::IsMember({"json", "csv"}));

    auto* lam = app.add_subcommand("lambda", "lambda_{a,b} with certified error");
    lam->add_option("--k", c.k);
    lam->add_option("--a", c.a);
    lam->add_option("--b", c.b);
    lam->add_option("--M", c.M);
    add_tol(lam);

    auto* wright = app.add_subcommand("wright", "modular transform checks");
    auto* wcheck = wright->add_subcommand("check", "transform vs direct series");
    wcheck->add_option("--k", c.k);
    wcheck->add_option("--a", c.a);
    wcheck->add_option("--b", c.b);
    wcheck->add_option("--tau-re", c.tau_re);
    wcheck->add_option("--tau-im", c.tau_im);
    wcheck->add_flag("--report-only", c.report_only);
    add_tol(wcheck);
    wright->require_subcommand(1);

    auto* asym = app.add_subcommand("asym", "saddle-point main term");
    auto* acomp = asym->add_subcommand("compare", "exact a_k(n) vs main term");
    acomp->add_option("--k", c.k);
    acomp->add_option("--n-list", c.n_list)->delimiter(',');
    auto* alem = asym->add_subcommand("lemma1", "log G_k residual decay in y");
    alem->add_option("--k", c.k);
    alem->add_option("--y-list", c.y_list)->delimiter(',');
    alem->add_flag("--report-only", c.report_only);
    asym->require_subcommand(1);

    auto* expl = app.add_subcommand("explore", "residue-class ordering sequences");
    expl->add_option("--spec", c.spec_text);
    expl->add_option("--m", c.m)->required();
    expl->add_option("--N", c.N)->required();

    // let --out/--format/--threads appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        node->fallthrough();
        for (CLI::App* sub : node->get_subcommands([](const CLI::App*) { return true; }))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (count->parsed()) c.command = "count";
    else if (parity->parsed()) c.command = "parity";
    else if (equi->parsed()) c.command = "equidist";
    else if (conv->parsed()) c.command = "convolution";
    else if (gla->parsed()) c.command = "glaisher";
    else if (lam->parsed()) c.command = "lambda";
    else if (gauss->parsed()) c.command = scan->parsed() ? "gauss.scan" : "gauss";
    else if (wright->parsed()) c.command = "wright.check";
    else if (asym->parsed()) c.command = acomp->parsed() ? "asym.compare" : "asym.lemma1";
    else if (expl->parsed()) c.command = "explore";

    return run(c);
}

} // namespace powpart
