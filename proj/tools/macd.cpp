#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "macd/hyperseries.hpp"
#include "macd/macdrec.hpp"
#include "macd/matinv.hpp"
#include "macd/partitions.hpp"
#include "macd/random.hpp"
#include "macd/report.hpp"
#include "macd/suites.hpp"
#include "macd/symfun.hpp"

using namespace macd;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kPole = 2;
constexpr int kMismatch = 3;
constexpr int kUsage = 64;

struct Options {
    std::string partition;
    int nvars = -1;
    std::string q = "1/2", t = "1/3";
    std::string method = "gram";
    bool cross_check = false;
    std::string identity;
    int n = 1;
    int M = -1;
    std::string m;
    int window = 3;
    int draws = 10;
    std::uint64_t seed = 0;
    unsigned precision = 192;
    std::string json;
    int max_shell = 600;
    std::string suite;
};

using Clock = std::chrono::steady_clock;

void finish_json(nlohmann::json j, const Options& o, Clock::time_point start) {
    if (o.json.empty()) return;
    j["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start).count();
    write_report(j, o.json);
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

SymPoly compute_method(const std::string& method, const Partition& lam, int nvars, const QtPoint& pt) {
    if (method == "gram") return macdonald_Q(lam, nvars, pt);
    if (method == "recursion") return recursion_Q(lam, nvars, pt);
    if (method == "dual") return dual_recursion_P(lam, nvars, pt) * b_lambda(lam, pt, lam.length());
    if (method == "pieri-product") return pieri_product_Q(lam, nvars, pt);
    throw CLI::ValidationError("--method", "unknown method " + method);
}

int cmd_compute(const Options& o) {
    auto start = Clock::now();
    Partition lam = Partition::parse(o.partition);
    QtPoint pt;
    pt.q = parse_rational(o.q);
    pt.t = parse_rational(o.t);
    int nvars = o.nvars >= 0 ? o.nvars : std::max(lam.size(), 1);
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["task"] = "compute";
    j["tool_version"] = tool_version();
    j["seed"] = 0;
    j["partition"] = lam.str();
    j["nvars"] = nvars;
    j["q"] = to_string(pt.q);
    j["t"] = to_string(pt.t);
    j["draws"] = nlohmann::json::array();
    try {
        pt.validate();
        std::vector<std::string> methods = {o.method};
        if (o.cross_check) methods = {"gram", "recursion", "dual", "pieri-product"};
        std::vector<SymPoly> results;
        for (const auto& m : methods) {
            results.push_back(compute_method(m, lam, nvars, pt));
            j["draws"].push_back({{"method", m}, {"polynomial", results.back().str()}});
        }
        std::cout << results.front().str() << '\n';
        bool agree = true;
        for (size_t i = 1; i < results.size(); ++i)
            if (!(results[i] == results[0])) {
                agree = false;
                std::cerr << "mismatch: " << methods[i] << " differs from " << methods[0] << '\n';
            }
        if (o.cross_check && agree) std::cout << "cross-check: all methods agree\n";
        j["status"] = agree ? "PASS" : "FAIL";
        finish_json(j, o, start);
        return agree ? kPass : kMismatch;
    } catch (const std::exception& e) {
        if (dynamic_cast<const CLI::Error*>(&e)) throw;
        std::cerr << "error: " << e.what() << '\n';
        j["status"] = "ERROR";
        j["message"] = e.what();
        finish_json(j, o, start);
        return kPole;
    }
}

int cmd_verify_matinv(const Options& o, const std::string& which) {
    auto start = Clock::now();
    int n = o.n;
    EntryFactory f;
    if (which == "A") {
        f = [n](std::mt19937_64& g) {
            auto p = random_A_params(n, g);
            return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) { return corollary_A_f(m, k, p); },
                             [p](const MultiIndex& k, const MultiIndex& l) { return corollary_A_g(k, l, p); }, "A"};
        };
    } else if (which == "C") {
        f = [n](std::mt19937_64& g) {
            auto p = random_C_params(n, g);
            return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) { return corollary_C_f(m, k, p); },
                             [p](const MultiIndex& k, const MultiIndex& l) { return corollary_C_g(k, l, p); }, "C"};
        };
    } else if (which == "general") {
        int w = o.window;
        f = [n, w](std::mt19937_64& g) {
            auto p = random_family(n, w, g);
            return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) { return general_f(m, k, p); },
                             [p](const MultiIndex& k, const MultiIndex& l) { return general_g(k, l, p); },
                             "general"};
        };
    } else if (which == "general-C") {
        int w = o.window;
        f = [n, w](std::mt19937_64& g) {
            auto p = random_family(n, w, g);
            return EntryPair{[p](const MultiIndex& m, const MultiIndex& k) { return general_fC(m, k, p); },
                             [p](const MultiIndex& k, const MultiIndex& l) { return general_gC(k, l, p); },
                             "general-C"};
        };
    } else if (which == "pieri-recursion") {
        f = [n](std::mt19937_64& g) {
            std::vector<Rational> U;
            for (int i = 0; i < n; ++i) U.push_back(draw_rational(g));
            auto pt = draw_qt_point(g);
            return EntryPair{[=](const MultiIndex& m, const MultiIndex& k) {
                                 return pieri_matrix_entry(m, k, U, pt.q, pt.t);
                             },
                             [=](const MultiIndex& k, const MultiIndex& l) {
                                 return recursion_matrix_entry(k, l, U, pt.q, pt.t);
                             },
                             "pieri-recursion"};
        };
    } else {
        std::cerr << "unknown identity matinv-orthogonality-" << which << '\n';
        return kUsage;
    }
    auto rep = verify_orthogonality(f, n, o.window, o.draws, o.seed, "matinv-orthogonality-" + which);
    std::cout << rep.name << " n=" << n << " window=" << o.window << ": " << rep.checks << " checks, "
              << rep.failures << " failures -> " << (rep.passed() ? "PASS" : "FAIL") << '\n';
    if (!rep.witnesses.empty()) {
        const auto& w = rep.witnesses.front();
        std::cout << "witness: draw " << w.draw << " relation " << w.relation << " value " << to_string(w.value)
                  << '\n';
    }
    finish_json(orthogonality_report_json(rep, o.seed), o, start);
    return rep.passed() ? kPass : kFail;
}

int cmd_verify(const Options& o) {
    const std::string prefix = "matinv-orthogonality-";
    if (o.identity.rfind(prefix, 0) == 0) return cmd_verify_matinv(o, o.identity.substr(prefix.size()));
    auto start = Clock::now();
    const IdentitySpec* spec;
    try {
        spec = &find_identity(o.identity);
    } catch (const std::out_of_range&) {
        std::cerr << "unknown identity " << o.identity << " (see list-identities)\n";
        return kUsage;
    }
    std::vector<int> sizes;
    if (spec->size == "M" && o.M >= 0) sizes = {o.M};
    if ((spec->size == "m" || spec->size == "lambda") && !o.m.empty()) sizes = parse_ints(o.m);
    if (!o.partition.empty()) sizes = Partition::parse(o.partition).parts();
    TruncationPolicy pol;
    pol.max_shell = o.max_shell;
    IdentityReport rep;
    try {
        pol.validate();
        rep = check_identity(o.identity, o.n, sizes, o.draws, o.seed, pol, o.precision);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    int pass = 0;
    const DrawRecord* first_bad = nullptr;
    for (const auto& r : rep.records) {
        if (r.status == "PASS")
            ++pass;
        else if (!first_bad)
            first_bad = &r;
    }
    std::cout << rep.id << " n=" << rep.n << ": " << pass << "/" << rep.records.size() << " draws pass -> "
              << (rep.passed() ? "PASS" : "FAIL") << '\n';
    if (first_bad) {
        std::cout << "witness: draw " << first_bad->draw << " [" << first_bad->status << "]";
        for (const auto& [k, v] : first_bad->params) std::cout << ' ' << k << '=' << v;
        std::cout << "\n  lhs " << first_bad->lhs << "\n  rhs " << first_bad->rhs << '\n';
        if (!first_bad->message.empty()) std::cout << "  " << first_bad->message << '\n';
    }
    finish_json(identity_report_json(rep), o, start);
    return rep.passed() ? kPass : kFail;
}

int cmd_suite(const Options& o) {
    auto start = Clock::now();
    try {
        suite_criteria(o.suite);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "; choose one of:";
        for (const auto& s : suite_names()) std::cerr << ' ' << s;
        std::cerr << '\n';
        return kUsage;
    }
    auto res = run_suite(o.suite, o.seed);
    for (const auto& c : res.checks)
        std::cout << "[" << c.criterion << "] " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  ("
                  << c.detail << ")\n";
    std::cout << "suite " << res.name << ": " << (res.passed() ? "PASS" : "FAIL") << '\n';
    finish_json(suite_report_json(res), o, start);
    return res.passed() ? kPass : kFail;
}

int cmd_list() {
    const char* regions[] = {"simplex", "shell", "box", "orthant", "partition"};
    for (const auto& s : identity_registry())
        std::cout << s.id << "  [" << (s.terminating ? "terminating" : "nonterminating") << ", "
                  << regions[static_cast<int>(s.region)] << (s.multivariable ? ", multivariable" : "") << "]  "
                  << s.title << '\n';
    for (const char* m : {"A", "C", "general", "general-C", "pieri-recursion"})
        std::cout << "matinv-orthogonality-" << m << "  [matrix inverse pair]\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald polynomials and multiple basic hypergeometric identities"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("MACD_SEED")) o.seed = std::strtoull(env, nullptr, 10);

    auto* compute = app.add_subcommand("compute", "print Q_lambda in a number of variables");
    compute->add_option("--partition", o.partition, "comma separated parts, \"\" for the empty partition");
    compute->add_option("--nvars", o.nvars, "number of variables (default |lambda|)");
    compute->add_option("--q", o.q, "rational q as num/den");
    compute->add_option("--t", o.t, "rational t as num/den");
    compute->add_option("--method", o.method, "gram, recursion, dual or pieri-product")
        ->check(CLI::IsMember({"gram", "recursion", "dual", "pieri-product"}));
    compute->add_flag("--cross-check", o.cross_check, "run every method and compare");
    compute->add_option("--json", o.json, "write a JSON report");

    auto* verify = app.add_subcommand("verify", "check an identity at random rational points");
    verify->add_option("--identity", o.identity, "identity id")->required();
    verify->add_option("--n", o.n, "dimension");
    verify->add_option("--M", o.M, "size for simplex/shell identities");
    verify->add_option("--m", o.m, "box sizes, comma separated");
    verify->add_option("--partition", o.partition, "partition for the specialized displays");
    verify->add_option("--window", o.window, "window for matrix inverse pairs");
    verify->add_option("--draws", o.draws, "number of random draws");
    verify->add_option("--seed", o.seed, "seed (default $MACD_SEED or 0)");
    verify->add_option("--precision", o.precision, "bits for nonterminating sums");
    verify->add_option("--max-shell", o.max_shell, "largest shell for nonterminating sums");
    verify->add_option("--json", o.json, "write a JSON report");

    auto* suite = app.add_subcommand("suite", "run an acceptance bundle");
    suite->add_option("name", o.suite, "core, appendix, section4, section5, section7 or all")->required();
    suite->add_option("--seed", o.seed, "seed (default $MACD_SEED or 0)");
    suite->add_option("--json", o.json, "write a JSON report");

    app.add_subcommand("list-identities", "list registered identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        if (*compute) return cmd_compute(o);
        if (*verify) return cmd_verify(o);
        if (*suite) return cmd_suite(o);
        return cmd_list();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPole;
    }
}
