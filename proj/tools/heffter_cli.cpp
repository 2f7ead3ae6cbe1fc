#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "heffter/construct.hpp"
#include "heffter/errors.hpp"
#include "heffter/io.hpp"
#include "heffter/nice_pairs.hpp"
#include "heffter/oracle.hpp"
#include "heffter/verify.hpp"

using namespace heffter;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 2, kUnsupported = 3, kExhausted = 4, kUsage = 64 };

struct Options {
    std::string object;
    int m = 0, n = 0, s = 0, k = 0, lambda = 1, t = 1;
    std::string format = "pretty";
    std::string out;
    std::string input;
    long long max_nodes = 0;
    double time_cap = 0;
    int max_m = 0, max_n = 0;
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw Usage("cannot write " + o.out);
    f << text;
}

SearchBudget budget_of(const Options& o) {
    SearchBudget b = SearchBudget::from_env();
    if (o.max_nodes > 0) b.max_nodes = o.max_nodes;
    if (o.time_cap > 0) b.time_cap = o.time_cap;
    return b;
}

void need(bool ok, const std::string& what) {
    if (!ok) throw Usage(what);
}

void need_shape(const Options& o) {
    need(o.m > 0 && o.n > 0 && o.s > 0 && o.k > 0, "--m, --n, --s and --k are required");
}

HeffterParams params_of(const Options& o) {
    need_shape(o);
    return HeffterParams::make(o.m, o.n, o.s, o.k, o.lambda, o.t);
}

Grid build(const Options& o, const SearchBudget& budget) {
    if (o.object == "heffter") return construct_heffter(params_of(o), budget);
    need_shape(o);
    if (o.object == "sma") return construct_sma(o.m, o.n, o.s, o.k, budget);
    return construct_mr(o.m, o.n, o.s, o.k, budget);
}

int cmd_construct(const Options& o) {
    Grid g = build(o, budget_of(o));
    emit(o, write_grid(g, parse_format(o.format)));
    return kOk;
}

// fill counts default to those of row 1 and column 1
int cmd_verify(const Options& o) {
    need(!o.input.empty(), "verify needs an input file");
    Grid g = read_grid_file(o.input);
    const int s = o.s > 0 ? o.s : (g.rows() ? g.row_fill(1) : 0);
    const int k = o.k > 0 ? o.k : (g.cols() ? g.col_fill(1) : 0);
    Certificate cert;
    if (o.object == "sma") {
        cert = verify_sma(g, s, k);
    } else if (o.object == "mr") {
        cert = verify_mr(g, s, k);
    } else {
        auto p = HeffterParams::make(g.rows(), g.cols(), s, k, o.lambda, o.t);
        cert = verify_integer_heffter(g, p);
    }
    emit(o, certificate_json(cert));
    return cert.ok ? kOk : kVerifyFailed;
}

int cmd_search(const Options& o) {
    need(o.object != "mr", "search covers heffter and sma");
    const SearchBudget budget = budget_of(o);
    SearchResult res;
    if (o.object == "sma") {
        need_shape(o);
        res = search_sma(o.m, o.n, o.s, o.k, budget);
    } else {
        res = search_heffter(params_of(o), budget);
    }
    std::cerr << status_name(res.status) << " after " << res.nodes << " nodes\n";
    if (res.status == SearchStatus::Exhausted) return kExhausted;
    if (res.status == SearchStatus::NotFound) return kUnsupported;
    emit(o, write_grid(*res.grid, parse_format(o.format)));
    return kOk;
}

int cmd_sweep(const Options& o) {
    need(o.max_m >= 0 && o.max_n >= 0, "ranges must be non-negative");
    const SearchBudget budget = budget_of(o);
    long long passed = 0, failed = 0, unsupported = 0, exhausted = 0;
    json failures = json::array();
    auto attempt = [&](const std::string& label, auto&& make) {
        try {
            make();
            ++passed;
        } catch (const UnsupportedCase&) {
            ++unsupported;
        } catch (const BudgetExhausted&) {
            ++exhausted;
        } catch (const std::exception& e) {
            ++failed;
            failures.push_back({{"tuple", label}, {"error", e.what()}});
        }
    };
    if (o.object == "heffter") {
        for (const auto& p : enumerate_params(o.max_m, o.max_n))
            attempt(p.str(), [&] { construct_heffter(p, budget); });
    } else {
        for (int m = 4; m <= o.max_m; ++m)
            for (int n = 4; n <= o.max_n; ++n)
                for (int s = 4; s <= n; s += 2)
                    for (int k = 4; k <= m; k += 2) {
                        if (m * s != n * k) continue;
                        const std::string label = "(" + std::to_string(m) + "," + std::to_string(n) + ";" +
                                                  std::to_string(s) + "," + std::to_string(k) + ")";
                        if (o.object == "sma")
                            attempt(label, [&] { construct_sma(m, n, s, k, budget); });
                        else
                            attempt(label, [&] { construct_mr(m, n, s, k, budget); });
                    }
    }
    json report = {{"object", o.object},   {"max_m", o.max_m},         {"max_n", o.max_n},
                   {"passed", passed},     {"failed", failed},         {"unsupported", unsupported},
                   {"exhausted", exhausted}, {"failures", failures}};
    if (o.format == "json") {
        emit(o, report.dump());
    } else {
        std::ostringstream text;
        text << o.object << " sweep m<=" << o.max_m << " n<=" << o.max_n << ": " << passed << " passed, " << failed
             << " failed, " << unsupported << " unsupported, " << exhausted << " exhausted\n";
        for (const auto& f : failures)
            text << "  " << f["tuple"].get<std::string>() << ": " << f["error"].get<std::string>() << '\n';
        emit(o, text.str());
    }
    return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_dump_blocks(const Options& o) {
    need(o.object == "heffter", "dump-blocks covers heffter");
    need(o.m > 0 && o.s > 0, "--m and --s are required");
    need(o.s % 4 == 2, "dump-blocks needs s = 2 (mod 4)");
    NicePair pair = nice_pair(o.m, o.s, o.lambda, o.t, budget_of(o));
    if (o.format == "json") {
        json doc = {{"recipe", pair.recipe},
                    {"lambda1", pair.lambda1},
                    {"lambda2", pair.lambda2},
                    {"first", json::parse(blocks_json(pair.b1))},
                    {"second", json::parse(blocks_json(pair.b2))}};
        emit(o, doc.dump());
        return kOk;
    }
    std::ostringstream text;
    text << pair.recipe << " lambda1=" << pair.lambda1 << " lambda2=" << pair.lambda2 << '\n';
    for (std::size_t i = 0; i < pair.b1.size(); ++i) {
        text << "B" << i + 1 << '\n' << to_pretty(pair.b1[i].grid);
        if (!(pair.b2[i] == pair.b1[i])) text << "B'" << i + 1 << '\n' << to_pretty(pair.b2[i].grid);
    }
    emit(o, text.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Magic rectangles, signed magic arrays and integer lambda-fold Heffter arrays"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> objects{"heffter", "sma", "mr"};

    auto shape_flags = [&](CLI::App* sub) {
        sub->add_option("object", o.object, "heffter, sma or mr")->required()->check(CLI::IsMember(objects));
        sub->add_option("--m", o.m, "rows");
        sub->add_option("--n", o.n, "columns");
        sub->add_option("--s", o.s, "filled cells per row");
        sub->add_option("--k", o.k, "filled cells per column");
        sub->add_option("--lambda", o.lambda, "multiplicity (heffter)")->check(CLI::PositiveNumber);
        sub->add_option("--t", o.t, "subgroup order (heffter)")->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "json, csv or pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--out", o.out, "write here instead of stdout");
    };
    auto budget_flags = [&](CLI::App* sub) {
        sub->add_option("--max-nodes", o.max_nodes, "search node cap (default from HEFFTER_ORACLE_BUDGET)");
        sub->add_option("--time-cap", o.time_cap, "search time cap in seconds");
    };

    auto* construct = app.add_subcommand("construct", "build and verify an array");
    shape_flags(construct);
    budget_flags(construct);
    auto* verify = app.add_subcommand("verify", "check a JSON or CSV grid");
    shape_flags(verify);
    verify->add_option("input", o.input, "grid file")->required();
    auto* search = app.add_subcommand("search", "bounded backtracking search");
    shape_flags(search);
    budget_flags(search);
    auto* sweep = app.add_subcommand("sweep", "construct and verify every tuple in a range");
    sweep->add_option("object", o.object, "heffter, sma or mr")->required()->check(CLI::IsMember(objects));
    sweep->add_option("--max-m", o.max_m, "largest m")->required();
    sweep->add_option("--max-n", o.max_n, "largest n")->required();
    sweep->add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    sweep->add_option("--out", o.out, "write here instead of stdout");
    budget_flags(sweep);
    auto* dump = app.add_subcommand("dump-blocks", "print the nice pair behind an s = 2 (mod 4) build");
    shape_flags(dump);
    budget_flags(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(o);
        if (verify->parsed()) return cmd_verify(o);
        if (search->parsed()) return cmd_search(o);
        if (sweep->parsed()) return cmd_sweep(o);
        return cmd_dump_blocks(o);
    } catch (const Usage& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const ParamError& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return kUnsupported;
    } catch (const UnsupportedCase& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kExhausted;
    } catch (const InternalError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const FormatError& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
}
