#include "pgf/cli.hpp"

#include "pgf/closed_form.hpp"
#include "pgf/group_type.hpp"
#include "pgf/lattice_oracle.hpp"
#include "pgf/mobius_engine.hpp"
#include "pgf/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace pgf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool valid_format(const std::string& f) { return f == "text" || f == "json" || f == "csv"; }

std::int64_t checked_prime(long long p) {
    if (!is_prime(p)) throw UsageError("--p must be a prime, got " + std::to_string(p));
    return p;
}

GroupType checked_type(const std::string& text) {
    try {
        return parse_group_type(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--type: ") + e.what());
    }
}

std::size_t resolve_cap(const std::optional<std::size_t>& flag) {
    if (flag) {
        if (*flag == 0) throw UsageError("--max-order must be positive");
        return *flag;
    }
    return default_order_cap();
}

Json type_json(const GroupType& t) { return Json::array({t[0], t[1], t[2]}); }

// --------------------------------------------------------------- count / f2

struct QuantityOptions {
    std::string type;
    std::optional<long long> p;
    bool symbolic = false;
    std::string format = "text";
    std::string method = "theorem3";
    std::optional<std::size_t> max_order;
};

Mode resolve_mode(const QuantityOptions& o) {
    if (o.p && o.symbolic) throw UsageError("--p and --symbolic are mutually exclusive");
    if (!o.p && !o.symbolic) throw UsageError("one of --p or --symbolic is required");
    if (o.symbolic) return Symbolic{};
    return Numeric{checked_prime(*o.p)};
}

void emit_quantity(std::ostream& out, const std::string& format, const GroupType& t, const Mode& mode,
                   const std::string& quantity, const std::string& method, const std::string& value) {
    const auto* num = std::get_if<Numeric>(&mode);
    if (format == "json") {
        Json j;
        j["type"] = type_json(t);
        j["p"] = num ? Json(num->p) : Json(nullptr);
        j["quantity"] = quantity;
        j["method"] = method;
        j["value"] = value;
        out << j.dump() << '\n';
    } else if (format == "csv") {
        out << "lambda1,lambda2,lambda3,p,quantity,method,value\n";
        out << t[0] << ',' << t[1] << ',' << t[2] << ',' << (num ? std::to_string(num->p) : std::string()) << ','
            << quantity << ',' << method << ',' << value << '\n';
    } else {
        out << value << '\n';
    }
}

int cmd_count(const QuantityOptions& o, std::ostream& out) {
    const GroupType t = checked_type(o.type);
    const Mode mode = resolve_mode(o);
    const FormulaResult f = subgroup_count_f(t, mode);
    emit_quantity(out, o.format, t, mode, "f", std::string(method_name(f.method)), f.to_string());
    return kOk;
}

int cmd_f2(const QuantityOptions& o, std::ostream& out) {
    const GroupType t = checked_type(o.type);
    const Mode mode = resolve_mode(o);
    std::string value;
    if (o.method == "theorem3") {
        value = f2_theorem3(t, mode).to_string();
    } else {
        const auto* num = std::get_if<Numeric>(&mode);
        if (!num) throw UsageError("--method " + o.method + " requires --p");
        if (o.method == "mobius") {
            value = f2_via_mobius(t, num->p).get_str();
        } else {
            const ConcreteGroup g = build_group(t, num->p, resolve_cap(o.max_order));
            value = count_factorizations(g, all_subgroups(g)).get_str();
        }
    }
    emit_quantity(out, o.format, t, mode, "f2", o.method, value);
    return kOk;
}

// ------------------------------------------------------------------- verify

struct VerifyOptions {
    std::string type;
    std::optional<long long> p;
    std::string checks;
    std::optional<std::size_t> max_order;
};

const std::vector<std::string> kAllChecks = {"count", "f2", "hall", "eq2", "census"};

std::string render_census(const QuotientCensus& c) {
    std::string s;
    for (const auto& [type, count] : c.entries) {
        if (!s.empty()) s += ';';
        s += type.to_string() + ':' + count.get_str();
    }
    return s;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

Json report_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["status"] = c.passed ? "pass" : "fail";
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        checks.push_back(std::move(jc));
    }
    Json j;
    j["instance"]["type"] = type_json(r.type);
    j["instance"]["p"] = r.p;
    j["checks"] = std::move(checks);
    j["overall"] = r.overall();
    return j;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    const GroupType t = checked_type(o.type);
    if (!o.p) throw UsageError("verify requires --p");
    const std::int64_t p = checked_prime(*o.p);

    std::set<std::string> selected;
    if (o.checks.empty()) {
        for (const auto& c : kAllChecks)
            if (c != "census" || t.rank() == 3) selected.insert(c);
    } else {
        for (const auto& c : split_list(o.checks)) {
            if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end())
                throw UsageError("unknown check '" + c + "'");
            selected.insert(c);
        }
        if (selected.empty()) throw UsageError("--checks is empty");
    }
    if (selected.count("census") && t.rank() != 3) throw UsageError("the census check needs a rank-3 type");

    VerificationReport report{t, p, {}};
    const bool needs_oracle = selected.count("count") || selected.count("f2") || selected.count("hall") ||
                              selected.count("eq2");
    std::optional<ConcreteGroup> g;
    std::optional<Lattice> lattice;
    if (needs_oracle) {
        g.emplace(build_group(t, p, resolve_cap(o.max_order)));
        lattice.emplace(all_subgroups(*g));
    }

    if (selected.count("count")) {
        const BigInt f = subgroup_count_f(t, Numeric{p}).number();
        report.expect_equal("count.eq3_vs_lattice", std::to_string(lattice->size()), f.get_str());
        report.expect_equal("count.symbolic_eval", f.get_str(),
                            subgroup_count_f(t, Symbolic{}).polynomial().eval(p).get_str());
    }
    if (selected.count("f2")) {
        const FactorizationTally tally = tally_factorizations(*g, *lattice);
        const std::string brute = tally.ordered.get_str();
        report.expect_equal("f2.theorem3_vs_oracle", brute, f2_theorem3(t, Numeric{p}).to_string());
        report.expect_equal("f2.theorem3_symbolic_eval", brute,
                            f2_theorem3(t, Symbolic{}).polynomial().eval(p).get_str());
        report.expect_equal("f2.mobius_vs_oracle", brute, f2_via_mobius(t, p).get_str());
        if (t[0] == t[1] && t[1] == t[2])
            report.expect_equal("f2.corollary4_vs_oracle", brute, f2_corollary4(t[0], Numeric{p}).to_string());
        const BigInt from_unordered = 2 * tally.unordered - tally.diagonal;
        report.expect_equal("f2.ordered_equals_2u_minus_d", brute, from_unordered.get_str());
    }
    if (selected.count("hall")) report.append(verify_hall(*g, *lattice));
    if (selected.count("eq2")) report.append(verify_eq2_forms(*g, *lattice));
    if (selected.count("census")) {
        for (int k = 1; k <= 2; ++k)
            report.expect_equal("census.k" + std::to_string(k), render_census(expected_census(t, k, p)),
                                render_census(quotient_type_census(t, k, p)));
        Subspace full;
        full.dim = 3;
        for (std::size_t i = 0; i < 3; ++i) full.rows[i][i] = 1;
        report.expect_equal("census.full_socle_quotient",
                            GroupType::normalize({t[0] - 1L, t[1] - 1L, t[2] - 1L}).to_string(),
                            quotient_type(t, full, p).to_string());
    }

    out << report_json(report).dump(2) << '\n';
    return report.overall() ? kOk : kMismatch;
}

// -------------------------------------------------------------------- table

struct TableOptions {
    int max_lambda = 0;
    std::string primes;
    std::string format = "text";
    std::optional<std::size_t> max_order;
};

const std::vector<std::string> kTableColumns = {"lambda1", "lambda2", "lambda3", "p", "f",
                                                "f2_theorem3", "f2_mobius", "f2_oracle"};

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
    if (o.max_lambda < 1) throw UsageError("--max-lambda must be at least 1");
    std::set<std::int64_t> primes;
    for (const auto& item : split_list(o.primes)) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw UsageError("--primes: '" + item + "' is not an integer");
        primes.insert(checked_prime(v));
    }
    if (primes.empty()) throw UsageError("--primes must list at least one prime");
    const std::size_t cap = resolve_cap(o.max_order);

    std::vector<std::vector<std::optional<std::string>>> rows;
    bool consistent = true;
    for (int a = 1; a <= o.max_lambda; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) {
                const GroupType t = GroupType::from_descending({a, b, c});
                for (std::int64_t p : primes) {
                    std::vector<std::optional<std::string>> row{std::to_string(a), std::to_string(b),
                                                                std::to_string(c), std::to_string(p)};
                    row.emplace_back(subgroup_count_f(t, Numeric{p}).to_string());
                    const std::string thm = f2_theorem3(t, Numeric{p}).to_string();
                    const std::string mob = f2_via_mobius(t, p).get_str();
                    std::optional<std::string> orc;
                    if (group_order(t, p) <= mpz_class(static_cast<unsigned long>(cap))) {
                        const ConcreteGroup g(t, p);
                        orc = count_factorizations(g, all_subgroups(g)).get_str();
                    }
                    if (thm != mob || (orc && *orc != thm)) {
                        consistent = false;
                        err << "disagreement at type " << t.to_string() << " p=" << p << '\n';
                    }
                    row.emplace_back(thm);
                    row.emplace_back(mob);
                    row.push_back(orc);
                    rows.push_back(std::move(row));
                }
            }

    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json jr;
            for (std::size_t i = 0; i < kTableColumns.size(); ++i) {
                if (i < 4)
                    jr[kTableColumns[i]] = std::stoll(*row[i]);
                else
                    jr[kTableColumns[i]] = row[i] ? Json(*row[i]) : Json(nullptr);
            }
            arr.push_back(std::move(jr));
        }
        out << arr.dump(2) << '\n';
    } else if (o.format == "csv") {
        for (std::size_t i = 0; i < kTableColumns.size(); ++i) out << (i ? "," : "") << kTableColumns[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].value_or("");
            out << '\n';
        }
    } else {
        std::vector<std::size_t> width(kTableColumns.size());
        for (std::size_t i = 0; i < width.size(); ++i) {
            width[i] = kTableColumns[i].size();
            for (const auto& row : rows) width[i] = std::max(width[i], row[i].value_or("-").size());
        }
        auto line = [&](auto cell) {
            for (std::size_t i = 0; i < width.size(); ++i) {
                if (i) out << "  ";
                out << std::setw(static_cast<int>(width[i])) << cell(i);
            }
            out << '\n';
        };
        line([&](std::size_t i) { return kTableColumns[i]; });
        for (const auto& row : rows) line([&](std::size_t i) { return row[i].value_or("-"); });
    }
    return consistent ? kOk : kMismatch;
}

}  // namespace

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subgroup and factorization counts of abelian p-groups of rank at most 3", "pgf"};
    app.require_subcommand(1);

    QuantityOptions count_opts;
    auto* count = app.add_subcommand("count", "Number of subgroups f(l1,l2,l3)");
    count->add_option("--type", count_opts.type, "Group type l1,l2,l3 (descending)")->required();
    count->add_option("--p", count_opts.p, "Prime p");
    count->add_flag("--symbolic", count_opts.symbolic, "Result as a polynomial in p");
    count->add_option("--format", count_opts.format, "text|json|csv");

    QuantityOptions f2_opts;
    auto* f2 = app.add_subcommand("f2", "Factorization number F2");
    f2->add_option("--type", f2_opts.type, "Group type l1,l2,l3 (descending)")->required();
    f2->add_option("--p", f2_opts.p, "Prime p");
    f2->add_flag("--symbolic", f2_opts.symbolic, "Result as a polynomial in p");
    f2->add_option("--method", f2_opts.method, "theorem3|mobius|oracle");
    f2->add_option("--format", f2_opts.format, "text|json|csv");
    f2->add_option("--max-order", f2_opts.max_order, "Element cap for the oracle");

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Cross-check all routes and print a JSON report");
    verify->add_option("--type", verify_opts.type, "Group type l1,l2,l3 (descending)")->required();
    verify->add_option("--p", verify_opts.p, "Prime p");
    verify->add_option("--checks", verify_opts.checks, "Subset of count,f2,hall,eq2,census");
    verify->add_option("--max-order", verify_opts.max_order, "Element cap for the oracle");

    TableOptions table_opts;
    auto* table = app.add_subcommand("table", "Tabulate f and F2 over a grid of types and primes");
    table->add_option("--max-lambda", table_opts.max_lambda, "Largest exponent l1")->required();
    table->add_option("--primes", table_opts.primes, "Comma-separated primes")->required();
    table->add_option("--format", table_opts.format, "text|json|csv");
    table->add_option("--max-order", table_opts.max_order, "Element cap for the oracle column");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        for (const auto* fmt : {&count_opts.format, &f2_opts.format, &table_opts.format})
            if (!valid_format(*fmt)) throw UsageError("--format must be one of text, json, csv");
        if (f2_opts.method != "theorem3" && f2_opts.method != "mobius" && f2_opts.method != "oracle")
            throw UsageError("--method must be one of theorem3, mobius, oracle");

        if (count->parsed()) return cmd_count(count_opts, out);
        if (f2->parsed()) return cmd_f2(f2_opts, out);
        if (verify->parsed()) return cmd_verify(verify_opts, out);
        return cmd_table(table_opts, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace pgf::cli
