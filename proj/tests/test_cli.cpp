#include "pgf/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <set>
#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = pgf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("primality by trial division") {
    CHECK(pgf::cli::is_prime(2));
    CHECK(pgf::cli::is_prime(97));
    CHECK_FALSE(pgf::cli::is_prime(1));
    CHECK_FALSE(pgf::cli::is_prime(0));
    CHECK_FALSE(pgf::cli::is_prime(-3));
    CHECK_FALSE(pgf::cli::is_prime(91));
}

TEST_CASE("count") {
    CHECK(run({"count", "--type", "3,2,1", "--p", "2"}).out == "81\n");
    CHECK(run({"count", "--type", "1,1,0", "--symbolic"}).out == "p+3\n");

    const auto bad = run({"count", "--type", "2,3,1", "--p", "2"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
    CHECK(bad.out.empty());

    CHECK(run({"count", "--type", "3,2,1"}).code == 2);
    CHECK(run({"count", "--type", "3,2,1", "--p", "2", "--symbolic"}).code == 2);
    CHECK(run({"count", "--type", "3,2,1", "--p", "4"}).code == 2);
    CHECK(run({"count", "--type", "3,2,1", "--p", "2", "--format", "xml"}).code == 2);
    CHECK(run({"count", "--p", "2"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("count formats") {
    CHECK(run({"count", "--type", "3,2,1", "--p", "2", "--format", "json"}).out ==
          "{\"type\":[3,2,1],\"p\":2,\"quantity\":\"f\",\"method\":\"eq3\",\"value\":\"81\"}\n");
    CHECK(run({"count", "--type", "1,1,1", "--symbolic", "--format", "json"}).out ==
          "{\"type\":[1,1,1],\"p\":null,\"quantity\":\"f\",\"method\":\"eq3\",\"value\":\"2p^2+2p+4\"}\n");
    CHECK(run({"count", "--type", "3,2,1", "--p", "2", "--format", "csv"}).out ==
          "lambda1,lambda2,lambda3,p,quantity,method,value\n3,2,1,2,f,eq3,81\n");
}

TEST_CASE("f2 through every route") {
    CHECK(run({"f2", "--type", "3,2,1", "--symbolic", "--method", "theorem3"}).out ==
          "9p^6+15p^5+21p^4+16p^3+20p^2+11p+13\n");
    CHECK(run({"f2", "--type", "3,2,1", "--p", "2", "--method", "oracle"}).out == "1635\n");
    CHECK(run({"f2", "--type", "3,2,1", "--p", "2", "--method", "mobius"}).out == "1635\n");
    CHECK(run({"f2", "--type", "3,2,1", "--p", "2"}).out == "1635\n");
    CHECK(run({"f2", "--type", "3,2,1", "--p", "2", "--method", "oracle", "--format", "json"}).out ==
          "{\"type\":[3,2,1],\"p\":2,\"quantity\":\"f2\",\"method\":\"oracle\",\"value\":\"1635\"}\n");

    CHECK(run({"f2", "--type", "3,2,1", "--symbolic", "--method", "mobius"}).code == 2);
    CHECK(run({"f2", "--type", "3,2,1", "--symbolic", "--method", "oracle"}).code == 2);
    CHECK(run({"f2", "--type", "3,2,1", "--p", "2", "--method", "magic"}).code == 2);
}

TEST_CASE("oracle cap") {
    const auto capped = run({"f2", "--type", "2,2,2", "--p", "5", "--method", "oracle"});
    CHECK(capped.code == 3);
    CHECK(capped.err.find("cap") != std::string::npos);
    CHECK(run({"f2", "--type", "3,2,1", "--p", "2", "--method", "oracle", "--max-order", "32"}).code == 3);
    CHECK(run({"f2", "--type", "3,2,1", "--p", "2", "--method", "oracle", "--max-order", "0"}).code == 2);

    ::setenv("PGF_MAX_ORDER", "32", 1);
    CHECK(run({"f2", "--type", "3,2,1", "--p", "2", "--method", "oracle"}).code == 3);
    CHECK(run({"f2", "--type", "3,2,1", "--p", "2", "--method", "oracle", "--max-order", "64"}).code == 0);
    ::unsetenv("PGF_MAX_ORDER");
}

TEST_CASE("verify") {
    const auto full = run({"verify", "--type", "3,2,1", "--p", "2"});
    CHECK(full.code == 0);
    const auto report = nlohmann::ordered_json::parse(full.out);
    CHECK(report["overall"] == true);
    CHECK(report["instance"]["type"] == nlohmann::ordered_json::array({3, 2, 1}));
    CHECK(report["instance"]["p"] == 2);
    std::set<std::string> prefixes;
    for (const auto& c : report["checks"]) {
        CHECK(c["status"] == "pass");
        const std::string name = c["name"];
        prefixes.insert(name.substr(0, name.find('.')));
    }
    CHECK(prefixes == std::set<std::string>{"count", "f2", "hall", "eq2", "census"});

    const auto sub = run({"verify", "--type", "1,1,1", "--p", "3", "--checks", "hall,eq2"});
    CHECK(sub.code == 0);
    for (const auto& c : nlohmann::ordered_json::parse(sub.out)["checks"]) {
        const std::string name = c["name"];
        CHECK((name.rfind("hall", 0) == 0 || name.rfind("eq2", 0) == 0));
    }

    CHECK(run({"verify", "--type", "3,2,1", "--p", "1"}).code == 2);
    CHECK(run({"verify", "--type", "3,2,1"}).code == 2);
    CHECK(run({"verify", "--type", "3,2,1", "--p", "2", "--checks", "count,nope"}).code == 2);
    CHECK(run({"verify", "--type", "2,1,0", "--p", "2", "--checks", "census"}).code == 2);
    CHECK(run({"verify", "--type", "2,2,2", "--p", "5"}).code == 3);
    // census needs no oracle, so it runs past the cap
    CHECK(run({"verify", "--type", "2,2,2", "--p", "5", "--checks", "census"}).code == 0);
    CHECK(run({"verify", "--type", "2,1,0", "--p", "3"}).code == 0);
}

TEST_CASE("table") {
    const auto csv = run({"table", "--max-lambda", "2", "--primes", "2", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("lambda1,lambda2,lambda3,p,f,f2_theorem3,f2_mobius,f2_oracle\n", 0) == 0);
    CHECK(csv.out.find("\n2,2,2,2,129,4387,4387,4387\n") != std::string::npos);
    CHECK(csv.out.find("\n1,0,0,2,2,3,3,3\n") != std::string::npos);

    const auto json = run({"table", "--max-lambda", "1", "--primes", "3,2", "--format", "json"});
    CHECK(json.code == 0);
    const auto rows = nlohmann::ordered_json::parse(json.out);
    REQUIRE(rows.size() == 6);
    const std::vector<std::array<int, 4>> expected_order = {{1, 0, 0, 2}, {1, 0, 0, 3}, {1, 1, 0, 2},
                                                            {1, 1, 0, 3}, {1, 1, 1, 2}, {1, 1, 1, 3}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i]["lambda1"] == expected_order[i][0]);
        CHECK(rows[i]["lambda2"] == expected_order[i][1]);
        CHECK(rows[i]["lambda3"] == expected_order[i][2]);
        CHECK(rows[i]["p"] == expected_order[i][3]);
    }
    CHECK(rows[4]["f2_oracle"] == "129");

    // oracle column left empty once the cap is exceeded
    const auto capped = run({"table", "--max-lambda", "1", "--primes", "2", "--format", "csv", "--max-order", "4"});
    CHECK(capped.code == 0);
    CHECK(capped.out.find("\n1,1,1,2,16,129,129,\n") != std::string::npos);

    const auto text = run({"table", "--max-lambda", "1", "--primes", "2"});
    CHECK(text.code == 0);
    CHECK(text.out.find("f2_theorem3") != std::string::npos);

    CHECK(run({"table", "--max-lambda", "1", "--primes", ""}).code == 2);
    CHECK(run({"table", "--max-lambda", "1", "--primes", "2,6"}).code == 2);
    CHECK(run({"table", "--max-lambda", "0", "--primes", "2"}).code == 2);
    CHECK(run({"table", "--max-lambda", "1", "--primes", "2", "--format", "yaml"}).code == 2);
}

TEST_CASE("json output round-trips byte for byte") {
    const std::vector<std::vector<std::string>> commands = {
        {"count", "--type", "3,2,1", "--p", "2", "--format", "json"},
        {"f2", "--type", "2,2,2", "--symbolic", "--format", "json"},
        {"verify", "--type", "2,1,1", "--p", "2"},
    };
    for (const auto& cmd : commands) {
        const auto r = run(cmd);
        REQUIRE(r.code == 0);
        const auto parsed = nlohmann::ordered_json::parse(r.out);
        const std::string rendered = parsed.dump(parsed.contains("checks") ? 2 : -1) + "\n";
        CHECK(rendered == r.out);
    }
    const auto table = run({"table", "--max-lambda", "2", "--primes", "2,3", "--format", "json"});
    REQUIRE(table.code == 0);
    CHECK(nlohmann::ordered_json::parse(table.out).dump(2) + "\n" == table.out);
    CHECK(table.out.find('.') == std::string::npos);  // no floating point anywhere
}

TEST_CASE("help exits cleanly") {
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("count") != std::string::npos);
}
