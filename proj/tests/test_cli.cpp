#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "timeslit/cli.hpp"
#include "timeslit/errors.hpp"

using namespace timeslit;
using namespace timeslit::cli;
using nlohmann::json;

namespace {

using Table = std::vector<std::vector<std::string>>;

Table parse_csv(const std::string& text) {
    Table rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::size_t column(const Table& t, const std::string& name) {
    for (std::size_t i = 0; i < t.front().size(); ++i)
        if (t.front()[i] == name) return i;
    FAIL("missing column " << name);
    return 0;
}

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<const char*> args) {
    args.insert(args.begin(), "timeslit");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

ConfigOverrides model_only(const std::string& m) {
    ConfigOverrides f;
    f.model = m;
    return f;
}

}  // namespace

TEST_CASE("parse_config") {
    SUBCASE("flags for the model C phase sweep") {
        ConfigOverrides f = model_only("C");
        f.omega0 = 2.0;
        f.omega1 = 3.0;
        f.alpha = std::numbers::sqrt2 / 2;
        f.beta = std::numbers::sqrt2 / 2;
        f.phi_steps = 12;
        const auto cfg = parse_config(json::object(), f);
        CHECK(cfg.model == ModelId::C);
        CHECK(cfg.phi_steps == 12);
        CHECK(cfg.t_max == 20.0);
        CHECK(cfg.t_steps == 200);
    }
    SUBCASE("flags override the file") {
        const json file{{"model", "A"}, {"omega0", 0.5}, {"t_steps", 10}};
        ConfigOverrides f;
        f.omega0 = 0.8;
        const auto cfg = parse_config(file, f);
        CHECK(cfg.omega0 == 0.8);
        CHECK(cfg.t_steps == 10);
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(parse_config(json::object(), {}), InputError);

        ConfigOverrides f = model_only("A");
        f.alpha = 1.0;
        f.beta = 1.0;
        CHECK_THROWS_AS(parse_config(json::object(), f), InputError);

        try {
            parse_config(json{{"model", "A"}, {"omga0", 1.0}, {"tmax", 2.0}}, {});
            FAIL("unknown keys accepted");
        } catch (const InputError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("omga0") != std::string::npos);
            CHECK(msg.find("tmax") != std::string::npos);
        }

        f = model_only("B");
        f.t_max = -1.0;
        CHECK_THROWS_AS(parse_config(json::object(), f), InputError);
        CHECK_THROWS_AS(parse_config(json::object(), model_only("D")), InputError);
        CHECK_THROWS_AS(parse_config(json{{"model", "A"}, {"omega0", "fast"}}, {}), InputError);
    }
}

TEST_CASE("format_double round-trips") {
    for (double x : {0.1, 1.0 / 3.0, 2e-300, -7.25, 20.0}) CHECK(std::stod(format_double(x)) == x);
    CHECK(format_double(-0.0) == "0");
}

TEST_CASE("simulate") {
    SUBCASE("antisymmetric model B state never emits") {
        const auto r = invoke({"simulate", "--model", "B", "--alpha", "0.7071067811865476", "--beta",
                               "0.7071067811865476", "--phi", "3.141592653589793"});
        REQUIRE(r.code == kSuccess);
        const auto t = parse_csv(r.out);
        REQUIRE(t.size() == 202);
        CHECK(t.front() == std::vector<std::string>{"model", "omega0", "omega1", "alpha", "beta", "phi", "t", "p",
                                                    "p_cond_1", "p_cond_2", "p_cond_3", "norm"});
        const auto p = column(t, "p");
        for (std::size_t k = 1; k < t.size(); ++k) REQUIRE(std::stod(t[k][p]) <= 1e-10);
    }
    SUBCASE("t_max = 0 gives a single row at the initial state") {
        const auto r = invoke({"simulate", "--model", "A", "--t-max", "0"});
        REQUIRE(r.code == kSuccess);
        const auto t = parse_csv(r.out);
        REQUIRE(t.size() == 2);
        CHECK(std::stod(t[1][column(t, "p")]) <= 1e-30);
        CHECK(std::stod(t[1][column(t, "norm")]) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("model C phase sweep is flat in p") {
        const auto r = invoke({"simulate", "--model", "C", "--omega0", "2", "--omega1", "3", "--alpha",
                               "0.7071067811865476", "--beta", "0.7071067811865476", "--phi-steps", "12",
                               "--t-steps", "40"});
        REQUIRE(r.code == kSuccess);
        const auto t = parse_csv(r.out);
        REQUIRE(t.size() == 1 + 41 * 12);
        CHECK(t.front().size() == 13);
        const auto p = column(t, "p");
        for (std::size_t k = 1; k < t.size(); ++k) {
            const std::size_t first = 1 + ((k - 1) / 12) * 12;
            REQUIRE(std::abs(std::stod(t[k][p]) - std::stod(t[first][p])) <= 1e-10);
        }
    }
    SUBCASE("repeated runs are byte-identical") {
        const std::vector<const char*> args{"simulate", "--model", "A", "--alpha", "0.6", "--beta", "0.8",
                                            "--phi-steps", "5", "--t-steps", "30"};
        CHECK(invoke(args).out == invoke(args).out);
    }
    SUBCASE("rk4 agrees with spectral") {
        const auto s = parse_csv(invoke({"simulate", "--model", "B", "--t-max", "2", "--t-steps", "4"}).out);
        const auto r = invoke({"simulate", "--model", "B", "--t-max", "2", "--t-steps", "4", "--method", "rk4"});
        REQUIRE(r.code == kSuccess);
        CHECK(r.err.empty());
        const auto k = parse_csv(r.out);
        const auto p = column(s, "p");
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(std::abs(std::stod(s[i][p]) - std::stod(k[i][p])) <= 1e-9);
    }
    SUBCASE("coarse rk4 step reports norm drift") {
        const auto r = invoke({"simulate", "--model", "A", "--t-max", "20", "--method", "rk4", "--dt", "0.3"});
        CHECK(r.code == kSuccess);
        CHECK(r.err.find("drift") != std::string::npos);
    }
    SUBCASE("invalid input exits with 2") {
        CHECK(invoke({"simulate"}).code == kInvalidInput);
        CHECK(invoke({"simulate", "--model", "A", "--alpha", "1", "--beta", "1"}).code == kInvalidInput);
        CHECK(invoke({"simulate", "--model", "A", "--omega0", "0"}).code == kInvalidInput);
        CHECK(invoke({"simulate", "--model", "A", "--bogus", "1"}).code == kInvalidInput);
        CHECK(invoke({"simulate", "--config", "/nonexistent/config.json"}).code == kInvalidInput);
    }
}

TEST_CASE("decompose") {
    SUBCASE("model B symmetric coefficients") {
        const auto r = invoke({"decompose", "--model", "B", "--t-steps", "50"});
        REQUIRE(r.code == kSuccess);
        const auto t = parse_csv(r.out);
        REQUIRE(t.size() == 52);
        const auto a = column(t, "A");
        const auto b = column(t, "B");
        const auto c = column(t, "C");
        const auto s = column(t, "S");
        for (std::size_t k = 1; k < t.size(); ++k) {
            CHECK(std::abs(std::stod(t[k][a]) - std::stod(t[k][b])) <= 1e-10);
            CHECK(std::abs(std::stod(t[k][c]) - 2 * std::stod(t[k][a])) <= 1e-10);
            CHECK(std::abs(std::stod(t[k][s])) <= 1e-10);
        }
    }
    SUBCASE("single time point at zero") {
        const auto r = invoke({"decompose", "--model", "A", "--t-max", "0"});
        REQUIRE(r.code == kSuccess);
        const auto t = parse_csv(r.out);
        REQUIRE(t.size() == 2);
        for (const char* name : {"A", "B", "C", "S"}) CHECK(std::abs(std::stod(t[1][column(t, name)])) <= 1e-20);
    }
}

TEST_CASE("eigen") {
    SUBCASE("model C lists sixteen full-space values") {
        const auto r = invoke({"eigen", "--model", "C", "--omega0", "2", "--omega1", "3"});
        REQUIRE(r.code == kSuccess);
        const auto t = parse_csv(r.out);
        REQUIRE(t.size() == 17);
        const auto num = column(t, "numerical");
        const auto cf = column(t, "closed_form");
        for (std::size_t k = 1; k < t.size(); ++k) {
            CHECK(t[k][column(t, "operator")] == "full");
            CHECK(std::abs(std::stod(t[k][num]) - std::stod(t[k][cf])) <= 1e-10);
        }
    }
    SUBCASE("model A without hopping") {
        const auto r = invoke({"eigen", "--model", "A", "--omega0", "0"});
        REQUIRE(r.code == kSuccess);
        const auto t = parse_csv(r.out);
        REQUIRE(t.size() == 1 + 12 + 3 + 3);
        const auto op = column(t, "operator");
        const auto num = column(t, "numerical");
        const auto cf = column(t, "closed_form");
        std::vector<double> plus, minus;
        for (std::size_t k = 1; k < t.size(); ++k) {
            CHECK(std::abs(std::stod(t[k][num]) - std::stod(t[k][cf])) <= 1e-10);
            if (t[k][op] == "plus") plus.push_back(std::stod(t[k][num]));
            if (t[k][op] == "minus") minus.push_back(std::stod(t[k][num]));
        }
        REQUIRE(plus.size() == 3);
        REQUIRE(minus.size() == 3);
        CHECK(std::abs(plus[0]) <= 1e-14);
        CHECK(std::abs(plus[1]) <= 1e-14);
        CHECK(std::abs(plus[2] - 1.0) <= 1e-14);
        CHECK(std::abs(minus[0] + 1.0) <= 1e-14);
        CHECK(std::abs(minus[1]) <= 1e-14);
        CHECK(std::abs(minus[2]) <= 1e-14);
    }
    SUBCASE("model B has no closed form column") {
        const auto t = parse_csv(invoke({"eigen", "--model", "B"}).out);
        REQUIRE(t.size() == 19);
        CHECK(t[1][column(t, "closed_form")].empty());
    }
}

TEST_CASE("validate") {
    SUBCASE("a sign flip in the coupling is caught") {
        ValidationOptions opts;
        opts.hamiltonian = [](const ModelParams& p) {
            return free_hamiltonian(p.model, p.omega0) + Complex{-1.0} * interaction_hamiltonian(p.model, p.omega1);
        };
        const auto report = run_validation(opts);
        std::map<int, bool> pass;
        for (const auto& c : report.by_criterion()) pass[c.criterion] = c.pass;
        CHECK_FALSE(pass[1]);
        CHECK_FALSE(pass[2]);
        CHECK_FALSE(pass[5]);
        CHECK_FALSE(report.passed());
    }
    SUBCASE("an impossible tolerance fails") {
        std::ostringstream out;
        CHECK(cmd_validate(ValidationOptions{1e-30}, out) == kValidationFailure);
        CHECK(out.str().find("FAIL") != std::string::npos);
    }
    SUBCASE("bad tolerance value is an input error") {
        CHECK(invoke({"validate", "--tolerance", "abc"}).code == kInvalidInput);
    }
}
