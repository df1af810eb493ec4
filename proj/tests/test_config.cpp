#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dispersive/config.hpp"
#include "dispersive/report_io.hpp"

#include <cstdlib>
#include <string>

using namespace dispersive;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("defaults echo and re-parse to the same configuration") {
    const RunConfig def;
    CHECK(parse_config(def.to_text()) == def);
}

TEST_CASE("non-default configuration round trip") {
    const std::string text = "command = sweep\n"
                             "check.id = gn\n"
                             "check.alpha = 0.25, 0.5\n"
                             "check.p = 2\n"
                             "check.seed = 0x1234\n"
                             "check.corpus_size = 7\n"
                             "equation.model = gkdv\n"
                             "equation.k = 2\n"
                             "grid.n = 256\n"
                             "grid.L = 12.5\n"
                             "stepper.T = 0.75\n"
                             "stepper.snapshots = 0, 0.25, 0.75\n"
                             "initial.shape = sech2\n"
                             "diagnostics.list = I1, I2\n"
                             "output.checks = out.csv   # trailing comment\n";
    const RunConfig cfg = parse_config(text);
    CHECK(cfg.command == Command::sweep);
    CHECK(cfg.seed == 0x1234);
    CHECK(cfg.corpus_size == 7);
    CHECK(cfg.model == Model::gkdv);
    CHECK(cfg.k == 2);
    CHECK(cfg.snapshots.size() == 3);
    CHECK(cfg.check_params.at("alpha").size() == 2);
    CHECK(cfg.checks_file == "out.csv");
    CHECK(parse_config(cfg.to_text()) == cfg);
}

TEST_CASE("unknown keys are rejected with their position") {
    try {
        parse_config("grid.n = 64\n  grid.size = 3\n");
        FAIL("expected rejection");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("grid.size") != std::string::npos);
    }
}

TEST_CASE("gKdV k must be a positive integer") {
    try {
        parse_config("equation.model = gkdv\nequation.k = 0\n", "run.cfg");
        FAIL("expected rejection");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 14);
        CHECK(std::string(e.what()).rfind("run.cfg:2:14:", 0) == 0);
    }
    CHECK(error_line("equation.k = 1.5\n") == 1);
}

TEST_CASE("malformed values") {
    CHECK(error_line("grid.n = 100\n") == 1);
    CHECK(error_line("# comment\ngrid.L = -1\n") == 2);
    CHECK(error_line("stepper.dt = abc\n") == 1);
    CHECK(error_line("grid.n = 64\ngrid.n = 128\n") == 2);
    CHECK(error_line("stepper.T = 1\nstepper.snapshots = 2\n") == 2);
    CHECK(error_line("command = check\ncheck.id = nope\n") == 2);
    CHECK(error_line("command = check\ncheck.id = gn\ncheck.bogus = 1\n") == 3);
    CHECK(error_line("equation.model = bo\ndiagnostics.list = energy\n") == 2);
    CHECK(error_line("no equals sign\n") == 1);
}

TEST_CASE("seed from the environment") {
    RunConfig cfg;
    ::setenv("DISPERSIVE_SEED", "42", 1);
    apply_environment(cfg);
    CHECK(cfg.seed == 42);
    ::setenv("DISPERSIVE_SEED", "0xff", 1);
    apply_environment(cfg);
    CHECK(cfg.seed == 255);
    ::setenv("DISPERSIVE_SEED", "seven", 1);
    CHECK_THROWS_AS(apply_environment(cfg), ConfigError);
    ::unsetenv("DISPERSIVE_SEED");
    RunConfig untouched;
    apply_environment(untouched);
    CHECK(untouched.seed == default_corpus_seed);
}

TEST_CASE("csv helpers") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(std::stod(format_double(0.1)) == 0.1);
}
