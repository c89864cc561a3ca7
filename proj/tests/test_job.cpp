#include <catch2/catch_amalgamated.hpp>

#include "blowup/job.hpp"

using namespace blowup;

static const char* kVeroneseJob = R"(
# comment line
[ring]
vars = x, y
p = 32003
order = degrevlex
[ideal]
gen = x^2
gen = x*y
gen = y^2
[tasks]
task = bounds
[options]
seed = 1
)";

TEST_CASE("job files parse and round-trip through print_job") {
    JobSpec spec = parse_job(kVeroneseJob);
    CHECK(spec.vars == std::vector<std::string>{"x", "y"});
    CHECK(spec.p == 32003);
    CHECK(spec.ideal_gens.size() == 3);
    CHECK(spec.tasks == std::set<std::string>{"bounds"});
    std::string printed = print_job(spec);
    JobSpec again = parse_job(printed);
    CHECK(print_job(again) == printed);
}

TEST_CASE("job parsing diagnostics") {
    CHECK_THROWS_AS(parse_job("[nope]\n"), parse_error);
    CHECK_THROWS_AS(parse_job("[ring]\nvars x, y\n"), parse_error);       // missing =
    CHECK_THROWS_AS(parse_job("[tasks]\ntask = dance\n[ideal]\ngen = x\n"), parse_error);
    CHECK_THROWS_AS(parse_job("[ring]\nvars = x\n"), parse_error);        // no ideal
    CHECK_THROWS_AS(parse_job("[ideal]\ngen = x\n[semigroup]\ngens = 2, 3\nideal = 2\n"),
                    parse_error);                                          // both
    CHECK_THROWS_AS(parse_job("[ring]\nvars = x\n[ideal]\ngen = y\n"), parse_error);
    CHECK_THROWS_AS(parse_job("gen = x\n"), parse_error);                  // no section
    // malformed polynomial text reports a position
    try {
        parse_job("[ring]\nvars = x\n[ideal]\ngen = 2x\n");
        FAIL("expected parse_error");
    } catch (const parse_error&) {
    }
}

TEST_CASE("run_job produces a deterministic integer report") {
    JobSpec spec = parse_job(kVeroneseJob);
    json a = run_job(spec);
    json b = run_job(spec);
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a == b);

    CHECK(a["backend"] == "polynomial");
    const json& inv = a["invariants"];
    CHECK(inv["d"] == 2);
    CHECK(inv["e"] == json::array({4, 1, 0}));
    CHECK(inv["f"][0] == 2);
    CHECK(inv["lambda_R_mod_I"] == 3);
    CHECK(inv["mu_I"] == 3);
    CHECK(inv["reduction"]["r_J"] == 1);
    CHECK(inv["fiber_cm"]["cm"] == true);
    for (const auto& b2 : inv["bounds"]) CHECK(b2["status"] != "violated");
}

TEST_CASE("run_job routes semigroup jobs to the combinatorial backend") {
    JobSpec spec = parse_job("[semigroup]\ngens = 6, 11, 15, 31\nideal = 6, 11, 31\n"
                             "[tasks]\ntask = bounds\n");
    json rep = run_job(spec);
    CHECK(rep["backend"] == "semigroup");
    CHECK(rep["invariants"]["e"] == json::array({6, 5}));
    CHECK(rep["invariants"]["f"] == json::array({3}));
    CHECK(rep["invariants"]["reduction"]["r_J"] == 2);
    CHECK(rep["invariants"]["fiber_cm"]["cm"] == false);
    // closure tasks are undefined here
    JobSpec bad = spec;
    bad.tasks = {"ratliff_rush"};
    CHECK_THROWS_AS(run_job(bad), error);
}

TEST_CASE("closure tasks attach their results") {
    JobSpec spec = parse_job("[ring]\nvars = x, y\n[ideal]\ngen = x^4\ngen = x^3*y\n"
                             "gen = x*y^3\ngen = y^4\n[tasks]\ntask = ratliff_rush\n"
                             "task = integral_closure\n");
    json rep = run_job(spec);
    CHECK_FALSE(rep.contains("invariants"));
    const json& rr = rep["closures"]["ratliff_rush"];
    CHECK(rr["mu_closed"] == 5);
    CHECK(rr["lambda_closed"] == 10);
    CHECK(rep["closures"]["integral_closure"]["lambda_closed"] == 10);
}
