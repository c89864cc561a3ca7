#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "blowup/job.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw blowup::error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const blowup::json& rep, const std::string& out_path) {
    std::string text = rep.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw blowup::error("cannot write " + out_path);
        out << text;
    }
}

int cmd_run(const std::string& job_path, std::uint64_t seed, bool seed_set,
            std::uint32_t p, bool p_set, int max_power, const std::string& out_path) {
    blowup::JobSpec spec = blowup::parse_job(read_file(job_path));
    if (seed_set) spec.seed = seed;
    if (p_set) spec.p = p;
    if (max_power > 0) {
        spec.lambda_budget = max_power;
        spec.mu_budget = max_power;
    }
    blowup::json rep = blowup::run_job(spec);
    emit(rep, out_path);
    return 0;
}

int cmd_scan(int nvars, int max_exp, int count, std::uint64_t seed,
             const std::string& out_path) {
    using namespace blowup;
    if (nvars < 2 || nvars > 3) throw error("scan: --vars must be 2 or 3");
    if (max_exp < 2) throw error("scan: --max-exp must be >= 2");

    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(static_cast<size_t>(nvars));
    RingPtr ctx = make_ring(names, 32003, MonomialOrder::degrevlex(), {});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> edist(1, max_exp);
    std::uniform_int_distribution<int> extra(1, 3);

    json runs = json::array();
    int equalities = 0;
    for (int t = 0; t < count; ++t) {
        // random m-primary monomial ideal: every pure power plus a few more
        std::vector<std::string> gens;
        for (int v = 0; v < nvars; ++v)
            gens.push_back(names[static_cast<size_t>(v)] + "^" + std::to_string(edist(rng)));
        int k = extra(rng);
        for (int j = 0; j < k; ++j) {
            std::string mono;
            for (int v = 0; v < nvars; ++v) {
                if (v) mono += "*";
                mono += names[static_cast<size_t>(v)] + "^" + std::to_string(edist(rng));
            }
            gens.push_back(mono);
        }
        Ideal I = make_ideal(ctx, gens);
        ReportOptions opt;
        opt.seed = seed + static_cast<std::uint64_t>(t) + 1;
        opt.closure_bounds = 0;
        json entry;
        entry["gens"] = gens;
        try {
            InvariantReport rep = bounds_report(I, opt);
            entry["e"] = rep.e;
            entry["f"] = rep.f;
            entry["r_J"] = rep.r_J;
            json eq = json::array();
            for (const auto& b : rep.bounds)
                if (b.status == "equality" && b.applicable) eq.push_back(b.name);
            if (!eq.empty()) ++equalities;
            entry["equalities"] = eq;
            entry["status"] = "ok";
        } catch (const bound_violation& e) {
            entry["status"] = "violation";
            entry["detail"] = e.what();
        } catch (const error& e) {
            entry["status"] = "error";
            entry["detail"] = e.what();
        }
        runs.push_back(std::move(entry));
    }
    json rep;
    rep["toolkit_version"] = kToolkitVersion;
    rep["seed"] = seed;
    rep["count"] = count;
    rep["with_equalities"] = equalities;
    rep["runs"] = runs;
    emit(rep, out_path);
    for (const auto& r : rep["runs"])
        if (r["status"] == "violation") return 2;
    return 0;
}

const char* kFixtures[] = {"hankel", "huckaba-huneke", "semigroup", "ciuperca", "veronese"};

int cmd_fixtures() {
    for (const char* f : kFixtures) std::cout << f << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"blowup invariants of m-primary ideals"};
    app.require_subcommand(1);

    std::string job_path, out_path;
    std::uint64_t seed = 1;
    std::uint32_t prime = 32003;
    int max_power = 0;

    auto* run = app.add_subcommand("run", "run a job file");
    run->add_option("job", job_path, "job file")->required();
    auto* seed_opt = run->add_option("--seed", seed, "override the job seed");
    auto* p_opt = run->add_option("--p", prime, "override the coefficient prime");
    run->add_option("--max-power", max_power, "override the power sampling budget");
    run->add_option("--out", out_path, "write the report to a file");

    int nvars = 2, max_exp = 10, count = 50;
    auto* scan = app.add_subcommand("scan", "random monomial-ideal sweep");
    scan->add_option("--vars", nvars, "number of variables (2 or 3)");
    scan->add_option("--max-exp", max_exp, "exponent cap");
    scan->add_option("--count", count, "number of ideals");
    scan->add_option("--seed", seed, "rng seed");
    scan->add_option("--out", out_path, "write the report to a file");

    auto* fixtures = app.add_subcommand("fixtures", "list bundled fixture names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(job_path, seed, seed_opt->count() > 0, prime,
                           p_opt->count() > 0, max_power, out_path);
        if (scan->parsed()) return cmd_scan(nvars, max_exp, count, seed, out_path);
        if (fixtures->parsed()) return cmd_fixtures();
    } catch (const blowup::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const blowup::bound_violation& e) {
        std::cerr << "bound violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
