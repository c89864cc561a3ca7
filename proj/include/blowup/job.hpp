#ifndef BLOWUP_JOB_HPP
#define BLOWUP_JOB_HPP

#include <chrono>
#include <set>

#include <json.hpp>

#include "blowup/invariants.hpp"

namespace blowup {

inline constexpr const char* kToolkitVersion = "0.1.0";

using json = nlohmann::ordered_json;

// Line-oriented job file: [ring] / [ideal] / [semigroup] / [reduction] /
// [tasks] / [options] sections with key = value lines.
struct JobSpec {
    // ring block
    std::vector<std::string> vars;
    std::uint32_t p = 32003;
    std::string order = "degrevlex";
    std::vector<std::string> quotient;
    // exactly one of:
    std::vector<std::string> ideal_gens;
    std::vector<long> sg_gens;       // semigroup generators
    std::vector<long> sg_ideal_gens; // semigroup ideal generators
    // optional
    std::vector<std::string> reduction_gens;
    std::set<std::string> tasks;
    // options
    std::uint64_t seed = 1;
    int cap = 12;
    int lambda_budget = -1;
    int mu_budget = -1;
    int rr_nmax = 12;
    bool char0_assert = false;
    int closure_bounds = -1; // -1 auto, 0 off, 1 on

    bool is_semigroup() const { return !sg_gens.empty(); }
};

namespace detail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty() || !out.empty()) out.push_back(strip(cur));
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

} // namespace detail

inline const std::set<std::string>& known_tasks() {
    static const std::set<std::string> t = {"invariants",   "bounds",   "ratliff_rush",
                                            "s2_ideal",     "integral_closure",
                                            "cm_test"};
    return t;
}

inline JobSpec parse_job(const std::string& text) {
    JobSpec spec;
    std::string section;
    int lineno = 0;
    std::istringstream in(text);
    std::string line;
    bool has_ideal_block = false, has_sg_block = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = detail::strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw parse_error("malformed section header", lineno, 1);
            section = s.substr(1, s.size() - 2);
            if (section != "ring" && section != "ideal" && section != "semigroup" &&
                section != "reduction" && section != "tasks" && section != "options")
                throw parse_error("unknown section [" + section + "]", lineno, 1);
            if (section == "ideal") has_ideal_block = true;
            if (section == "semigroup") has_sg_block = true;
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected key = value", lineno, 1);
        std::string key = detail::strip(s.substr(0, eq));
        std::string val = detail::strip(s.substr(eq + 1));
        auto as_long = [&](const std::string& v) {
            try {
                return std::stol(v);
            } catch (...) {
                throw parse_error("malformed integer '" + v + "'", lineno, 1);
            }
        };
        if (section == "ring") {
            if (key == "vars") spec.vars = detail::split_list(val);
            else if (key == "p") spec.p = static_cast<std::uint32_t>(as_long(val));
            else if (key == "order") spec.order = val;
            else if (key == "quotient") spec.quotient.push_back(val);
            else throw parse_error("unknown ring key '" + key + "'", lineno, 1);
        } else if (section == "ideal") {
            if (key == "gen") spec.ideal_gens.push_back(val);
            else throw parse_error("unknown ideal key '" + key + "'", lineno, 1);
        } else if (section == "semigroup") {
            if (key == "gens")
                for (const auto& v : detail::split_list(val)) spec.sg_gens.push_back(as_long(v));
            else if (key == "ideal")
                for (const auto& v : detail::split_list(val))
                    spec.sg_ideal_gens.push_back(as_long(v));
            else throw parse_error("unknown semigroup key '" + key + "'", lineno, 1);
        } else if (section == "reduction") {
            if (key == "gen") spec.reduction_gens.push_back(val);
            else throw parse_error("unknown reduction key '" + key + "'", lineno, 1);
        } else if (section == "tasks") {
            if (key == "task") {
                if (!known_tasks().count(val))
                    throw parse_error("unknown task '" + val + "'", lineno, 1);
                spec.tasks.insert(val);
            } else {
                throw parse_error("unknown tasks key '" + key + "'", lineno, 1);
            }
        } else if (section == "options") {
            if (key == "seed") spec.seed = static_cast<std::uint64_t>(as_long(val));
            else if (key == "cap") spec.cap = static_cast<int>(as_long(val));
            else if (key == "lambda_budget") spec.lambda_budget = static_cast<int>(as_long(val));
            else if (key == "mu_budget") spec.mu_budget = static_cast<int>(as_long(val));
            else if (key == "rr_nmax") spec.rr_nmax = static_cast<int>(as_long(val));
            else if (key == "char0_assert") spec.char0_assert = (val == "true" || val == "1");
            else if (key == "closure_bounds")
                spec.closure_bounds = val == "auto" ? -1 : (val == "on" ? 1 : 0);
            else throw parse_error("unknown option '" + key + "'", lineno, 1);
        } else {
            throw parse_error("key outside any section", lineno, 1);
        }
    }
    if (has_ideal_block == has_sg_block)
        throw parse_error("exactly one of [ideal] and [semigroup] must be present", lineno, 1);
    if (has_ideal_block && spec.ideal_gens.empty())
        throw parse_error("[ideal] block has no generators", lineno, 1);
    if (has_sg_block && (spec.sg_gens.empty() || spec.sg_ideal_gens.empty()))
        throw parse_error("[semigroup] block needs gens and ideal lines", lineno, 1);
    if (spec.tasks.empty()) spec.tasks.insert("bounds");

    // validate polynomial strings against the declared ring up front
    if (has_ideal_block) {
        if (spec.vars.empty()) throw parse_error("[ring] vars are required", lineno, 1);
        RingPtr ctx = make_ring(spec.vars, spec.p, MonomialOrder::degrevlex(), spec.quotient);
        for (const auto& g : spec.ideal_gens) parse_poly(*ctx, g);
        for (const auto& g : spec.reduction_gens) parse_poly(*ctx, g);
    }
    return spec;
}

inline std::string print_job(const JobSpec& spec) {
    std::ostringstream os;
    if (!spec.is_semigroup()) {
        os << "[ring]\n";
        os << "vars = ";
        for (size_t i = 0; i < spec.vars.size(); ++i)
            os << (i ? ", " : "") << spec.vars[i];
        os << "\n";
        os << "p = " << spec.p << "\n";
        os << "order = " << spec.order << "\n";
        for (const auto& q : spec.quotient) os << "quotient = " << q << "\n";
        os << "[ideal]\n";
        for (const auto& g : spec.ideal_gens) os << "gen = " << g << "\n";
    } else {
        os << "[semigroup]\n";
        os << "gens = ";
        for (size_t i = 0; i < spec.sg_gens.size(); ++i)
            os << (i ? ", " : "") << spec.sg_gens[i];
        os << "\nideal = ";
        for (size_t i = 0; i < spec.sg_ideal_gens.size(); ++i)
            os << (i ? ", " : "") << spec.sg_ideal_gens[i];
        os << "\n";
    }
    if (!spec.reduction_gens.empty()) {
        os << "[reduction]\n";
        for (const auto& g : spec.reduction_gens) os << "gen = " << g << "\n";
    }
    os << "[tasks]\n";
    for (const auto& t : spec.tasks) os << "task = " << t << "\n";
    os << "[options]\n";
    os << "seed = " << spec.seed << "\n";
    os << "cap = " << spec.cap << "\n";
    if (spec.lambda_budget >= 0) os << "lambda_budget = " << spec.lambda_budget << "\n";
    if (spec.mu_budget >= 0) os << "mu_budget = " << spec.mu_budget << "\n";
    if (spec.rr_nmax != 12) os << "rr_nmax = " << spec.rr_nmax << "\n";
    if (spec.char0_assert) os << "char0_assert = true\n";
    if (spec.closure_bounds != -1)
        os << "closure_bounds = " << (spec.closure_bounds ? "on" : "off") << "\n";
    return os.str();
}

// ---- report assembly ----

inline json bound_to_json(const BoundRecord& b) {
    json j;
    j["name"] = b.name;
    j["lhs"] = b.lhs;
    j["rhs"] = b.rhs;
    j["relation"] = b.relation;
    j["applicable"] = b.applicable;
    j["status"] = b.status;
    if (!b.note.empty()) j["note"] = b.note;
    return j;
}

inline json samples_to_json(const HilbertSamples& s) {
    json j;
    j["n0"] = s.n0;
    j["degree"] = s.degree;
    json vals = json::array();
    for (const auto& [m, v] : s.values) vals.push_back(json::array({m, v}));
    j["values"] = vals;
    return j;
}

inline json report_to_json(const InvariantReport& rep) {
    json j;
    j["d"] = rep.d;
    j["analytic_spread"] = rep.ell;
    j["lambda_R_mod_I"] = rep.lambda;
    j["mu_I"] = rep.mu;
    j["e"] = rep.e;
    j["f"] = rep.f;
    j["reduction"] = {{"gens", rep.J_gens},
                      {"user_given", rep.J_user_given},
                      {"r_J", rep.r_J},
                      {"note", "r_J is an upper bound for the reduction number "
                               "minimized over all minimal reductions"}};
    j["sally_degree"] = rep.sally;
    j["fiber_cm"] = {{"cm", rep.fiber_cm.cm},
                     {"lhs_f0", rep.fiber_cm.lhs},
                     {"rhs", rep.fiber_cm.rhs},
                     {"summands", rep.fiber_cm.summands}};
    json bounds = json::array();
    for (const auto& b : rep.bounds) bounds.push_back(bound_to_json(b));
    j["bounds"] = bounds;
    j["flags"] = {{"goto_minimal_multiplicity", rep.goto_min_mult},
                  {"normally_flat", rep.normally_flat}};
    j["paper_asserted_implications"] = rep.notes;
    if (rep.has_rr)
        j["ratliff_rush"] = {{"lambda", rep.rr_lambda}, {"mu", rep.rr_mu}};
    if (rep.has_s2)
        j["s2_ideal"] = {{"gens", rep.s2_gens},
                         {"lambda", rep.s2_lambda},
                         {"mu", rep.s2_mu}};
    if (rep.has_ibar) j["integral_closure"] = {{"lambda", rep.ibar_lambda}};
    j["samples"] = {{"lambda", samples_to_json(rep.lambda_samples)},
                    {"mu", samples_to_json(rep.mu_samples)}};
    return j;
}

inline json closure_to_json(const RingCtx& R, const ClosureResult& c) {
    json j;
    j["kind"] = closure_kind_name(c.kind);
    json gens = json::array();
    for (const auto& g : trim_generators(c.closed).gens)
        gens.push_back(poly_to_string(R, g));
    j["closed_gens"] = gens;
    j["lambda_closed"] = c.lambda_closed;
    j["mu_closed"] = c.mu_closed;
    if (c.kind == ClosureKind::RatliffRush) {
        j["iterations"] = c.iterations;
        j["stabilized_at"] = c.stabilized_at;
        j["certificate"] = "heuristic: successive colons agreed on a finite window";
    }
    if (c.kind == ClosureKind::S2Ideal) j["r_J_used"] = c.reduction_number_used;
    return j;
}

inline json run_job(const JobSpec& spec) {
    auto t_start = std::chrono::steady_clock::now();
    json rep;
    rep["toolkit_version"] = kToolkitVersion;
    rep["seed"] = spec.seed;
    rep["job"] = print_job(spec);

    bool pipeline = spec.tasks.count("invariants") || spec.tasks.count("bounds") ||
                    spec.tasks.count("cm_test");

    if (spec.is_semigroup()) {
        rep["backend"] = "semigroup";
        for (const auto& t : spec.tasks)
            if (t != "invariants" && t != "bounds" && t != "cm_test")
                throw error("task '" + t + "' is not available in the semigroup backend");
        auto S = std::make_shared<NumericalSemigroup>(spec.sg_gens);
        SemigroupIdeal I(S, spec.sg_ideal_gens);
        if (pipeline) rep["invariants"] = report_to_json(sg_bounds_report(I, spec.cap));
    } else {
        rep["backend"] = "polynomial";
        RingPtr ctx = make_ring(spec.vars, spec.p, MonomialOrder::degrevlex(), spec.quotient);
        Ideal I = make_ideal(ctx, spec.ideal_gens);
        std::optional<Ideal> J;
        if (!spec.reduction_gens.empty()) J = make_ideal(ctx, spec.reduction_gens);

        if (pipeline) {
            ReportOptions opt;
            opt.seed = spec.seed;
            opt.cap = spec.cap;
            opt.lambda_budget = spec.lambda_budget;
            opt.mu_budget = spec.mu_budget;
            opt.char0_assert = spec.char0_assert;
            opt.closure_bounds = spec.tasks.count("bounds") ? spec.closure_bounds : 0;
            rep["invariants"] = report_to_json(bounds_report(I, opt, J ? &*J : nullptr));
        }
        json closures = json::object();
        if (spec.tasks.count("ratliff_rush"))
            closures["ratliff_rush"] = closure_to_json(*ctx, ratliff_rush(I, spec.rr_nmax));
        if (spec.tasks.count("s2_ideal"))
            closures["s2_ideal"] =
                closure_to_json(*ctx, s2_ideal(I, J ? &*J : nullptr, spec.seed, spec.cap));
        if (spec.tasks.count("integral_closure"))
            closures["integral_closure"] = closure_to_json(*ctx, integral_closure(I));
        if (!closures.empty()) rep["closures"] = closures;
    }

    auto t_end = std::chrono::steady_clock::now();
    rep["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t_end - t_start).count();
    return rep;
}

} // namespace blowup

#endif
