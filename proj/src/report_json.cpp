#include "slicecalc/report_json.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace slicecalc {

namespace {

nlohmann::json report_json(const IdentityReport& rep) {
    nlohmann::json j;
    j["identity"] = rep.identity;
    j["n"] = rep.n;
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    j["tol"] = rep.tol;
    j["max_residual"] = rep.max_residual;
    j["mean_residual"] = rep.mean_residual;
    j["pass"] = rep.pass;
    if (rep.expect_fail) j["expect_fail"] = true;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : rep.failures) {
        nlohmann::json e;
        e["x"] = f.x;
        e["residual"] = f.residual;
        j["failures"].push_back(std::move(e));
    }
    return j;
}

nlohmann::json config_json(const VerifyConfig& c) {
    nlohmann::json j;
    j["suites"] = c.suites;
    j["n"] = c.n;
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["tol"] = c.tol;
    j["h"] = c.h;
    return j;
}

} // namespace

void SuiteResult::add(IdentityReport rep) {
    pass = pass && rep.pass;
    reports.push_back(std::move(rep));
}

std::string report_to_json(const IdentityReport& rep) { return report_json(rep).dump(); }

std::string run_to_json(const VerifyRun& run) {
    nlohmann::json j;
    j["version"] = run.version;
    j["config"] = config_json(run.config);
    j["pass"] = run.pass;
    j["suites"] = nlohmann::json::array();
    for (const auto& s : run.suites) {
        nlohmann::json sj;
        sj["name"] = s.name;
        sj["pass"] = s.pass;
        sj["reports"] = nlohmann::json::array();
        for (const auto& r : s.reports) sj["reports"].push_back(report_json(r));
        j["suites"].push_back(std::move(sj));
    }
    return j.dump(2);
}

std::string run_to_text(const VerifyRun& run) {
    std::ostringstream os;
    for (const auto& s : run.suites) {
        os << "suite " << s.name << ": " << (s.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& r : s.reports) {
            os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.identity << " (n=" << r.n
               << ", samples=" << r.samples << ", max=" << r.max_residual
               << ", mean=" << r.mean_residual << ", tol=" << r.tol
               << (r.expect_fail ? ", negative control" : "") << ")\n";
        }
    }
    os << (run.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

VerifyConfig config_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) fail(errc::parse, "malformed verify configuration");
    VerifyConfig c;
    if (j.contains("suites")) {
        if (!j["suites"].is_array()) fail(errc::parse, "'suites' must be an array of names");
        for (const auto& s : j["suites"]) c.suites.push_back(s.get<std::string>());
    }
    if (j.contains("n")) c.n = j["n"].get<int>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) c.samples = j["samples"].get<int>();
    if (j.contains("tol")) c.tol = j["tol"].get<double>();
    if (j.contains("h")) c.h = j["h"].get<double>();
    if (c.n < 2 || c.n > kMaxGenerators) fail(errc::argument, "verify: n out of range");
    if (c.samples < 1) fail(errc::argument, "verify: samples must be positive");
    if (c.tol <= 0 || c.h <= 0) fail(errc::argument, "verify: tol and h must be positive");
    return c;
}

std::string config_to_json(const VerifyConfig& config) { return config_json(config).dump(); }

} // namespace slicecalc
