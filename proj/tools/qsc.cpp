// Command-line driver: grid verification with JSON reports, the Watson
// transformation checks, the classical p-adic checks, and a cyclotomic
// polynomial printer. Exit codes: 0 all claims hold, 1 at least one FALSE
// verdict, 2 configuration or certificate error.

#include "qsc/checker.hpp"
#include "qsc/classical.hpp"
#include "qsc/upoly.hpp"
#include "qsc/watson.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stol(item));
    }
    return out;
}

// "lo..hi" (inclusive) or a single value
std::pair<long, long> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
}

json verdict_to_json(const qsc::Verdict& v, bool with_timing) {
    json j;
    j["id"] = v.id;
    j["family"] = v.family;
    j["n"] = v.n;
    j["d"] = v.d;
    j["r"] = v.r;
    j["m_upper"] = v.m_upper;
    j["modulus"] = v.modulus;
    j["holds"] = v.holds;
    j["failing_factor"] = v.failing_factor;
    j["num_terms"] = v.num_terms;
    j["max_q_degree"] = v.max_q_degree;
    j["ms"] = with_timing ? v.ms : 0.0;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

void write_report(const std::string& path, const json& config, json claims) {
    json report;
    report["version"] = kVersion;
    report["config"] = config;
    std::sort(claims.begin(), claims.end(),
              [](const json& a, const json& b) { return a["id"] < b["id"]; });
    report["claims"] = std::move(claims);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report file: " + path);
    out << report.dump(2) << "\n";
}

int exit_code_for(bool any_false) { return any_false ? 1 : 0; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for truncated q-hypergeometric congruences"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a congruence grid");
    std::string family_str, n_range = "2..12", d_list = "3,4,5", r_list = "1,-1";
    std::string mutate, json_path;
    unsigned jobs = std::thread::hardware_concurrency();
    bool no_timing = false;
    verify->add_option("--family", family_str, "claim family")->required();
    verify->add_option("--n", n_range, "n range, lo..hi inclusive or single value");
    verify->add_option("--d", d_list, "comma-separated d values");
    verify->add_option("--r", r_list, "comma-separated r values");
    verify->add_option("--mutate", mutate, "negative control: bump-q-exponent | inflate-modulus");
    verify->add_option("--json", json_path, "write a JSON report");
    verify->add_option("--jobs", jobs, "worker threads (1 = sequential)");
    verify->add_flag("--no-timing", no_timing, "zero the ms fields for byte-stable reports");

    // ---- watson ----
    auto* watson = app.add_subcommand("watson", "check the terminating 8phi7 transformation");
    std::string watson_N = "0,1,2", mode = "symbolic", watson_mutate, watson_json;
    unsigned trials = 200;
    uint64_t seed = 42;
    bool watson_no_timing = false;
    watson->add_option("--N", watson_N, "comma-separated truncation orders");
    watson->add_option("--mode", mode, "symbolic | random");
    watson->add_option("--trials", trials, "random trials per N");
    watson->add_option("--seed", seed, "random seed (recorded in the report)");
    watson->add_option("--mutate", watson_mutate, "negative control: drop-prefactor");
    watson->add_option("--json", watson_json, "write a JSON report");
    watson->add_flag("--no-timing", watson_no_timing, "zero the ms fields");

    // ---- classical ----
    auto* classical = app.add_subcommand("classical", "exact q->1 supercongruence checks");
    std::string claims_str = "c2,m2,eq1.4,eq1.2", p_list = "5,7";
    std::string classical_json;
    classical->add_option("--claim", claims_str, "comma-separated: c2, m2, eq1.4, eq1.2");
    classical->add_option("--p", p_list, "comma-separated primes");
    classical->add_option("--json", classical_json, "write a JSON report");

    // ---- cyclotomic ----
    auto* cyc = app.add_subcommand("cyclotomic", "print Phi_n(q)");
    unsigned cyc_n = 1;
    cyc->add_option("n", cyc_n, "index")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cyc) {
            std::cout << qsc::cyclotomic(cyc_n).to_string() << "\n";
            return 0;
        }

        if (*verify) {
            auto fam = qsc::grid_family_from_name(family_str);
            if (!fam) {
                std::cerr << "unknown family: " << family_str << "\n";
                return 2;
            }
            qsc::GridOptions opts;
            auto [lo, hi] = parse_range(n_range);
            opts.n_lo = static_cast<unsigned>(lo);
            opts.n_hi = static_cast<unsigned>(hi);
            opts.d_set.clear();
            for (long d : parse_list(d_list)) opts.d_set.push_back(static_cast<unsigned>(d));
            opts.r_set.clear();
            for (long r : parse_list(r_list)) opts.r_set.push_back(static_cast<int>(r));
            opts.jobs = jobs == 0 ? 1 : jobs;
            if (mutate == "bump-q-exponent") {
                opts.mutation = qsc::Mutation::BumpQExponent;
            } else if (mutate == "inflate-modulus") {
                opts.mutation = qsc::Mutation::InflateModulus;
            } else if (!mutate.empty()) {
                std::cerr << "unknown mutation: " << mutate << "\n";
                return 2;
            }

            auto verdicts = qsc::run_grid(*fam, opts);
            bool any_false = false;
            json claims = json::array();
            for (const auto& v : verdicts) {
                any_false = any_false || !v.holds;
                std::cout << (v.holds ? "PASS " : "FAIL ") << v.id;
                if (!v.holds) std::cout << "  [failing factor: " << v.failing_factor << "]";
                std::cout << "\n";
                claims.push_back(verdict_to_json(v, !no_timing));
            }
            std::cout << verdicts.size() << " claims, "
                      << (any_false ? "at least one FALSE" : "all hold") << "\n";
            if (!json_path.empty()) {
                json config{{"command", "verify"}, {"family", family_str},
                            {"n", n_range},        {"d", d_list},
                            {"r", r_list},         {"mutate", mutate},
                            {"jobs", opts.jobs}};
                write_report(json_path, config, std::move(claims));
            }
            return exit_code_for(any_false);
        }

        if (*watson) {
            qsc::WatsonOptions wopts;
            if (watson_mutate == "drop-prefactor") {
                wopts.drop_prefactor = true;
            } else if (!watson_mutate.empty()) {
                std::cerr << "unknown mutation: " << watson_mutate << "\n";
                return 2;
            }
            bool any_false = false;
            json claims = json::array();
            for (long N : parse_list(watson_N)) {
                auto t0 = std::chrono::steady_clock::now();
                bool ok;
                unsigned resamples = 0;
                if (mode == "symbolic") {
                    ok = qsc::watson_check_symbolic(static_cast<unsigned>(N), wopts);
                } else if (mode == "random") {
                    auto rep = qsc::watson_check_random(static_cast<unsigned>(N), trials,
                                                        seed, wopts);
                    ok = rep.ok;
                    resamples = rep.resamples;
                } else {
                    std::cerr << "unknown mode: " << mode << "\n";
                    return 2;
                }
                double ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
                any_false = any_false || !ok;
                std::cout << (ok ? "PASS " : "FAIL ") << "watson/N=" << N << "/mode=" << mode;
                if (mode == "random")
                    std::cout << "/trials=" << trials << "/seed=" << seed
                              << " (resamples: " << resamples << ")";
                std::cout << "\n";
                json j;
                j["id"] = "watson/N=" + std::to_string(N) + "/mode=" + mode;
                j["family"] = "watson";
                j["n"] = N;
                j["d"] = 0;
                j["r"] = 0;
                j["m_upper"] = N;
                j["modulus"] = "identity";
                j["holds"] = ok;
                j["failing_factor"] = ok ? "" : "identity";
                j["num_terms"] = N + 1;
                j["max_q_degree"] = 0;
                j["ms"] = watson_no_timing ? 0.0 : ms;
                claims.push_back(std::move(j));
            }
            if (!watson_json.empty()) {
                json config{{"command", "watson"}, {"N", watson_N},
                            {"mode", mode},        {"trials", trials},
                            {"seed", seed},        {"mutate", watson_mutate}};
                write_report(watson_json, config, std::move(claims));
            }
            return exit_code_for(any_false);
        }

        if (*classical) {
            bool any_false = false;
            json claims = json::array();
            std::stringstream ss(claims_str);
            std::string claim;
            std::vector<std::string> claim_names;
            while (std::getline(ss, claim, ','))
                if (!claim.empty()) claim_names.push_back(claim);
            for (const std::string& name : claim_names) {
                for (long p : parse_list(p_list)) {
                    qsc::ClassicalResult r;
                    if (name == "c2") {
                        r = qsc::check_c2(p);
                    } else if (name == "m2") {
                        r = qsc::check_m2(p);
                    } else if (name == "eq1.4") {
                        r = qsc::check_1_4(p);
                    } else if (name == "eq1.2") {
                        r = qsc::check_1_2(p);
                    } else {
                        std::cerr << "unknown claim: " << name << "\n";
                        return 2;
                    }
                    any_false = any_false || !r.pass;
                    std::cout << (r.pass ? "PASS " : "FAIL ") << name << "/p=" << p
                              << "  v_p = " << r.observed_valuation
                              << " (need >= " << r.required_valuation << ")";
                    if (name == "c2" && r.strengthened) std::cout << "  [also mod p^4]";
                    std::cout << "\n";
                    json j;
                    j["id"] = name + "/p=" + std::to_string(p);
                    j["family"] = name;
                    j["n"] = p;
                    j["d"] = 0;
                    j["r"] = 0;
                    j["m_upper"] = -1;
                    j["modulus"] = "p^" + std::to_string(r.required_valuation);
                    j["holds"] = r.pass;
                    j["failing_factor"] = r.pass ? "" : "valuation";
                    j["num_terms"] = 0;
                    j["max_q_degree"] = r.observed_valuation;
                    j["ms"] = r.ms;
                    claims.push_back(std::move(j));
                }
            }
            if (!classical_json.empty()) {
                json config{{"command", "classical"}, {"claim", claims_str}, {"p", p_list}};
                write_report(classical_json, config, std::move(claims));
            }
            return exit_code_for(any_false);
        }
    } catch (const qsc::CertificateError& ex) {
        std::cerr << "certificate error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
