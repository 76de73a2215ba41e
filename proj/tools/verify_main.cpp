#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "souriau/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"verification suites for the cone-thermodynamics toolkit"};
    app.require_subcommand(0);

    std::string suite;
    souriau::RunOptions opt;
    std::string pairing_flag, eta_flag, json_path, csv_path;
    std::vector<double> a_list;

    app.add_option("suite", suite, "suite to run: thermo, metric, flow, lax, orbit, all")
        ->required();
    app.add_option("--a", a_list, "a values for the parameter sweeps");
    app.add_option("--a0", opt.a0, "initial cone coordinate for the flows");
    app.add_option("--dt", opt.dt, "integrator step size");
    app.add_option("--t-end", opt.t_end, "integration horizon");
    app.add_option("--pairing", pairing_flag, "pairing scale override: half or one")
        ->check(CLI::IsMember({"half", "one"}));
    app.add_option("--eta", eta_flag, "eta convention override: grad, minus, or plus")
        ->check(CLI::IsMember({"grad", "minus", "plus"}));
    app.add_option("--seed", opt.seed, "seed for randomized property checks");
    app.add_option("--json", json_path, "write the report as JSON to this path");
    app.add_option("--csv", csv_path, "export the gradient-flow trajectory as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (suite != "thermo" && suite != "metric" && suite != "flow" && suite != "lax" &&
        suite != "orbit" && suite != "all") {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
    }
    if (!a_list.empty()) opt.a_list = a_list;
    if (pairing_flag == "half") opt.pairing_override = souriau::PairingScale::half;
    if (pairing_flag == "one") opt.pairing_override = souriau::PairingScale::one;
    if (eta_flag == "grad") opt.eta_override = souriau::EtaMode::grad_phi;
    if (eta_flag == "minus") opt.eta_override = souriau::EtaMode::minus_beta;
    if (eta_flag == "plus") opt.eta_override = souriau::EtaMode::plus_beta;

    try {
        const auto t0 = std::chrono::steady_clock::now();
        souriau::RunReport report = souriau::run_suite(suite, opt);
        const auto t1 = std::chrono::steady_clock::now();
        report.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

        int passed = 0, failed = 0, findings = 0;
        for (const auto& c : report.cases) {
            if (c.status == "pass") ++passed;
            else if (c.status == "fail") ++failed;
            else ++findings;
        }
        for (const auto& c : report.cases) {
            std::cout << "[" << c.status << "] " << c.name << " measured=" << c.measured;
            if (c.expected) std::cout << " expected=" << *c.expected << " tol=" << c.tolerance;
            std::cout << " -- " << c.provenance << "\n";
        }
        if (report.convention_used)
            std::cout << "convention_used: " << *report.convention_used << "\n";
        std::cout << report.suite << ": " << passed << " passed, " << failed << " failed, "
                  << findings << " findings\n";
        std::cerr << "wall time: " << report.wall_time_ms << " ms\n";

        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) {
                std::cerr << "error: cannot open '" << json_path << "'\n";
                return 1;
            }
            out << souriau::to_json(report).dump(2) << "\n";
            if (!out) {
                std::cerr << "error: write failure on '" << json_path << "'\n";
                return 1;
            }
        }
        if (!csv_path.empty()) {
            const auto traj = souriau::integrate_gradient(opt.a0, opt.t_end, opt.dt,
                                                          souriau::FlowMethod::rk4);
            souriau::export_trajectory(traj, csv_path);
        }
        return report.all_passed() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
