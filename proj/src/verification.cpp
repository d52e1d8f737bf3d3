#include "gregory/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

namespace gregory {

nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["parameters"] = report.parameters;
    j["instances_checked"] = report.instances_checked;
    j["passed"] = report.passed();
    if (report.first_failure) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < report.first_failure->params.size(); ++i) {
            const std::string name = i < report.param_names.size() ? report.param_names[i] : "p" + std::to_string(i);
            params[name] = report.first_failure->params[i];
        }
        j["first_failure"] = {{"params", params}, {"lhs", report.first_failure->lhs}, {"rhs", report.first_failure->rhs}};
    } else {
        j["first_failure"] = nullptr;
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
    VerificationReport r;
    r.identity = j.at("identity").get<std::string>();
    r.parameters = j.at("parameters");
    r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    const auto& failure = j.at("first_failure");
    if (!failure.is_null()) {
        Counterexample c;
        for (const auto& [name, value] : failure.at("params").items()) {
            r.param_names.push_back(name);
            c.params.push_back(value.get<long>());
        }
        c.lhs = failure.at("lhs").get<std::string>();
        c.rhs = failure.at("rhs").get<std::string>();
        r.first_failure = std::move(c);
    }
    if (j.at("passed").get<bool>() != r.passed()) {
        throw std::invalid_argument("report is inconsistent: passed disagrees with first_failure");
    }
    return r;
}

VerificationReport run_grid(std::string identity, nlohmann::ordered_json parameters,
                            std::vector<std::string> param_names, const std::vector<std::vector<long>>& cells,
                            const CellCheck& check, unsigned jobs) {
    if (cells.empty()) {
        throw std::invalid_argument(identity + ": empty parameter range");
    }
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::optional<Mismatch>> outcomes(cells.size());

    auto run_cell = [&](std::size_t i) {
        try {
            outcomes[i] = check(cells[i]);
        } catch (const std::exception& e) {
            outcomes[i] = Mismatch{"error", e.what()};
        }
    };

    jobs = std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            run_cell(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < cells.size(); i = next++) {
                    run_cell(i);
                }
            });
        }
    }

    VerificationReport report;
    report.identity = std::move(identity);
    report.parameters = std::move(parameters);
    report.param_names = std::move(param_names);
    report.instances_checked = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!outcomes[i]) {
            continue;
        }
        if (!report.first_failure || cells[i] < report.first_failure->params) {
            report.first_failure = Counterexample{cells[i], outcomes[i]->lhs, outcomes[i]->rhs};
        }
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace gregory
