// experiments.hpp
// Named end-to-end experiments, one per acceptance criterion. Shared by
// `romanoff repro <name>` and the acceptance test binary.
#pragma once

#include "json.hpp"

#include <functional>
#include <string>
#include <vector>

namespace romanoff::repro {

using Json = nlohmann::ordered_json;

struct Outcome {
    bool passed = false;
    std::string summary;  // one line, human readable
    Json report;          // full numbers behind the verdict
};

struct Experiment {
    int criterion = 0;
    std::string name;
    std::string title;
    double budget_seconds = 0;
    std::function<Outcome()> body;
};

struct Result {
    const Experiment* experiment = nullptr;
    Outcome outcome;
    double seconds = 0;
    bool within_budget = false;
    bool passed() const { return outcome.passed && within_budget; }
    Json to_json() const;
};

const std::vector<Experiment>& experiments();

// nullptr when no experiment has that name.
const Experiment* find_experiment(const std::string& name);

Result run_experiment(const Experiment& e);

// "PASS  3 dichotomy  <summary>  (1.23 s)"
std::string status_line(const Result& r);

}  // namespace romanoff::repro
