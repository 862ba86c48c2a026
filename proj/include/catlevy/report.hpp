#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace catlevy {

struct Failure {
    std::string check;
    std::size_t case_index = 0;
    std::string witness;
};

// Outcome of a law suite. Everything except wall_seconds is a function of the inputs.
struct Report {
    std::string suite;
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;
    double wall_seconds = 0;

    explicit Report(std::string name = {}) : suite(std::move(name)) {}

    bool ok() const { return failures.empty(); }

    // Records one check; returns cond so callers can short-circuit follow-ups.
    bool expect(bool cond, const std::string& check, std::size_t case_index,
                const std::string& witness = {}) {
        ++checks;
        if (!cond) failures.push_back({check, case_index, witness});
        return cond;
    }

    void fail(const std::string& check, std::size_t case_index, const std::string& witness) {
        ++checks;
        failures.push_back({check, case_index, witness});
    }

    void merge(const Report& other);
};

std::string format_text(const Report& r, bool with_timing = false);
std::string format_json(const Report& r, bool with_timing = false);

}  // namespace catlevy
