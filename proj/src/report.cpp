#include "catlevy/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace catlevy {

void Report::merge(const Report& other) {
    checks += other.checks;
    cases += other.cases;
    for (const auto& f : other.failures)
        failures.push_back({other.suite.empty() ? f.check : other.suite + "/" + f.check,
                            f.case_index, f.witness});
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    wall_seconds += other.wall_seconds;
}

std::string format_text(const Report& r, bool with_timing) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "suite" << r.suite << "\n"
       << std::setw(10) << "cases" << r.cases << "\n"
       << std::setw(10) << "checks" << r.checks << "\n"
       << std::setw(10) << "failures" << r.failures.size() << "\n";
    if (with_timing)
        os << std::setw(10) << "wall" << std::fixed << std::setprecision(3) << r.wall_seconds
           << " s\n";
    for (const auto& f : r.failures)
        os << "  FAIL " << f.check << " case " << f.case_index
           << (f.witness.empty() ? "" : ": " + f.witness) << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    os << (r.ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string format_json(const Report& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["cases"] = r.cases;
    j["checks"] = r.checks;
    j["passed"] = r.ok();
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"check", f.check}, {"case", f.case_index}, {"witness", f.witness}});
    j["failures"] = fails;
    j["notes"] = r.notes;
    if (with_timing) j["wall_seconds"] = r.wall_seconds;
    return j.dump(2) + "\n";
}

}  // namespace catlevy
