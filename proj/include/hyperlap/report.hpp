#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hyperlap {

// Outcome of one verified statement. "unresolved" marks checks whose premise
// search was truncated by an enumeration limit before reaching a verdict;
// "not_applicable" marks checks whose premises this instance does not meet.
enum class CheckStatus { Pass, Fail, NotApplicable, Unresolved };

std::string to_string(CheckStatus s);

struct BoundWitness {
    std::optional<std::vector<int>> subset;                 // vertex subset
    std::optional<std::vector<int>> signs;                  // +/-1 per vertex
    std::optional<std::vector<std::vector<int>>> partition; // coloring classes
};

// One named inequality (or chain of inequalities) together with the values
// it was evaluated at. slack >= 0 means the relation holds with room to
// spare; pass allows slack down to -tolerance.
struct BoundReport {
    std::string name;
    std::string statement; // the relation in symbols, e.g. "lambda_min <= 2 * h_tilde"
    std::string relation;  // "<=", ">=", "=", "chain"
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    CheckStatus status = CheckStatus::NotApplicable;
    std::vector<std::string> details;
    BoundWitness witness;

    bool passed() const { return status == CheckStatus::Pass; }
    bool failed() const { return status == CheckStatus::Fail; }

    static BoundReport not_applicable(std::string name, std::string reason);
    static BoundReport unresolved(std::string name, std::string reason);
    static BoundReport check_le(std::string name, std::string statement, double lhs, double rhs,
                                double tol);
    static BoundReport check_ge(std::string name, std::string statement, double lhs, double rhs,
                                double tol);
    static BoundReport check_eq(std::string name, std::string statement, double lhs, double rhs,
                                double tol);
    // Requires every part to hold; slack is the minimum over parts.
    static BoundReport combine(std::string name, std::string statement,
                               const std::vector<BoundReport>& parts);
};

} // namespace hyperlap
