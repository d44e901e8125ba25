#include "hyperlap/report.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hyperlap {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not_applicable";
        case CheckStatus::Unresolved: return "unresolved";
    }
    throw std::logic_error("unknown check status");
}

BoundReport BoundReport::not_applicable(std::string name, std::string reason) {
    BoundReport r;
    r.name = std::move(name);
    r.status = CheckStatus::NotApplicable;
    r.details.push_back(std::move(reason));
    return r;
}

BoundReport BoundReport::unresolved(std::string name, std::string reason) {
    BoundReport r;
    r.name = std::move(name);
    r.status = CheckStatus::Unresolved;
    r.details.push_back(std::move(reason));
    return r;
}

BoundReport BoundReport::check_le(std::string name, std::string statement, double lhs, double rhs,
                                  double tol) {
    BoundReport r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    r.relation = "<=";
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.status = (r.slack >= -tol) ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
}

BoundReport BoundReport::check_ge(std::string name, std::string statement, double lhs, double rhs,
                                  double tol) {
    BoundReport r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    r.relation = ">=";
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = lhs - rhs;
    r.status = (r.slack >= -tol) ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
}

BoundReport BoundReport::check_eq(std::string name, std::string statement, double lhs, double rhs,
                                  double tol) {
    BoundReport r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    r.relation = "=";
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = -std::abs(lhs - rhs);
    r.status = (r.slack >= -tol) ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
}

BoundReport BoundReport::combine(std::string name, std::string statement,
                                 const std::vector<BoundReport>& parts) {
    BoundReport r;
    r.name = std::move(name);
    r.statement = std::move(statement);
    r.relation = "chain";
    r.slack = std::numeric_limits<double>::infinity();
    r.status = CheckStatus::Pass;
    for (const auto& p : parts) {
        r.slack = std::min(r.slack, p.slack);
        r.details.push_back(p.name + ": " + to_string(p.status) +
                            (p.statement.empty() ? "" : " (" + p.statement + ")"));
        for (const auto& d : p.details) r.details.push_back("  " + d);
        if (p.status == CheckStatus::Fail) r.status = CheckStatus::Fail;
        if (p.status == CheckStatus::Unresolved && r.status == CheckStatus::Pass)
            r.status = CheckStatus::Unresolved;
    }
    if (parts.empty()) r.slack = 0.0;
    return r;
}

} // namespace hyperlap
