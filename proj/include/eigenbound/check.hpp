#pragma once

#include <cmath>
#include <string>

namespace eigenbound {

/// One verified identity or inequality.
///
/// Equality checks: abs_discrepancy = |lhs - rhs|, pass iff it is <= tolerance.
/// Inequality checks: abs_discrepancy holds the worst slack (lhs - rhs, which
/// should be nonnegative), pass iff slack >= -tolerance.
struct CheckRecord {
    std::string name;
    std::string paper_anchor;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_discrepancy = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline CheckRecord equality_check(std::string name, std::string anchor,
                                  double lhs, double rhs, double tol)
{
    CheckRecord rec;
    rec.name = std::move(name);
    rec.paper_anchor = std::move(anchor);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.abs_discrepancy = std::abs(lhs - rhs);
    rec.tolerance = tol;
    rec.pass = std::isfinite(lhs) && std::isfinite(rhs) &&
               rec.abs_discrepancy <= tol;
    return rec;
}

/// lhs/rhs are the values at the worst grid point; slack = lhs - rhs there.
inline CheckRecord inequality_check(std::string name, std::string anchor,
                                    double lhs, double rhs, double worst_slack,
                                    double tol)
{
    CheckRecord rec;
    rec.name = std::move(name);
    rec.paper_anchor = std::move(anchor);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.abs_discrepancy = worst_slack;
    rec.tolerance = tol;
    rec.pass = std::isfinite(worst_slack) && worst_slack >= -tol;
    return rec;
}

} // namespace eigenbound
