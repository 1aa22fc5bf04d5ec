#include "phlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace phlab {

void CheckReport::at_most(std::string name, double value, double threshold)
{
    const bool ok = !std::isnan(value) && value <= threshold;
    checks_.push_back({std::move(name), value, threshold, Check::Sense::AtMost, ok});
}

void CheckReport::at_least(std::string name, double value, double threshold)
{
    const bool ok = !std::isnan(value) && value >= threshold;
    checks_.push_back({std::move(name), value, threshold, Check::Sense::AtLeast, ok});
}

void CheckReport::require(std::string name, bool ok)
{
    checks_.push_back({std::move(name), ok ? 0.0 : 1.0, 0.0, Check::Sense::AtMost, ok});
}

void CheckReport::append(const CheckReport& other, std::string_view prefix)
{
    for (Check c : other.checks_) {
        if (!prefix.empty()) c.name = std::string(prefix) + c.name;
        checks_.push_back(std::move(c));
    }
}

bool CheckReport::all_passed() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> CheckReport::failures() const
{
    std::vector<Check> out;
    std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out),
                 [](const Check& c) { return !c.passed; });
    return out;
}

const Check* CheckReport::find(std::string_view name) const
{
    auto it = std::find_if(checks_.begin(), checks_.end(),
                           [&](const Check& c) { return c.name == name; });
    return it == checks_.end() ? nullptr : &*it;
}

}  // namespace phlab
