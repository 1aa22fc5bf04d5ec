#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace phlab {

// A named numerical check. `AtMost` checks pass when value <= threshold
// (residuals); `AtLeast` checks pass when value >= threshold (nontriviality
// floors). A NaN value always fails.
struct Check {
    enum class Sense { AtMost, AtLeast };

    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    Sense sense = Sense::AtMost;
    bool passed = false;
};

class CheckReport {
public:
    void at_most(std::string name, double value, double threshold);
    void at_least(std::string name, double value, double threshold);
    // Boolean outcome; recorded as value 0 (ok) or 1 (violated) against threshold 0.
    void require(std::string name, bool ok);
    void append(const CheckReport& other, std::string_view prefix = {});

    const std::vector<Check>& checks() const { return checks_; }
    std::size_t size() const { return checks_.size(); }
    bool all_passed() const;
    std::vector<Check> failures() const;
    // nullptr when absent
    const Check* find(std::string_view name) const;

private:
    std::vector<Check> checks_;
};

}  // namespace phlab
