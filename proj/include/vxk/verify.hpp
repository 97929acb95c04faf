#ifndef VXK_VERIFY_HPP
#define VXK_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace vxk::verify {

enum class Tier { Quick, Full };

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_err = 0.0;
    double tol = 0.0;
    double seconds = 0.0;
    std::string note;  // failure detail, empty on pass
};

using Reporter = std::function<void(const CheckResult&)>;

// Runs the cross-module identity suite.  Full tier exercises the complete
// verification grids; Quick runs reduced grids in a few seconds.
std::vector<CheckResult> run(Tier tier, const Reporter& on_result = {});

}  // namespace vxk::verify

#endif
