#include "qszasz/functions.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace qszasz {

namespace {

std::optional<double> absdev_center(const std::string& name) {
    if (name.rfind("absdev(", 0) != 0 || name.back() != ')') return std::nullopt;
    const std::string inner = name.substr(7, name.size() - 8);
    try {
        std::size_t used = 0;
        const double c = std::stod(inner, &used);
        if (used != inner.size()) return std::nullopt;
        return c;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace

RealFn make_named_function(const std::string& name) {
    if (name == "const") return [](double) { return 1.0; };
    if (name == "identity") return [](double s) { return s; };
    if (name == "square") return [](double s) { return s * s; };
    if (name == "sin") return [](double s) { return std::sin(s); };
    if (name == "sqrt") return [](double s) { return std::sqrt(s); };
    if (auto c = absdev_center(name)) return [c = *c](double s) { return std::abs(s - c); };
    throw std::invalid_argument("unknown function selector: " + name);
}

bool is_valid_function_name(const std::string& name) {
    if (name == "const" || name == "identity" || name == "square" || name == "sin" ||
        name == "sqrt")
        return true;
    return absdev_center(name).has_value();
}

} // namespace qszasz
