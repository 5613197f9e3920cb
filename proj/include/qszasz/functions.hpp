#ifndef QSZASZ_FUNCTIONS_HPP
#define QSZASZ_FUNCTIONS_HPP

#include <string>

#include "qszasz/qcore.hpp"

namespace qszasz {

/// Built-in test functions selectable from configs: const, identity, square,
/// sin, sqrt, absdev(c). Throws std::invalid_argument on unknown names.
RealFn make_named_function(const std::string& name);

bool is_valid_function_name(const std::string& name);

} // namespace qszasz

#endif
