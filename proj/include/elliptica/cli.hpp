#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elliptica/specfun.hpp"

namespace elliptica::cli {

// "0.5", "-2e-3i", "0.3-0.1i", "i"; nullopt on anything else (including inf/nan)
std::optional<cplx> parse_complex(std::string_view text);

// args exclude the program name. Exit codes: 0 all checks passed, 1 a check failed,
// 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace elliptica::cli
