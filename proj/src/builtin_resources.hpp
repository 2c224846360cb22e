#pragma once

// Language resources compiled in from data/ at configure time.

#include <optional>
#include <string_view>

namespace reg::resources {

std::optional<std::string_view> stoplist(std::string_view language);
std::optional<std::string_view> abbreviations(std::string_view language);

}  // namespace reg::resources
