#pragma once

#include <vector>

namespace cacherec {

using Vec = std::vector<double>;
using Matrix = std::vector<std::vector<double>>;

}  // namespace cacherec
