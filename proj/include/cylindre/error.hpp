#pragma once

#include <stdexcept>
#include <string>

namespace cylindre {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Formula/polynomial text could not be parsed; position is 1-based.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg), line(line_), column(column_) {}
};

/// Decomposition exceeded the configured cell budget.
struct cell_limit_error : error {
    using error::error;
};

/// Operation not available at the requested ambient dimension.
struct dimension_error : error {
    using error::error;
};

}  // namespace cylindre
