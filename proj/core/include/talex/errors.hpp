#ifndef TALEX_ERRORS_HPP
#define TALEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace talex {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input data: malformed files, invariants violated by caller-supplied
// values, inadmissible parameters.  The CLI maps these to exit code 2.
struct validation_error : error {
    using error::error;
};

// Syntax error in the presentation text format, with 1-based location.
struct parse_error : validation_error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : validation_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

// Requested operation is not representable in the chosen scalar backend
// (e.g. an irrational square root over the exact field).
struct backend_error : error {
    using error::error;
};

}  // namespace talex

#endif
