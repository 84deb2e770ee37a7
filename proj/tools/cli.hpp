#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcw/counting.hpp"

namespace qcw::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 1,
    kOracleMismatch = 2,
    kNegativeAnswer = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out redirects them; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text renderings used by `table`.
std::string render_d_table(Int m1, const std::vector<DTableRow>& rows);
std::string render_f_table(const std::vector<FTableRow>& rows);

}  // namespace qcw::cli
