#pragma once

#include <string>
#include <vector>

namespace bierfan::cli {

// Exit status contract: 0 on success / verified verdicts, 1 on verification
// failure (witness included in the output), 2 on input errors.
struct RunResult {
    int status = 0;
    std::string out;
    std::string err;
};

// Runs one command (args exclude the program name). Identical inputs and
// flags produce byte-identical output.
RunResult run(const std::vector<std::string>& args);

}  // namespace bierfan::cli
