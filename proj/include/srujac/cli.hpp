#pragma once

#include <string>
#include <utility>
#include <vector>

namespace srujac {

struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 computation failed, 2 usage
    std::string report;
    std::vector<std::pair<std::string, std::string>> payload;  // stable key order
    bool json = false;
};

// args exclude the program name.  Never throws; errors land in exit_code
// and report.
CommandResult run_command(const std::vector<std::string>& args);

// Prints the report (stderr on failure) or the payload as JSON.
int run_cli(int argc, char** argv);

}  // namespace srujac
