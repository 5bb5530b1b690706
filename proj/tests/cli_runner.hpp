#pragma once

// Runs the faultrank executable through the shell and captures stdout.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace faultrank::testing {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

inline CliRun run_cli(const std::string& args) {
    const std::string command = std::string("\"") + FAULTRANK_CLI + "\" " + args + " 2>/dev/null";
    CliRun run;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return run;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) run.out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

inline std::string data_path(const std::string& name) { return std::string(FAULTRANK_DATA_DIR) + "/" + name; }

} // namespace faultrank::testing
