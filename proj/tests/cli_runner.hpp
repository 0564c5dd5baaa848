#ifndef ZETAVOL_TESTS_CLI_RUNNER_HPP
#define ZETAVOL_TESTS_CLI_RUNNER_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

// Runs the CLI binary with `args`, capturing stdout; stderr is discarded.
struct CliRun {
    int exit_code = -1;
    std::string out;
};

inline CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(ZETAVOL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for " + cmd);
    CliRun r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

#endif  // ZETAVOL_TESTS_CLI_RUNNER_HPP
