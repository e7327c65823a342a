#include <cstdio>
#include <string>
#include <vector>

#include "coorth/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const coorth::CliResult result = coorth::run_cli(args);
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}
