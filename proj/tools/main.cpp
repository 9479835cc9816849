#include <string>
#include <vector>

#include "alcomega/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return alcomega::cli::run(args);
}
