#include <string>
#include <vector>

#include "nonrep/cli.hpp"

int main(int argc, char** argv) {
    return nonrep::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
