#include "commands.hpp"

#include <iostream>

int main(int argc, char **argv) {
    return jastrow1d::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
