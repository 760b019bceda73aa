#include <iostream>
#include <string>
#include <vector>

#include "qbasis/cli.hpp"

int main(int argc, char** argv) {
    return qbasis::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
