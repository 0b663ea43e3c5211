#include <iostream>

#include "cnpkit/cli.hpp"

int main(int argc, char** argv) {
    return cnpkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
