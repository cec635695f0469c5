// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "mdssd/cli.hpp"

int main(int argc, char** argv) { return mdssd::cli::run(argc, argv, std::cout, std::cerr); }
