#include "vvmf/suite.hpp"

#include <iostream>

int main() { return vvmf::run_acceptance(std::cout) ? 0 : 2; }
