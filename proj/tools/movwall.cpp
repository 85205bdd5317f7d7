// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "movwall/cli/commands.hpp"

int main(int argc, char** argv) { return movwall::cli::run_cli(argc, argv, std::cout, std::cerr); }
