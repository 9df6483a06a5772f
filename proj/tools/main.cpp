// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

int main(int argc, char** argv) { return exsim::cli::main(argc, argv); }
