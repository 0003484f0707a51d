// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#include "stripspec/cli.hpp"

int main(int argc, char** argv) { return stripspec::cli::run(argc, argv); }
