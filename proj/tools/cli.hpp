// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dicke::cli {

enum ExitCode : int { kOk = 0, kContractViolation = 1, kUsageError = 2 };

// Column order of `sweep --format csv`. Changing it breaks downstream plots.
const std::vector<std::string>& sweep_columns();

// Entry point behind the `dicke` executable; never calls std::exit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dicke::cli
