// Copyright 2026 The dicke Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dicke/circuit.hpp"

namespace dicke {

class QasmError : public std::runtime_error {
 public:
  QasmError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// OpenQASM 2.0 with a single register `q`. Angles use 17 significant digits
// so that doubles survive the round trip exactly.
std::string to_qasm(const Circuit& circuit);

// Accepts only what to_qasm emits (plus blank lines and // comments).
Circuit parse_qasm(std::string_view text);

}  // namespace dicke
