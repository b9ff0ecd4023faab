// Copyright 2026 The covnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "covnet/covering.hpp"
#include "covnet/matrix.hpp"
#include "covnet/network.hpp"

namespace covnet {

/// Malformed input. `line()` is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// All formats are whitespace separated. Lines whose first non-blank
// character is '#' are comments.

/// "rows cols q" then rows of element indices.
Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& m);

/// "n k delta alpha q count" then one k x n basis block per codeword.
/// Codewords of dimension below k are written with zero rows appended.
CoveringCode read_code(std::istream& in);
void write_code(std::ostream& out, const CoveringCode& code);

/// "h r alpha ell epsilon q t" then r matrices in the matrix format.
LinearSolution read_solution(std::istream& in);
void write_solution(std::ostream& out, const LinearSolution& sol);

}  // namespace covnet
