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

#include "covnet/text_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace covnet {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? "end of input: " + what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::string next(std::string_view what) {
    while (pos_ >= tokens_.size()) {
      if (!fill()) throw ParseError(0, "expected " + std::string(what));
    }
    token_line_ = line_;
    return tokens_[pos_++];
  }

  long long next_int(std::string_view what) {
    const std::string tok = next(what);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(token_line_, "expected integer " + std::string(what) + ", got '" + tok + "'");
    }
    return v;
  }

  std::size_t next_count(std::string_view what) {
    const long long v = next_int(what);
    if (v < 0) throw ParseError(token_line_, std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(v);
  }

  Field next_field() {
    const std::string tok = next("field size");
    try {
      return Field::parse(tok);
    } catch (const std::exception& e) {
      throw ParseError(token_line_, std::string("bad field '") + tok + "': " + e.what());
    }
  }

  Elem next_elem(const Field& f) {
    const long long v = next_int("matrix entry");
    if (v < 0 || static_cast<unsigned long long>(v) >= f.size()) {
      throw ParseError(token_line_, "entry " + std::to_string(v) + " outside GF(" + std::to_string(f.size()) + ")");
    }
    return static_cast<Elem>(v);
  }

  std::size_t line() const { return token_line_; }

 private:
  bool fill() {
    std::string text;
    if (!std::getline(in_, text)) return false;
    ++line_;
    tokens_.clear();
    pos_ = 0;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') return true;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) tokens_.push_back(tok);
    return true;
  }

  std::istream& in_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  std::size_t token_line_ = 0;
};

Matrix read_block(TokenReader& rd, const Field& f, std::size_t rows, std::size_t cols) {
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(rd.next_elem(f));
  return Matrix(f, rows, cols, std::move(entries));
}

Matrix read_matrix_from(TokenReader& rd) {
  const std::size_t rows = rd.next_count("row count");
  const std::size_t cols = rd.next_count("column count");
  const Field f = rd.next_field();
  return read_block(rd, f, rows, cols);
}

void write_rows(std::ostream& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  TokenReader rd(in);
  return read_matrix_from(rd);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.field().size() << '\n';
  write_rows(out, m);
}

CoveringCode read_code(std::istream& in) {
  TokenReader rd(in);
  const std::size_t n = rd.next_count("n");
  const std::size_t k = rd.next_count("k");
  const long long delta = rd.next_int("delta");
  const std::size_t alpha = rd.next_count("alpha");
  const Field f = rd.next_field();
  const std::size_t header_line = rd.line();
  const std::size_t count = rd.next_count("codeword count");
  std::vector<Subspace> words;
  words.reserve(count);
  for (std::size_t i = 0; i < count; ++i) words.push_back(Subspace::span(read_block(rd, f, k, n)));
  try {
    return CoveringCode(f, n, k, delta, alpha, std::move(words));
  } catch (const std::invalid_argument& e) {
    throw ParseError(header_line, e.what());
  }
}

void write_code(std::ostream& out, const CoveringCode& code) {
  out << code.n() << ' ' << code.k() << ' ' << code.delta() << ' ' << code.alpha() << ' ' << code.field().size()
      << ' ' << code.size() << '\n';
  for (const auto& w : code.codewords()) write_rows(out, w.basis().padded_to(code.k()));
}

LinearSolution read_solution(std::istream& in) {
  TokenReader rd(in);
  NetworkParams p;
  p.h = rd.next_count("h");
  p.r = rd.next_count("r");
  p.alpha = rd.next_count("alpha");
  p.ell = rd.next_count("ell");
  p.epsilon = rd.next_count("epsilon");
  const Field f = rd.next_field();
  const std::size_t t = rd.next_count("t");
  const std::size_t header_line = rd.line();
  std::vector<Matrix> coding;
  coding.reserve(p.r);
  for (std::size_t i = 0; i < p.r; ++i) {
    Matrix m = read_matrix_from(rd);
    if (!(m.field() == f)) throw ParseError(rd.line(), "coding matrix field differs from the header");
    coding.push_back(std::move(m));
  }
  try {
    return LinearSolution(p, f, t, std::move(coding));
  } catch (const std::invalid_argument& e) {
    throw ParseError(header_line, e.what());
  }
}

void write_solution(std::ostream& out, const LinearSolution& sol) {
  const auto& p = sol.params();
  out << p.h << ' ' << p.r << ' ' << p.alpha << ' ' << p.ell << ' ' << p.epsilon << ' ' << sol.field().size() << ' '
      << sol.t() << '\n';
  for (const auto& a : sol.coding()) write_matrix(out, a);
}

}  // namespace covnet
