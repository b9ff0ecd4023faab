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


#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covnet/bounds.hpp"
#include "covnet/covering.hpp"
#include "covnet/field.hpp"
#include "covnet/network.hpp"
#include "covnet/rank_metric.hpp"
#include "covnet/text_io.hpp"

namespace covnet::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = COVNET_VERSION_STRING;

/// Raised for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for input files that cannot be opened or parsed.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed(double v, int places = 10) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

/// Ordered key=value echo written as the first line of every artifact.
class Header {
 public:
  explicit Header(std::string command) : command_(std::move(command)) {}

  template <class T>
  Header& set(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    entries_.emplace_back(key, s.str());
    return *this;
  }

  std::string line() const {
    std::string s = "# covnet " + std::string(kVersion) + " " + command_;
    for (const auto& [k, v] : entries_) s += " " + k + "=" + v;
    return s + "\n";
  }

  json to_json() const {
    json params = json::object();
    for (const auto& [k, v] : entries_) params[k] = v;
    return json{{"tool", "covnet"}, {"version", kVersion}, {"command", command_}, {"params", params}};
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Sends the artifact to -o when given, otherwise to stdout.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError(path + ": cannot open");
  return f;
}

template <class F>
auto parse_file(const std::string& path, F&& reader) {
  auto f = open_input(path);
  try {
    return reader(f);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Accepts "a", "a..b", "a..b:step" and comma lists of those. Values come
/// back sorted and deduplicated; a reversed range is empty.
std::vector<std::uint64_t> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || s[0] == '-') throw UsageError("malformed range '" + text + "'");
    return static_cast<std::uint64_t>(v);
  };
  std::vector<std::uint64_t> values;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      values.push_back(number(part));
      continue;
    }
    std::string hi_text = part.substr(dots + 2);
    std::uint64_t step = 1;
    if (const auto colon = hi_text.find(':'); colon != std::string::npos) {
      step = number(hi_text.substr(colon + 1));
      hi_text = hi_text.substr(0, colon);
      if (step == 0) throw UsageError("zero step in range '" + text + "'");
    }
    const std::uint64_t lo = number(part.substr(0, dots));
    const std::uint64_t hi = number(hi_text);
    if (hi >= lo && (hi - lo) / step > 1'000'000) throw UsageError("range '" + text + "' is too long");
    for (std::uint64_t v = lo; v <= hi; v += step) {
      values.push_back(v);
      if (hi - v < step) break;
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Network parameters: from --params FILE (JSON object) and/or flags, flags winning.
struct NetworkFlags {
  std::string params_file;
  std::optional<std::size_t> h, r, alpha, ell, eps;

  void add_to(CLI::App* app) {
    app->add_option("--params", params_file, "JSON object with h, r, alpha, ell, epsilon");
    app->add_option("--h", h, "number of source messages");
    app->add_option("--r", r, "number of middle nodes");
    app->add_option("--alpha", alpha, "middle nodes per receiver");
    app->add_option("--ell", ell, "links per middle node");
    app->add_option("--eps,--epsilon", eps, "direct links per receiver");
  }

  NetworkParams resolve() const {
    NetworkParams p;
    if (!params_file.empty()) {
      auto f = open_input(params_file);
      try {
        const auto j = json::parse(f);
        p.h = j.at("h").get<std::size_t>();
        p.r = j.at("r").get<std::size_t>();
        p.alpha = j.at("alpha").get<std::size_t>();
        p.ell = j.at("ell").get<std::size_t>();
        p.epsilon = j.value("epsilon", std::size_t{0});
      } catch (const json::exception& e) {
        throw InputError(params_file + ": " + e.what());
      }
    }
    p.h = h.value_or(p.h);
    p.r = r.value_or(p.r);
    p.alpha = alpha.value_or(p.alpha);
    p.ell = ell.value_or(p.ell);
    p.epsilon = eps.value_or(p.epsilon);
    p.validate();
    return p;
  }
};

Header& echo(Header& hd, const NetworkParams& p) {
  return hd.set("h", p.h).set("r", p.r).set("alpha", p.alpha).set("ell", p.ell).set("eps", p.epsilon);
}

int cmd_classify(const NetworkFlags& nf, std::ostream& out) {
  const auto p = nf.resolve();
  out << to_string(classify(p)) << "\n";
  return kExitOk;
}

struct ConstructFlags {
  std::size_t n = 0, k = 0, delta = 0, alpha = 2;
  std::string q = "2";
  std::string output;
};

int cmd_construct(const ConstructFlags& f, std::ostream& out) {
  const Field field = Field::parse(f.q);
  const auto code = dual_lifted_mrd_covering_code(f.n, f.k, f.delta, f.alpha, field);
  Header hd("construct");
  hd.set("n", f.n).set("k", f.k).set("delta", f.delta).set("alpha", f.alpha).set("q", field.size()).set("seed", 0);
  std::ostringstream s;
  s << hd.line();
  write_code(s, code);
  emit(f.output, s.str(), out);
  return kExitOk;
}

struct VerifyFlags {
  std::string code;
  std::string solution;
  unsigned threads = 1;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  if (f.code.empty() == f.solution.empty()) throw UsageError("verify needs exactly one of --code and --solution");
  if (!f.code.empty()) {
    const auto code = parse_file(f.code, [](std::istream& in) { return read_code(in); });
    const auto check = is_covering_code(code, f.threads);
    if (check.covering) {
      out << "covering: " << code.size() << " codewords\n";
      return kExitOk;
    }
    out << "not covering: codewords " << join_indices(check.witness->indices) << " span "
        << check.witness->achieved_dim << " < " << code.required_dim() << "\n";
    return kExitFailure;
  }
  const auto sol = parse_file(f.solution, [](std::istream& in) { return read_solution(in); });
  const auto check = verify_solution(sol, f.threads);
  if (check.valid) {
    out << "valid: " << sol.params().receiver_count().str() << " receivers decode\n";
    return kExitOk;
  }
  out << "invalid: receiver at middle nodes " << join_indices(*check.failing_receiver) << " is rank deficient\n";
  return kExitFailure;
}

struct SearchFlags {
  std::string q = "2";
  std::size_t t = 1;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;
};

int cmd_search(const NetworkFlags& nf, const SearchFlags& f, std::ostream& out) {
  const auto p = nf.resolve();
  const Field field = Field::parse(f.q);
  std::uint64_t trial = 0;
  const auto sol = random_solution_search(p, field, f.t, f.trials, f.seed, f.threads, &trial);
  Header hd("search");
  echo(hd, p).set("q", field.size()).set("t", f.t).set("trials", f.trials).set("seed", f.seed);
  if (!sol) {
    out << hd.line() << "no solution in " << f.trials << " trials\n";
    return kExitFailure;
  }
  std::ostringstream s;
  s << hd.line() << "# found at trial " << trial << "\n";
  write_solution(s, *sol);
  emit(f.output, s.str(), out);
  return kExitOk;
}

struct SimulateFlags {
  std::string solution;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_simulate(const SimulateFlags& f, std::ostream& out) {
  const auto sol = parse_file(f.solution, [](std::istream& in) { return read_solution(in); });
  const auto& p = sol.params();
  std::mt19937_64 rng(f.seed);
  std::uniform_int_distribution<Elem> symbol(0, sol.field().size() - 1);
  std::vector<std::vector<std::size_t>> nodes;
  std::vector<std::uint64_t> decoded;
  for (std::uint64_t trial = 0; trial < f.trials; ++trial) {
    std::vector<std::vector<Elem>> msgs(p.h, std::vector<Elem>(sol.t()));
    for (auto& m : msgs)
      for (auto& x : m) x = symbol(rng);
    const auto outcomes = simulate(sol, msgs);
    if (nodes.empty()) {
      for (const auto& o : outcomes) nodes.push_back(o.middle_nodes);
      decoded.assign(outcomes.size(), 0);
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i) decoded[i] += outcomes[i].decoded && *outcomes[i].decoded == msgs;
  }
  Header hd("simulate");
  echo(hd, p).set("q", sol.field().size()).set("t", sol.t()).set("trials", f.trials).set("seed", f.seed);
  std::ostringstream s;
  s << hd.line() << "receiver,middle_nodes,decoded,trials\n";
  bool all = true;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    s << i << "," << csv_field(join_indices(nodes[i])) << "," << decoded[i] << "," << f.trials << "\n";
    all = all && decoded[i] == f.trials;
  }
  emit(f.output, s.str(), out);
  return all ? kExitOk : kExitFailure;
}

struct FieldSizeFlags {
  std::uint64_t cap = 16;
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::uint64_t enum_cap = kDefaultEnumerationCap;
};

int cmd_field_size(const NetworkFlags& nf, const FieldSizeFlags& f, bool vector, std::ostream& out) {
  const auto p = nf.resolve();
  const char* name = vector ? "qv" : "qs";
  Header hd(name);
  echo(hd, p).set("cap", f.cap).set("node_limit", f.node_limit).set("seed", 0);
  out << hd.line();
  if (classify(p) == Solvability::kUnsolvable) {
    out << name << "=none unsolvable\n";
    return kExitFailure;
  }
  const auto res = vector ? compute_qv(p, f.cap, f.node_limit, f.enum_cap) : compute_qs(p, f.cap, f.node_limit, f.enum_cap);
  out << name << "=";
  if (res.value) {
    out << *res.value;
  } else {
    out << "none";
  }
  out << " t=" << res.t << " exact=" << (res.exact ? "true" : "false");
  if (res.trivial) out << " trivial";
  out << "\n";
  return kExitOk;
}

struct BoundsFlags {
  long long h = 0, ell = 0, eps = 0, alpha = 2;
  std::uint64_t q = 0, r = 0;
  long long t = 1;
  std::vector<std::string> sweep;
  std::string format = "csv";
  bool gamma_exact = false;
  bool lll_plus_one = false;
  std::string output;
};

struct BoundPoint {
  long long h, ell, eps, alpha, t;
  std::uint64_t q, r;
};

struct BoundRow {
  BoundPoint at;
  BoundReport report;
};

std::string rational_string(const std::optional<Rational>& v) {
  if (!v) return "";
  std::ostringstream s;
  s << *v;
  return s.str();
}

std::string assumptions_string(const BoundReport& b) {
  std::string s;
  for (std::size_t i = 0; i < b.assumptions.size(); ++i) {
    s += (i ? "; " : "") + b.assumptions[i].condition + (b.assumptions[i].holds ? " [ok]" : " [fails]");
  }
  return s;
}

std::vector<BoundRow> evaluate_bounds(const BoundPoint& at, const BoundOptions& opts) {
  std::vector<BoundRow> rows;
  auto add = [&](BoundReport b) { rows.push_back({at, std::move(b)}); };
  if (at.q != 0) {
    add(covering_upper_bound_exact(at.h, at.ell, at.eps, at.alpha, at.q, at.t, opts));
    add(covering_upper_bound_relaxed(at.h, at.ell, at.eps, at.alpha, at.q, at.t, opts));
    add(pairwise_upper_bound(at.h, at.ell, at.eps, at.q, at.t, opts));
    add(lll_lower_bound(at.h, at.ell, at.eps, at.alpha, at.q, at.t, opts));
    add(mrd_lower_bound(at.h, at.ell, at.eps, at.alpha, at.q, at.t, opts));
    add(lll_event_probability_bound(at.h, at.ell, at.eps, at.alpha, at.q, at.t, opts));
  }
  if (at.r != 0) {
    add(field_size_necessary(at.h, at.ell, at.eps, at.alpha, at.r, at.t, opts));
    add(field_size_sufficient(at.h, at.ell, at.eps, at.alpha, at.r, at.t, opts));
    add(gap_lower_bound(at.h, at.ell, at.eps, at.alpha, at.r, opts));
    add(gap_lower_bound_closed_form(at.h, at.ell, at.eps, at.alpha, at.r, opts));
    add(lll_dependency_report(static_cast<long long>(at.r), at.alpha));
  }
  return rows;
}

std::string optional_number(std::uint64_t v) { return v == 0 ? "" : std::to_string(v); }

std::string bounds_csv(const Header& hd, const std::vector<BoundRow>& rows) {
  std::ostringstream s;
  s << hd.line() << "h,ell,eps,alpha,q,t,r,bound,value,exact,valid,branch,assumptions\n";
  for (const auto& [at, b] : rows) {
    s << at.h << "," << at.ell << "," << at.eps << "," << at.alpha << "," << optional_number(at.q) << "," << at.t
      << "," << optional_number(at.r) << "," << b.name << "," << fixed(b.value) << ","
      << csv_field(rational_string(b.exact)) << "," << (b.valid ? "true" : "false") << "," << csv_field(b.branch)
      << "," << csv_field(assumptions_string(b)) << "\n";
  }
  return s.str();
}

json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  return fixed(v);
}

std::string bounds_json(const Header& hd, const std::vector<BoundRow>& rows) {
  json doc = hd.to_json();
  json list = json::array();
  for (const auto& [at, b] : rows) {
    json assumptions = json::array();
    for (const auto& a : b.assumptions) assumptions.push_back({{"condition", a.condition}, {"holds", a.holds}});
    json details = json::object();
    for (const auto& [k, v] : b.details) details[k] = number_or_string(v);
    json row = {{"h", at.h}, {"ell", at.ell}, {"eps", at.eps}, {"alpha", at.alpha}, {"t", at.t}};
    row["q"] = at.q == 0 ? json() : json(at.q);
    row["r"] = at.r == 0 ? json() : json(at.r);
    row["bound"] = b.name;
    row["value"] = number_or_string(b.value);
    row["exact"] = b.exact ? json(rational_string(b.exact)) : json();
    row["valid"] = b.valid;
    row["branch"] = b.branch;
    row["assumptions"] = assumptions;
    row["details"] = details;
    list.push_back(row);
  }
  doc["rows"] = list;
  return doc.dump(2) + "\n";
}

int cmd_bounds(const BoundsFlags& f, std::ostream& out) {
  if (f.format != "csv" && f.format != "json") throw UsageError("--format must be csv or json");
  BoundPoint base{f.h, f.ell, f.eps, f.alpha, f.t, f.q, f.r};
  std::vector<BoundPoint> points = {base};
  Header hd("bounds");
  hd.set("h", f.h).set("ell", f.ell).set("eps", f.eps).set("alpha", f.alpha).set("t", f.t);
  hd.set("q", optional_number(f.q)).set("r", optional_number(f.r));
  for (const auto& sweep_arg : f.sweep) {
    const auto eq = sweep_arg.find('=');
    if (eq == std::string::npos) throw UsageError("--sweep expects var=range, got '" + sweep_arg + "'");
    const std::string var = sweep_arg.substr(0, eq);
    const auto values = parse_range(sweep_arg.substr(eq + 1));
    std::vector<BoundPoint> next;
    for (const auto& pt : points) {
      for (const std::uint64_t v : values) {
        BoundPoint p = pt;
        const auto sv = static_cast<long long>(v);
        if (var == "h") p.h = sv;
        else if (var == "ell") p.ell = sv;
        else if (var == "eps") p.eps = sv;
        else if (var == "alpha") p.alpha = sv;
        else if (var == "t") p.t = sv;
        else if (var == "q") p.q = v;
        else if (var == "r") p.r = v;
        else throw UsageError("cannot sweep '" + var + "'");
        next.push_back(p);
      }
    }
    points = std::move(next);
    hd.set("sweep", sweep_arg);
  }
  hd.set("gamma", f.gamma_exact ? "exact" : "fixed").set("lll_plus_one", f.lll_plus_one ? "true" : "false").set("seed", 0);
  const BoundOptions opts{f.gamma_exact ? GammaMode::kExact : GammaMode::kFixed, f.lll_plus_one};
  std::vector<BoundRow> rows;
  for (const auto& pt : points) {
    if (pt.q == 0 && pt.r == 0) throw UsageError("bounds needs --q or --r, given directly or swept");
    for (auto& row : evaluate_bounds(pt, opts)) rows.push_back(std::move(row));
  }
  emit(f.output, f.format == "csv" ? bounds_csv(hd, rows) : bounds_json(hd, rows), out);
  return kExitOk;
}

struct GapFlags {
  long long h = 0, ell = 0, eps = 0, alpha = 2;
  std::uint64_t r = 0;
  std::string r_range;
  std::string log2_r_range;
  std::string format = "csv";
  bool gamma_exact = false;
  std::string output;
};

int cmd_gap(const GapFlags& f, std::ostream& out) {
  const int given = (f.r != 0) + !f.r_range.empty() + !f.log2_r_range.empty();
  if (given != 1) throw UsageError("gap needs exactly one of --r, --r-range, --log2-r-range");
  if (f.format != "csv" && f.format != "json") throw UsageError("--format must be csv or json");
  std::vector<std::uint64_t> rs;
  Header hd("gap");
  hd.set("h", f.h).set("ell", f.ell).set("eps", f.eps).set("alpha", f.alpha);
  if (f.r != 0) {
    rs = {f.r};
    hd.set("r", f.r);
  } else if (!f.r_range.empty()) {
    rs = parse_range(f.r_range);
    hd.set("r_range", f.r_range);
  } else {
    for (const auto e : parse_range(f.log2_r_range)) {
      if (e > 62) throw UsageError("log2 r must be at most 62");
      rs.push_back(std::uint64_t{1} << e);
    }
    hd.set("log2_r_range", f.log2_r_range);
  }
  hd.set("gamma", f.gamma_exact ? "exact" : "fixed").set("seed", 0);
  const BoundOptions opts{f.gamma_exact ? GammaMode::kExact : GammaMode::kFixed, false};

  std::ostringstream s;
  json list = json::array();
  if (f.format == "csv") s << hd.line() << "r,log2_r,gap,gap_valid,blocklength,gap_closed_form,closed_form_valid\n";
  for (const auto r : rs) {
    const auto g = gap_lower_bound(f.h, f.ell, f.eps, f.alpha, r, opts);
    const auto c = gap_lower_bound_closed_form(f.h, f.ell, f.eps, f.alpha, r, opts);
    auto t = g.detail("t_star");
    if (!t) t = g.detail("t_delta");
    const double lg = std::log2(static_cast<double>(r));
    if (f.format == "csv") {
      s << r << "," << fixed(lg, 6) << "," << fixed(g.value) << "," << (g.valid ? "true" : "false") << ","
        << (t ? fixed(*t, 0) : "") << "," << fixed(c.value) << "," << (c.valid ? "true" : "false") << "\n";
    } else {
      list.push_back({{"r", r},
                      {"log2_r", lg},
                      {"gap", number_or_string(g.value)},
                      {"gap_valid", g.valid},
                      {"blocklength", t ? number_or_string(*t) : json()},
                      {"gap_closed_form", number_or_string(c.value)},
                      {"closed_form_valid", c.valid}});
    }
  }
  if (f.format == "json") {
    json doc = hd.to_json();
    doc["rows"] = list;
    s << doc.dump(2) << "\n";
  }
  emit(f.output, s.str(), out);
  return kExitOk;
}

struct OracleFlags {
  std::size_t n = 0, k = 0, delta = 0, alpha = 2;
  std::string q = "2";
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  std::string output;
};

int cmd_oracle(const OracleFlags& f, std::ostream& out) {
  const Field field = Field::parse(f.q);
  const auto res = max_covering_code(f.n, f.k, static_cast<long long>(f.delta), f.alpha, field, f.node_limit, f.enum_cap);
  Header hd("oracle");
  hd.set("n", f.n).set("k", f.k).set("delta", f.delta).set("alpha", f.alpha).set("q", field.size());
  hd.set("node_limit", f.node_limit).set("seed", 0);
  out << hd.line() << "B=" << res.size << " exact=" << (res.exact ? "true" : "false") << " nodes=" << res.nodes << "\n";
  if (!f.output.empty()) {
    std::ostringstream s;
    s << hd.line();
    write_code(s, res.code);
    emit(f.output, s.str(), out);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering Grassmannian codes and generalized combination networks", "covnet"};
  app.set_version_flag("--version", std::string("covnet ") + kVersion);
  app.require_subcommand(1);
  // "-h" would clash with the --h network flag.
  app.set_help_flag("--help", "Print this help message and exit");

  NetworkFlags net;
  auto* classify_cmd = app.add_subcommand("classify", "trivial, nontrivial or unsolvable");
  net.add_to(classify_cmd);

  ConstructFlags cf;
  auto* construct_cmd = app.add_subcommand("construct", "covering code from duals of a lifted MRD code");
  construct_cmd->add_option("--n", cf.n)->required();
  construct_cmd->add_option("--k", cf.k)->required();
  construct_cmd->add_option("--delta", cf.delta)->required();
  construct_cmd->add_option("--alpha", cf.alpha);
  construct_cmd->add_option("--q", cf.q, "field size or p^m");
  construct_cmd->add_option("-o,--output", cf.output);

  VerifyFlags vf;
  auto* verify_cmd = app.add_subcommand("verify", "check a code file or a solution file");
  verify_cmd->add_option("--code", vf.code);
  verify_cmd->add_option("--solution", vf.solution);
  verify_cmd->add_option("--threads", vf.threads)->check(CLI::PositiveNumber);

  SearchFlags sf;
  auto* search_cmd = app.add_subcommand("search", "seeded random search for a linear solution");
  net.add_to(search_cmd);
  search_cmd->add_option("--q", sf.q, "field size or p^m");
  search_cmd->add_option("--t", sf.t, "blocklength")->check(CLI::PositiveNumber);
  search_cmd->add_option("--trials", sf.trials);
  search_cmd->add_option("--seed", sf.seed);
  search_cmd->add_option("--threads", sf.threads)->check(CLI::PositiveNumber);
  search_cmd->add_option("-o,--output", sf.output);

  SimulateFlags mf;
  auto* simulate_cmd = app.add_subcommand("simulate", "send random messages through a solution");
  simulate_cmd->add_option("--solution", mf.solution)->required();
  simulate_cmd->add_option("--trials", mf.trials, "message vectors to send");
  simulate_cmd->add_option("--seed", mf.seed);
  simulate_cmd->add_option("-o,--output", mf.output);

  FieldSizeFlags qf;
  auto* qs_cmd = app.add_subcommand("qs", "smallest field size with a scalar solution");
  auto* qv_cmd = app.add_subcommand("qv", "smallest q^t with a vector solution");
  for (auto* c : {qs_cmd, qv_cmd}) {
    net.add_to(c);
    c->add_option("--cap", qf.cap, "largest q (qs) or q^t (qv) to try");
    c->add_option("--node-limit", qf.node_limit);
    c->add_option("--enum-cap", qf.enum_cap, "largest Grassmannian to enumerate");
  }

  BoundsFlags bf;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the upper, lower and field-size bounds");
  bounds_cmd->add_option("--h", bf.h)->required();
  bounds_cmd->add_option("--ell", bf.ell)->required();
  bounds_cmd->add_option("--eps,--epsilon", bf.eps);
  bounds_cmd->add_option("--alpha", bf.alpha);
  bounds_cmd->add_option("--q", bf.q);
  bounds_cmd->add_option("--t", bf.t);
  bounds_cmd->add_option("--r", bf.r);
  bounds_cmd->add_option("--sweep", bf.sweep, "var=range, e.g. q=2..5 or t=1,2,4");
  bounds_cmd->add_option("--format", bf.format);
  bounds_cmd->add_flag("--gamma-exact", bf.gamma_exact, "use the exact q-dependent gamma");
  bounds_cmd->add_flag("--lll-plus-one", bf.lll_plus_one);
  bounds_cmd->add_option("-o,--output", bf.output);

  GapFlags gf;
  auto* gap_cmd = app.add_subcommand("gap", "lower bounds on log2 q_s - log2 q_v");
  gap_cmd->add_option("--h", gf.h)->required();
  gap_cmd->add_option("--ell", gf.ell)->required();
  gap_cmd->add_option("--eps,--epsilon", gf.eps);
  gap_cmd->add_option("--alpha", gf.alpha);
  gap_cmd->add_option("--r", gf.r);
  gap_cmd->add_option("--r-range", gf.r_range);
  gap_cmd->add_option("--log2-r-range", gf.log2_r_range);
  gap_cmd->add_option("--format", gf.format);
  gap_cmd->add_flag("--gamma-exact", gf.gamma_exact);
  gap_cmd->add_option("-o,--output", gf.output);

  OracleFlags of;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search for the largest covering code");
  oracle_cmd->add_option("--n", of.n)->required();
  oracle_cmd->add_option("--k", of.k)->required();
  oracle_cmd->add_option("--delta", of.delta)->required();
  oracle_cmd->add_option("--alpha", of.alpha);
  oracle_cmd->add_option("--q", of.q, "field size or p^m");
  oracle_cmd->add_option("--node-limit", of.node_limit);
  oracle_cmd->add_option("--enum-cap", of.enum_cap);
  oracle_cmd->add_option("-o,--output", of.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(net, out);
    if (*construct_cmd) return cmd_construct(cf, out);
    if (*verify_cmd) return cmd_verify(vf, out);
    if (*search_cmd) return cmd_search(net, sf, out);
    if (*simulate_cmd) return cmd_simulate(mf, out);
    if (*qs_cmd) return cmd_field_size(net, qf, false, out);
    if (*qv_cmd) return cmd_field_size(net, qf, true, out);
    if (*bounds_cmd) return cmd_bounds(bf, out);
    if (*gap_cmd) return cmd_gap(gf, out);
    if (*oracle_cmd) return cmd_oracle(of, out);
  } catch (const InputError& e) {
    err << "covnet: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "covnet: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "covnet: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace covnet::cli
