#include "fadm/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace fadm {

ConfigError::ConfigError(int line, std::string field, const std::string& message)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         (field.empty() ? std::string() : "'" + field + "': ") + message),
      line_(line),
      field_(std::move(field)) {}

namespace {

// Scalars keep their source text so numbers can be read exactly.
struct Value {
  enum class Kind { Scalar, String, Array } kind = Kind::Scalar;
  std::string text;
  std::vector<Value> items;
};

class ValueParser {
 public:
  ValueParser(std::string_view src, int line, std::string field)
      : src_(src), line_(line), field_(std::move(field)) {}

  Value parse() {
    Value v = value();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing text");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) { throw ConfigError(line_, field_, why); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  Value value() {
    skip_ws();
    if (pos_ >= src_.size()) fail("missing value");
    Value v;
    if (src_[pos_] == '[') {
      v.kind = Value::Kind::Array;
      ++pos_;
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == ']') {
        ++pos_;
        return v;
      }
      while (true) {
        v.items.push_back(value());
        skip_ws();
        if (pos_ >= src_.size()) fail("unterminated array");
        if (src_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (src_[pos_] == ']') {
          ++pos_;
          return v;
        }
        fail("expected ',' or ']' in array");
      }
    }
    if (src_[pos_] == '"') {
      v.kind = Value::Kind::String;
      auto end = src_.find('"', pos_ + 1);
      if (end == std::string_view::npos) fail("unterminated string");
      v.text = std::string(src_.substr(pos_ + 1, end - pos_ - 1));
      pos_ = end + 1;
      return v;
    }
    auto start = pos_;
    while (pos_ < src_.size() && src_[pos_] != ',' && src_[pos_] != ']' &&
           !std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    v.text = std::string(src_.substr(start, pos_ - start));
    if (v.text.empty()) fail("empty value");
    return v;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
  std::string field_;
};

struct Entry {
  int line;
  std::string field;
  Value value;
};

[[noreturn]] void bad(const Entry& e, const std::string& why) { throw ConfigError(e.line, e.field, why); }

const Value& scalar(const Entry& e, const Value& v) {
  if (v.kind != Value::Kind::Scalar) bad(e, "expected a number");
  return v;
}

Rational as_rational(const Entry& e, const Value& v) {
  try {
    return parse_rational(scalar(e, v).text);
  } catch (const std::invalid_argument& ex) {
    bad(e, ex.what());
  }
}

double as_double(const Entry& e, const Value& v) {
  const std::string& s = scalar(e, v).text;
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(out)) {
    bad(e, "malformed number '" + s + "'");
  }
  return out;
}

int as_int(const Entry& e, const Value& v) {
  const std::string& s = scalar(e, v).text;
  int out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad(e, "expected an integer, got '" + s + "'");
  return out;
}

const std::vector<Value>& as_array(const Entry& e) {
  if (e.value.kind != Value::Kind::Array) bad(e, "expected an array");
  return e.value.items;
}

std::string as_string(const Entry& e) {
  if (e.value.kind == Value::Kind::Array) bad(e, "expected a string");
  return e.value.text;
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void RunConfig::validate() const {
  try {
    problem.validate();
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(0, "problem", ex.what());
  }
  if (iterations < 0) throw ConfigError(0, "iterations", "must be >= 0");
  if (!(t_start >= 0.0)) throw ConfigError(0, "t_start", "must be >= 0");
  if (!(t_end >= t_start)) throw ConfigError(0, "t_end", "must be >= t_start");
  if (points < 2) throw ConfigError(0, "points", "must be >= 2");
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 1.0)) throw ConfigError(0, "alphas", "every alpha must lie in (0, 1]");
  }
  if (!(rk4_step > 0.0)) throw ConfigError(0, "rk4_step", "must be positive");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::optional<Entry> n_entry, init_entry, f_entry;
  bool have_n = false, have_init = false;
  std::string section;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "", "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "problem" && section != "run" && section != "output") {
        throw ConfigError(line_no, section, "unknown section");
      }
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line_no, "", "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError(line_no, "", "missing key");
    if (section.empty()) throw ConfigError(line_no, key, "key outside of any section");
    Entry e{line_no, key, ValueParser(line.substr(eq + 1), line_no, key).parse()};

    if (section == "problem") {
      if (key == "n") {
        n_entry = e;
        have_n = true;
      } else if (key == "alpha") {
        cfg.problem.alpha = as_double(e, e.value);
      } else if (key == "N") {
        try {
          cfg.problem.nonlinearity = PolyNonlinearity::parse(as_string(e));
        } catch (const std::invalid_argument& ex) {
          bad(e, ex.what());
        }
      } else if (key == "f") {
        f_entry = e;
      } else if (key == "init") {
        init_entry = e;
        have_init = true;
      } else {
        bad(e, "unknown key in [problem]");
      }
    } else if (section == "run") {
      if (key == "iterations") {
        cfg.iterations = as_int(e, e.value);
      } else if (key == "max_grade") {
        cfg.problem.max_grade = as_int(e, e.value);
      } else if (key == "t_start") {
        cfg.t_start = as_double(e, e.value);
      } else if (key == "t_end") {
        cfg.t_end = as_double(e, e.value);
      } else if (key == "points") {
        cfg.points = as_int(e, e.value);
      } else if (key == "alphas") {
        cfg.alphas.clear();
        for (const auto& v : as_array(e)) cfg.alphas.push_back(as_double(e, v));
      } else if (key == "rk4_step") {
        cfg.rk4_step = as_double(e, e.value);
      } else {
        bad(e, "unknown key in [run]");
      }
    } else {
      if (key == "dir") {
        cfg.out_dir = as_string(e);
      } else {
        bad(e, "unknown key in [output]");
      }
    }
  }

  if (!have_n) throw ConfigError(0, "n", "missing required key in [problem]");
  if (!have_init) throw ConfigError(0, "init", "missing required key in [problem]");
  cfg.problem.n = as_int(*n_entry, n_entry->value);
  if (cfg.problem.n < 1) bad(*n_entry, "n must be >= 1");
  if (cfg.problem.max_grade < 0) throw ConfigError(0, "max_grade", "must be >= 0");

  for (const auto& v : as_array(*init_entry)) cfg.problem.init.push_back(as_rational(*init_entry, v));

  cfg.problem.forcing = FracSeries(cfg.problem.max_grade);
  if (f_entry) {
    const Entry& e = *f_entry;
    if (e.value.kind == Value::Kind::Scalar) {
      cfg.problem.forcing.add_term(0, as_rational(e, e.value));
    } else {
      for (const auto& pair : as_array(e)) {
        if (pair.kind != Value::Kind::Array || pair.items.size() != 2) {
          bad(e, "expected [grade, coefficient] pairs");
        }
        int grade = as_int(e, pair.items[0]);
        if (grade < 0 || grade > cfg.problem.max_grade) bad(e, "forcing grade outside [0, max_grade]");
        cfg.problem.forcing.add_term(grade, as_rational(e, pair.items[1]));
      }
    }
  }

  if (!(cfg.problem.alpha > 0.0 && cfg.problem.alpha <= 1.0)) {
    throw ConfigError(0, "alpha", "alpha must lie in (0, 1]");
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "", "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace fadm
