#include "infostab/function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace infostab {

namespace {

void check_open_interval(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw Error(ErrorKind::OutOfDomain,
                "evaluation point " + std::to_string(x) + " outside (0,1)");
  }
}

double require_finite(double v, double x) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::NonFiniteValue,
                "function value overflowed at x = " + std::to_string(x));
  }
  return v;
}

void validate_table(const Tabulated& t) {
  if (t.grid.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "tabulated grid needs at least 2 points");
  }
  if (t.grid.size() != t.values.size()) {
    throw Error(ErrorKind::InvalidArgument, "tabulated grid/value length mismatch");
  }
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    if (!(t.grid[i] > 0.0 && t.grid[i] < 1.0)) {
      throw Error(ErrorKind::InvalidArgument, "tabulated abscissae must lie in (0,1)");
    }
    if (i > 0 && !(t.grid[i] > t.grid[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "tabulated abscissae must be strictly increasing");
    }
    if (!std::isfinite(t.values[i])) {
      throw Error(ErrorKind::InvalidArgument, "tabulated values must be finite");
    }
  }
}

struct EvalVisitor {
  double x;

  double operator()(const PowerForm& p) const {
    const double a = p.alpha.value();
    return p.a * std::pow(x, a) + p.b * std::pow(1.0 - x, a) - p.b;
  }
  double operator()(const LogForm& l) const { return l.lambda * std::log(1.0 - x) + l.c; }
  double operator()(const Tabulated& t) const {
    if (x < t.grid.front() || x > t.grid.back()) {
      throw Error(ErrorKind::TabulatedExtrapolation,
                  "x = " + std::to_string(x) + " outside tabulated hull [" +
                      std::to_string(t.grid.front()) + ", " + std::to_string(t.grid.back()) + "]");
    }
    const auto it = std::upper_bound(t.grid.begin(), t.grid.end(), x);
    if (it == t.grid.begin()) return t.values.front();
    if (it == t.grid.end()) return t.values.back();
    const std::size_t hi = static_cast<std::size_t>(it - t.grid.begin());
    const std::size_t lo = hi - 1;
    const double w = (x - t.grid[lo]) / (t.grid[hi] - t.grid[lo]);
    return t.values[lo] + w * (t.values[hi] - t.values[lo]);
  }
  double operator()(const Perturbed& p) const { return p.base->eval(x) + p.noise.value(x); }
};

}  // namespace

UnitIntervalFunction::UnitIntervalFunction(Node node)
    : node_(std::make_shared<const Node>(std::move(node))) {}

UnitIntervalFunction::UnitIntervalFunction(PowerForm form) : UnitIntervalFunction(Node(form)) {}
UnitIntervalFunction::UnitIntervalFunction(LogForm form) : UnitIntervalFunction(Node(form)) {}
UnitIntervalFunction::UnitIntervalFunction(Tabulated table) : UnitIntervalFunction(Node(std::move(table))) {
  validate_table(std::get<Tabulated>(*node_));
}

UnitIntervalFunction UnitIntervalFunction::power(double a, double b, Alpha alpha) {
  return UnitIntervalFunction(PowerForm(a, b, alpha));
}

UnitIntervalFunction UnitIntervalFunction::log(double lambda, double c) {
  return UnitIntervalFunction(LogForm{lambda, c});
}

UnitIntervalFunction UnitIntervalFunction::tabulated(std::vector<double> grid,
                                                     std::vector<double> values) {
  return UnitIntervalFunction(Tabulated{std::move(grid), std::move(values)});
}

UnitIntervalFunction UnitIntervalFunction::perturbed(UnitIntervalFunction base,
                                                     PerturbationSpec noise) {
  return UnitIntervalFunction(
      Node(Perturbed{std::make_shared<const UnitIntervalFunction>(std::move(base)), noise}));
}

double UnitIntervalFunction::eval(double x) const {
  check_open_interval(x);
  return require_finite(std::visit(EvalVisitor{x}, *node_), x);
}

bool UnitIntervalFunction::is_power() const { return std::holds_alternative<PowerForm>(*node_); }
bool UnitIntervalFunction::is_log() const { return std::holds_alternative<LogForm>(*node_); }
bool UnitIntervalFunction::is_perturbed() const { return std::holds_alternative<Perturbed>(*node_); }
const PowerForm* UnitIntervalFunction::as_power() const { return std::get_if<PowerForm>(node_.get()); }
const LogForm* UnitIntervalFunction::as_log() const { return std::get_if<LogForm>(node_.get()); }
const Tabulated* UnitIntervalFunction::as_tabulated() const { return std::get_if<Tabulated>(node_.get()); }
const Perturbed* UnitIntervalFunction::as_perturbed() const { return std::get_if<Perturbed>(node_.get()); }

Tabulated load_tabulated_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for reading");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::ParseError, "'" + path + "' is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,value") {
    throw Error(ErrorKind::ParseError, "'" + path + "' must start with header 'x,value'");
  }
  Tabulated t;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::ParseError, path + ":" + std::to_string(row) + ": expected 'x,value'");
    }
    try {
      std::size_t used = 0;
      const double x = std::stod(line.substr(0, comma), &used);
      const double v = std::stod(line.substr(comma + 1), &used);
      t.grid.push_back(x);
      t.values.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, path + ":" + std::to_string(row) + ": bad number");
    }
  }
  validate_table(t);
  return t;
}

void store_tabulated_csv(const Tabulated& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  }
  out << "x,value\n";
  char buf[64];
  for (std::size_t i = 0; i < table.grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", table.grid[i]);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", table.values[i]);
    out << buf << '\n';
  }
}

Tabulated tabulate(const UnitIntervalFunction& f, double lo, double hi, int n) {
  if (!(lo > 0.0 && hi < 1.0 && lo < hi) || n < 2) {
    throw Error(ErrorKind::InvalidArgument, "tabulate needs 0 < lo < hi < 1 and n >= 2");
  }
  Tabulated t;
  t.grid.reserve(static_cast<std::size_t>(n));
  t.values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    t.grid.push_back(x);
    t.values.push_back(f.eval(x));
  }
  return t;
}

}  // namespace infostab
