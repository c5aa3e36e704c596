#include "infostab/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace infostab::harness {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "config key '" + key + "': bad number '" + value + "'");
  }
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "config key '" + key + "': bad integer '" + value + "'");
  }
}

long to_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "config key '" + key + "': bad integer '" + value + "'");
  }
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (family != "power" && family != "log") {
    throw Error(ErrorKind::InvalidArgument, "config 'family' must be power|log, got '" + family + "'");
  }
  if (family == "log" && alpha != 0.0) {
    throw Error(ErrorKind::InvalidArgument, "config 'family' = log requires alpha = 0");
  }
  if (family == "power" && alpha == 0.0) {
    throw Error(ErrorKind::InvalidArgument, "config 'family' = power requires alpha != 0");
  }
  if (!(eps >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "config 'eps' must be nonnegative");
  }
  if (domain != "open" && domain != "closed") {
    throw Error(ErrorKind::InvalidArgument, "config 'domain' must be open|closed, got '" + domain + "'");
  }
  parse_noise_kind(noise_kind);
  parse_sample_scheme(scheme);
  make_alpha();
  sampler();
  if (deviation_points < 2) {
    throw Error(ErrorKind::InvalidArgument, "config 'deviation_points' must be at least 2");
  }
  if (dump_points < 2) {
    throw Error(ErrorKind::InvalidArgument, "config 'dump_points' must be at least 2");
  }
}

Alpha ExperimentConfig::make_alpha() const { return Alpha(alpha); }

UnitIntervalFunction ExperimentConfig::exact_solution() const {
  if (family == "log") return UnitIntervalFunction::log(lambda, c);
  return UnitIntervalFunction::power(a, b, make_alpha());
}

UnitIntervalFunction ExperimentConfig::instance() const {
  UnitIntervalFunction f = exact_solution();
  if (eps > 0.0) {
    f = UnitIntervalFunction::perturbed(f, PerturbationSpec(eps, parse_noise_kind(noise_kind), noise_seed));
  }
  return f;
}

ClosedFunction ExperimentConfig::closed_instance() const {
  double v0, v1;
  if (family == "log") {
    v0 = f0.value_or(c);
    v1 = f1.value_or(c);
  } else {
    v0 = f0.value_or(0.0);
    v1 = f1.value_or(a - b);
  }
  return ClosedFunction{instance(), v0, v1};
}

OpenTriangleSampler ExperimentConfig::sampler() const {
  return OpenTriangleSampler(samples, margin, seed, parse_sample_scheme(scheme));
}

stability::CertifyOptions ExperimentConfig::certify_options() const {
  stability::CertifyOptions opts;
  opts.deviation_points = deviation_points;
  opts.deviation_margin = deviation_margin;
  return opts;
}

std::string ExperimentConfig::to_kv_text() const {
  std::map<std::string, std::string> kv;
  kv["alpha"] = fmt(alpha);
  kv["family"] = family;
  if (family == "power") {
    kv["a"] = fmt(a);
    kv["b"] = fmt(b);
  } else {
    kv["lambda"] = fmt(lambda);
    kv["c"] = fmt(c);
  }
  kv["eps"] = fmt(eps);
  kv["noise_kind"] = noise_kind;
  kv["noise_seed"] = std::to_string(noise_seed);
  kv["samples"] = std::to_string(samples);
  kv["margin"] = fmt(margin);
  kv["seed"] = std::to_string(seed);
  kv["scheme"] = scheme;
  kv["deviation_points"] = std::to_string(deviation_points);
  if (deviation_margin) kv["deviation_margin"] = fmt(*deviation_margin);
  kv["domain"] = domain;
  if (f0) kv["f0"] = fmt(*f0);
  if (f1) kv["f1"] = fmt(*f1);
  if (!out.empty()) kv["out"] = out;
  if (!dump.empty()) {
    kv["dump"] = dump;
    kv["dump_points"] = std::to_string(dump_points);
  }
  std::ostringstream text;
  for (const auto& [key, value] : kv) text << key << " = " << value << '\n';
  return text.str();
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
  ExperimentConfig config;
  std::istringstream in(text);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::ParseError,
                  origin + ":" + std::to_string(row) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "alpha") config.alpha = to_double(key, value);
    else if (key == "family") config.family = value;
    else if (key == "a") config.a = to_double(key, value);
    else if (key == "b") config.b = to_double(key, value);
    else if (key == "lambda") config.lambda = to_double(key, value);
    else if (key == "c") config.c = to_double(key, value);
    else if (key == "eps") config.eps = to_double(key, value);
    else if (key == "noise_kind") config.noise_kind = value;
    else if (key == "noise_seed") config.noise_seed = to_u64(key, value);
    else if (key == "samples") config.samples = to_long(key, value);
    else if (key == "margin") config.margin = to_double(key, value);
    else if (key == "seed") config.seed = to_u64(key, value);
    else if (key == "scheme") config.scheme = value;
    else if (key == "deviation_points") config.deviation_points = static_cast<int>(to_long(key, value));
    else if (key == "deviation_margin") config.deviation_margin = to_double(key, value);
    else if (key == "domain") config.domain = value;
    else if (key == "f0") config.f0 = to_double(key, value);
    else if (key == "f1") config.f1 = to_double(key, value);
    else if (key == "out") config.out = value;
    else if (key == "dump") config.dump = value;
    else if (key == "dump_points") config.dump_points = static_cast<int>(to_long(key, value));
    else {
      throw Error(ErrorKind::ParseError,
                  origin + ":" + std::to_string(row) + ": unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open config '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str(), path);
}

UnitIntervalFunction parse_input_spec(const std::string& spec, const Alpha& alpha) {
  const auto colon = spec.find(':');
  const std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  const auto two_numbers = [&](const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::ParseError, "input spec '" + spec + "' needs two comma-separated numbers");
    }
    return std::pair<double, double>(to_double("input", s.substr(0, comma)),
                                     to_double("input", s.substr(comma + 1)));
  };

  if (head == "power") {
    const auto [pa, pb] = two_numbers(rest);
    return UnitIntervalFunction::power(pa, pb, alpha);
  }
  if (head == "log") {
    const auto [pl, pc] = two_numbers(rest);
    return UnitIntervalFunction::log(pl, pc);
  }
  if (head == "tab") {
    return UnitIntervalFunction(load_tabulated_csv(rest));
  }
  if (spec.size() > 4 && spec.substr(spec.size() - 4) == ".csv") {
    return UnitIntervalFunction(load_tabulated_csv(spec));
  }
  throw Error(ErrorKind::ParseError,
              "input spec '" + spec + "' not understood (power:a,b | log:lambda,c | tab:file.csv)");
}

}  // namespace infostab::harness
