#include "infostab/report.hpp"

#include <fstream>

namespace infostab {

using nlohmann::json;

json to_json(const CanonicalSolution& candidate) {
  if (candidate.is_power()) {
    return json{{"kind", "power"}, {"a", candidate.power().a}, {"b", candidate.power().b}};
  }
  return json{{"kind", "log_plus_const"},
              {"lambda", candidate.log_plus_const().lambda},
              {"c", candidate.log_plus_const().c}};
}

json to_json(const stability::StabilityCertificate& cert) {
  return json{{"alpha", cert.alpha},
              {"eps_hat", cert.eps_hat},
              {"k_alpha", cert.k_alpha},
              {"candidate", to_json(cert.candidate)},
              {"sup_deviation", cert.sup_deviation},
              {"bound", cert.bound},
              {"pass", cert.pass},
              {"samples", cert.samples},
              {"margin", cert.margin},
              {"seed", cert.seed},
              {"domain", stability::domain_name(cert.domain)}};
}

json to_json(const equation::ResidualReport& report) {
  return json{{"eps_hat", report.eps_hat},
              {"argmax", json{{"x", report.argmax_x}, {"y", report.argmax_y}}},
              {"p99", report.p99},
              {"samples", report.samples}};
}

json to_json(const entropy::SystemReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back(json{{"n", row.n},
                        {"deviation", row.max_deviation},
                        {"bound", row.bound_at_max},
                        {"utilization", row.max_utilization},
                        {"pass", row.pass},
                        {"samples", row.samples}});
  }
  return json{{"alpha", report.alpha},
              {"eps_combined", report.eps_combined},
              {"slack", report.slack},
              {"rows", rows},
              {"pass", report.pass},
              {"candidate_form", report.candidate_form}};
}

json to_json(const oracle::FitResult& fit) {
  return json{{"a", fit.a}, {"b", fit.b}, {"dev", fit.dev}};
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  }
  out << j.dump(2) << '\n';
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open '" + path + "' for reading");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "bad JSON in '" + path + "': " + e.what());
  }
}

}  // namespace infostab
