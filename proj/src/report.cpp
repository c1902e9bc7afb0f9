#include <gaugeint/report.hpp>

#include <json.hpp>

#include <cstdio>

namespace gaugeint {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string convergence_csv(const IntegralResult& result) {
  std::string out = "iter,gauge,n_intervals,succ_diff,err_bound\n";
  int k = 1;
  for (const auto& it : result.iterations) {
    out += std::to_string(k++);
    out += ',';
    out += it.gauge;
    out += ',';
    out += std::to_string(it.n_intervals);
    out += ',';
    out += fmt17(it.succ_diff);
    out += ',';
    out += fmt17(it.err_bound);
    out += '\n';
  }
  return out;
}

std::string result_json(const IntegralResult& result) {
  nlohmann::json j;
  j["kind"] = to_string(result.kind);
  j["mode"] = result.mode == IntegralResult::Mode::Vector ? "vector" : "set";
  j["converged"] = result.converged;
  j["error_estimate"] = result.error_estimate;
  if (result.mode == IntegralResult::Mode::Vector) {
    j["value"] = std::vector<double>(result.value.begin(), result.value.end());
  } else if (result.support) {
    nlohmann::json s;
    s["directions"] = result.support->grid->size();
    s["angular_gap"] = result.support->grid->angular_gap;
    s["radius_bound"] = result.support->radius_bound;
    s["values"] = std::vector<double>(result.support->values.begin(),
                                      result.support->values.end());
    j["support"] = std::move(s);
    if (result.zonotope)
      j["zonotope_generators"] = result.zonotope->generators.size();
  }
  nlohmann::json iters = nlohmann::json::array();
  int k = 1;
  for (const auto& it : result.iterations) {
    nlohmann::json row;
    row["iter"] = k++;
    row["gauge"] = it.gauge;
    row["n_intervals"] = it.n_intervals;
    row["succ_diff"] = it.succ_diff;
    row["err_bound"] = it.err_bound;
    iters.push_back(std::move(row));
  }
  j["iterations"] = std::move(iters);
  return j.dump(2) + "\n";
}

std::string partition_csv(const TaggedPartition& p) {
  std::string out = "a,b,tag\n";
  for (const auto& it : p.items) {
    out += fmt17(it.a);
    out += ',';
    out += fmt17(it.b);
    out += ',';
    out += fmt17(it.tag);
    out += '\n';
  }
  return out;
}

std::string demo_csv(const DemoReport& report) {
  std::string out = "demo_id,trial,observed,threshold,pass,note\n";
  for (const auto& row : report.trials) {
    out += report.demo_id;
    out += ',';
    out += std::to_string(row.trial);
    out += ',';
    out += fmt17(row.observed);
    out += ',';
    out += fmt17(report.threshold);
    out += ',';
    out += row.pass ? "1" : "0";
    out += ',';
    out += row.note;
    out += '\n';
  }
  return out;
}

std::string demo_text(const DemoReport& report) {
  std::string out;
  out += "demo: " + report.demo_id + "\n";
  out += "claim: " + report.claim + "\n";
  out += "provenance: " + report.provenance + "\n";
  for (const auto& [name, value] : report.observed)
    out += "  " + name + " = " + fmt17(value) + "\n";
  out += "threshold: " + fmt17(report.threshold) + "\n";
  if (report.inconclusive > 0)
    out += "inconclusive trials: " + std::to_string(report.inconclusive) + "\n";
  out += report.pass ? "PASS\n" : "FAIL\n";
  return out;
}

}  // namespace gaugeint
