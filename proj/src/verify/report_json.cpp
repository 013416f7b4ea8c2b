#include "opdet/report_json.hpp"

#include <sstream>

namespace opdet {

namespace {

using nlohmann::ordered_json;

ordered_json rationals(const std::vector<Rational>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

ordered_json plan_json(const SamplePlan& plan) {
  ordered_json out;
  out["seed"] = plan.seed;
  out["node_pool"] = rationals(plan.node_pool);
  out["ranges"] = {{"n_max", plan.n_max},
                   {"m_max", plan.m_max},
                   {"r_max", plan.r_max},
                   {"mult_sum_max", plan.mult_sum_max},
                   {"max_matrix_order", plan.max_matrix_order},
                   {"tuples_per_shape", plan.tuples_per_shape}};
  return out;
}

}  // namespace

ordered_json report_json(const VerifyReport& report) {
  ordered_json out;
  out["identity"] = report.identity;
  out["spec"] = report.spec;
  out["plan"] = plan_json(report.plan);
  out["cases_run"] = report.cases_run;
  out["cases_skipped"] = report.cases_skipped;
  out["conjecture"] = report.conjecture;
  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : f.params) params[k] = v;
    failures.push_back({{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  out["failures"] = failures;
  out["status"] = report.passed() ? "pass" : "fail";
  return out;
}

ordered_json suite_json(const std::vector<VerifyReport>& reports) {
  ordered_json out;
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) list.push_back(report_json(r));
  out["reports"] = list;
  out["status"] = suite_passed(reports) ? "pass" : "fail";
  return out;
}

ordered_json table_json(const JensenTable& table) {
  ordered_json out;
  out["spec"] = table.spec;
  out["x"] = table.x.to_string();
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["m"] = row.m;
    r["value"] = row.value.to_string();
    r["value_decimal"] = decimal(row.value.to_double());
    r["target"] = row.target ? ordered_json(decimal(*row.target)) : ordered_json(nullptr);
    r["error"] = row.error ? ordered_json(decimal(*row.error)) : ordered_json(nullptr);
    r["wronskian_form"] = row.wronskian_form ? ordered_json(row.wronskian_form->to_string()) : ordered_json(nullptr);
    r["laplace_dets"] = rationals(row.laplace_dets);
    rows.push_back(r);
  }
  out["rows"] = rows;
  return out;
}

std::string table_csv(const JensenTable& table) {
  std::ostringstream os;
  os << "m,value,value_decimal,target,error,wronskian_form,laplace_det_1,laplace_det_2,laplace_det_3\n";
  for (const auto& row : table.rows) {
    os << row.m << ',' << row.value.to_string() << ',' << decimal(row.value.to_double()) << ',';
    if (row.target) os << decimal(*row.target);
    os << ',';
    if (row.error) os << decimal(*row.error);
    os << ',';
    if (row.wronskian_form) os << row.wronskian_form->to_string();
    for (std::size_t n = 0; n < 3; ++n) {
      os << ',';
      if (n < row.laplace_dets.size()) os << row.laplace_dets[n].to_string();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace opdet
