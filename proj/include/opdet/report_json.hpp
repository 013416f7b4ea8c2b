#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "opdet/verify.hpp"

namespace opdet {

/// { identity, spec, plan: {seed, node_pool, ranges}, cases_run, cases_skipped,
///   conjecture, failures: [{params, lhs, rhs}], status }
nlohmann::ordered_json report_json(const VerifyReport& report);
/// { reports: [...], status }
nlohmann::ordered_json suite_json(const std::vector<VerifyReport>& reports);

nlohmann::ordered_json table_json(const JensenTable& table);
/// m,value,value_decimal,target,error,wronskian_form,laplace_det_1..3
std::string table_csv(const JensenTable& table);

}  // namespace opdet
