#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "totind/bounds.hpp"
#include "totind/enumeration.hpp"
#include "totind/solvers.hpp"

namespace totind {

enum class OutputFormat { table, json, csv };

nlohmann::json to_json(const InvariantSet& inv);
nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const std::vector<SweepReport>& rs);

// CSV layouts:
//   invariants: graph,n,m,alpha,alpha_prime,alpha_double_prime,gamma_prime,beta,beta_prime
//   checks:     graph,check_id,applicable,lhs,rhs,lower,holds,slack
//   sweep:      n,field,key,value   (tidy rows; field in class_count,
//               sharp_count, gap, improvement, violation)
// Absent optional values are empty cells.
std::string invariants_csv(const std::vector<std::pair<std::string, InvariantSet>>& rows);
std::string checks_csv(const std::vector<BoundReport>& reports);
std::string sweep_csv(const std::vector<SweepReport>& reports);

std::string invariants_table(const std::string& graph, const InvariantSet& inv);
std::string checks_table(const BoundReport& r);
std::string sweep_table(const std::vector<SweepReport>& reports);

}  // namespace totind
