#include "totind/report.hpp"

#include <iomanip>
#include <sstream>

namespace totind {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::string optional_cell(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string{};
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

}  // namespace

json to_json(const InvariantSet& inv) {
  return json{
      {"n", inv.n},
      {"m", inv.m},
      {"alpha", inv.alpha},
      {"alpha_prime", inv.alpha_prime},
      {"alpha_double_prime", inv.alpha_double_prime},
      {"gamma_prime", optional_json(inv.gamma_prime)},
      {"beta", inv.beta},
      {"beta_prime", optional_json(inv.beta_prime)},
      {"witness",
       {
           {"independent_set", inv.independent_set},
           {"matching", inv.matching},
           {"total_independent_set",
            {{"vertices", inv.total_independent_set.vertices}, {"edges", inv.total_independent_set.edges}}},
           {"edge_dominating_set", inv.edge_dominating_set},
           {"acyclic_partition", inv.acyclic_partition},
       }},
  };
}

json to_json(const CheckResult& c) {
  return json{
      {"id", c.id},
      {"applicable", c.applicable},
      {"lhs", c.lhs},
      {"rhs", c.rhs},
      {"lower", optional_json(c.lower)},
      {"holds", c.holds},
      {"slack", c.slack},
  };
}

json to_json(const BoundReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{
      {"graph", r.graph_id},
      {"invariants", to_json(r.invariants)},
      {"m_prime", r.m_prime},
      {"hamiltonian", r.hamiltonian},
      {"improvement_class", std::string(to_string(r.improvement))},
      {"checks", checks},
      {"all_hold", r.all_hold()},
  };
}

json to_json(const SweepReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"graph", v.graph}, {"check_id", v.check_id}});
  json gaps = json::object();
  for (const auto& [slack, count] : r.gap_histogram) gaps[std::to_string(slack)] = count;
  json improvements = json::object();
  for (const auto& [name, count] : r.improvement_histogram) improvements[name] = count;
  return json{
      {"n", r.n},
      {"class_count", r.class_count},
      {"sharp_count", r.sharp_count},
      {"violations", violations},
      {"gap_histogram", gaps},
      {"improvement_histogram", improvements},
  };
}

json to_json(const std::vector<SweepReport>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

std::string invariants_csv(const std::vector<std::pair<std::string, InvariantSet>>& rows) {
  std::ostringstream out;
  out << "graph,n,m,alpha,alpha_prime,alpha_double_prime,gamma_prime,beta,beta_prime\n";
  for (const auto& [graph, inv] : rows) {
    out << graph << ',' << inv.n << ',' << inv.m << ',' << inv.alpha << ',' << inv.alpha_prime << ','
        << inv.alpha_double_prime << ',' << optional_cell(inv.gamma_prime) << ',' << inv.beta << ','
        << optional_cell(inv.beta_prime) << '\n';
  }
  return out.str();
}

std::string checks_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << "graph,check_id,applicable,lhs,rhs,lower,holds,slack\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out << r.graph_id << ',' << c.id << ',' << (c.applicable ? "true" : "false") << ',' << c.lhs << ',' << c.rhs
          << ',' << optional_cell(c.lower) << ',' << (c.holds ? "true" : "false") << ',' << c.slack << '\n';
    }
  }
  return out.str();
}

std::string sweep_csv(const std::vector<SweepReport>& reports) {
  std::ostringstream out;
  out << "n,field,key,value\n";
  for (const auto& r : reports) {
    out << r.n << ",class_count,," << r.class_count << '\n';
    out << r.n << ",sharp_count,," << r.sharp_count << '\n';
    for (const auto& [slack, count] : r.gap_histogram) out << r.n << ",gap," << slack << ',' << count << '\n';
    for (const auto& [name, count] : r.improvement_histogram) out << r.n << ",improvement," << name << ',' << count << '\n';
    for (const auto& v : r.violations) out << r.n << ",violation," << v.graph << ',' << v.check_id << '\n';
  }
  return out.str();
}

std::string invariants_table(const std::string& graph, const InvariantSet& inv) {
  std::ostringstream out;
  auto row = [&](const char* name, const std::string& value) { out << "  " << std::left << std::setw(20) << name << value << '\n'; };
  out << "graph " << graph << '\n';
  row("n", std::to_string(inv.n));
  row("m", std::to_string(inv.m));
  row("alpha", std::to_string(inv.alpha) + "  {" + join(inv.independent_set) + "}");
  row("alpha'", std::to_string(inv.alpha_prime) + "  edges {" + join(inv.matching) + "}");
  row("alpha''", std::to_string(inv.alpha_double_prime) + "  vertices {" + join(inv.total_independent_set.vertices) +
                     "} edges {" + join(inv.total_independent_set.edges) + "}");
  row("gamma'", inv.gamma_prime ? std::to_string(*inv.gamma_prime) + "  edges {" + join(inv.edge_dominating_set) + "}"
                                : std::string("-"));
  row("beta", std::to_string(inv.beta) + "  parts [" + join(inv.acyclic_partition) + "]");
  row("beta'", inv.beta_prime ? std::to_string(*inv.beta_prime) : std::string("-"));
  return out.str();
}

std::string checks_table(const BoundReport& r) {
  std::ostringstream out;
  out << "graph " << r.graph_id << "  m'=" << r.m_prime << "  hamiltonian=" << (r.hamiltonian ? "yes" : "no")
      << "  improvement_class=" << to_string(r.improvement) << '\n';
  for (const auto& c : r.checks) {
    out << "  " << std::left << std::setw(32) << c.id;
    if (!c.applicable) {
      out << "n/a\n";
      continue;
    }
    out << (c.holds ? "ok    " : "FAIL  ") << "lhs=" << c.lhs << " rhs=" << c.rhs;
    if (c.lower) out << " lower=" << *c.lower;
    out << " slack=" << c.slack << '\n';
  }
  return out.str();
}

std::string sweep_table(const std::vector<SweepReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "n" << std::setw(10) << "classes" << std::setw(8) << "sharp" << std::setw(12)
      << "violations" << "theorem slack histogram\n";
  for (const auto& r : reports) {
    std::ostringstream gaps;
    for (const auto& [slack, count] : r.gap_histogram) gaps << slack << ":" << count << " ";
    out << std::left << std::setw(4) << r.n << std::setw(10) << r.class_count << std::setw(8) << r.sharp_count
        << std::setw(12) << r.violations.size() << gaps.str() << '\n';
  }
  for (const auto& r : reports) {
    for (const auto& v : r.violations) out << "violation n=" << r.n << " " << v.graph << " " << v.check_id << '\n';
  }
  return out.str();
}

}  // namespace totind
