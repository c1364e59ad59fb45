#include "gfix/serialize.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace gfix {

namespace {

using nlohmann::json;

json points_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const Point& p : pts) {
    if (p.kind() == Point::Kind::Element) arr.push_back(p.index());
    else if (p.kind() == Point::Kind::Scalar) arr.push_back(p.value());
    else arr.push_back(p.coords());
  }
  return arr;
}

json axiom_status_json(const AxiomStatus& st) {
  json w = json::array();
  for (const AxiomWitness& x : st.witnesses)
    w.push_back({{"points", points_json(x.points)}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  return {{"status", st.pass ? "pass" : "fail"}, {"witnesses", w}};
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const AxiomReport& rep) {
  json j{{"G1", axiom_status_json(rep.g1)},
         {"G2", axiom_status_json(rep.g2)},
         {"G3", axiom_status_json(rep.g3)},
         {"G4", axiom_status_json(rep.g4)},
         {"G5", axiom_status_json(rep.g5)},
         {"sample_count", rep.sample_count},
         {"tol", rep.tol},
         {"all_pass", rep.all_pass()}};
  return j.dump(2);
}

std::string to_json(const OrderReport& rep) {
  auto witnesses = [](const std::vector<OrderWitness>& ws) {
    json arr = json::array();
    for (const OrderWitness& w : ws)
      arr.push_back({{"points", points_json(w.points)}, {"lhs", w.lhs}, {"rhs", w.rhs}});
    return arr;
  };
  json j{{"reflexive", rep.reflexive},
         {"transitive", rep.transitive},
         {"reflexivity_witnesses", witnesses(rep.reflexivity_witnesses)},
         {"transitivity_witnesses", witnesses(rep.transitivity_witnesses)},
         {"sample_count", rep.sample_count},
         {"pass", rep.pass()}};
  return j.dump(2);
}

std::string to_json(const RelationReport& rep) {
  json ws = json::array();
  for (const RelationWitness& w : rep.witnesses)
    ws.push_back({{"input", points_json(w.input)},
                  {"rotation", w.rotation},
                  {"pair_index", w.pair_index},
                  {"lhs", w.lhs.value()},
                  {"rhs", w.rhs.value()},
                  {"g_value", w.g_value},
                  {"phi_gap", w.phi_gap}});
  json j{{"condition", rep.condition},
         {"pass", rep.pass},
         {"witnesses", ws},
         {"samples_checked", rep.samples_checked}};
  return j.dump(2);
}

std::string to_json(const FixpointReport& rep) {
  json monitors{{"preorder_chain", rep.monitors.preorder_chain},
                {"phi_monotone", rep.monitors.phi_monotone},
                {"phi_bounded", rep.monitors.phi_bounded}};
  if (rep.monitors.seed_condition) monitors["seed_condition"] = *rep.monitors.seed_condition;
  if (rep.monitors.preorder_chain_first_violation)
    monitors["preorder_chain_first_violation"] = *rep.monitors.preorder_chain_first_violation;
  json j{{"status", to_string(rep.status)},
         {"candidate", points_json(rep.candidate)},
         {"fixed_point_residual", rep.fixed_point_residual},
         {"cauchy_residual", rep.cauchy},
         {"iterations", rep.iterations},
         {"monitors", monitors}};
  return j.dump(2);
}

void write_trace_csv(std::ostream& out, const OrbitTrace& trace) {
  out << "l,i,x,phi,producing_map,cauchy_residual\n";
  for (const OrbitStep& step : trace.steps) {
    for (std::size_t i = 0; i < step.x.size(); ++i) {
      out << step.l << ',' << (i + 1) << ',' << format_number(step.x[i].value()) << ','
          << format_number(step.phi[i]) << ',' << step.producing_map << ','
          << format_number(step.cauchy[i]) << '\n';
    }
  }
}

}  // namespace gfix
