#pragma once

#include <iosfwd>
#include <string>

#include "gfix/checkers.hpp"
#include "gfix/fixpoint.hpp"
#include "gfix/gmetric.hpp"
#include "gfix/order.hpp"

namespace gfix {

// Machine-readable records (JSON text, stable field names and formatting).
std::string to_json(const AxiomReport& rep);
std::string to_json(const OrderReport& rep);
std::string to_json(const RelationReport& rep);
std::string to_json(const FixpointReport& rep);

/// One row per (l, i): l,i,x,phi,producing_map,cauchy_residual. The number
/// formatting is fixed so identical runs serialize byte-identically.
void write_trace_csv(std::ostream& out, const OrbitTrace& trace);

std::string format_number(double v);

}  // namespace gfix
