#pragma once

#include <string>

#include "shellfill/shell.hpp"

namespace shellfill {

/// Simplex as {"support":[...], "levels":{"0,1":["p/q","p/q"], ...}} with
/// subset keys as comma-joined sorted vertex lists.
std::string simplex_to_json(const FunctorSimplex& f);
FunctorSimplex simplex_from_json(const std::string& text, const ModelParams& params);

/// Chain as {"terms":[{"coeff":int,"simplex":{...}}]}; terms follow the
/// canonical simplex order so files are byte-stable.
std::string chain_to_json(const FChain& c);
FChain chain_from_json(const std::string& text, const ModelParams& params);

/// Fill report with its chain, length, method name and verification flag.
std::string fill_report_to_json(const FillReport& report, int n);

/// Walk sequence as a JSON integer array.
std::string walk_sequence_to_json(const ChainWalk& walk);

std::string trace_entry_to_json(const TraceEntry& entry);

} // namespace shellfill
