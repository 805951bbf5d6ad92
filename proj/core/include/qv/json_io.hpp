// JSON interchange, schema "qudit-verify/1": state and graph specs,
// test partitions, and the verification / protocol reports. Rationals are
// serialized as "p/q" strings, complex amplitudes as [re, im] pairs.

#pragma once

#include "qv/simulate.hpp"

namespace qv {

inline constexpr const char* kSchema = "qudit-verify/1";

StateSpec state_spec_from_json(const std::string& text);
std::string state_spec_to_json(const StateSpec& spec);

TestPartition partition_from_json(const std::string& text);
std::string partition_to_json(const TestPartition& p);

// cmd_state metadata: dims, family, norm.
std::string state_metadata_json(const StateSpec& spec, const BuiltState& state);

// cmd_verify payload: partition summary, optimal weights, beta/nu, sample
// counts, and the head of the Omega spectrum.
std::string verification_report_json(const StateSpec& spec, const TestPartition& p,
                                     const WeightOptimum& opt, const VerificationOperator& v,
                                     double epsilon, double delta);

std::string protocol_report_json(const ProtocolReport& report, const std::string& source_kind);

}  // namespace qv
