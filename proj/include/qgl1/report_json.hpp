#pragma once

#include "qgl1/certify.hpp"
#include "qgl1/direct_sum.hpp"
#include "qgl1/dual_bounds.hpp"
#include "qgl1/greedy.hpp"
#include "qgl1/reporting.hpp"
#include "qgl1/serialize.hpp"

namespace qgl1 {

/// JSON shapes for every report the tools emit. All rationals appear as
/// exact "p/q" strings; approximate decimals exist only in the CSV columns
/// whose names carry the _approx suffix.

Json ds_vec_to_json(const DSVec& y);
DSVec ds_vec_from_json(const Json& object);

Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& object);

/// Full certificate: instance, partition, per-stage sets with both sides of
/// the stage inequality, and the final chain of checks.
Json trace_report_to_json(const TraceReport& report);

Json qg_report_to_json(const QGReport& report);
Json ucc_report_to_json(const UccReport& report);
Json conditionality_to_json(const ConditionalityWitness& witness);
Json growth_row_to_json(const GrowthRow& row);
Json summary_to_json(const Summary& summary);

/// CSV with a header row; exact columns first, then the decimal companions.
std::string growth_csv(std::span<const GrowthRow> rows);

}  // namespace qgl1
