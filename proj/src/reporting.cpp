#include "qgl1/reporting.hpp"

#include <span>

namespace qgl1 {

Summary summarize(std::span<const TrialRecord> records) {
  Summary summary;
  summary.max_ratio = Rational(0);
  for (const TrialRecord& record : records) {
    ++summary.count;
    if (!record.ok) {
      ++summary.failures;
      if (summary.first_failure.empty()) summary.first_failure = record.witness;
    }
    if (record.ratio > summary.max_ratio) {
      summary.max_ratio = record.ratio;
      summary.max_ratio_trial = record.trial;
    }
    summary.max_stages = std::max(summary.max_stages, record.stages);
  }
  return summary;
}

}  // namespace qgl1
