#ifndef NSRING_REPORT_JSON_HPP_
#define NSRING_REPORT_JSON_HPP_

#include <json.hpp>

#include "nsring/chains.hpp"
#include "nsring/classification.hpp"
#include "nsring/theorem_oracle.hpp"
#include "nsring/ulrich.hpp"

namespace nsring {

// Canonical JSON renderings: fixed key order, integer-only numerics, so a
// parse/re-dump round trip is byte-identical.

json to_json(const RelativeIdeal& I);
json to_json(const NumericalSemigroup& H);
json to_json(const ClassificationReport& rep);
json to_json(const LipmanChain& chain);
json to_json(const UlrichEvidence& ev);
json to_json(const Certificate& cert);

/// Full analyze payload: invariants + classification + sector enumeration
/// (the latter skipped above the genus guard).
json analyze_json(const NumericalSemigroup& H);

const char* verdict_name(UlrichVerdict v);

}  // namespace nsring

#endif  // NSRING_REPORT_JSON_HPP_
