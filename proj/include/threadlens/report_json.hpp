#pragma once

#include <vector>

#include "threadlens/codec.hpp"
#include "threadlens/dedup.hpp"
#include "threadlens/metrics.hpp"
#include "threadlens/restructure.hpp"
#include "threadlens/topics.hpp"

namespace threadlens {

// Encoders emit keys in a fixed order and full double precision, so equal
// values always serialize to identical bytes. Decoders throw ParseError.

Json report_to_json(const MetricsReport& report);

Json flags_to_json(const DuplicateFlags& flags);
DuplicateFlags flags_from_json(const Json& doc);

Json assignment_to_json(const TopicAssignment& assignment);
TopicAssignment assignment_from_json(const Json& doc);

Json plan_to_json(const RestructurePlan& plan);

/// `{"thread": ..., "plan": ..., "before": ..., "after": ...}`
Json result_to_json(const RestructureResult& result);

/// A JSON array of post ids, or an object with an "order" array.
std::vector<PostId> ideal_order_from_json(const Json& doc);

}  // namespace threadlens
