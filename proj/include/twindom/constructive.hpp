#pragma once

#include "twindom/domination.hpp"
#include "twindom/tournament.hpp"

namespace twindom {

// Case constructions for tournaments of order 8. Each returns a verified
// twin dominating set of size at most 4. Degree conditions on the od side
// are handled by running the id-side analysis on the reversed tournament;
// the twin domination property is self-dual under arc reversal, so the
// same vertex set is returned.

// Requires order 8 and id(v) == 2 or od(v) == 2.
TdsCertificate tds_degree2_case(const Tournament& t, int v);

// Requires order 8 and id(v) == 1 or od(v) == 1.
TdsCertificate tds_degree1_case(const Tournament& t, int v);

// Any tournament of order 8. Dispatches on the extremal degrees: a source
// or sink, then a degree-1 vertex, then a degree-2 vertex, and otherwise
// the near-regular analysis (all indegrees 3 or 4).
TdsCertificate tds_order8(const Tournament& t);

// Even order n >= 8: a verified twin dominating set of size at most n/2,
// built by stripping one arc's endpoints, recursing, and patching the
// recursive set back up. All arbitrary picks resolve to the smallest
// index so runs replay exactly.
TdsCertificate half_witness(const Tournament& t);

}  // namespace twindom
