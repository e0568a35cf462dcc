#pragma once

// JSON views of the library reports. Field elements are nested arrays: one
// array of F_p digits per F_q coordinate, constant term first at both levels.

#include <vector>

#include <json.hpp>

#include "moore/bigint.hpp"
#include "moore/bounds.hpp"
#include "moore/exponent_set.hpp"
#include "moore/gf_tower.hpp"
#include "moore/linpoly.hpp"
#include "moore/moore_core.hpp"
#include "moore/rank_metric.hpp"
#include "moore/variety_count.hpp"

namespace moore::report {

using nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

ordered_json elem(const FieldCtx& ctx, FFElem x);
ordered_json elems(const FieldCtx& ctx, const std::vector<FFElem>& xs);
ordered_json big(const BigInt& v);
/// {"exact": "a/b", "approx": double}
ordered_json rational(const BigRational& v);
ordered_json exponents(const ExponentSet& I);

ordered_json field(const FieldCtx& ctx);
ordered_json engine_run(const FieldCtx& ctx, const EngineRun& run);
ordered_json verdict(const FieldCtx& ctx, const MooreVerdict& v);
ordered_json search(const FieldCtx& ctx, const SearchReport& s);
ordered_json distance(const FieldCtx& ctx, const DistanceReport& d);
ordered_json idealisers(const IdealiserDims& d);
ordered_json point_count(const PointCountReport& r);
ordered_json hw_bound(const HwBound& b);
ordered_json borges(const BorgesReport& r);
ordered_json ap_info(const ApInfo& a);
ordered_json bezout(const BezoutGap& g);
ordered_json zahid(const ZahidThresholds& z);
ordered_json bounds(const BoundsReport& b);
ordered_json theorem(const TheoremHit& t);
ordered_json final_report(const FieldCtx& ctx, const FinalReport& r);
ordered_json z_certificate(const FieldCtx& ctx, const ZCertificate& c);

}  // namespace moore::report
