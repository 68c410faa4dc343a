#pragma once

#include "akg/fusion.hpp"
#include "akg/module_cat.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace akg::payload {

using nlohmann::json;

/// All numeric values are serialized as decimal strings at the requested
/// precision so that round-trips do not lose digits.

json envelope(const lie::LieType& group, long level);

json weights_payload(const fusion::LevelKCategory& cat);
json smatrix_payload(const fusion::LevelKCategory& cat, const fusion::ModularData& md);
json tmatrix_payload(const fusion::LevelKCategory& cat, const fusion::ModularData& md);
json fusion_payload(const fusion::LevelKCategory& cat, const fusion::ModularData& md, long m);
json globaldim_payload(const lie::LieData& d, long k, bool with_sum);
json superfactorial_payload(const lie::LieData& d, long k);
json ribbon_payload(const lie::LieData& d, const lie::Weight& w);
json cs3_payload(const lie::LieData& d, long k);
json levelrank_payload(long g, long k);
json subgroup_payload(const modcat::EmbeddingRecord& rec);
json catalog_payload(const std::vector<modcat::EmbeddingRecord>& recs);

/// Parse an S matrix payload back into complex entries (round-trip checks).
Matrix<Complex> parse_smatrix(const json& j);

lie::Weight parse_weight_arg(const std::string& s, int rank);

}  // namespace akg::payload
