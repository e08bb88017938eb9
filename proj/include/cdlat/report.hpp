#pragma once

#include <string>
#include <vector>

#include "cdlat/chermak_delgado.hpp"
#include "cdlat/records.hpp"
#include "cdlat/verifier.hpp"

namespace cdlat {

// Human-readable analysis of one group: order, |L(G)|, m*(G), the CD member
// list with sizes and measures, deficiency, measure image, Sylow center
// profile and the Theorem B margin. Byte-stable for identical inputs.
std::string render_analysis(const std::string& source, const CDReport& report,
                            const SylowCenterProfile& profile);

// Line-oriented verification summary (one record per line) with the k-set
// listing and a trailing result line.
std::string render_verify_summary(const VerifySummary& summary);

nlohmann::ordered_json verify_summary_to_json(const VerifySummary& summary);

std::string render_catalog_listing(const Catalog& cat);

}  // namespace cdlat
