#ifndef CDLAT_REPORT_IO_HPP
#define CDLAT_REPORT_IO_HPP

#include <string>
#include <vector>

#include "cdlat/cd_engine.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

struct ReportRenderOptions {
    // full element lists are emitted only for members at or below this order
    std::size_t elements_bound = 512;
    // wall-clock fields are suppressed (emitted as 0) unless requested, so
    // that equal inputs give byte-identical output
    bool timings = false;
    int indent = 2; // <0 = compact
};

/// Canonical deterministic generating ids for serialization.
std::vector<int> member_generators(const Group& g, const Bitset& h);

/// CDReport as JSON: {order, max_measure, members:[{order, generators,
/// elements?}], cd_subgroup, is_chain, chain_length?, property_checks,
/// method, runtime_ms}.
std::string cd_report_to_json(const Group& g, const CDReport& report,
                              const ReportRenderOptions& opts = {});

/// Hasse diagram of the members under inclusion (edges are covering
/// relations, oriented subgroup -> supergroup), in DOT.
std::string cd_report_to_dot(const Group& g, const CDReport& report);

std::string cd_report_to_text(const Group& g, const CDReport& report);

/// Group summary for the construct command: order, center order, abelian
/// flag, and the label table below the bound.
std::string group_summary_json(const Group& g, const ReportRenderOptions& opts = {});
std::string group_summary_text(const Group& g);

} // namespace cdlat

#endif
