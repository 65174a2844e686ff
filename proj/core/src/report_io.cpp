#include "cdlat/report_io.hpp"

#include <json.hpp>
#include <sstream>

#include "cdlat/subgroup_ops.hpp"

namespace cdlat {

using nlohmann::json;

std::vector<int> member_generators(const Group& g, const Bitset& h) {
    return generating_set(g, h);
}

namespace {

json member_json(const Group& g, const Bitset& h, const ReportRenderOptions& opts) {
    json m;
    m["order"] = h.count();
    m["generators"] = member_generators(g, h);
    if (h.count() <= opts.elements_bound) m["elements"] = h.elements();
    return m;
}

json checks_json(const std::map<std::string, Ternary>& checks) {
    json out = json::object();
    for (const auto& [name, value] : checks) {
        if (value == Ternary::Unknown)
            out[name] = "unknown";
        else
            out[name] = value == Ternary::True;
    }
    return out;
}

std::string dump(const json& j, int indent) {
    return indent < 0 ? j.dump() : j.dump(indent);
}

} // namespace

std::string cd_report_to_json(const Group& g, const CDReport& report,
                              const ReportRenderOptions& opts) {
    json j;
    j["order"] = report.group_order;
    j["max_measure"] = report.max_measure;
    json members = json::array();
    for (const Bitset& m : report.members) members.push_back(member_json(g, m, opts));
    j["members"] = members;
    j["cd_subgroup"] = member_json(g, report.cd_subgroup, opts);
    j["is_chain"] = report.is_chain;
    if (report.chain_length) j["chain_length"] = *report.chain_length;
    j["property_checks"] = checks_json(report.property_checks);
    j["method"] = cd_method_name(report.method);
    j["runtime_ms"] = opts.timings ? report.runtime_ms : 0;
    return dump(j, opts.indent);
}

std::string cd_report_to_dot(const Group& g, const CDReport& report) {
    (void)g;
    const auto& members = report.members;
    std::size_t k = members.size();

    // covering relations: i -> j when i < j strictly and nothing in between
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j || !members[i].is_subset_of(members[j]) || members[i] == members[j])
                continue;
            bool covering = true;
            for (std::size_t mid = 0; mid < k; ++mid) {
                if (mid == i || mid == j) continue;
                if (members[i].is_subset_of(members[mid]) &&
                    members[mid].is_subset_of(members[j]) && members[mid] != members[i] &&
                    members[mid] != members[j]) {
                    covering = false;
                    break;
                }
            }
            if (covering) edges.emplace_back(i, j);
        }

    std::ostringstream out;
    out << "digraph cd_lattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < k; ++i)
        out << "  n" << i << " [label=\"order=" << members[i].count()
            << ", m=" << report.max_measure << "\"];\n";
    for (const auto& [i, j] : edges) out << "  n" << i << " -> n" << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string cd_report_to_text(const Group& g, const CDReport& report) {
    std::ostringstream out;
    out << "group order:  " << report.group_order << "\n";
    out << "max measure:  " << report.max_measure << "\n";
    out << "method:       " << cd_method_name(report.method) << "\n";
    out << "members:      " << report.members.size()
        << (report.is_chain ? " (chain, length " + std::to_string(*report.chain_length) + ")"
                            : " (not a chain)")
        << "\n";
    for (const Bitset& m : report.members) {
        out << "  - order " << m.count() << ", generators:";
        for (int x : member_generators(g, m)) {
            out << " " << x;
            if (g.has_labels()) out << " (" << g.label(x) << ")";
        }
        out << "\n";
    }
    out << "cd subgroup:  order " << report.cd_subgroup.count() << "\n";
    out << "checks:\n";
    for (const auto& [name, value] : report.property_checks)
        out << "  " << name << ": " << ternary_name(value) << "\n";
    return out.str();
}

std::string group_summary_json(const Group& g, const ReportRenderOptions& opts) {
    json j;
    j["order"] = g.order();
    Bitset z = center(g);
    j["center_order"] = z.count();
    j["abelian"] = g.is_abelian();
    if (g.spec()) j["spec"] = json::parse(group_spec_to_json_text(*g.spec()));
    if (g.has_labels() && static_cast<std::size_t>(g.order()) <= opts.elements_bound) {
        json labels = json::array();
        for (int i = 0; i < g.order(); ++i) labels.push_back(g.label(i));
        j["labels"] = labels;
    }
    return dump(j, opts.indent);
}

std::string group_summary_text(const Group& g) {
    std::ostringstream out;
    out << "order:        " << g.order() << "\n";
    out << "center order: " << center(g).count() << "\n";
    out << "abelian:      " << (g.is_abelian() ? "yes" : "no") << "\n";
    if (g.spec()) out << "spec:         " << group_spec_display(*g.spec()) << "\n";
    return out.str();
}

} // namespace cdlat
