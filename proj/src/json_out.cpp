#include "resolvedim/json_out.hpp"

namespace resolvedim {

namespace {

nlohmann::json optional_int(const std::optional<int>& value) {
    if (value)
        return *value;
    return nullptr;
}

nlohmann::json optional_set(const std::optional<std::vector<int>>& value) {
    if (value)
        return *value;
    return nullptr;
}

} // namespace

nlohmann::json report_to_json(const ResolvingReport& report, const GridLabeling* labeling) {
    nlohmann::json j;
    j["n"] = report.n;
    j["dim"] = optional_int(report.dim);
    j["metric_basis"] = optional_set(report.metric_basis);
    j["dim_plus"] = optional_int(report.dim_plus);
    j["upper_basis"] = optional_set(report.upper_basis);
    j["res"] = optional_int(report.res);
    if (report.res_witness)
        j["res_witness"] = {report.res_witness->x, report.res_witness->y};
    else
        j["res_witness"] = nullptr;
    j["randomly_k"] = optional_int(report.randomly_k);
    if (labeling)
        j["labels"] = labels_to_json(*labeling);
    return j;
}

nlohmann::json verification_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["range"] = report.range;
    j["examined"] = report.examined;
    j["skipped"] = report.skipped;
    j["passed"] = report.passed();
    j["violations"] = nlohmann::json::array();
    for (const auto& v : report.violations)
        j["violations"].push_back({{"graph6", v.graph6}, {"detail", v.detail}});
    j["info"] = nlohmann::json::object();
    for (const auto& [key, value] : report.info)
        j["info"][key] = value;
    return j;
}

nlohmann::json labels_to_json(const GridLabeling& labeling) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [index, label] : labeling.to_label_map())
        j[index] = label;
    return j;
}

} // namespace resolvedim
