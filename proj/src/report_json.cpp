#include "k3lattice/report_json.hpp"

namespace k3lattice {

nlohmann::json matrix_to_json(const IntegerMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_integer(m(i, j)));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

nlohmann::json report_to_json(const VerificationReport& report) {
    return nlohmann::json{
        {"gram_w", matrix_to_json(report.gram_w)},
        {"matches_canonical", report.matches_canonical},
        {"det_lt", format_integer(report.det_lt)},
        {"det_w", format_integer(report.det_w)},
        {"index", format_integer(report.index)},
        {"notes", report.notes},
    };
}

} // namespace k3lattice
