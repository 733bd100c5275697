#include "parkrec/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace parkrec {

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (const char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string fmt(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

// Trailing zeros stripped so alpha 0.001 renders as written in scenarios.
std::string fmt_alpha(double alpha) {
    std::string s = fmt(alpha, 6);
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.push_back('0');
    return s;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << "  ";
            out << row[i];
            if (i + 1 < row.size()) {
                out << std::string(widths[i] - row[i].size(), ' ');
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string distance_table_csv(const DistanceTable& table) {
    std::ostringstream out;
    out << "origin";
    for (const auto& lot : table.lot_ids) out << ',' << csv_field("lot_" + lot);
    out << "\r\n";
    for (std::size_t j = 0; j < table.origin_names.size(); ++j) {
        out << csv_field(table.origin_names[j]);
        for (const double km : table.km[j]) out << ',' << fmt(km, 4);
        out << "\r\n";
    }
    return out.str();
}

std::string distance_table_text(const DistanceTable& table) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"origin"};
    for (const auto& lot : table.lot_ids) header.push_back("lot " + lot);
    rows.push_back(std::move(header));
    for (std::size_t j = 0; j < table.origin_names.size(); ++j) {
        std::vector<std::string> row{table.origin_names[j]};
        for (const double km : table.km[j]) row.push_back(fmt(km, 4));
        rows.push_back(std::move(row));
    }
    return aligned(rows);
}

std::string grid_csv(const RecommendationGrid& grid) {
    std::ostringstream out;
    out << "alpha";
    for (const auto& origin : grid.origin_names) out << ',' << csv_field(origin);
    out << "\r\n";
    for (std::size_t a = 0; a < grid.alphas.size(); ++a) {
        out << fmt_alpha(grid.alphas[a]);
        for (const auto& cell : grid.cells[a]) {
            out << ',' << (cell.best_lot ? csv_field(*cell.best_lot) : "--");
        }
        out << "\r\n";
    }
    return out.str();
}

std::string grid_text(const RecommendationGrid& grid) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"alpha"};
    for (const auto& origin : grid.origin_names) header.push_back(origin);
    rows.push_back(std::move(header));
    for (std::size_t a = 0; a < grid.alphas.size(); ++a) {
        std::vector<std::string> row{fmt_alpha(grid.alphas[a])};
        for (const auto& cell : grid.cells[a]) {
            row.push_back(cell.best_lot ? *cell.best_lot : "--");
        }
        rows.push_back(std::move(row));
    }
    return aligned(rows);
}

std::string grid_scores_csv(const RecommendationGrid& grid) {
    std::ostringstream out;
    out << "alpha,origin,lot,distance_km,spots,objective\r\n";
    for (std::size_t a = 0; a < grid.alphas.size(); ++a) {
        for (std::size_t j = 0; j < grid.origin_names.size(); ++j) {
            for (const auto& score : grid.cells[a][j].scores) {
                out << fmt_alpha(grid.alphas[a]) << ','
                    << csv_field(grid.origin_names[j]) << ','
                    << csv_field(score.lot_id) << ',' << fmt(score.distance_km, 4)
                    << ',' << score.spots << ',' << fmt(score.objective, 6)
                    << "\r\n";
            }
        }
    }
    return out.str();
}

} // namespace parkrec
