#include "cfem/report.hpp"

#include "cfem/error.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace cfem {

namespace {

std::string chars(double value, std::chars_format fmt, int precision) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt, precision);
    if (ec != std::errc{}) {
        throw InvalidArgument("number formatting failed");
    }
    return std::string(buf.data(), end);
}

std::string optional_order(const std::optional<double>& order) {
    return order ? format_order(*order) : std::string();
}

double parse_number(std::string_view cell) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw InvalidArgument("bad number in CSV: '" + std::string(cell) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        cells.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return cells;
}

}  // namespace

std::string format_scientific(double value) {
    std::string s = chars(value, std::chars_format::scientific, 4);
    for (char& c : s) {
        if (c == 'e') c = 'E';
    }
    return s;
}

std::string format_order(double value) { return chars(value, std::chars_format::fixed, 2); }

std::string to_csv(const RefinementReport& report) {
    std::string out = "N,l2_error,l2_order,h1_error,h1_order\n";
    for (const RefinementRow& row : report.rows) {
        out += std::to_string(row.n) + ',' + format_scientific(row.l2_error) + ',' + optional_order(row.l2_order) +
               ',' + format_scientific(row.h1_error) + ',' + optional_order(row.h1_order) + '\n';
    }
    return out;
}

std::string to_markdown(const RefinementReport& report) {
    std::string out;
    out += "Grid refinement: " + std::string(to_string(report.method)) + " method, " + report.problem +
           " (norm quadrature " + std::to_string(report.norm.points) + " points x " +
           std::to_string(report.norm.subdivisions) + " sub-intervals)\n\n";
    out += report.norm.full_h1 ? "| N | L2 error | Order | H1 error | Order |\n"
                               : "| N | L2 error | Order | H1 semi-error | Order |\n";
    out += "|---:|---:|---:|---:|---:|\n";
    for (const RefinementRow& row : report.rows) {
        out += "| " + std::to_string(row.n) + " | " + format_scientific(row.l2_error) + " | " +
               optional_order(row.l2_order) + " | " + format_scientific(row.h1_error) + " | " +
               optional_order(row.h1_order) + " |\n";
    }
    return out;
}

std::vector<RefinementRow> parse_csv(std::string_view text) {
    std::vector<RefinementRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "N,l2_error,l2_order,h1_error,h1_order") {
        throw InvalidArgument("unexpected CSV header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != 5) {
            throw InvalidArgument("CSV row needs 5 cells: '" + line + "'");
        }
        RefinementRow row;
        row.n = static_cast<std::size_t>(parse_number(cells[0]));
        row.l2_error = parse_number(cells[1]);
        if (!cells[2].empty()) row.l2_order = parse_number(cells[2]);
        row.h1_error = parse_number(cells[3]);
        if (!cells[4].empty()) row.h1_order = parse_number(cells[4]);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cfem
