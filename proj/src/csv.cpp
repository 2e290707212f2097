#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "kelly/errors.hpp"
#include "kelly/io.hpp"

namespace kelly {

namespace {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failure on '" + path.string() + "'");
    }
    return std::move(buf).str();
}

// Splits into lines, tolerating CRLF and a UTF-8 BOM on the first line.
std::vector<std::string> split_lines(std::string text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t end = line.find(',', start);
        if (end == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, end - start));
        start = end + 1;
    }
    return fields;
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

double parse_price(const std::string& field, const std::string& file,
                   std::size_t line_no, const std::string& column) {
    if (field.empty()) {
        throw ParseError(file + ":" + std::to_string(line_no) +
                         ": missing cell in column '" + column + "'");
    }
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(file + ":" + std::to_string(line_no) +
                         ": cannot parse '" + field + "' in column '" +
                         column + "' as a number");
    }
    return value;
}

Date parse_date_cell(const std::string& field, const std::string& file,
                     std::size_t line_no) {
    try {
        return Date::parse(field);
    } catch (const ParseError& e) {
        throw ParseError(file + ":" + std::to_string(line_no) + ": " +
                         e.what());
    }
}

InstrumentPanel make_panel(std::vector<std::string> ids,
                           std::vector<Date> dates, Eigen::MatrixXd prices,
                           const std::string& file) {
    try {
        return InstrumentPanel(std::move(ids), std::move(dates),
                               std::move(prices));
    } catch (const std::invalid_argument& e) {
        throw ParseError(file + ": " + e.what());
    }
}

}  // namespace

PanelIngest read_wide_panel_csv(const std::filesystem::path& path) {
    const std::string file = path.string();
    const auto lines = split_lines(read_text_file(path));
    if (lines.empty() || is_blank(lines[0])) {
        throw ParseError(file + ": missing header line");
    }
    auto header = split_fields(lines[0]);
    if (header.size() < 2 || header[0] != "date") {
        throw ParseError(file + ": header must be 'date,<id1>,<id2>,...'");
    }
    std::vector<std::string> ids(header.begin() + 1, header.end());
    for (const auto& id : ids) {
        if (id.empty()) {
            throw ParseError(file + ": header has an empty instrument id");
        }
    }

    std::vector<Date> dates;
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (is_blank(lines[i])) continue;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != header.size()) {
            throw ParseError(file + ":" + std::to_string(i + 1) + ": got " +
                             std::to_string(fields.size()) + " fields, " +
                             "expected " + std::to_string(header.size()));
        }
        dates.push_back(parse_date_cell(fields[0], file, i + 1));
        std::vector<double> row(ids.size());
        for (std::size_t j = 0; j < ids.size(); ++j) {
            row[j] = parse_price(fields[j + 1], file, i + 1, ids[j]);
        }
        rows.push_back(std::move(row));
    }

    Eigen::MatrixXd prices(rows.size(), ids.size());
    for (std::size_t t = 0; t < rows.size(); ++t) {
        for (std::size_t j = 0; j < ids.size(); ++j) {
            prices(static_cast<Eigen::Index>(t),
                   static_cast<Eigen::Index>(j)) = rows[t][j];
        }
    }
    PanelIngest ingest{make_panel(ids, std::move(dates), std::move(prices),
                                  file),
                       {file},
                       {0}};
    return ingest;
}

PanelIngest read_instrument_csvs(
    const std::vector<std::filesystem::path>& paths,
    std::vector<std::string> ids) {
    if (paths.empty()) {
        throw std::invalid_argument("no instrument files given");
    }
    if (!ids.empty() && ids.size() != paths.size()) {
        throw std::invalid_argument("got " + std::to_string(ids.size()) +
                                    " ids for " + std::to_string(paths.size()) +
                                    " files");
    }
    if (ids.empty()) {
        for (const auto& p : paths) ids.push_back(p.stem().string());
    }

    std::vector<std::map<Date, double>> series(paths.size());
    for (std::size_t f = 0; f < paths.size(); ++f) {
        const std::string file = paths[f].string();
        const auto lines = split_lines(read_text_file(paths[f]));
        if (lines.empty() || is_blank(lines[0])) {
            throw ParseError(file + ": missing header line");
        }
        if (split_fields(lines[0]) !=
            std::vector<std::string>{"date", "adj_close"}) {
            throw ParseError(file + ": header must be 'date,adj_close'");
        }
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (is_blank(lines[i])) continue;
            const auto fields = split_fields(lines[i]);
            if (fields.size() != 2) {
                throw ParseError(file + ":" + std::to_string(i + 1) +
                                 ": expected 2 fields, got " +
                                 std::to_string(fields.size()));
            }
            const Date date = parse_date_cell(fields[0], file, i + 1);
            const double price =
                parse_price(fields[1], file, i + 1, "adj_close");
            if (!series[f].emplace(date, price).second) {
                throw ParseError(file + ":" + std::to_string(i + 1) +
                                 ": duplicate date " + date.to_string());
            }
        }
    }

    // Intersection of dates, in order (std::map iterates sorted).
    std::vector<Date> shared;
    for (const auto& [date, price] : series[0]) {
        bool everywhere = true;
        for (std::size_t f = 1; f < series.size(); ++f) {
            if (!series[f].count(date)) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) shared.push_back(date);
    }

    Eigen::MatrixXd prices(shared.size(), paths.size());
    for (std::size_t t = 0; t < shared.size(); ++t) {
        for (std::size_t f = 0; f < paths.size(); ++f) {
            prices(static_cast<Eigen::Index>(t),
                   static_cast<Eigen::Index>(f)) = series[f].at(shared[t]);
        }
    }
    std::string joined;
    for (const auto& p : paths) {
        joined += (joined.empty() ? "" : ", ") + p.string();
    }

    std::vector<std::string> sources;
    std::vector<std::size_t> dropped;
    for (std::size_t f = 0; f < paths.size(); ++f) {
        sources.push_back(paths[f].string());
        dropped.push_back(series[f].size() - shared.size());
    }
    return PanelIngest{make_panel(std::move(ids), std::move(shared),
                                  std::move(prices), joined),
                       std::move(sources), std::move(dropped)};
}

std::vector<double> read_returns_csv(const std::filesystem::path& path) {
    const std::string file = path.string();
    const auto lines = split_lines(read_text_file(path));
    std::vector<double> values;
    bool first_content_line = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (is_blank(lines[i])) continue;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 1) {
            throw ParseError(file + ":" + std::to_string(i + 1) +
                             ": expected a single column, got " +
                             std::to_string(fields.size()) + " fields");
        }
        double value = 0.0;
        const char* first = fields[0].data();
        const char* last = fields[0].data() + fields[0].size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            if (first_content_line) {
                first_content_line = false;  // header line
                continue;
            }
            throw ParseError(file + ":" + std::to_string(i + 1) +
                             ": cannot parse '" + fields[0] +
                             "' as a number");
        }
        first_content_line = false;
        values.push_back(value);
    }
    if (values.empty()) {
        throw ParseError(file + ": no return observations found");
    }
    return values;
}

std::string panel_to_csv(const InstrumentPanel& panel) {
    std::string out = "date";
    for (const auto& id : panel.instrument_ids()) {
        out += "," + id;
    }
    out += "\n";
    for (Eigen::Index t = 0; t < panel.n_rows(); ++t) {
        out += panel.dates()[static_cast<std::size_t>(t)].to_string();
        for (Eigen::Index j = 0; j < panel.n_instruments(); ++j) {
            out += "," + format_double_17(panel.prices()(t, j));
        }
        out += "\n";
    }
    return out;
}

std::string capital_path_to_csv(const CapitalPath& path) {
    std::string out = "date,capital\n";
    for (Eigen::Index t = 0; t < path.values.size(); ++t) {
        out += path.dates[static_cast<std::size_t>(t)].to_string() + "," +
               format_double_17(path.values(t)) + "\n";
    }
    return out;
}

}  // namespace kelly
