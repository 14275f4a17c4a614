#include "mimosel/table.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mimosel/errors.hpp"

namespace mimosel {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

double parse_double(const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str()) throw ConfigError("cannot parse number '" + text + "'");
    return v;
}

void ResultTable::add_column(const std::string& name, const std::string& unit) {
    columns_.push_back({name, unit});
}

void ResultTable::set_meta(const std::string& key, const std::string& value) {
    meta_[key] = value;
}

void ResultTable::begin_row() { rows_.emplace_back(); }

void ResultTable::push(double value) { rows_.back().push_back(format_double(value)); }

void ResultTable::push(long long value) { rows_.back().push_back(std::to_string(value)); }

void ResultTable::push(const std::string& value) { rows_.back().push_back(value); }

const std::string& ResultTable::cell(std::size_t row, std::size_t col) const {
    return rows_.at(row).at(col);
}

const std::string& ResultTable::column_name(std::size_t col) const {
    return columns_.at(col).name;
}

std::string ResultTable::to_csv() const {
    std::ostringstream out;
    for (const auto& [key, value] : meta_) out << "# " << key << ": " << value << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out << ",";
        out << columns_[i].name;
        if (!columns_[i].unit.empty()) out << "[" << columns_[i].unit << "]";
    }
    out << "\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << row[i];
        }
        out << "\n";
    }
    return out.str();
}

void ResultTable::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_csv();
}

ResultTable ResultTable::from_csv(std::istream& in) {
    ResultTable table;
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto colon = line.find(':');
            if (colon != std::string::npos) {
                std::string key = line.substr(1, colon - 1);
                std::string value = line.substr(colon + 1);
                const auto strip = [](std::string& s) {
                    s.erase(0, s.find_first_not_of(' '));
                    const auto last = s.find_last_not_of(" \r");
                    s.erase(last == std::string::npos ? 0 : last + 1);
                };
                strip(key);
                strip(value);
                table.set_meta(key, value);
            }
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            if (!cell.empty() && cell.back() == '\r') cell.pop_back();
            cells.push_back(cell);
        }
        if (!header_done) {
            for (auto& name : cells) {
                const auto bracket = name.find('[');
                if (bracket != std::string::npos && name.back() == ']')
                    table.add_column(name.substr(0, bracket),
                                     name.substr(bracket + 1, name.size() - bracket - 2));
                else
                    table.add_column(name);
            }
            header_done = true;
        } else {
            table.begin_row();
            for (auto& c : cells) table.push(c);
        }
    }
    return table;
}

} // namespace mimosel
