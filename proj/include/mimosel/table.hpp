#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace mimosel {

/// A plot-ready result table: named, unit-annotated columns plus a metadata
/// header. Numeric cells are serialized with 17 significant digits so a
/// parsed table recovers every double exactly.
class ResultTable {
public:
    void add_column(const std::string& name, const std::string& unit = "");
    void set_meta(const std::string& key, const std::string& value);

    void begin_row();
    void push(double value);
    void push(long long value);
    void push(int value) { push(static_cast<long long>(value)); }
    void push(const std::string& value);
    void push(const char* value) { push(std::string(value)); }

    std::size_t row_count() const { return rows_.size(); }
    std::size_t column_count() const { return columns_.size(); }
    const std::string& cell(std::size_t row, std::size_t col) const;
    const std::string& column_name(std::size_t col) const;
    const std::map<std::string, std::string>& metadata() const { return meta_; }

    /// Header lines are '# key: value', then a column line 'name[unit],...',
    /// then one line per row.
    std::string to_csv() const;
    void write_csv(const std::string& path) const;

    static ResultTable from_csv(std::istream& in);

private:
    struct Column {
        std::string name;
        std::string unit;
    };
    std::vector<Column> columns_;
    std::vector<std::vector<std::string>> rows_;
    std::map<std::string, std::string> meta_;
};

std::string format_double(double value);
double parse_double(const std::string& text);

} // namespace mimosel
