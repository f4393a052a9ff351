#pragma once

// Machine-readable run reports. Values are exact decimal strings, never
// floats; rows sort by (formula, n, c) so that a report is a deterministic
// function of the flags that produced it (wall time is tracked per row but
// intentionally kept out of the serialized forms).

#include <optional>
#include <string>
#include <vector>

namespace altcount::report {

struct Row {
    std::string formula;
    int n = 0;
    std::optional<int> c;
    std::optional<int> q;
    std::string value;
    std::optional<std::string> oracle;
    std::optional<bool> match;
    double wall_seconds = 0.0; // not serialized
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params; // flag echo
    std::vector<Row> rows;

    void sort_rows();
    bool all_match() const; // true when no row has match == false

    std::string to_json() const; // schema: {command, params, rows[...]}
    std::string to_csv() const;  // columns: formula,n,c,q,value,oracle,match

    double total_wall_seconds() const;
};

} // namespace altcount::report
