#include "altcount/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace altcount::report {

void RunReport::sort_rows() {
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.formula != b.formula)
            return a.formula < b.formula;
        if (a.n != b.n)
            return a.n < b.n;
        return a.c.value_or(0) < b.c.value_or(0);
    });
}

bool RunReport::all_match() const {
    for (const Row& r : rows)
        if (r.match && !*r.match)
            return false;
    return true;
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params)
        p[k] = v;
    j["params"] = p;
    nlohmann::json rows_json = nlohmann::json::array();
    for (const Row& r : rows) {
        nlohmann::json row;
        row["formula"] = r.formula;
        row["n"] = r.n;
        if (r.c)
            row["c"] = *r.c;
        if (r.q)
            row["q"] = *r.q;
        row["value"] = r.value;
        if (r.oracle)
            row["oracle"] = *r.oracle;
        if (r.match)
            row["match"] = *r.match;
        rows_json.push_back(std::move(row));
    }
    j["rows"] = rows_json;
    return j.dump(2) + "\n";
}

std::string RunReport::to_csv() const {
    std::ostringstream os;
    os << "formula,n,c,q,value,oracle,match\n";
    for (const Row& r : rows) {
        os << r.formula << ',' << r.n << ',';
        if (r.c)
            os << *r.c;
        os << ',';
        if (r.q)
            os << *r.q;
        os << ',' << r.value << ',';
        if (r.oracle)
            os << *r.oracle;
        os << ',';
        if (r.match)
            os << (*r.match ? "true" : "false");
        os << '\n';
    }
    return os.str();
}

double RunReport::total_wall_seconds() const {
    double total = 0;
    for (const Row& r : rows)
        total += r.wall_seconds;
    return total;
}

} // namespace altcount::report
