#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "odt/design.hpp"
#include "odt/io.hpp"

namespace odt::test {

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(ODT_TEST_DATA_DIR) + "/" + name + ".txt");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Design fixture(const std::string& name) { return parse_text(read_fixture(name)); }

// renumber the variables that occur in d as 0..m-1, in increasing order
inline Design compact_vars(const Design& d) {
    std::set<int> used;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            for (const Term& t : d.at(i, j).terms()) used.insert(t.var);
    std::map<int, VarImage> img;
    int next = 0;
    for (int v : used) img[v] = {next++, 1};
    return relabel(d, img, next);
}

inline bool same_cells(const Design& a, const Design& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

} // namespace odt::test
