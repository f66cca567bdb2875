#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "bpd/permutation.hpp"

inline std::string read_golden(const std::string& name) {
    const std::string path = std::string(BPD_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing golden file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return text;
}

inline bpd::Permutation perm(std::initializer_list<int> values) {
    return bpd::Permutation::from_one_line(std::vector<int>(values));
}
