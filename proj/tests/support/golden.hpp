#pragma once

// Loader for the hand-transcribed figure files in tests/data.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

struct Figure {
    std::uint64_t p = 0;
    std::uint64_t i1 = 0;
    std::uint64_t i2 = 0;
    std::vector<std::vector<long>> rows; // rows[n][n2]
    std::vector<std::vector<bool>> marked;
};

inline std::string data_path(const std::string& name)
{
    return std::string(CYCLONORM_TEST_DATA) + "/" + name;
}

inline Figure load(const std::string& name)
{
    std::ifstream in(data_path(name));
    if (!in) {
        throw std::runtime_error("cannot open " + data_path(name));
    }
    Figure fig;
    std::string line;
    std::getline(in, line);
    if (std::sscanf(line.c_str(), "# p=%lu i1=%lu i2=%lu", &fig.p, &fig.i1, &fig.i2) != 3) {
        throw std::runtime_error("bad header in " + name);
    }
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream cells(line);
        std::string cell;
        std::vector<long> row;
        std::vector<bool> marks;
        while (cells >> cell) {
            const bool source = cell.back() == '*';
            if (source) {
                cell.pop_back();
            }
            row.push_back(std::stol(cell));
            marks.push_back(source);
        }
        fig.rows.push_back(std::move(row));
        fig.marked.push_back(std::move(marks));
    }
    return fig;
}

inline std::string read_text(const std::string& name)
{
    std::ifstream in(data_path(name));
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace golden
