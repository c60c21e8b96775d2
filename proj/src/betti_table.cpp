#include "edgeideal/betti_table.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace edgeideal {

ResolutionSummary summarize(const BettiTable& t) {
    ResolutionSummary s;
    for (const auto& [ij, mult] : t.entries()) {
        auto [i, j] = ij;
        s.pdim = std::max(s.pdim, i);
        s.reg_ring = std::max(s.reg_ring, j - i);
        if (i >= 1 && j - i != 1) s.linear = false;
    }
    s.depth = t.ambient() - s.pdim;
    return s;
}

std::string render_betti_table(const BettiTable& t) {
    ResolutionSummary s = summarize(t);
    int cols = s.pdim + 1, rows = s.reg_ring + 1;
    std::vector<std::string> row_label(rows + 1);
    row_label[0] = "total:";
    for (int r = 0; r < rows; ++r) row_label[r + 1] = std::to_string(r) + ":";
    std::size_t label_width = 0;
    for (const auto& l : row_label) label_width = std::max(label_width, l.size());

    auto cell = [&](int r, int c) -> std::string {
        if (r == -1) {
            unsigned long long total = 0;
            for (int q = 0; q < rows; ++q) total += t.at(c, c + q);
            return std::to_string(total);
        }
        unsigned long long b = t.at(c, c + r);
        return b == 0 ? "." : std::to_string(b);
    };

    std::vector<std::size_t> width(cols);
    for (int c = 0; c < cols; ++c) {
        width[c] = std::to_string(c).size();
        for (int r = -1; r < rows; ++r) width[c] = std::max(width[c], cell(r, c).size());
    }

    std::ostringstream out;
    auto pad = [&](const std::string& sv, std::size_t w) {
        out << std::string(w - sv.size(), ' ') << sv;
    };
    pad("", label_width);
    for (int c = 0; c < cols; ++c) {
        out << ' ';
        pad(std::to_string(c), width[c]);
    }
    out << '\n';
    for (int r = -1; r < rows; ++r) {
        pad(row_label[r + 1], label_width);
        for (int c = 0; c < cols; ++c) {
            out << ' ';
            pad(cell(r, c), width[c]);
        }
        out << '\n';
    }
    return out.str();
}

std::string betti_table_csv(const BettiTable& t) {
    std::ostringstream out;
    out << "i,j,b\n";
    for (const auto& [ij, mult] : t.entries())
        out << ij.first << ',' << ij.second << ',' << mult << '\n';
    return out.str();
}

} // namespace edgeideal
