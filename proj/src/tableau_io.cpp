#include "spbranch/tableau_io.hpp"

#include <istream>
#include <sstream>

#include <json.hpp>

namespace spbranch {

std::string tableau_to_text(const Tableau& t) {
    if (!t.is_proper())
        throw DomainError("cannot render a tableau with holes");
    std::string out;
    const SkewShape& sh = t.shape();
    for (int r = 1; r <= sh.rows(); ++r) {
        std::string line;
        for (int c = 1; c <= sh.outer().part(r); ++c) {
            if (!line.empty())
                line += ' ';
            if (c <= sh.inner().part(r))
                line += '.';
            else
                line += t.at(r, c)->to_string();
        }
        out += line;
        out += '\n';
    }
    return out;
}

Tableau tableau_from_stream(std::istream& in) {
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> codes;
        int dots = 0;
        bool past_inner = false;
        std::string tok;
        while (ls >> tok) {
            if (tok == ".") {
                if (past_inner)
                    throw DomainError("tableau text: inner cell after an entry");
                ++dots;
            } else {
                past_inner = true;
                try {
                    codes.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw DomainError("tableau text: bad entry '" + tok + "'");
                }
            }
        }
        if (!past_inner && dots == 0)
            break; // blank line terminates
        inner.push_back(dots);
        outer.push_back(dots + static_cast<int>(codes.size()));
        rows.push_back(std::move(codes));
    }
    return Tableau::from_rows(SkewShape(Partition(outer), Partition(inner)), rows);
}

Tableau tableau_from_text(const std::string& text) {
    std::istringstream in(text);
    return tableau_from_stream(in);
}

std::string tableau_to_json(const Tableau& t) {
    if (!t.is_proper())
        throw DomainError("cannot render a tableau with holes");
    nlohmann::json j;
    j["outer"] = t.shape().outer().parts();
    j["inner"] = t.shape().inner().parts();
    j["rows"] = t.row_codes();
    return j.dump();
}

Tableau tableau_from_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const std::exception& e) {
        throw DomainError(std::string("tableau json: ") + e.what());
    }
    if (!j.contains("outer") || !j.contains("inner") || !j.contains("rows"))
        throw DomainError("tableau json: expected outer, inner and rows fields");
    Partition outer(j["outer"].get<std::vector<int>>());
    Partition inner(j["inner"].get<std::vector<int>>());
    auto rows = j["rows"].get<std::vector<std::vector<int>>>();
    return Tableau::from_rows(SkewShape(std::move(outer), std::move(inner)), rows);
}

} // namespace spbranch
