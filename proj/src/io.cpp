#include "heffter/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace heffter {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "pretty") return Format::Pretty;
    throw FormatError("unknown format '" + name + "'");
}

namespace {

json grid_value(const Grid& g) {
    json cells = json::array();
    for (const auto& cell : g.cells()) cells.push_back({{"r", cell.r}, {"c", cell.c}, {"v", cell.v}});
    return {{"m", g.rows()}, {"n", g.cols()}, {"cells", std::move(cells)}};
}

Grid grid_of(const json& j) {
    try {
        Grid g(j.at("m").get<int>(), j.at("n").get<int>());
        for (const auto& c : j.at("cells")) {
            int r = c.at("r").get<int>(), col = c.at("c").get<int>();
            if (g.filled(r, col))
                throw FormatError("cell (" + std::to_string(r) + "," + std::to_string(col) + ") listed twice");
            g.set(r, col, c.at("v").get<Entry>());
        }
        return g;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad grid JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw FormatError(std::string("bad grid JSON: ") + e.what());
    }
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r' && ch != ' ' && ch != '\t') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

long long to_int(const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw FormatError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw FormatError("not an integer: '" + s + "'");
    return v;
}

}  // namespace

std::string to_json(const Grid& g) { return grid_value(g).dump(); }

Grid grid_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    return grid_of(j);
}

std::string to_csv(const Grid& g) {
    std::ostringstream os;
    os << g.rows() << ',' << g.cols() << '\n';
    for (int r = 1; r <= g.rows(); ++r) {
        for (int c = 1; c <= g.cols(); ++c) {
            if (c > 1) os << ',';
            if (auto v = g.at(r, c)) os << *v;
        }
        os << '\n';
    }
    return os.str();
}

Grid grid_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw FormatError("empty CSV");
    auto head = split(line);
    if (head.size() != 2) throw FormatError("CSV header must be 'm,n'");
    const long long m = to_int(head[0]), n = to_int(head[1]);
    if (m < 0 || n < 0) throw FormatError("negative dimensions");
    Grid g(static_cast<int>(m), static_cast<int>(n));
    for (int r = 1; r <= m; ++r) {
        if (!std::getline(is, line)) throw FormatError("CSV has fewer than " + std::to_string(m) + " rows");
        auto fields = split(line);
        if (static_cast<long long>(fields.size()) != n)
            throw FormatError("CSV row " + std::to_string(r) + " has " + std::to_string(fields.size()) + " fields");
        for (int c = 1; c <= n; ++c)
            if (!fields[c - 1].empty()) g.set(r, c, to_int(fields[c - 1]));
    }
    return g;
}

std::string to_pretty(const Grid& g) {
    std::size_t width = 1;
    for (const auto& cell : g.cells()) width = std::max(width, std::to_string(cell.v).size());
    std::ostringstream os;
    for (int r = 1; r <= g.rows(); ++r) {
        std::string line;
        for (int c = 1; c <= g.cols(); ++c) {
            std::string f;
            if (auto v = g.at(r, c)) f = std::to_string(*v);
            line += (c > 1 ? " " : "") + std::string(width - f.size(), ' ') + f;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::string write_grid(const Grid& g, Format f) {
    switch (f) {
        case Format::Json: return to_json(g) + "\n";
        case Format::Csv: return to_csv(g);
        case Format::Pretty: return to_pretty(g);
    }
    return {};
}

Grid read_grid(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw FormatError("empty input");
    return text[pos] == '{' ? grid_from_json(text) : grid_from_csv(text.substr(pos));
}

Grid read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_grid(ss.str());
}

std::string certificate_json(const Certificate& c) {
    json v = json::array();
    for (const auto& x : c.violations) {
        json item = {{"clause", x.clause}, {"detail", x.detail}};
        if (x.row) item["row"] = x.row;
        if (x.col) item["col"] = x.col;
        v.push_back(std::move(item));
    }
    return json{{"ok", c.ok}, {"violation_count", c.total}, {"violations", std::move(v)}}.dump();
}

std::string blocks_json(const BlockSequence& seq) {
    json arr = json::array();
    for (const auto& b : seq) {
        json rows = json::array();
        for (int r = 1; r <= b.rows(); ++r) {
            json row = json::array();
            for (int c = 1; c <= b.cols(); ++c) {
                auto v = b.grid.at(r, c);
                row.push_back(v ? json(*v) : json(nullptr));
            }
            rows.push_back(std::move(row));
        }
        arr.push_back({{"rows", std::move(rows)}, {"column_sums", b.signature}, {"mu", b.mu}});
    }
    return arr.dump();
}

}  // namespace heffter
