#ifndef DOWKER_IO_HPP
#define DOWKER_IO_HPP

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "infer_lattice.hpp"

namespace dowker {

using Json = nlohmann::json;

enum class RelationFormat { csv_matrix, pairs, json };

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

struct ParseResult {
    Relation relation;
    std::vector<std::string> warnings;
};

inline ParseResult parse_relation_full(const std::string& text, RelationFormat format) {
    ParseResult out;
    if (format == RelationFormat::json) {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const Json::exception& e) {
            fail(errc::parse_error, std::string("bad json: ") + e.what());
        }
        for (const char* key : {"individuals", "attributes", "pairs"})
            if (!doc.contains(key)) fail(errc::parse_error, std::string("missing field: ") + key);
        std::vector<std::string> xs = doc["individuals"], ys = doc["attributes"];
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& p : doc["pairs"]) {
            if (!p.is_array() || p.size() != 2) fail(errc::parse_error, "pair must be [x,y]");
            pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
        out.relation = Relation::build(pairs, xs, ys, true);
        return out;
    }

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    if (format == RelationFormat::pairs) {
        std::vector<std::string> xs, ys;
        std::vector<std::pair<std::string, std::string>> pairs;
        std::unordered_set<std::string> seen_x, seen_y, seen_pair;
        while (std::getline(in, line)) {
            ++lineno;
            std::string t = detail::trim(line);
            if (t.empty() || t[0] == '#') continue;
            auto cells = detail::split_csv_line(t);
            if (cells.size() != 2)
                fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected x,y");
            std::string x = detail::trim(cells[0]), y = detail::trim(cells[1]);
            if (x.empty() || y.empty())
                fail(errc::parse_error, "line " + std::to_string(lineno) + ": blank id");
            if (seen_x.insert(x).second) xs.push_back(x);
            if (seen_y.insert(y).second) ys.push_back(y);
            if (seen_pair.insert(x + "\n" + y).second)
                pairs.emplace_back(x, y);
            else
                out.warnings.push_back("line " + std::to_string(lineno) + ": duplicate pair " + x +
                                       "," + y);
        }
        out.relation = Relation::build(pairs, xs, ys, true);
        return out;
    }

    // CSV-MATRIX: header row of attribute ids, one labeled 0/1 row per individual
    std::vector<std::string> ys;
    std::vector<std::string> xs;
    std::vector<std::pair<std::string, std::string>> pairs;
    bool have_header = false;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        auto cells = detail::split_csv_line(line);
        if (!have_header) {
            for (std::size_t i = 1; i < cells.size(); ++i) {
                std::string y = detail::trim(cells[i]);
                if (y.empty())
                    fail(errc::parse_error,
                         "line 1, column " + std::to_string(i + 1) + ": blank attribute id");
                ys.push_back(y);
            }
            width = cells.size();
            have_header = true;
            continue;
        }
        if (cells.size() != width)
            fail(errc::parse_error, "line " + std::to_string(lineno) + ": ragged row (" +
                                        std::to_string(cells.size()) + " cells, expected " +
                                        std::to_string(width) + ")");
        std::string x = detail::trim(cells[0]);
        if (x.empty()) fail(errc::parse_error, "line " + std::to_string(lineno) + ": blank individual id");
        xs.push_back(x);
        for (std::size_t i = 1; i < cells.size(); ++i) {
            std::string cell = detail::trim(cells[i]);
            if (cell.empty() || cell == "0") continue;
            if (cell != "1")
                fail(errc::parse_error, "line " + std::to_string(lineno) + ", column " +
                                            std::to_string(i + 1) + ": expected 0, 1, or blank");
            pairs.emplace_back(x, ys[i - 1]);
        }
    }
    if (!have_header) fail(errc::parse_error, "empty document");
    out.relation = Relation::build(pairs, xs, ys, true);
    return out;
}

inline Relation parse_relation(const std::string& text, RelationFormat format) {
    return parse_relation_full(text, format).relation;
}

inline std::string serialize_relation(const Relation& r, RelationFormat format) {
    if (format == RelationFormat::json) {
        Json doc;
        doc["schema_version"] = 1;
        doc["individuals"] = r.individuals().ids();
        doc["attributes"] = r.attributes().ids();
        Json pairs = Json::array();
        for (const auto& [x, y] : r.pairs()) pairs.push_back({x, y});
        doc["pairs"] = pairs;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == RelationFormat::pairs) {
        for (const auto& [x, y] : r.pairs()) out << x << "," << y << "\n";
        return out.str();
    }
    for (const auto& y : r.attributes().ids()) out << "," << y;
    out << "\n";
    for (std::size_t x = 0; x < r.nx(); ++x) {
        out << r.individuals().id(x);
        for (std::size_t y = 0; y < r.ny(); ++y) out << "," << (r.at(x, y) ? "1" : "0");
        out << "\n";
    }
    return out.str();
}

inline RelationFormat format_for_path(const std::string& path) {
    auto ends_with = [&](const char* suffix) {
        std::string s = suffix;
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".json")) return RelationFormat::json;
    if (ends_with(".pairs")) return RelationFormat::pairs;
    return RelationFormat::csv_matrix;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Relation load_relation(const std::string& path) {
    return parse_relation(read_file(path), format_for_path(path));
}

inline UncertainGraph parse_graph_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(errc::parse_error, std::string("bad json: ") + e.what());
    }
    for (const char* key : {"states", "actions"})
        if (!doc.contains(key)) fail(errc::parse_error, std::string("missing field: ") + key);
    UncertainGraph g;
    g.states = doc["states"].get<std::vector<std::string>>();
    for (const auto& a : doc["actions"]) {
        Action act;
        act.id = a.at("id").get<std::string>();
        act.source = a.at("source").get<std::string>();
        act.targets = a.at("targets").get<std::vector<std::string>>();
        std::string kind = a.value("kind", "deterministic");
        if (kind == "deterministic")
            act.kind = ActionKind::deterministic;
        else if (kind == "nondeterministic")
            act.kind = ActionKind::nondeterministic;
        else if (kind == "stochastic")
            act.kind = ActionKind::stochastic;
        else
            fail(errc::parse_error, "unknown action kind: " + kind);
        g.actions.push_back(act);
    }
    g.validate();
    return g;
}

// explicit inference lattice: orders given as cover-or-comparability pairs, closed here
inline InferenceLattice parse_lattice_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        fail(errc::parse_error, std::string("bad json: ") + e.what());
    }
    InferenceLattice l;
    l.p_elements = doc.at("p_elements").get<std::vector<std::string>>();
    l.q_elements = doc.at("q_elements").get<std::vector<std::string>>();
    auto build_leq = [](const std::vector<std::string>& elems, const Json& pairs_json) {
        Universe u(elems);
        std::size_t n = elems.size();
        auto le = std::make_shared<std::vector<std::vector<char>>>(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i) (*le)[i][i] = 1;
        for (const auto& p : pairs_json) {
            if (!p.is_array() || p.size() != 2) fail(errc::parse_error, "order pair must be [a,b]");
            (*le)[u.index(p[0].get<std::string>())][u.index(p[1].get<std::string>())] = 1;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if ((*le)[i][k] && (*le)[k][j]) (*le)[i][j] = 1;
        return [u, le](const std::string& a, const std::string& b) {
            return (*le)[u.index(a)][u.index(b)] != 0;
        };
    };
    l.p_leq = build_leq(l.p_elements, doc.at("p_order"));
    l.q_leq = build_leq(l.q_elements, doc.at("q_order"));
    for (const auto& p : doc.at("proper")) {
        if (!p.is_array() || p.size() != 2) fail(errc::parse_error, "proper pair must be [p,q]");
        l.proper.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    if (doc.contains("q_top")) l.q_top_designated = doc["q_top"].get<std::vector<std::string>>();
    if (doc.contains("p_bottom"))
        l.p_bottom_designated = doc["p_bottom"].get<std::vector<std::string>>();
    return l;
}

struct EncodedRelation {
    Relation relation;
    std::vector<long> multiplicity;  // per merged individual
};

// one binary attribute per (field, value); identical records merge with multiplicity
inline EncodedRelation encode_multivalent(
    const std::vector<std::unordered_map<std::string, std::string>>& records,
    const std::vector<std::string>& fields) {
    std::vector<std::string> ys;
    std::unordered_set<std::string> seen_y;
    std::vector<std::vector<std::string>> row_attrs;
    for (std::size_t i = 0; i < records.size(); ++i) {
        std::vector<std::string> attrs;
        for (const auto& f : fields) {
            auto it = records[i].find(f);
            if (it == records[i].end())
                fail(errc::missing_field, "record " + std::to_string(i + 1) + " lacks field " + f);
            std::string y = f + "=" + it->second;
            if (seen_y.insert(y).second) ys.push_back(y);
            attrs.push_back(y);
        }
        row_attrs.push_back(attrs);
    }
    std::map<std::vector<std::string>, long> classes;
    std::vector<std::vector<std::string>> order;
    for (auto& attrs : row_attrs) {
        std::vector<std::string> key = attrs;
        std::sort(key.begin(), key.end());
        if (classes.emplace(key, 0).second) order.push_back(key);
        ++classes[key];
    }
    EncodedRelation out;
    std::vector<std::string> xs;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::string xid = "e" + std::to_string(i + 1);
        xs.push_back(xid);
        out.multiplicity.push_back(classes[order[i]]);
        for (const auto& y : order[i]) pairs.emplace_back(xid, y);
    }
    out.relation = Relation::build(pairs, xs, ys, true);
    return out;
}

}  // namespace dowker

#endif
