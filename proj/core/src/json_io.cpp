#include "weylcalc/json_io.hpp"

namespace weylcalc {

Rat rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected integer or \"p/q\" string");
}

namespace {

const Json& entry_map(const Json& j) {
    if (j.is_object() && j.contains("entries")) return j.at("entries");
    if (j.is_object()) return j;
    throw std::invalid_argument("weight must be a JSON object");
}

int parse_index(const std::string& key) {
    std::size_t pos = 0;
    int idx = std::stoi(key, &pos);
    if (pos != key.size() || idx < 0) throw std::invalid_argument("bad weight index: " + key);
    return idx;
}

}  // namespace

Weight weight_from_json(const Json& j) {
    Weight w;
    for (const auto& [key, value] : entry_map(j).items()) {
        if (!value.is_number_integer()) {
            throw std::invalid_argument("weight values must be integers");
        }
        long long v = value.get<long long>();
        if (v == 0) throw std::invalid_argument("zero weight value rejected");
        w.set(parse_index(key), v);
    }
    return w;
}

Json weight_to_json(const Weight& w) {
    Json entries = Json::object();
    for (const auto& [j, v] : w.entries()) entries[std::to_string(j)] = v;
    return Json{{"entries", entries}};
}

RationalWeight rational_weight_from_json(const Json& j) {
    RationalWeight w;
    for (const auto& [key, value] : entry_map(j).items()) {
        Rat v = rational_from_json(value);
        if (v == 0) throw std::invalid_argument("zero weight value rejected");
        w.set(parse_index(key), v);
    }
    return w;
}

Json rational_weight_to_json(const RationalWeight& w) {
    Json entries = Json::object();
    for (const auto& [j, v] : w.entries()) entries[std::to_string(j)] = to_string(v);
    return Json{{"entries", entries}};
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("re")) {
        throw std::invalid_argument("matrix needs fields n and re");
    }
    int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    Matrix m(n);
    auto fill = [&](const Json& grid, bool imaginary) {
        if (!grid.is_array() || static_cast<int>(grid.size()) != n) {
            throw std::invalid_argument("matrix grid has wrong shape");
        }
        for (int i = 0; i < n; ++i) {
            const Json& row = grid.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != n) {
                throw std::invalid_argument("matrix grid has wrong shape");
            }
            for (int c = 0; c < n; ++c) {
                Rat v = rational_from_json(row.at(c));
                if (imaginary) {
                    m.at(i, c).im = v;
                } else {
                    m.at(i, c).re = v;
                }
            }
        }
    };
    fill(j.at("re"), false);
    if (j.contains("im")) fill(j.at("im"), true);
    return m;
}

Json matrix_to_json(const Matrix& m) {
    int n = m.size();
    Json re = Json::array(), im = Json::array();
    for (int i = 0; i < n; ++i) {
        Json re_row = Json::array(), im_row = Json::array();
        for (int j = 0; j < n; ++j) {
            re_row.push_back(to_string(m.at(i, j).re));
            im_row.push_back(to_string(m.at(i, j).im));
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return Json{{"n", n}, {"re", re}, {"im", im}};
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

Json partition_to_json(const Partition& p) {
    return Json(p.parts());
}

Json signature_to_json(const OrbitSignature& s) {
    return weight_to_json(canonical_weight(s));
}

}  // namespace weylcalc
