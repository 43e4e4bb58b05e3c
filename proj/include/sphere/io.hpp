#pragma once

/// File formats.
///
/// Form file (JSON):    { "ring": "zmod:5", "rank": 2, "b": [[1,1],[0,2]] }
/// Algebra file (JSON): form fields plus "c" (n x n x n array of n-vectors,
///                      ring elements as strings) and optional "label".
/// Cayley table (text): "elements: a,b,c,..." then k rows of k labels;
///                      ternary tables as k blocks separated by blank lines.
///
/// Serialization is canonical: fixed key order, elements as strings, no
/// whitespace variation, so identical objects produce identical bytes.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "sphere/magma.hpp"
#include "sphere/ternary.hpp"

namespace sphere {

using AlgebraVariant =
    std::variant<TernaryAlgebra<ZmodRing>, TernaryAlgebra<ZRing>, TernaryAlgebra<QRing>>;
using SpaceVariant =
    std::variant<QuadraticSpace<ZmodRing>, QuadraticSpace<ZRing>, QuadraticSpace<QRing>>;

namespace io_detail {

using json = nlohmann::ordered_json;

template <ring_type R>
typename R::Elem elem_from_json(const R& ring, const json& j) {
    if (j.is_string()) return ring.parse(j.get<std::string>());
    if (j.is_number_integer()) return ring.from_int(j.get<long long>());
    throw ParseError("ring element must be a string or integer");
}

template <ring_type R>
QuadraticSpace<R> space_from_json(const R& ring, const json& j) {
    std::size_t rank = j.at("rank").get<std::size_t>();
    if (rank < 1) throw ParseError("rank must be >= 1");
    const auto& rows = j.at("b");
    if (rows.size() != rank) throw ParseError("b must have 'rank' rows");
    QuadraticSpace<R> s(ring, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        if (rows[i].size() != rank) throw ParseError("b rows must have 'rank' entries");
        for (std::size_t jj = 0; jj < rank; ++jj) s.b.at(i, jj) = elem_from_json(ring, rows[i][jj]);
    }
    return s;
}

template <ring_type R>
json space_to_json(const QuadraticSpace<R>& s) {
    json j;
    j["ring"] = s.ring.descriptor();
    j["rank"] = s.rank;
    json rows = json::array();
    for (std::size_t i = 0; i < s.rank; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < s.rank; ++k) row.push_back(s.ring.str(s.b.at(i, k)));
        rows.push_back(row);
    }
    j["b"] = rows;
    return j;
}

template <ring_type R>
TernaryAlgebra<R> algebra_from_json(const R& ring, const json& j) {
    auto space = space_from_json(ring, j);
    const std::size_t n = space.rank;
    const auto& ci = j.at("c");
    if (ci.size() != n) throw ParseError("c must have rank slices");
    std::vector<Vec<R>> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ci[i].size() != n) throw ParseError("c slices must be rank x rank");
        for (std::size_t jj = 0; jj < n; ++jj) {
            if (ci[i][jj].size() != n) throw ParseError("c slices must be rank x rank x rank");
            for (std::size_t k = 0; k < n; ++k) {
                const auto& vj = ci[i][jj][k];
                if (vj.size() != n) throw ParseError("c entries must be rank-vectors");
                Vec<R> v(n, ring.zero());
                for (std::size_t d = 0; d < n; ++d) v[d] = elem_from_json(ring, vj[d]);
                c[(i * n + jj) * n + k] = std::move(v);
            }
        }
    }
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
    return {std::move(space), std::move(c), std::move(label)};
}

template <ring_type R>
json algebra_to_json(const TernaryAlgebra<R>& A) {
    json j = space_to_json(A.space);
    const std::size_t n = A.rank();
    json ci = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json cj = json::array();
        for (std::size_t jj = 0; jj < n; ++jj) {
            json ck = json::array();
            for (std::size_t k = 0; k < n; ++k) {
                json v = json::array();
                for (std::size_t d = 0; d < n; ++d)
                    v.push_back(A.ring().str(A.cst(i, jj, k)[d]));
                ck.push_back(v);
            }
            cj.push_back(ck);
        }
        ci.push_back(cj);
    }
    j["c"] = ci;
    if (!A.label.empty()) j["label"] = A.label;
    return j;
}

} // namespace io_detail

template <ring_type R>
std::string serialize_algebra(const TernaryAlgebra<R>& A) {
    return io_detail::algebra_to_json(A).dump(2) + "\n";
}

template <ring_type R>
std::string serialize_space(const QuadraticSpace<R>& s) {
    return io_detail::space_to_json(s).dump(2) + "\n";
}

inline AlgebraVariant parse_algebra(const std::string& text) {
    auto j = io_detail::json::parse(text, nullptr, /*allow_exceptions=*/true);
    auto desc = RingDesc::parse(j.at("ring").get<std::string>());
    return with_ring(desc, [&](auto ring) -> AlgebraVariant {
        return io_detail::algebra_from_json(ring, j);
    });
}

inline SpaceVariant parse_space(const std::string& text) {
    auto j = io_detail::json::parse(text);
    auto desc = RingDesc::parse(j.at("ring").get<std::string>());
    return with_ring(desc, [&](auto ring) -> SpaceVariant {
        return io_detail::space_from_json(ring, j);
    });
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

inline AlgebraVariant load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

// --- Cayley tables -------------------------------------------------------------

inline std::string serialize_magma(const Magma& m) {
    std::ostringstream os;
    os << "elements:";
    for (int i = 0; i < m.k; ++i) os << (i ? "," : " ") << m.labels[i];
    os << "\n";
    for (int x = 0; x < m.k; ++x) {
        for (int y = 0; y < m.k; ++y) os << (y ? " " : "") << m.labels[m.mul(x, y)];
        os << "\n";
    }
    return os.str();
}

inline std::string serialize_ternary_magma(const TernaryMagma& tm) {
    auto d = tm.densified();
    std::ostringstream os;
    os << "elements:";
    for (int i = 0; i < d.k; ++i) os << (i ? "," : " ") << d.labels[i];
    os << "\n";
    for (int x = 0; x < d.k; ++x) {
        for (int y = 0; y < d.k; ++y) {
            for (int z = 0; z < d.k; ++z) os << (z ? " " : "") << d.labels[d.op(x, y, z)];
            os << "\n";
        }
        if (x + 1 < d.k) os << "\n";
    }
    return os.str();
}

namespace io_detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) { out.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    out.push_back(cur);
    return out;
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

} // namespace io_detail

/// Parses binary tables (k rows) and ternary tables (k blocks of k rows).
inline std::variant<Magma, TernaryMagma> parse_cayley(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("elements:", 0) != 0)
        throw ParseError("cayley file must start with 'elements:'");
    std::vector<std::string> labels;
    for (auto& l : io_detail::split(line.substr(9), ',')) {
        std::string t(detail::trim(l));
        if (!t.empty()) labels.push_back(t);
    }
    const int k = static_cast<int>(labels.size());
    if (k == 0) throw ParseError("no elements listed");
    std::map<std::string, int> idx;
    for (int i = 0; i < k; ++i) {
        if (idx.count(labels[i])) throw ParseError("duplicate element label '" + labels[i] + "'");
        idx[labels[i]] = i;
    }
    std::vector<std::vector<int>> rows;
    while (std::getline(in, line)) {
        auto ts = io_detail::tokens(line);
        if (ts.empty()) continue;
        if (static_cast<int>(ts.size()) != k) throw ParseError("table row has wrong width");
        std::vector<int> row;
        for (auto& t : ts) {
            auto it = idx.find(t);
            if (it == idx.end()) throw ParseError("unknown label '" + t + "'");
            row.push_back(it->second);
        }
        rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) == k) {
        std::vector<int> flat;
        for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
        return Magma::make(labels, flat);
    }
    if (static_cast<int>(rows.size()) == k * k) {
        TernaryMagma t;
        t.labels = labels;
        t.k = k;
        t.dense.reserve(static_cast<std::size_t>(k) * k * k);
        for (auto& r : rows) t.dense.insert(t.dense.end(), r.begin(), r.end());
        return t;
    }
    throw ParseError("expected k rows (binary) or k*k rows (ternary)");
}

} // namespace sphere
