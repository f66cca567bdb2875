#include "bpd/io.hpp"

#include <limits>
#include <stdexcept>

namespace bpd {

namespace {

long long coeff_to_int(const Int& c) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
        throw std::logic_error("polynomial coefficient does not fit a 64-bit JSON integer");
    return c.convert_to<long long>();
}

}  // namespace

Json to_json(const Permutation& p) { return to_string(p); }

Permutation permutation_from_json(const Json& j) {
    return parse_permutation(j.get<std::string>());
}

Json to_json(const TileGrid& g) {
    Json rows = Json::array();
    std::string row;
    for (int r = 1; r <= g.n; ++r) {
        row.clear();
        for (int c = 1; c <= g.n; ++c) row += tile_char(g.at(r, c));
        rows.push_back(row);
    }
    return Json{{"n", g.n}, {"rows", rows}};
}

Json to_json(const Bpd& b) { return to_json(b.grid()); }

Bpd bpd_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::string text;
    for (const auto& row : j.at("rows")) {
        if (!text.empty()) text += '\n';
        text += row.get<std::string>();
    }
    const TileGrid g = parse_ascii(text);
    if (g.n != n) throw std::invalid_argument("bpd json: n does not match the rows");
    return Bpd::validate(g);
}

Json to_json(const SparsePoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.sorted_terms())
        terms.push_back(Json{{"coeff", coeff_to_int(c)}, {"exp", e}});
    return terms;
}

SparsePoly poly_from_json(const Json& j) {
    if (j.empty()) throw std::invalid_argument("poly json: cannot infer variable count");
    SparsePoly f(static_cast<int>(j.front().at("exp").size()));
    for (const auto& term : j)
        f.add_term(term.at("exp").get<Exponents>(), Int(term.at("coeff").get<long long>()));
    return f;
}

Json to_json(const CheckReport& report) {
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
        Json item{{"perm", to_string(v.perm)}, {"detail", v.detail}};
        if (!v.bpd_ascii.empty()) item["bpd"] = v.bpd_ascii;
        violations.push_back(item);
    }
    return Json{{"property", report.property},
                {"checked", report.checked},
                {"skipped", report.skipped},
                {"violations", violations}};
}

Json to_json(const FilledShape& shape) {
    Json fill = Json::array();
    for (const auto& [cell, label] : shape.fill)
        fill.push_back(Json{{"row", cell.row}, {"col", cell.col}, {"label", label}});
    return Json{{"rows", shape.rows}, {"fill", fill}};
}

}  // namespace bpd
