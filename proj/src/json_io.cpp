#include "utfree/json_io.hpp"

namespace utfree {

namespace {

using nlohmann::json;

Rational rational_field(const json& j) {
    if (!j.is_string()) throw ParseError("rational entries must be strings");
    auto q = parse_rational(j.get<std::string>());
    if (!q) throw ParseError("malformed rational: " + j.get<std::string>());
    return *q;
}

UTMat2 matrix_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
        j[0].size() != 2 || j[1].size() != 2)
        throw ParseError("matrices must be 2x2 arrays");
    if (rational_field(j[1][0]) != 0)
        throw ParseError("lower-left matrix entry must be \"0\"");
    return {rational_field(j[0][0]), rational_field(j[0][1]), rational_field(j[1][1])};
}

json matrix_entries(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j)
            row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(row);
    }
    return rows;
}

json witness_to_json(const Witness& w) {
    return json{{"left", w.left}, {"right", w.right}};
}

}  // namespace

Instance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("t") || !j.contains("x") || !j.contains("z"))
        throw ParseError("instance needs fields t, x, z");
    if (!j["t"].is_number_integer() || j["t"].get<long>() < 1)
        throw ParseError("t must be a positive integer");
    const auto t = j["t"].get<std::size_t>();
    Instance inst;
    inst.mx = matrix_from_json(j["x"]);
    if (!j["z"].is_array() || j["z"].size() != t + 1)
        throw ParseError("z must list exactly t+1 matrices");
    for (const auto& zj : j["z"]) inst.nz.push_back(matrix_from_json(zj));
    return inst;
}

json verdict_to_json(const Verdict& v) {
    json j{{"injective", v.injective}, {"branch", branch_name(v.branch)}};
    j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
    return j;
}

json collision_report_to_json(const CollisionReport& r) {
    json pairs = json::array();
    for (const auto& w : r.pairs) pairs.push_back(witness_to_json(w));
    return json{{"found", r.found}, {"bound", r.bound}, {"pairs", pairs}};
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("terms"))
        throw ParseError("polynomial needs fields arity, terms");
    if (!j["arity"].is_number_integer() || j["arity"].get<long>() < 1)
        throw ParseError("arity must be a positive integer");
    Polynomial p(j["arity"].get<std::size_t>());
    if (!j["terms"].is_array()) throw ParseError("terms must be an array");
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exps"))
            throw ParseError("each term needs coeff and exps");
        if (!term["exps"].is_array() || term["exps"].size() != p.arity())
            throw ParseError("exps length must equal arity");
        Polynomial::Exponents exps;
        for (const auto& e : term["exps"]) {
            if (!e.is_number_integer() || e.get<long>() < 0)
                throw ParseError("exponents must be nonnegative integers");
            exps.push_back(e.get<unsigned long>());
        }
        try {
            p.add_term(exps, rational_field(term["coeff"]));
        } catch (const ArityMismatch& e) {
            throw ParseError(e.what());
        }
    }
    return p;
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [exps, coeff] : p.terms())
        terms.push_back(json{{"coeff", to_string(coeff)}, {"exps", exps}});
    return json{{"arity", p.arity()}, {"terms", terms}};
}

json gadget_to_json(const Gadget& g) {
    return json{{"k", g.dimension},
                {"A", matrix_entries(g.a)},
                {"M", matrix_entries(g.m)},
                {"N", matrix_entries(g.n)},
                {"B", matrix_entries(g.b)}};
}

}  // namespace utfree
