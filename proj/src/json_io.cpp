#include "diffmod/json_io.hpp"

#include "diffmod/parse.hpp"

namespace diffmod {

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

Json ratfunc_to_json(const RatFunc& f) {
    Json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

Json matrix_to_json(const RatFuncMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(ratfunc_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json connection_to_json(const DConnection& c) {
    Json j;
    j["rank"] = c.rank();
    j["A"] = matrix_to_json(c.matrix());
    return j;
}

Json lattice_to_json(const Lattice& l) {
    Json j;
    j["G"] = matrix_to_json(l.generators());
    return j;
}

Json profile_to_json(const ZeroPoleProfile& p) {
    Json j = Json::object();
    for (const auto& [a, ds] : p.points) {
        Json arr = Json::array();
        for (int d : ds) arr.push_back(d);
        j[rat_to_string(a)] = std::move(arr);
    }
    return j;
}

Json partition_to_json(const std::vector<long>& parts) {
    Json arr = Json::array();
    for (long k : parts) arr.push_back(k);
    return arr;
}

Json laurent_trunc_to_json(const LaurentTrunc& t) {
    Json j;
    j["low"] = t.known_zero() ? t.prec() : t.valuation();
    Json arr = Json::array();
    for (const Rat& c : t.coeffs()) arr.push_back(rat_to_string(c));
    j["coeffs"] = std::move(arr);
    j["prec"] = t.prec();
    return j;
}

Json laurent_poly_to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rat_to_string(c);
    return j;
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw ParseError("expected a rational (integer or \"a/b\" string)");
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient array");
    std::vector<Rat> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(rat_from_json(e));
    return Poly(std::move(c));
}

RatFunc ratfunc_from_json(const Json& j) {
    if (j.is_string()) return parse_ratfunc(j.get<std::string>());
    if (j.is_number_integer()) return RatFunc(Rat(static_cast<long>(j.get<long long>())));
    if (j.is_object()) {
        if (!j.contains("num")) throw ParseError("rational function object needs \"num\"");
        Poly num = poly_from_json(j.at("num"));
        Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(Rat(1));
        return RatFunc(num, den);
    }
    throw ParseError("expected a rational function (string or {\"num\",\"den\"})");
}

RatFuncMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty matrix");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    RatFuncMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix rows must have equal lengths");
        for (int k = 0; k < cols; ++k) m(i, k) = ratfunc_from_json(row.at(k));
    }
    return m;
}

RatMatrix rat_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty matrix");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix rows must have equal lengths");
        for (int k = 0; k < cols; ++k) m(i, k) = rat_from_json(row.at(k));
    }
    return m;
}

DConnection connection_from_json(const Json& j) {
    const Json& mat = j.is_object() && j.contains("A") ? j.at("A") : j;
    RatFuncMatrix m = matrix_from_json(mat);
    if (m.rows() != m.cols()) throw ParseError("connection matrix must be square");
    return DConnection(m);
}

Lattice lattice_from_json(const Json& j, int expected_rank) {
    const Json& mat = j.is_object() && j.contains("G") ? j.at("G") : j;
    RatFuncMatrix m = matrix_from_json(mat);
    if (m.rows() != expected_rank)
        throw ParseError("lattice generator matrix has the wrong rank");
    return Lattice(m);
}

std::vector<long> partition_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a partition array");
    std::vector<long> p;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("partition entries must be integers");
        p.push_back(e.get<long>());
    }
    return p;
}

} // namespace diffmod
