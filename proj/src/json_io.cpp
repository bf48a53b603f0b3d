#include "orthosmith/json_io.hpp"

#include <json.hpp>

namespace orthosmith {

namespace {

using nlohmann::json;

Integer parse_integer_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw validation_error(where + ": not a valid integer literal");
        }
    }
    throw validation_error(where + ": expected an integer or integer string");
}

Rational parse_rational_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (!j.is_string()) throw validation_error(where + ": expected a \"p/q\" string or integer");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        const Integer num(s.substr(0, slash));
        const Integer den(s.substr(slash + 1));
        if (is_zero(den)) throw validation_error(where + ": zero denominator");
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw validation_error(where + ": not a valid rational literal");
    }
}

GaussianInteger parse_gaussian_field(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw validation_error(where + ": expected a two-element [re, im] array");
    return {parse_integer_field(j[0], where + "[0]"), parse_integer_field(j[1], where + "[1]")};
}

json integer_to_json(const Integer& v) {
    if (fits_int64(v)) return json(to_int64(v));
    return json(v.get_str());
}

json rational_to_json(const Rational& v) {
    return json(numerator(v).get_str() + "/" + denominator(v).get_str());
}

json gaussian_to_json(const GaussianInteger& v) {
    return json::array({integer_to_json(v.re), integer_to_json(v.im)});
}

template <typename T, typename ParseEntry>
Matrix<T> parse_entries(const json& rows, std::size_t n, ParseEntry&& parse) {
    if (!rows.is_array() || rows.size() != n)
        throw validation_error("entries: expected " + std::to_string(n) + " rows");
    Matrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw validation_error("entries[" + std::to_string(i) + "]: expected " +
                                   std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = parse(row[j], "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return m;
}

template <typename T, typename EntryToJson>
json entries_to_json(const Matrix<T>& m, EntryToJson&& conv) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(conv(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

const char* ring_name(ScalarRing ring) {
    switch (ring) {
        case ScalarRing::integers: return "Z";
        case ScalarRing::rationals: return "Q";
        case ScalarRing::gaussian_integers: return "Zi";
    }
    return "?";
}

ScalarRing ring_from_name(const std::string& name) {
    if (name == "Z") return ScalarRing::integers;
    if (name == "Q") return ScalarRing::rationals;
    if (name == "Zi") return ScalarRing::gaussian_integers;
    throw validation_error("ring: expected \"Z\", \"Q\" or \"Zi\", got \"" + name + "\"");
}

AnyMatrix parse_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("matrix JSON: ") + e.what());
    }
    if (!j.is_object()) throw validation_error("matrix JSON: expected a top-level object");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1)
        throw validation_error("n: expected a positive integer");
    const auto n = static_cast<std::size_t>(j["n"].get<std::int64_t>());
    if (n > 64) throw validation_error("n: matrices larger than 64x64 are not supported");
    if (!j.contains("ring") || !j["ring"].is_string())
        throw validation_error("ring: expected a string");
    if (!j.contains("entries")) throw validation_error("entries: missing");

    AnyMatrix out;
    out.ring = ring_from_name(j["ring"].get<std::string>());
    switch (out.ring) {
        case ScalarRing::integers:
            out.value = parse_entries<Integer>(j["entries"], n, parse_integer_field);
            break;
        case ScalarRing::rationals:
            out.value = parse_entries<Rational>(j["entries"], n, parse_rational_field);
            break;
        case ScalarRing::gaussian_integers:
            out.value = parse_entries<GaussianInteger>(j["entries"], n, parse_gaussian_field);
            break;
    }
    return out;
}

std::string matrix_to_json(const Matrix<Integer>& m) {
    json j;
    j["n"] = m.rows();
    j["ring"] = "Z";
    j["entries"] = entries_to_json(m, integer_to_json);
    return j.dump();
}

std::string matrix_to_json(const Matrix<Rational>& m) {
    json j;
    j["n"] = m.rows();
    j["ring"] = "Q";
    j["entries"] = entries_to_json(m, rational_to_json);
    return j.dump();
}

std::string matrix_to_json(const Matrix<GaussianInteger>& m) {
    json j;
    j["n"] = m.rows();
    j["ring"] = "Zi";
    j["entries"] = entries_to_json(m, gaussian_to_json);
    return j.dump();
}

std::string matrix_to_json(const AnyMatrix& m) {
    return std::visit([](const auto& mat) { return matrix_to_json(mat); }, m.value);
}

Matrix<Integer> require_integer_matrix(const AnyMatrix& m) {
    if (const auto* z = std::get_if<Matrix<Integer>>(&m.value)) return *z;
    if (const auto* q = std::get_if<Matrix<Rational>>(&m.value)) {
        Matrix<Integer> out(q->rows(), q->cols());
        for (std::size_t i = 0; i < q->rows(); ++i)
            for (std::size_t j = 0; j < q->cols(); ++j) {
                const Rational& e = (*q)(i, j);
                if (denominator(e) != 1)
                    throw validation_error("entries: rational matrix is not integral");
                out(i, j) = numerator(e);
            }
        return out;
    }
    throw validation_error("ring: expected an integer matrix");
}

Matrix<GaussianInteger> require_gaussian_matrix(const AnyMatrix& m) {
    if (const auto* g = std::get_if<Matrix<GaussianInteger>>(&m.value)) return *g;
    return to_gaussian(require_integer_matrix(m));
}

Matrix<Rational> require_rational_matrix(const AnyMatrix& m) {
    if (const auto* q = std::get_if<Matrix<Rational>>(&m.value)) return *q;
    if (const auto* z = std::get_if<Matrix<Integer>>(&m.value)) {
        Matrix<Rational> out(z->rows(), z->cols());
        for (std::size_t i = 0; i < z->rows(); ++i)
            for (std::size_t j = 0; j < z->cols(); ++j) out(i, j) = Rational((*z)(i, j));
        return out;
    }
    throw validation_error("ring: expected a rational or integer matrix");
}

} // namespace orthosmith
