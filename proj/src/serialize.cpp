#include "mmsym/serialize.hpp"

#include <json.hpp>

#include "mmsym/errors.hpp"

namespace mmsym {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational entry_to_rational(const ordered_json& value, const std::string& where)
{
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    if (value.is_number_integer())
        return parse_rational(std::to_string(value.get<long long>()));
    throw parse_error(where + ": matrix entry must be a rational string or an integer");
}

ExactMatrix json_to_matrix(const ordered_json& value, const std::string& where)
{
    if (!value.is_array() || value.empty())
        throw parse_error(where + ": expected a nonempty array of rows");
    std::size_t rows = value.size();
    if (!value[0].is_array() || value[0].empty())
        throw parse_error(where + ": rows must be nonempty arrays");
    std::size_t cols = value[0].size();
    ExactMatrix mat(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const ordered_json& row = value[i];
        if (!row.is_array() || row.size() != cols)
            throw parse_error(where + ": ragged rows in matrix");
        for (std::size_t j = 0; j < cols; ++j)
            mat.at(i, j) = entry_to_rational(row[j], where);
    }
    return mat;
}

ordered_json matrix_to_json(const ExactMatrix& mat)
{
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < mat.cols(); ++j)
            row.push_back(rational_to_string(mat.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json parse_document(const std::string& text)
{
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw parse_error(std::string("invalid JSON: ") + err.what());
    }
}

std::size_t positive_int_field(const ordered_json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1)
        throw parse_error(std::string("field \"") + key + "\" must be a positive integer");
    return static_cast<std::size_t>(doc[key].get<long long>());
}

} // namespace

BilinearAlgorithm parse_algorithm(const std::string& text)
{
    ordered_json doc = parse_document(text);
    if (!doc.is_object())
        throw parse_error("algorithm document must be a JSON object");
    BilinearAlgorithm alg;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw parse_error("field \"name\" must be a string");
        alg.name = doc["name"].get<std::string>();
    }
    alg.m = positive_int_field(doc, "m");
    alg.n = positive_int_field(doc, "n");
    alg.p = positive_int_field(doc, "p");
    if (!doc.contains("triples") || !doc["triples"].is_array() || doc["triples"].empty())
        throw parse_error("field \"triples\" must be a nonempty array");
    std::size_t index = 0;
    for (const ordered_json& entry : doc["triples"]) {
        ++index;
        std::string where = "triple " + std::to_string(index);
        if (!entry.is_object())
            throw parse_error(where + ": expected an object with a, b, c");
        for (const char* key : {"a", "b", "c"})
            if (!entry.contains(key))
                throw parse_error(where + ": missing factor \"" + key + "\"");
        alg.triples.push_back(Triple{json_to_matrix(entry["a"], where + " factor a"),
                                     json_to_matrix(entry["b"], where + " factor b"),
                                     json_to_matrix(entry["c"], where + " factor c")});
    }
    alg.validate();
    return alg;
}

std::string serialize_algorithm(const BilinearAlgorithm& alg)
{
    ordered_json doc;
    doc["name"] = alg.name;
    doc["m"] = alg.m;
    doc["n"] = alg.n;
    doc["p"] = alg.p;
    ordered_json triples = ordered_json::array();
    for (const Triple& t : alg.triples) {
        ordered_json entry;
        entry["a"] = matrix_to_json(t.a);
        entry["b"] = matrix_to_json(t.b);
        entry["c"] = matrix_to_json(t.c);
        triples.push_back(entry);
    }
    doc["triples"] = triples;
    return doc.dump(2) + "\n";
}

IsotropyElement parse_element(const std::string& text)
{
    ordered_json doc = parse_document(text);
    if (!doc.is_object())
        throw parse_error("element document must be a JSON object");
    if (!doc.contains("sigma") || !doc["sigma"].is_string())
        throw parse_error("field \"sigma\" must be a permutation name string");
    FactorPermutation sigma = parse_sigma(doc["sigma"].get<std::string>());
    for (const char* key : {"a", "b", "c"})
        if (!doc.contains(key))
            throw parse_error(std::string("missing matrix field \"") + key + "\"");
    ExactMatrix a = json_to_matrix(doc["a"], "matrix a");
    ExactMatrix b = json_to_matrix(doc["b"], "matrix b");
    ExactMatrix c = json_to_matrix(doc["c"], "matrix c");
    if (!a.is_square() || !b.is_square() || !c.is_square())
        throw shape_error("element matrices must be square");
    Format format{a.rows(), b.rows(), c.rows()};
    return make_element(sigma, a, b, c, format);
}

std::string serialize_element(const IsotropyElement& g)
{
    ordered_json doc;
    doc["sigma"] = sigma_name(g.sigma);
    doc["a"] = matrix_to_json(g.a);
    doc["b"] = matrix_to_json(g.b);
    doc["c"] = matrix_to_json(g.c);
    return doc.dump(2) + "\n";
}

ExactMatrix parse_matrix(const std::string& text)
{
    return json_to_matrix(parse_document(text), "matrix");
}

std::string serialize_matrix(const ExactMatrix& mat)
{
    return matrix_to_json(mat).dump(2) + "\n";
}

} // namespace mmsym
