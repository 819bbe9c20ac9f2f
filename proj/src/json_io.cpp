#include "tf/json_io.hpp"

#include <fstream>
#include <sstream>

namespace tf {

namespace {

DimTuple parse_shape(const Json& j)
{
    if (!j.contains("shape") || !j["shape"].is_array())
        throw ParseError("missing or malformed \"shape\"");
    DimTuple shape;
    for (const auto& x : j["shape"]) {
        if (!x.is_number_integer() || x.get<long>() < 1)
            throw ParseError("shape entries must be positive integers");
        shape.push_back(x.get<long>());
    }
    if (shape.empty())
        throw ParseError("shape must have at least one leg");
    return shape;
}

std::vector<long> parse_index(const Json& j, const DimTuple& shape, size_t pos)
{
    if (!j.is_array() || j.size() != shape.size())
        throw ParseError("entry " + std::to_string(pos) + ": index arity mismatch");
    std::vector<long> idx;
    for (size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_number_integer())
            throw ParseError("entry " + std::to_string(pos) + ": non-integer index");
        long i = j[k].get<long>();
        if (i < 0 || i >= shape[k])
            throw ParseError("entry " + std::to_string(pos) + ": index out of range");
        idx.push_back(i);
    }
    return idx;
}

std::vector<Rational> parse_rat_list(const Json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + ": expected coefficient list");
    std::vector<Rational> v;
    for (const auto& x : j) {
        if (!x.is_string())
            throw ParseError(std::string(what) + ": coefficients must be strings");
        v.push_back(rat_parse(x.get<std::string>()));
    }
    return v;
}

Json rat_list_json(const std::vector<Rational>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(rat_str(x));
    return a;
}

template <class S, class ParseValue>
Tensor<S> parse_entries(const Json& j, const DimTuple& shape, const S& zero, ParseValue pv)
{
    Tensor<S> t(shape, zero);
    if (!j.contains("entries"))
        return t;
    const Json& es = j["entries"];
    if (!es.is_array())
        throw ParseError("\"entries\" must be an array");
    if ((long)es.size() > t.size())
        throw ParseError("more entries than tensor positions");
    size_t pos = 0;
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("entry " + std::to_string(pos) + ": expected [value, index]");
        auto idx = parse_index(e[1], shape, pos);
        t.at(idx) = pv(e[0], pos);
        ++pos;
    }
    return t;
}

} // namespace

AnyTensor parse_tensor(const Json& j)
{
    DimTuple shape = parse_shape(j);
    std::string kind = j.value("scalar", "rational");
    if (kind == "rational") {
        return parse_entries<Rational>(j, shape, Rational(0), [](const Json& v, size_t pos) {
            if (!v.is_string())
                throw ParseError("entry " + std::to_string(pos) + ": rational value must be a string");
            return rat_parse(v.get<std::string>());
        });
    }
    if (kind.rfind("cyclotomic:", 0) == 0) {
        unsigned m = (unsigned)std::stoul(kind.substr(11));
        if (m == 0)
            throw ParseError("cyclotomic order must be positive");
        return parse_entries<Cyclotomic>(j, shape, Cyclotomic(m), [m](const Json& v, size_t pos) {
            auto c = parse_rat_list(v, ("entry " + std::to_string(pos)).c_str());
            if (c.size() > euler_phi(m))
                throw ParseError("entry " + std::to_string(pos) + ": too many cyclotomic coefficients");
            return Cyclotomic(m, std::move(c));
        });
    }
    if (kind == "epspoly") {
        return parse_entries<EpsPoly>(j, shape, EpsPoly(), [](const Json& v, size_t pos) {
            return EpsPoly(parse_rat_list(v, ("entry " + std::to_string(pos)).c_str()));
        });
    }
    throw ParseError("unknown scalar kind: " + kind);
}

AnyTensor parse_tensor_text(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_tensor(j);
}

RatTensor parse_rat_tensor_text(const std::string& text)
{
    AnyTensor t = parse_tensor_text(text);
    if (auto* r = std::get_if<RatTensor>(&t))
        return std::move(*r);
    throw ParseError("expected a rational tensor");
}

Json serialize_tensor(const Tensor<Rational>& t)
{
    Json j;
    j["shape"] = t.shape();
    j["scalar"] = "rational";
    Json entries = Json::array();
    for (long off = 0; off < t.size(); ++off)
        if (t.flat(off) != 0)
            entries.push_back(Json::array({rat_str(t.flat(off)), t.unoffset(off)}));
    j["entries"] = std::move(entries);
    return j;
}

Json serialize_tensor(const Tensor<Cyclotomic>& t)
{
    Json j;
    j["shape"] = t.shape();
    j["scalar"] = "cyclotomic:" + std::to_string(t.zero().order());
    Json entries = Json::array();
    for (long off = 0; off < t.size(); ++off)
        if (!t.flat(off).is_zero())
            entries.push_back(Json::array({rat_list_json(t.flat(off).coeffs()), t.unoffset(off)}));
    j["entries"] = std::move(entries);
    return j;
}

Json serialize_tensor(const Tensor<EpsPoly>& t)
{
    Json j;
    j["shape"] = t.shape();
    j["scalar"] = "epspoly";
    Json entries = Json::array();
    for (long off = 0; off < t.size(); ++off)
        if (!t.flat(off).is_zero())
            entries.push_back(Json::array({rat_list_json(t.flat(off).coeffs()), t.unoffset(off)}));
    j["entries"] = std::move(entries);
    return j;
}

Json serialize_tensor(const AnyTensor& t)
{
    return std::visit([](const auto& x) { return serialize_tensor(x); }, t);
}

RatDecomposition parse_decomposition(const Json& j)
{
    RatDecomposition d;
    d.shape = parse_shape(j);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ParseError("missing or malformed \"terms\"");
    size_t pos = 0;
    for (const auto& tj : j["terms"]) {
        Term<Rational> term;
        term.coeff = tj.contains("coeff") ? rat_parse(tj["coeff"].get<std::string>()) : Rational(1);
        if (!tj.contains("vectors") || !tj["vectors"].is_array()
            || tj["vectors"].size() != d.shape.size())
            throw ParseError("term " + std::to_string(pos) + ": expected one vector per leg");
        for (size_t k = 0; k < d.shape.size(); ++k) {
            auto v = parse_rat_list(tj["vectors"][k], ("term " + std::to_string(pos)).c_str());
            if ((long)v.size() != d.shape[k])
                throw ParseError("term " + std::to_string(pos) + ": vector length mismatch on leg "
                                 + std::to_string(k + 1));
            term.vectors.push_back(std::move(v));
        }
        d.terms.push_back(std::move(term));
        ++pos;
    }
    return d;
}

RatDecomposition parse_decomposition_text(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_decomposition(j);
}

Json serialize_decomposition(const RatDecomposition& d)
{
    Json j;
    j["shape"] = d.shape;
    Json terms = Json::array();
    for (const auto& t : d.terms) {
        Json tj;
        tj["coeff"] = rat_str(t.coeff);
        Json vs = Json::array();
        for (const auto& v : t.vectors)
            vs.push_back(rat_list_json(v));
        tj["vectors"] = std::move(vs);
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    return j;
}

DegenerationWitnessData parse_witness(const Json& j)
{
    DegenerationWitnessData w;
    w.shape = parse_shape(j);
    if (w.shape.size() != 3)
        throw ParseError("degeneration witnesses are order-3 only");
    if (!j.contains("q") || !j["q"].is_number_integer() || j["q"].get<long>() < 0)
        throw ParseError("missing or negative \"q\"");
    w.q = j["q"].get<long>();
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ParseError("missing or malformed \"terms\"");
    size_t pos = 0;
    for (const auto& tj : j["terms"]) {
        if (!tj.contains("vectors") || !tj["vectors"].is_array() || tj["vectors"].size() != 3)
            throw ParseError("witness term " + std::to_string(pos) + ": expected three vectors");
        std::vector<std::vector<EpsPoly>> legs;
        for (size_t k = 0; k < 3; ++k) {
            const Json& vj = tj["vectors"][k];
            if (!vj.is_array() || (long)vj.size() != w.shape[k])
                throw ParseError("witness term " + std::to_string(pos)
                                 + ": vector length mismatch on leg " + std::to_string(k + 1));
            std::vector<EpsPoly> v;
            for (const auto& cj : vj)
                v.push_back(EpsPoly(parse_rat_list(cj, ("witness term " + std::to_string(pos)).c_str())));
            legs.push_back(std::move(v));
        }
        w.terms.push_back(std::move(legs));
        ++pos;
    }
    return w;
}

DegenerationWitnessData parse_witness_text(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_witness(j);
}

Json serialize_witness(const DegenerationWitnessData& w)
{
    Json j;
    j["q"] = w.q;
    j["shape"] = w.shape;
    Json terms = Json::array();
    for (const auto& term : w.terms) {
        Json vs = Json::array();
        for (const auto& leg : term) {
            Json lv = Json::array();
            for (const auto& p : leg)
                lv.push_back(rat_list_json(p.coeffs()));
            vs.push_back(std::move(lv));
        }
        terms.push_back(Json{{"vectors", std::move(vs)}});
    }
    j["terms"] = std::move(terms);
    return j;
}

HomogPoly parse_poly(const Json& j)
{
    HomogPoly p;
    if (!j.contains("vars") || !j["vars"].is_number_integer() || j["vars"].get<long>() < 1)
        throw ParseError("missing or malformed \"vars\"");
    if (!j.contains("degree") || !j["degree"].is_number_integer() || j["degree"].get<long>() < 0)
        throw ParseError("missing or malformed \"degree\"");
    p.vars = j["vars"].get<long>();
    p.degree = j["degree"].get<long>();
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ParseError("missing or malformed \"terms\"");
    size_t pos = 0;
    for (const auto& tj : j["terms"]) {
        if (!tj.contains("exp") || !tj["exp"].is_array() || (long)tj["exp"].size() != p.vars)
            throw ParseError("poly term " + std::to_string(pos) + ": bad exponent vector");
        std::vector<long> exp;
        for (const auto& e : tj["exp"]) {
            if (!e.is_number_integer() || e.get<long>() < 0)
                throw ParseError("poly term " + std::to_string(pos) + ": negative exponent");
            exp.push_back(e.get<long>());
        }
        Rational c = tj.contains("coeff") ? rat_parse(tj["coeff"].get<std::string>()) : Rational(1);
        try {
            p.set(exp, p.get(exp) + c);
        } catch (const StructuralError& e) {
            throw ParseError("poly term " + std::to_string(pos) + ": " + e.what());
        }
        ++pos;
    }
    return p;
}

HomogPoly parse_poly_text(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_poly(j);
}

Json serialize_poly(const HomogPoly& p)
{
    Json j;
    j["vars"] = p.vars;
    j["degree"] = p.degree;
    Json terms = Json::array();
    for (const auto& [exp, c] : p.coeffs)
        terms.push_back(Json{{"exp", exp}, {"coeff", rat_str(c)}});
    j["terms"] = std::move(terms);
    return j;
}

Json cyclotomic_json(const Cyclotomic& z)
{
    if (z.is_rational())
        return rat_str(z.rational_part());
    return rat_list_json(z.coeffs());
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace tf
