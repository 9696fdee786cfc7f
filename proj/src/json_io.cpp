#include "wittlab/json_io.hpp"

#include <sstream>

namespace wittlab::json_io {

const json& field(const json& j, const char* key)
{
    if (!j.is_object())
        throw SchemaError(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

namespace {

std::uint32_t small_uint(const json& j, const char* what)
{
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        const auto v = j.get<std::uint64_t>();
        if (v <= 0xffffffffu)
            return static_cast<std::uint32_t>(v);
    }
    if (j.is_string()) {
        const auto v = integer_from_json(j);
        if (v >= 0 && v.fits_ulong_p() && v.get_ui() <= 0xffffffffu)
            return static_cast<std::uint32_t>(v.get_ui());
    }
    throw SchemaError(std::string(what) + " must be a nonnegative integer, got " + j.dump());
}

Monomial parse_exponents(std::string key, std::size_t nvars)
{
    if (!key.empty() && key.front() == '[') {
        if (key.back() != ']')
            throw SchemaError("bad exponent key '" + key + "'");
        key = key.substr(1, key.size() - 2);
    }
    Monomial e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto v = integer_from_json(json(part));
        if (v < 0 || !v.fits_ulong_p() || v.get_ui() > 0xffffffffu)
            throw SchemaError("bad exponent in key '" + key + "'");
        e.push_back(static_cast<std::uint32_t>(v.get_ui()));
    }
    if (e.size() != nvars)
        throw SchemaError("exponent key '" + key + "' needs " + std::to_string(nvars) + " entries");
    return e;
}

std::vector<std::size_t> ranks_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw SchemaError("'levels' must be a nonempty array of ranks");
    std::vector<std::size_t> ranks;
    for (const auto& r : j)
        ranks.push_back(small_uint(r, "rank"));
    return ranks;
}

std::uint32_t modulus_from_json(const json& j) { return small_uint(j, "modulus"); }

} // namespace

mpz_class integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? mpz_class(std::to_string(j.get<std::uint64_t>()))
                                      : mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        std::size_t start = s.find_first_not_of(" \t");
        std::size_t end = s.find_last_not_of(" \t");
        if (start == std::string::npos)
            throw SchemaError("empty integer string");
        s = s.substr(start, end - start + 1);
        const std::size_t digits = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (digits == s.size() || s.find_first_not_of("0123456789", digits) != std::string::npos)
            throw SchemaError("not a decimal integer: '" + s + "'");
        if (s[0] == '+')
            s = s.substr(1);
        return mpz_class(s, 10);
    }
    throw SchemaError("expected an integer (decimal string or number), got " + j.dump());
}

json to_json(const mpz_class& v) { return v.get_str(); }

json to_json(const RingElement& e)
{
    if (!e.ring()->is_polynomial())
        return e.constant_term().get_str();
    json out = json::object();
    for (const auto& t : e.terms()) {
        std::string key;
        for (std::size_t i = 0; i < t.exponents.size(); ++i)
            key += (i ? "," : "") + std::to_string(t.exponents[i]);
        out[key] = t.coeff.get_str();
    }
    return out;
}

RingElement element_from_json(const json& j, const RingPtr& ring)
{
    if (j.is_string() || j.is_number_integer())
        return RingElement::from_integer(ring, integer_from_json(j));
    if (j.is_object() && ring->is_polynomial()) {
        std::vector<Term> terms;
        for (const auto& [key, value] : j.items())
            terms.push_back(Term{parse_exponents(key, ring->num_variables()), integer_from_json(value)});
        return RingElement::from_terms(ring, std::move(terms));
    }
    throw SchemaError("cannot read an element of " + ring->name() + " from " + j.dump());
}

json to_json(const TruncationSet& s) { return s.elements(); }

TruncationSet truncation_from_json(const json& j)
{
    if (j.is_number_integer() || (j.is_string() && !j.get<std::string>().empty()))
        return TruncationSet::full(small_uint(j, "truncation"));
    if (!j.is_array())
        throw SchemaError("truncation must be an array of positive integers or a single m");
    std::vector<std::uint32_t> el;
    for (const auto& e : j)
        el.push_back(small_uint(e, "truncation element"));
    return TruncationSet(std::move(el));
}

json to_json(const WittVector& x)
{
    json coords = json::array();
    for (const auto& c : x.coords())
        coords.push_back(to_json(c));
    return {{"truncation", to_json(x.truncation())}, {"ring", x.ring()->name()}, {"coords", coords}};
}

WittVector witt_from_json(const json& j)
{
    const auto ring = Ring::parse(field(j, "ring").get<std::string>());
    const auto s = truncation_from_json(field(j, "truncation"));
    const auto& cj = field(j, "coords");
    if (!cj.is_array())
        throw SchemaError("'coords' must be an array");
    std::vector<RingElement> coords;
    for (const auto& c : cj)
        coords.push_back(element_from_json(c, ring));
    if (coords.size() != s.size())
        throw SchemaError("'coords' has " + std::to_string(coords.size()) + " entries for truncation " + s.to_string());
    return WittVector(s, ring, std::move(coords));
}

json to_json(const GhostVector& g)
{
    json comps = json::array();
    for (const auto& c : g.components)
        comps.push_back(to_json(c));
    return {{"components", comps}};
}

json to_json(const UPoly& p)
{
    json out = json::array();
    for (const auto& c : p.coeffs())
        out.push_back(to_json(c));
    return out;
}

UPoly poly_from_json(const json& j, const RingPtr& ring)
{
    if (!j.is_array())
        throw SchemaError("polynomial in t must be a coefficient array [c_0, ..., c_d]");
    std::vector<RingElement> c;
    for (const auto& e : j)
        c.push_back(element_from_json(e, ring));
    return UPoly(ring, std::move(c));
}

json to_json(const GammaCycleClass& x)
{
    json nf = json::array();
    for (const auto& a : x.normal_form())
        nf.push_back(to_json(a));
    return {{"ring", x.ring()->name()}, {"modulus", x.modulus()}, {"normal_form", nf}};
}

GammaCycleClass class_from_json(const json& j)
{
    const auto ring = Ring::parse(field(j, "ring").get<std::string>());
    const auto m = modulus_from_json(field(j, "modulus"));
    const auto& nj = field(j, "normal_form");
    if (!nj.is_array())
        throw SchemaError("'normal_form' must be an array");
    std::vector<RingElement> nf;
    for (const auto& a : nj)
        nf.push_back(element_from_json(a, ring));
    if (nf.size() != m)
        throw SchemaError("'normal_form' needs " + std::to_string(m) + " entries");
    return GammaCycleClass(ring, m, std::move(nf));
}

json to_json(const GammaChain& c)
{
    json terms = json::array();
    for (const auto& t : c.terms())
        terms.push_back({{"generator", to_json(t.generator)}, {"multiplicity", t.multiplicity.get_str()}});
    return {{"ring", c.ring()->name()}, {"modulus", c.modulus()}, {"terms", terms}};
}

GammaChain chain_from_json(const json& j)
{
    const auto ring = Ring::parse(field(j, "ring").get<std::string>());
    const auto m = modulus_from_json(field(j, "modulus"));
    std::vector<CycleTerm> terms;
    const auto& tj = field(j, "terms");
    if (!tj.is_array())
        throw SchemaError("'terms' must be an array");
    for (const auto& t : tj) {
        mpz_class mult = 1;
        if (t.contains("multiplicity"))
            mult = integer_from_json(t["multiplicity"]);
        terms.push_back(CycleTerm{poly_from_json(field(t, "generator"), ring), mult});
    }
    return GammaChain(ring, m, std::move(terms));
}

json to_json(const TriangularIdeal& i)
{
    return {{"t_generator", to_json(i.u)}, {"y1_minus", to_json(i.g)}, {"text", i.to_string()}};
}

json to_json(const IntMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(m.at(i, k).get_str());
        out.push_back(std::move(row));
    }
    return out;
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols)
{
    if (!j.is_array())
        throw SchemaError("matrix must be an array of rows");
    if (j.empty() && (rows == 0 || cols == 0))
        return IntMatrix(rows, cols);
    if (j.size() != rows)
        throw SchemaError("matrix needs " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw SchemaError("matrix row " + std::to_string(i) + " needs " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = integer_from_json(row[k]);
    }
    return m;
}

json to_json(const ChainComplex& c)
{
    json d = json::array();
    for (const auto& m : c.boundaries())
        d.push_back(to_json(m));
    return {{"levels", c.ranks()}, {"boundaries", d}};
}

ChainComplex complex_from_json(const json& j)
{
    const auto ranks = ranks_from_json(field(j, "levels"));
    const auto& bj = field(j, "boundaries");
    if (!bj.is_array() || bj.size() != ranks.size() - 1)
        throw SchemaError("'boundaries' needs " + std::to_string(ranks.size() - 1) + " matrices (d_1..d_N)");
    std::vector<IntMatrix> d;
    for (std::size_t n = 1; n < ranks.size(); ++n)
        d.push_back(matrix_from_json(bj[n - 1], ranks[n - 1], ranks[n]));
    return ChainComplex(ranks, std::move(d));
}

json to_json(const CubicalGroup& c)
{
    json faces = json::array(), degens = json::array(), ext = json::array();
    for (std::size_t n = 1; n <= c.top_level(); ++n) {
        json level = json::array(), dl = json::array();
        for (std::size_t i = 1; i <= n; ++i) {
            level.push_back({{"0", to_json(c.face(n, i, Face::Zero))}, {"inf", to_json(c.face(n, i, Face::Infinity))}});
            if (c.has_degeneracies())
                dl.push_back(to_json(c.degeneracy(n, i)));
        }
        faces.push_back(std::move(level));
        if (c.has_degeneracies())
            degens.push_back(std::move(dl));
        if (c.has_extension() && n < c.top_level())
            ext.push_back(to_json(c.extension(n)));
    }
    return {{"levels", c.ranks()}, {"faces", faces}, {"degeneracies", degens}, {"extension", ext}};
}

CubicalGroup cubical_from_json(const json& j)
{
    const auto ranks = ranks_from_json(field(j, "levels"));
    const std::size_t top = ranks.size() - 1;
    const auto& fj = field(j, "faces");
    if (!fj.is_array() || fj.size() != top)
        throw SchemaError("'faces' needs one entry per level 1.." + std::to_string(top));
    std::vector<std::vector<std::pair<IntMatrix, IntMatrix>>> faces(top);
    for (std::size_t n = 1; n <= top; ++n) {
        if (!fj[n - 1].is_array() || fj[n - 1].size() != n)
            throw SchemaError("'faces' level " + std::to_string(n) + " needs " + std::to_string(n) + " entries");
        for (std::size_t i = 1; i <= n; ++i) {
            const auto& p = fj[n - 1][i - 1];
            faces[n - 1].emplace_back(matrix_from_json(field(p, "0"), ranks[n - 1], ranks[n]),
                                      matrix_from_json(field(p, "inf"), ranks[n - 1], ranks[n]));
        }
    }
    std::vector<std::vector<IntMatrix>> degens;
    if (j.contains("degeneracies") && !j["degeneracies"].empty()) {
        const auto& dj = j["degeneracies"];
        if (!dj.is_array() || dj.size() != top)
            throw SchemaError("'degeneracies' needs one entry per level 1.." + std::to_string(top));
        degens.resize(top);
        for (std::size_t n = 1; n <= top; ++n) {
            if (!dj[n - 1].is_array() || dj[n - 1].size() != n)
                throw SchemaError("'degeneracies' level " + std::to_string(n) + " needs " + std::to_string(n) +
                                  " entries");
            for (std::size_t i = 1; i <= n; ++i)
                degens[n - 1].push_back(matrix_from_json(dj[n - 1][i - 1], ranks[n], ranks[n - 1]));
        }
    }
    std::vector<IntMatrix> ext;
    if (j.contains("extension") && !j["extension"].empty()) {
        const auto& ej = j["extension"];
        if (!ej.is_array() || ej.size() + 1 != top)
            throw SchemaError("'extension' needs one entry per level 1.." + std::to_string(top - 1));
        for (std::size_t n = 1; n < top; ++n)
            ext.push_back(matrix_from_json(ej[n - 1], ranks[n + 1], ranks[n]));
    }
    return CubicalGroup(ranks, std::move(faces), std::move(degens), std::move(ext));
}

json to_json(const HomologyGroup& h)
{
    json out = json::array();
    for (std::size_t i = 0; i < h.free_rank; ++i)
        out.push_back("Z");
    for (const auto& t : h.torsion)
        out.push_back("Z/" + t.get_str());
    return out;
}

json homology_to_json(const std::vector<HomologyGroup>& h)
{
    json out = json::object();
    for (std::size_t n = 0; n < h.size(); ++n)
        out["H" + std::to_string(n)] = to_json(h[n]);
    return out;
}

} // namespace wittlab::json_io
