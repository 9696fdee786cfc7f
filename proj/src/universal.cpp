#include "wittlab/universal.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include <json.hpp>

namespace wittlab::universal {

const char* to_string(Operation op)
{
    switch (op) {
    case Operation::Add: return "add";
    case Operation::Multiply: return "mul";
    case Operation::Negate: return "neg";
    case Operation::Frobenius: return "frob";
    }
    return "?";
}

namespace {

bool is_binary(Operation op) { return op == Operation::Add || op == Operation::Multiply; }

RingPtr universal_ring(Operation op, const TruncationSet& s)
{
    std::vector<std::string> names;
    for (auto e : s.elements())
        names.push_back("x" + std::to_string(e));
    if (is_binary(op))
        for (auto e : s.elements())
            names.push_back("y" + std::to_string(e));
    return Ring::polynomial(Ring::integers(), std::move(names));
}

using Key = std::tuple<Operation, std::uint32_t, std::vector<std::uint32_t>>;

std::shared_mutex cache_mutex;
std::map<Key, std::shared_ptr<const Polynomials>> memory_cache;

std::string file_name(Operation op, const TruncationSet& s, std::uint32_t r)
{
    std::string name = std::string(to_string(op)) + "_r" + std::to_string(r) + "_S";
    for (auto e : s.elements())
        name += "_" + std::to_string(e);
    return name + ".json";
}

nlohmann::json to_json(const Polynomials& p)
{
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : p.coordinates) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : c.terms())
            terms.push_back({t.exponents, t.coeff.get_str()});
        coords.push_back(std::move(terms));
    }
    return {{"op", to_string(p.op)}, {"r", p.r}, {"source", p.source.elements()}, {"coordinates", coords}};
}

std::optional<Polynomials> load(const std::filesystem::path& file, Operation op, const TruncationSet& s,
                                std::uint32_t r)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    try {
        auto j = nlohmann::json::parse(in);
        if (j.at("op") != to_string(op) || j.at("r") != r ||
            j.at("source").get<std::vector<std::uint32_t>>() != s.elements())
            return std::nullopt;
        Polynomials p{op, r, s, op == Operation::Frobenius ? s.quotient(r) : s, universal_ring(op, s), {}};
        for (const auto& c : j.at("coordinates")) {
            std::vector<Term> terms;
            for (const auto& t : c)
                terms.push_back(Term{t.at(0).get<Monomial>(), mpz_class(t.at(1).get<std::string>())});
            for (const auto& t : terms)
                if (t.exponents.size() != p.ring->num_variables())
                    return std::nullopt;
            p.coordinates.push_back(RingElement::from_terms(p.ring, std::move(terms)));
        }
        if (p.coordinates.size() != p.target.size())
            return std::nullopt;
        return p;
    } catch (const std::exception&) {
        // A damaged cache file is recomputed and overwritten.
        return std::nullopt;
    }
}

void store(const std::filesystem::path& file, const Polynomials& p)
{
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << to_json(p).dump();
    }
    std::filesystem::rename(tmp, file, ec);
}

} // namespace

Polynomials compute(Operation op, const TruncationSet& s, std::uint32_t r)
{
    if (op != Operation::Frobenius)
        r = 1;
    auto ring = universal_ring(op, s);
    const std::size_t n = s.size();
    std::vector<RingElement> xv, yv;
    for (std::size_t i = 0; i < n; ++i)
        xv.push_back(RingElement::variable(ring, i));
    if (is_binary(op))
        for (std::size_t i = 0; i < n; ++i)
            yv.push_back(RingElement::variable(ring, n + i));

    auto gx = witt::ghost_components(s, xv);
    std::vector<RingElement> g;
    TruncationSet target = s;
    switch (op) {
    case Operation::Add:
    case Operation::Multiply: {
        auto gy = witt::ghost_components(s, yv);
        for (std::size_t i = 0; i < n; ++i)
            g.push_back(op == Operation::Add ? gx[i] + gy[i] : gx[i] * gy[i]);
        break;
    }
    case Operation::Negate:
        for (auto& c : gx)
            g.push_back(-c);
        break;
    case Operation::Frobenius:
        target = s.quotient(r);
        for (auto e : target.elements())
            g.push_back(gx[*s.index_of(r * e)]);
        break;
    }
    return Polynomials{op, r, s, target, ring, witt::ghost_inverse(target, g)};
}

std::shared_ptr<const Polynomials> get(Operation op, const TruncationSet& s, std::uint32_t r)
{
    if (op != Operation::Frobenius)
        r = 1;
    Key key{op, r, s.elements()};
    {
        std::shared_lock lock(cache_mutex);
        auto it = memory_cache.find(key);
        if (it != memory_cache.end())
            return it->second;
    }
    std::unique_lock lock(cache_mutex);
    auto it = memory_cache.find(key);
    if (it != memory_cache.end())
        return it->second;

    std::optional<Polynomials> p;
    auto dir = cache_dir();
    if (dir)
        p = load(*dir / file_name(op, s, r), op, s, r);
    if (!p) {
        p = compute(op, s, r);
        if (dir)
            store(*dir / file_name(op, s, r), *p);
    }
    auto ptr = std::make_shared<const Polynomials>(std::move(*p));
    memory_cache.emplace(std::move(key), ptr);
    return ptr;
}

WittVector specialise(const Polynomials& p, const WittVector& x, const WittVector* y)
{
    if (x.truncation() != p.source)
        throw DescriptorMismatch("universal polynomials for " + p.source.to_string() + " applied to " +
                                 x.truncation().to_string());
    std::vector<RingElement> images = x.coords();
    if (is_binary(p.op)) {
        if (!y)
            throw PreconditionError(std::string("binary operation ") + to_string(p.op) + " needs two arguments");
        if (y->truncation() != x.truncation() || !same_ring(y->ring(), x.ring()))
            throw DescriptorMismatch("operands of " + std::string(to_string(p.op)) + " differ in truncation or ring");
        images.insert(images.end(), y->coords().begin(), y->coords().end());
    }
    std::vector<RingElement> coords;
    coords.reserve(p.coordinates.size());
    for (const auto& c : p.coordinates)
        coords.push_back(c.substitute(x.ring(), images));
    return WittVector(p.target, x.ring(), std::move(coords));
}

std::optional<std::filesystem::path> cache_dir()
{
    const char* env = std::getenv("WITTLAB_CACHE_DIR");
    if (!env || !*env)
        return std::nullopt;
    return std::filesystem::path(env);
}

void clear_memory_cache()
{
    std::unique_lock lock(cache_mutex);
    memory_cache.clear();
}

} // namespace wittlab::universal
