// Writes the bundled extended cubical examples to tests/fixtures.
//
// Every model is built from the cubes of I^k that are "monomial": an n-cube
// assigns to each of the k target coordinates either the absorbing constant
// or a product of a set of the variables x_1..x_n, each variable used at most
// once (the empty product is the neutral constant). Faces substitute x_i = 1
// (d^0, neutral) or x_i = 0 (d^inf, absorbing), degeneracies add an unused
// variable, and mu_n^* substitutes x_n -> x_n x_{n+1}. The models are the
// whole cube, its boundary (cubes with some constant coordinate) and the
// quotient of the cube by its boundary.
//
//   gen_fixtures --out DIR      write all fixtures
//   gen_fixtures --check DIR    exit 1 unless DIR holds exactly these files

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>

#include "wittlab/json_io.hpp"

namespace {

using wittlab::CubicalGroup;
using wittlab::IntMatrix;
using nlohmann::json;

struct Cube {
    /// coord[v] = target coordinate of variable v, or -1 when unused
    std::vector<int> coord;
    std::vector<bool> absorbing;

    bool operator<(const Cube& o) const { return std::tie(absorbing, coord) < std::tie(o.absorbing, o.coord); }

    bool has_constant_coordinate() const
    {
        for (std::size_t c = 0; c < absorbing.size(); ++c) {
            if (absorbing[c])
                return true;
            bool used = false;
            for (int x : coord)
                used = used || x == static_cast<int>(c);
            if (!used)
                return true;
        }
        return false;
    }
};

std::vector<Cube> all_cubes(std::size_t k, std::size_t n)
{
    std::vector<Cube> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Cube c{std::vector<int>(n, -1), std::vector<bool>(k)};
        std::vector<int> open{-1};
        for (std::size_t j = 0; j < k; ++j) {
            c.absorbing[j] = (mask >> j) & 1;
            if (!c.absorbing[j])
                open.push_back(static_cast<int>(j));
        }
        std::function<void(std::size_t)> assign = [&](std::size_t v) {
            if (v == n) {
                out.push_back(c);
                return;
            }
            for (int target : open) {
                c.coord[v] = target;
                assign(v + 1);
            }
        };
        assign(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Cube face(Cube c, std::size_t i, bool infinity)
{
    const int target = c.coord[i - 1];
    c.coord.erase(c.coord.begin() + static_cast<long>(i - 1));
    if (infinity && target >= 0) {
        c.absorbing[static_cast<std::size_t>(target)] = true;
        for (int& x : c.coord)
            if (x == target)
                x = -1;
    }
    return c;
}

Cube degeneracy(Cube c, std::size_t i)
{
    c.coord.insert(c.coord.begin() + static_cast<long>(i - 1), -1);
    return c;
}

Cube extension(Cube c)
{
    c.coord.push_back(c.coord.back());
    return c;
}

enum class Part { Whole, Boundary, Quotient };

struct Model {
    std::string name;
    std::string description;
    std::size_t k;
    std::size_t top;
    Part part;
};

CubicalGroup build(const Model& m)
{
    auto keep = [&](const Cube& c) {
        switch (m.part) {
        case Part::Whole: return true;
        case Part::Boundary: return c.has_constant_coordinate();
        case Part::Quotient: return !c.has_constant_coordinate();
        }
        return false;
    };
    std::vector<std::vector<Cube>> basis(m.top + 1);
    std::vector<std::map<Cube, std::size_t>> index(m.top + 1);
    std::vector<std::size_t> ranks;
    for (std::size_t n = 0; n <= m.top; ++n) {
        for (const auto& c : all_cubes(m.k, n))
            if (keep(c)) {
                index[n][c] = basis[n].size();
                basis[n].push_back(c);
            }
        ranks.push_back(basis[n].size());
    }
    // Column j of the matrix is the image of basis cube j; images outside the
    // model are zero in the quotient and cannot occur in the boundary.
    auto matrix = [&](std::size_t from, std::size_t to, const std::function<Cube(const Cube&)>& f) {
        IntMatrix a(ranks[to], ranks[from]);
        for (std::size_t j = 0; j < ranks[from]; ++j) {
            const Cube image = f(basis[from][j]);
            auto it = index[to].find(image);
            if (it != index[to].end())
                a.at(it->second, j) = 1;
            else if (m.part != Part::Quotient)
                throw std::logic_error("model not closed under structure maps");
        }
        return a;
    };
    std::vector<std::vector<std::pair<IntMatrix, IntMatrix>>> faces(m.top);
    std::vector<std::vector<IntMatrix>> degens(m.top);
    std::vector<IntMatrix> ext;
    for (std::size_t n = 1; n <= m.top; ++n)
        for (std::size_t i = 1; i <= n; ++i) {
            faces[n - 1].emplace_back(matrix(n, n - 1, [i](const Cube& c) { return face(c, i, false); }),
                                      matrix(n, n - 1, [i](const Cube& c) { return face(c, i, true); }));
            degens[n - 1].push_back(matrix(n - 1, n, [i](const Cube& c) { return degeneracy(c, i); }));
        }
    for (std::size_t n = 1; n < m.top; ++n)
        ext.push_back(matrix(n, n + 1, extension));
    return CubicalGroup(ranks, std::move(faces), std::move(degens), std::move(ext));
}

const std::vector<Model> models = {
    {"point", "the 0-cube I^0", 0, 4, Part::Whole},
    {"interval", "the 1-cube I", 1, 5, Part::Whole},
    {"square", "the 2-cube I^2", 2, 4, Part::Whole},
    {"square_boundary", "cubes of I^2 with a constant coordinate, a circle", 2, 4, Part::Boundary},
    {"cube_boundary", "cubes of I^3 with a constant coordinate, a 2-sphere", 3, 3, Part::Boundary},
    {"circle", "I modulo its boundary", 1, 5, Part::Quotient},
    {"sphere2", "I^2 modulo its boundary", 2, 4, Part::Quotient},
};

std::string render(const Model& m)
{
    json j = wittlab::json_io::to_json(build(m));
    j["name"] = m.name;
    j["description"] = m.description;
    return j.dump() + "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generate the extended cubical fixtures"};
    std::string out_dir, check_dir;
    auto* out = app.add_option("--out", out_dir, "directory to write");
    app.add_option("--check", check_dir, "directory to compare against")->excludes(out);
    CLI11_PARSE(app, argc, argv);
    if (out_dir.empty() && check_dir.empty()) {
        std::cerr << "one of --out or --check is required\n";
        return 2;
    }

    int stale = 0;
    for (const auto& m : models) {
        const std::string text = render(m);
        const auto file = std::filesystem::path(out_dir.empty() ? check_dir : out_dir) / (m.name + ".json");
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            std::ofstream(file, std::ios::binary) << text;
            std::cout << "wrote " << file.string() << "\n";
            continue;
        }
        std::ifstream in(file, std::ios::binary);
        std::stringstream existing;
        existing << in.rdbuf();
        if (!in || existing.str() != text) {
            std::cerr << file.string() << " is missing or out of date\n";
            ++stale;
        }
    }
    return stale ? 1 : 0;
}
