#include "akg/module_cat.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef AKG_DEFAULT_CATALOG
#define AKG_DEFAULT_CATALOG "data/embeddings.json"
#endif

namespace akg::modcat {

using lie::Family;
using lie::LieType;

namespace {

ADEGraph make_graph(const LieType& t, const std::vector<std::pair<int, int>>& edges, int n) {
    ADEGraph g;
    g.type = t;
    g.size = n;
    g.adjacency = Matrix<long>(n, n);
    for (auto [a, b] : edges) {
        g.adjacency(a, b) = 1;
        g.adjacency(b, a) = 1;
    }
    g.coxeter = lie::coxeter_number(t);
    g.level = g.coxeter - 2;
    g.unit_vertex = 0;
    return g;
}

}  // namespace

ADEGraph ade_graph(const LieType& t) {
    lie::validate(t);
    const int n = t.rank;
    std::vector<std::pair<int, int>> edges;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return make_graph(t, edges, n);
        case Family::D: {
            for (int i = 0; i + 3 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 3, n - 2);
            edges.emplace_back(n - 3, n - 1);
            ADEGraph g = make_graph(t, edges, n);
            if (n == 4) g.modular_vertices = {0, 2, 3};  // the three legs of D4
            return g;
        }
        case Family::E: {
            // chain 0..n-2 with the short-branch vertex n-1 attached to the
            // trivalent node; the chain starts at the end of the longest branch
            int trivalent = (n == 6) ? 2 : ((n == 7) ? 3 : 4);
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(trivalent, n - 1);
            ADEGraph g = make_graph(t, edges, n);
            if (n == 6) g.modular_vertices = {0, 4, 5};
            if (n == 8) g.modular_vertices = {0, 6};
            return g;
        }
        default:
            throw std::invalid_argument("ade_graph: " + lie::to_string(t) + " is not simply laced");
    }
}

std::vector<Matrix<long long>> annular_matrices(const ADEGraph& g, long n_max) {
    if (n_max < 0) throw std::invalid_argument("annular_matrices: n_max must be >= 0");
    std::vector<Matrix<long long>> f;
    f.reserve(n_max + 1);
    Matrix<long long> adj = g.adjacency.cast<long long>();
    f.push_back(Matrix<long long>::identity(g.size));
    if (n_max >= 1) f.push_back(adj);
    for (long n = 2; n <= n_max; ++n) f.push_back(f[n - 1] * adj - f[n - 2]);
    return f;
}

Matrix<long long> essential_matrix(const ADEGraph& g, int a) {
    if (a < 0 || a >= g.size) throw std::invalid_argument("essential_matrix: vertex out of range");
    const long rows = 2 * g.coxeter;
    auto f = annular_matrices(g, rows - 1);
    Matrix<long long> e(rows, g.size);
    for (long n = 0; n < rows; ++n)
        for (int b = 0; b < g.size; ++b) e(n, b) = f[n](a, b);
    return e;
}

std::vector<Real> module_quantum_dims(const ADEGraph& g) {
    const int n = g.size;
    const Real lambda = Real(2) * cos(real_pi() / g.coxeter);
    // null vector of (adjacency - lambda I), Gaussian elimination with
    // partial pivoting; the kernel is one-dimensional for a Dynkin diagram
    Matrix<Real> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Real(g.adjacency(i, j)) - (i == j ? lambda : Real(0));
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int best = -1;
        Real best_abs(0);
        for (int i = row; i < n; ++i)
            if (abs(m(i, col)) > best_abs) {
                best_abs = abs(m(i, col));
                best = i;
            }
        if (best < 0 || best_abs < pow(Real(10), -static_cast<int>(working_digits()) + 5)) continue;
        for (int j = 0; j < n; ++j) std::swap(m(best, j), m(row, j));
        pivot_col[row] = col;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            Real f = m(i, col) / m(row, col);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) m(i, j) -= f * m(row, j);
        }
        ++row;
    }
    if (row != n - 1) throw std::runtime_error("adjacency eigenspace is not one-dimensional");
    std::vector<Real> x(n, Real(0));
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < row; ++i) is_pivot[pivot_col[i]] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    x[free_col] = Real(1);
    for (int i = 0; i < row; ++i)
        x[pivot_col[i]] = -m(i, free_col) / m(i, pivot_col[i]);
    // normalize at the unit vertex, then verify the eigen residue
    Real unit = x[g.unit_vertex];
    for (auto& v : x) v /= unit;
    Real residue(0);
    for (int i = 0; i < n; ++i) {
        Real acc = -lambda * x[i];
        for (int j = 0; j < n; ++j) acc += Real(g.adjacency(i, j)) * x[j];
        residue = std::max(residue, abs(acc));
    }
    if (residue > pow(Real(10), -30))
        throw std::runtime_error("Perron-Frobenius residue too large");
    return x;
}

PartitionFunction identity_invariant(long k) {
    PartitionFunction pf;
    pf.Z = Matrix<long long>::identity(k + 1);
    for (int i = 0; i <= k; ++i) pf.blocks.push_back({i});
    return pf;
}

namespace {

PartitionFunction from_blocks(long k, std::vector<std::vector<int>> blocks) {
    PartitionFunction pf;
    pf.Z = Matrix<long long>(k + 1, k + 1);
    for (const auto& b : blocks)
        for (int m : b)
            for (int n : b) pf.Z(m, n) += 1;
    pf.blocks = std::move(blocks);
    return pf;
}

}  // namespace

PartitionFunction d_even_invariant(long k) {
    if (k < 4 || k % 4 != 0)
        throw std::invalid_argument("d_even_invariant: level must be a positive multiple of 4");
    std::vector<std::vector<int>> blocks;
    for (long j = 0; j < k / 2; j += 2) blocks.push_back({static_cast<int>(j), static_cast<int>(k - j)});
    blocks.push_back({static_cast<int>(k / 2)});
    blocks.push_back({static_cast<int>(k / 2)});
    return from_blocks(k, std::move(blocks));
}

PartitionFunction e6_invariant() { return from_blocks(10, {{0, 6}, {3, 7}, {4, 10}}); }

PartitionFunction e8_invariant() { return from_blocks(28, {{0, 10, 18, 28}, {6, 12, 16, 22}}); }

PartitionFunction invariant_of(const ADEGraph& g) {
    switch (g.type.family) {
        case Family::A: return identity_invariant(g.level);
        case Family::D:
            if (g.type.rank % 2 == 0) return d_even_invariant(g.level);
            throw std::domain_error("no type-I invariant catalogued for " + lie::to_string(g.type));
        case Family::E:
            if (g.type.rank == 6) return e6_invariant();
            if (g.type.rank == 8) return e8_invariant();
            throw std::domain_error("E7 has no block-diagonal invariant; no partition function available");
        default: throw std::domain_error("no invariant for " + lie::to_string(g.type));
    }
}

namespace {

fusion::LevelKCategory ambient_su2(const ADEGraph& g) {
    lie::LieData a1 = lie::build_lie_data({Family::A, 1});
    return fusion::integrable_weights(a1, g.level);
}

std::optional<EmbeddingRecord> embedding_of(const ADEGraph& g) {
    auto rec = [](LieType inner, long k, LieType outer, const char* tag, const char* id) {
        EmbeddingRecord r;
        r.inner = inner;
        r.level = k;
        r.outer = outer;
        r.tag = tag;
        r.id = id;
        r.source = "generated";
        return r;
    };
    if (g.type.family == Family::D && g.type.rank == 4)
        return rec({Family::A, 1}, 4, {Family::A, 2}, "symmetric", "su2-k4-symmetric");
    if (g.type.family == Family::E && g.type.rank == 6)
        return rec({Family::A, 1}, 10, {Family::B, 2}, "sporadic", "su2-k10-sporadic");
    if (g.type.family == Family::E && g.type.rank == 8)
        return rec({Family::A, 1}, 28, {Family::G, 2}, "sporadic", "su2-k28-sporadic");
    return std::nullopt;
}

}  // namespace

Real module_global_dim(const ADEGraph& g, DimRoute route) {
    switch (route) {
        case DimRoute::pf_sum: {
            Real s(0);
            for (const Real& q : module_quantum_dims(g)) s += q * q;
            return s;
        }
        case DimRoute::induction: {
            fusion::LevelKCategory amb = ambient_su2(g);
            auto f = annular_matrices(g, g.level);
            Real fdim(0);
            for (long n = 0; n <= g.level; ++n)
                if (long long c = f[n](g.unit_vertex, g.unit_vertex); c != 0)
                    fdim += Real(c) * fusion::quantum_dimension(amb, amb.weights[n]);
            return fusion::global_dimension_sum(amb) / fdim;
        }
        case DimRoute::modular_blocks: {
            PartitionFunction pf = invariant_of(g);
            fusion::LevelKCategory amb = ambient_su2(g);
            std::vector<Real> qd = fusion::quantum_dimensions(amb);
            Real fdim(0);
            std::vector<Real> block_sums;
            for (const auto& b : pf.blocks) {
                Real s(0);
                for (int n : b) s += qd[n];
                block_sums.push_back(s);
                if (std::find(b.begin(), b.end(), 0) != b.end()) fdim = s;
            }
            if (fdim == 0) throw std::runtime_error("no block contains the trivial object");
            Real jdim(0);
            for (const Real& s : block_sums) jdim += (s / fdim) * (s / fdim);
            return sqrt(fusion::global_dimension_sum(amb) * jdim);
        }
        case DimRoute::embedding: {
            auto rec = embedding_of(g);
            if (!rec)
                throw std::domain_error("no conformal embedding is catalogued for the " +
                                        lie::to_string(g.type) + " module");
            return conformal_subgroup_dim(*rec);
        }
    }
    throw std::invalid_argument("unknown route");
}

std::pair<Real, Real> sandwich_identity(const fusion::LevelKCategory& cat,
                                        const PartitionFunction& pf) {
    if (pf.Z.rows() != cat.size())
        throw std::invalid_argument("sandwich_identity: invariant size does not match the category");
    std::vector<Real> qd = fusion::quantum_dimensions(cat);
    Real lhs(0);
    for (std::size_t m = 0; m < cat.size(); ++m)
        for (std::size_t n = 0; n < cat.size(); ++n)
            if (long long z = pf.Z(m, n); z != 0) lhs += qd[m] * Real(z) * qd[n];
    return {lhs, fusion::global_dimension_sum(cat)};
}

std::pair<Real, Real> ade_trig_identity(const PartitionFunction& pf, long kappa) {
    if (static_cast<long>(pf.Z.rows()) != kappa - 1)
        throw std::invalid_argument("ade_trig_identity: invariant size does not match kappa");
    Real pi = real_pi();
    Real lhs(0);
    for (long m = 1; m < kappa; ++m)
        for (long n = 1; n < kappa; ++n)
            if (long long z = pf.Z(m - 1, n - 1); z != 0)
                lhs += Real(z) * sin(pi * m / kappa) * sin(pi * n / kappa);
    return {lhs, Real(kappa) / 2};
}

std::vector<Real> level1_qdims(const LieType& j) {
    lie::LieData d = lie::build_lie_data(j);
    fusion::LevelKCategory cat = fusion::integrable_weights(d, 1);
    return fusion::quantum_dimensions(cat);
}

Real level1_global_dim(const LieType& j) {
    lie::validate(j);
    switch (j.family) {
        case Family::A: return Real(j.rank + 1);
        case Family::B: return Real(4);
        case Family::D: return Real(4);
        case Family::E:
            return Real(j.rank == 6 ? 3 : (j.rank == 7 ? 2 : 1));
        case Family::F:
        case Family::G: return (Real(5) + sqrt(Real(5))) / 2;
        case Family::C: {
            // no closed table entry; sum the squared quantum dimensions
            Real s(0);
            for (const Real& q : level1_qdims(j)) s += q * q;
            return s;
        }
    }
    throw std::invalid_argument("unknown family");
}

Rational central_charge(const EmbeddingRecord& rec) {
    Rational lhs = Rational(lie::dimension(rec.inner)) * rec.level /
                   Rational(rec.level + lie::dual_coxeter_number(rec.inner));
    return lhs;
}

namespace {

std::string record_repr(const EmbeddingRecord& rec) {
    std::ostringstream os;
    os << "{id=" << rec.id << ", inner=" << lie::to_string(rec.inner) << ", level=" << rec.level
       << ", outer=" << lie::to_string(rec.outer) << ", tag=" << rec.tag << "}";
    return os.str();
}

}  // namespace

void validate_embedding(const EmbeddingRecord& rec) {
    lie::validate(rec.inner);
    lie::validate(rec.outer);
    if (rec.level < 1) throw std::runtime_error("bad catalog entry (level < 1): " + record_repr(rec));
    Rational lhs = central_charge(rec);
    Rational rhs = Rational(lie::dimension(rec.outer)) /
                   Rational(1 + lie::dual_coxeter_number(rec.outer));
    if (lhs != rhs)
        throw std::runtime_error("central-charge identity fails for catalog entry " +
                                 record_repr(rec) + ": " + lhs.get_str() + " != " + rhs.get_str());
}

namespace {

std::string lower_name(const LieType& t) {
    std::string s = lie::to_string(t);
    for (char& c : s) c = static_cast<char>(std::tolower(c));
    if (t.family == Family::A) return "su" + std::to_string(t.rank + 1);
    return s;
}

EmbeddingRecord make_record(LieType inner, long k, LieType outer, const std::string& tag,
                            const std::string& source) {
    EmbeddingRecord r;
    r.inner = inner;
    r.level = k;
    r.outer = outer;
    r.tag = tag;
    r.id = lower_name(inner) + "-k" + std::to_string(k) + "-" + tag;
    r.source = source;
    return r;
}

LieType spin_type(long n) {
    if (n < 5) throw std::domain_error("Spin(" + std::to_string(n) + ") is outside the catalog model");
    return (n % 2 == 1) ? LieType{Family::B, static_cast<int>((n - 1) / 2)}
                        : LieType{Family::D, static_cast<int>(n / 2)};
}

LieType family_from_string(const std::string& s) {
    if (s.size() != 1 || std::string("ABCDEFG").find(s[0]) == std::string::npos)
        throw std::runtime_error("bad family string '" + s + "' in catalog file");
    return LieType{static_cast<Family>(s[0]), 0};
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("AKG_CATALOG")) return env;
    return AKG_DEFAULT_CATALOG;
}

}  // namespace

std::vector<EmbeddingRecord> embedding_catalog(int g_max, const std::string& path) {
    std::vector<EmbeddingRecord> out;

    // sporadic entries ship in the catalog file
    const std::string file = path.empty() ? default_catalog_path() : path;
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open embedding catalog file: " + file);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw std::runtime_error("cannot parse embedding catalog file " + file + ": " + e.what());
    }
    for (const auto& e : doc.at("embeddings")) {
        LieType inner = family_from_string(e.at("inner_family").get<std::string>());
        inner.rank = e.at("inner_rank").get<int>();
        LieType outer = family_from_string(e.at("outer_family").get<std::string>());
        outer.rank = e.at("outer_rank").get<int>();
        EmbeddingRecord r = make_record(inner, e.at("level").get<long>(), outer,
                                        e.at("tag").get<std::string>(), e.at("source").get<std::string>());
        out.push_back(std::move(r));
    }

    // the three SU(g) regular series
    for (long g = 4; g <= g_max; ++g)
        out.push_back(make_record({Family::A, static_cast<int>(g - 1)}, g - 2,
                                  {Family::A, static_cast<int>(g * (g - 1) / 2 - 1)},
                                  "antisymmetric", "generated"));
    for (long g = 3; g <= g_max; ++g)
        out.push_back(make_record({Family::A, static_cast<int>(g - 1)}, g, spin_type(g * g - 1),
                                  "adjoint", "generated"));
    for (long g = 2; g <= g_max; ++g)
        out.push_back(make_record({Family::A, static_cast<int>(g - 1)}, g + 2,
                                  {Family::A, static_cast<int>(g * (g + 1) / 2 - 1)},
                                  "symmetric", "generated"));

    // the adjoint series G at level g inside Spin(dim G), all types of rank <= 8.
    // A_r is covered by the SU(g) adjoint series above; A1 is omitted because
    // Spin(3) is not a valid B/D type here (so(3) at level 1 is su(2) at level 2).
    auto push_adjoint = [&](LieType t) {
        out.push_back(make_record(t, lie::dual_coxeter_number(t), spin_type(lie::dimension(t)),
                                  "adjoint", "generated"));
    };
    for (int r = 2; r <= 8; ++r) push_adjoint({Family::B, r});
    for (int r = 2; r <= 8; ++r) push_adjoint({Family::C, r});
    for (int r = 3; r <= 8; ++r) push_adjoint({Family::D, r});
    for (int r = 6; r <= 8; ++r) push_adjoint({Family::E, r});
    push_adjoint({Family::F, 4});
    push_adjoint({Family::G, 2});

    for (const auto& r : out) validate_embedding(r);
    return out;
}

std::optional<EmbeddingRecord> find_embedding(const std::string& id, int g_max,
                                              const std::string& path) {
    for (auto& r : embedding_catalog(g_max, path))
        if (r.id == id) return r;
    return std::nullopt;
}

Real conformal_subgroup_dim(const EmbeddingRecord& rec) {
    validate_embedding(rec);
    lie::LieData inner = lie::build_lie_data(rec.inner);
    Real mass = fusion::global_dimension_closed(inner, rec.level);
    Real jdim = level1_global_dim(rec.outer);
    return sqrt(mass * jdim);
}

std::pair<Real, Rational> series_ratio_check(long g) {
    if (g < 4) throw std::invalid_argument("series_ratio_check: g must be >= 4");
    EmbeddingRecord anti = make_record({Family::A, static_cast<int>(g - 1)}, g - 2,
                                       {Family::A, static_cast<int>(g * (g - 1) / 2 - 1)},
                                       "antisymmetric", "generated");
    EmbeddingRecord sym = make_record({Family::A, static_cast<int>(g - 3)}, g,
                                      {Family::A, static_cast<int>((g - 2) * (g - 1) / 2 - 1)},
                                      "symmetric", "generated");
    Real ratio = conformal_subgroup_dim(anti) / conformal_subgroup_dim(sym);
    Rational target(g, g - 2);
    target.canonicalize();
    return {ratio, target};
}

}  // namespace akg::modcat
