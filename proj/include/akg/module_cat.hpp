#pragma once

#include "akg/fusion.hpp"
#include "akg/lie.hpp"
#include "akg/matrix.hpp"
#include "akg/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace akg::modcat {

/// A simply-laced Dynkin diagram seen as the fusion graph of an SU(2)
/// module-category at level nu = gamma - 2. Vertex order runs from the end
/// of the longest branch through the trivalent node, with the short-branch
/// vertex last (E types), so induction tables come out in the conventional
/// layout. The unit vertex is always index 0.
struct ADEGraph {
    lie::LieType type;
    int size = 0;
    Matrix<long> adjacency;
    long coxeter = 0;             // gamma
    long level = 0;               // nu = gamma - 2
    int unit_vertex = 0;
    std::vector<int> modular_vertices;  // filled for D4/E6/E8
};

ADEGraph ade_graph(const lie::LieType& t);

/// F_0 = I, F_1 = G, F_n = F_{n-1} G - F_{n-2}; integer arithmetic.
std::vector<Matrix<long long>> annular_matrices(const ADEGraph& g, long n_max);

/// (E_a)_{nb} = (F_n)_{ab} for n = 0 .. 2*gamma - 1.
Matrix<long long> essential_matrix(const ADEGraph& g, int a);

/// Perron-Frobenius eigenvector of the adjacency matrix at eigenvalue
/// 2 cos(pi/gamma), normalized to 1 at the unit vertex.
std::vector<Real> module_quantum_dims(const ADEGraph& g);

enum class DimRoute { pf_sum, induction, modular_blocks, embedding };

Real module_global_dim(const ADEGraph& g, DimRoute route);

/// Modular invariant of an SU(2) module at level k, as a matrix over the
/// ambient A_k(SU(2)) objects plus its type-I block structure.
struct PartitionFunction {
    Matrix<long long> Z;
    std::vector<std::vector<int>> blocks;  // 0-based ambient indices
};

PartitionFunction identity_invariant(long k);
PartitionFunction d_even_invariant(long k);  // k = 0 mod 4
PartitionFunction e6_invariant();            // k = 10
PartitionFunction e8_invariant();            // k = 28

/// The invariant attached to an ADE module graph (throws for E7, which has
/// no type-I invariant in this catalog).
PartitionFunction invariant_of(const ADEGraph& g);

/// Both sides of sum_{m,n} qdim(m) Z_{mn} qdim(n) = |A_k(G)|.
std::pair<Real, Real> sandwich_identity(const fusion::LevelKCategory& cat,
                                        const PartitionFunction& pf);

/// Both sides of sum_{m,n=1}^{kappa-1} Z_{mn} sin(m pi/kappa) sin(n pi/kappa) = kappa/2.
std::pair<Real, Real> ade_trig_identity(const PartitionFunction& pf, long kappa);

/// Global dimension |A_1(J)|; closed table values for A/B/D/E/F/G,
/// numeric quantum-dimension sums for C_r.
Real level1_global_dim(const lie::LieType& j);

/// Level-1 quantum-dimension vector, computed from the fusion category.
std::vector<Real> level1_qdims(const lie::LieType& j);

struct EmbeddingRecord {
    lie::LieType inner;
    long level = 0;
    lie::LieType outer;
    std::string tag;     // antisymmetric | adjoint | symmetric | sporadic
    std::string id;      // e.g. "e8-k30-adjoint"
    std::string source;
};

/// Throws std::runtime_error echoing the record when the central-charge
/// identity dim(G) k/(k+g_G) = dim(J)/(1+g_J) fails (exact rationals).
void validate_embedding(const EmbeddingRecord& rec);

/// Rational central charge of a validated record.
Rational central_charge(const EmbeddingRecord& rec);

/// Sporadic entries come from the catalog file; the three SU(g) regular
/// series (up to g_max) and the adjoint series for every type of rank <= 8
/// are generated by rule. Every entry is validated.
std::vector<EmbeddingRecord> embedding_catalog(int g_max = 12,
                                               const std::string& path = std::string());

std::optional<EmbeddingRecord> find_embedding(const std::string& id, int g_max = 12,
                                              const std::string& path = std::string());

/// |E| = sqrt(|A_k(G)| * |A_1(J)|). Rejects records whose inner group is
/// not simple and records failing the central-charge identity.
Real conformal_subgroup_dim(const EmbeddingRecord& rec);

/// (numeric ratio |E_{g-2}(SU(g))| / |E_g(SU(g-2))|, exact target g/(g-2)).
std::pair<Real, Rational> series_ratio_check(long g);

}  // namespace akg::modcat
