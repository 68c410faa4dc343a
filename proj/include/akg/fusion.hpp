#pragma once

#include "akg/lie.hpp"
#include "akg/matrix.hpp"
#include "akg/numeric.hpp"
#include "akg/qnum.hpp"

#include <utility>
#include <vector>

namespace akg::fusion {

inline constexpr long long kDefaultWeylCap = 10'000'000;

/// The fusion category A_k(G): all dominant integral weights of level <= k,
/// ordered by ascending level, ties broken by descending right-to-left
/// lexicographic comparison of the coordinates.
struct LevelKCategory {
    lie::LieData lie;
    long level = 0;
    qnum::QContext ctx;  // altitude g + k
    std::vector<lie::Weight> weights;
    std::vector<long> weight_levels;

    std::size_t size() const { return weights.size(); }
    long index_of(const lie::Weight& w) const;  // -1 if absent
};

LevelKCategory integrable_weights(const lie::LieData& d, long k);

/// Number of integrable weights without enumerating them (closed form for
/// A_{N-1}; generic recursion otherwise).
/// (none needed: enumeration is cheap at the scales used here)

Real quantum_dimension(const LevelKCategory& cat, const lie::Weight& n);
std::vector<Real> quantum_dimensions(const LevelKCategory& cat);

struct ModularData {
    Matrix<Complex> S;
    std::vector<Complex> T;       // diagonal, the Kac-Peterson normalization
    std::vector<Complex> t_phase; // T * exp(2 pi i c / 24)
    Matrix<long long> C;          // charge conjugation, a permutation matrix
    std::vector<long> conj_perm;  // n -> conjugate index
};

ModularData modular_data(const LevelKCategory& cat, long long weyl_cap = kDefaultWeylCap);

Real s00_closed_form(const lie::LieData& d, long k);

/// Verlinde fusion matrix N_m; throws if some entry fails integrality
/// (residue >= 1e-9).
Matrix<long long> verlinde_fusion(const ModularData& md, long m);

Real global_dimension_sum(const LevelKCategory& cat);
Real global_dimension_closed(const lie::LieData& d, long k);

/// chi(m)[n + rho] via the Weyl character formula as a ratio of alternating
/// Weyl sums; satisfies S_{mn}/S_00 = qdim(n) * chi(m)[n + rho].
Complex character_value(const LevelKCategory& cat, const lie::Weight& m, const lie::Weight& n,
                        long long weyl_cap = kDefaultWeylCap);

/// qdim(m) from the classical character at the principal specialization
/// q^{2 rho}; cross-check path, weight-system based.
Real qdim_via_character(const LevelKCategory& cat, const lie::Weight& m,
                        std::size_t weight_cap = 100000);

/// Both sides of k |A_k(A_{g-1})| = g |A_g(A_{k-1})|.
std::pair<Real, Real> level_rank_check(long g, long k);

std::vector<Real> classical_asymptote(const lie::LieData& d, const std::vector<long>& ks);
Real classical_limit_constant(const lie::LieData& d);

/// Z_CS[S^3, G, k] = S_00.
Real chern_simons_s3(const lie::LieData& d, long k);

/// Kac-Wakimoto closed product for SU(N) on S^3.
Real kac_wakimoto_su(long n_su, long k);

}  // namespace akg::fusion
