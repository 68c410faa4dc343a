#pragma once

#include "akg/matrix.hpp"
#include "akg/numeric.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace akg::lie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
    Family family;
    int rank;

    bool operator==(const LieType&) const = default;
};

/// Throws std::invalid_argument on out-of-range rank
/// (A: r>=1, B,C: r>=2, D: r>=3, E: r in {6,7,8}, F: r=4, G: r=2).
void validate(const LieType& t);

/// Accepts "A3", "e8", and the classical aliases "SU(n)" -> A_{n-1},
/// "Spin(n)" -> B_{(n-1)/2} or D_{n/2}, "Sp(2r)" -> C_r.
LieType parse_group(const std::string& spec);
std::string to_string(const LieType& t);

/// Type-level tables; no root system needed.
long coxeter_number(const LieType& t);        // gamma
long dual_coxeter_number(const LieType& t);   // g
long dimension(const LieType& t);             // r * (gamma + 1)
long long weyl_order(const LieType& t);

/// Weight in the fundamental-weight basis. Dominant integral weights have
/// nonnegative integer entries; roots written in this basis may be negative.
using Weight = std::vector<Rational>;

Weight zero_weight(int rank);
Weight from_ints(const std::vector<long>& v);

/// Positive root: coordinates in the fundamental-weight basis are always
/// integers, as are the coefficients over simple roots.
struct Root {
    std::vector<long> coords;
    std::vector<long> simple_coeffs;
    long height = 0;
};

struct WeylElement {
    Matrix<long long> action;  // on fundamental-weight coordinates
    int signature = 1;
};

struct LieData {
    LieType type;
    int rank = 0;
    Matrix<long> cartan;                 // row i = simple root alpha_i in fw-basis
    Matrix<Rational> quad_form;          // <omega_i, omega_j>
    std::vector<Rational> root_half_norms;  // d_i = <alpha_i,alpha_i>/2
    std::vector<Root> positive_roots;    // sorted by (height, lex coords)
    Weight highest_root;
    Weight weyl_vector;                  // all ones
    std::vector<long> exponents;         // ascending, with multiplicity
    long coxeter = 0;                    // gamma
    long dual_coxeter = 0;               // g
    Rational delta;                      // det(quad_form)
    std::vector<long> comarks;           // <omega_i, theta>

    long num_positive_roots() const { return static_cast<long>(positive_roots.size()); }
    long dim() const { return rank * (coxeter + 1); }
    Weight root_weight(const Root& r) const;
};

LieData build_lie_data(const LieType& type);

Rational inner_product(const LieData& d, const Weight& a, const Weight& b);

/// <lambda, theta>; a nonnegative integer for dominant integral lambda.
Rational level_of(const LieData& d, const Weight& lambda);

/// Full Weyl group by closure under simple reflections, deterministic BFS
/// order starting from the identity. Rejects upfront when |W| > cap.
std::vector<WeylElement> weyl_group(const LieData& d, long long cap);

/// One (root, <lambda, root>) entry per positive root, in positive-root order.
std::vector<std::pair<Weight, Rational>> ribbon_table(const LieData& d, const Weight& lambda);

/// Weight system of the irreducible representation with highest weight
/// `highest`: every weight with its multiplicity (Freudenthal recursion).
struct WeightSystem {
    std::vector<std::vector<long long>> weights;
    std::vector<long long> multiplicities;
};

WeightSystem weight_system(const LieData& d, const Weight& highest, std::size_t cap = 100000);

/// Integer coordinates helper; throws if some entry is not an integer.
std::vector<long long> to_int_coords(const Weight& w);

/// Reflection s_i acting on integer fw-coordinates, in place.
void apply_simple_reflection(const LieData& d, int i, std::vector<long long>& coords);

}  // namespace akg::lie
