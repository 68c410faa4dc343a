#include "akg/lie.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace akg::lie {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<long long>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using VecSet = std::unordered_set<std::vector<long long>, VecHash>;
template <class T>
using VecMap = std::unordered_map<std::vector<long long>, T, VecHash>;

}  // namespace

void validate(const LieType& t) {
    auto fail = [&](const char* need) {
        throw std::invalid_argument("invalid rank " + std::to_string(t.rank) + " for family " +
                                    std::string(1, static_cast<char>(t.family)) + " (" + need + ")");
    };
    switch (t.family) {
        case Family::A:
            if (t.rank < 1) fail("rank >= 1");
            break;
        case Family::B:
            if (t.rank < 2) fail("rank >= 2");
            break;
        case Family::C:
            if (t.rank < 2) fail("rank >= 2");
            break;
        case Family::D:
            if (t.rank < 3) fail("rank >= 3");
            break;
        case Family::E:
            if (t.rank < 6 || t.rank > 8) fail("rank in {6,7,8}");
            break;
        case Family::F:
            if (t.rank != 4) fail("rank = 4");
            break;
        case Family::G:
            if (t.rank != 2) fail("rank = 2");
            break;
        default: throw std::invalid_argument("unknown family");
    }
}

LieType parse_group(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty group spec");
    std::string s = spec;
    auto digits_after = [&](std::size_t pos) {
        std::size_t end = s.find(')', pos);
        std::string num = (end == std::string::npos) ? s.substr(pos) : s.substr(pos, end - pos);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(c); }))
            throw std::invalid_argument("cannot parse group spec '" + spec + "'");
        return std::stol(num);
    };
    std::string lower;
    for (char c : s) lower.push_back(static_cast<char>(std::tolower(c)));
    LieType t{};
    if (lower.rfind("su(", 0) == 0) {
        long n = digits_after(3);
        if (n < 2) throw std::invalid_argument("SU(n) needs n >= 2");
        t = {Family::A, static_cast<int>(n - 1)};
    } else if (lower.rfind("spin(", 0) == 0) {
        long n = digits_after(5);
        if (n < 5) throw std::invalid_argument("Spin(n) supported for n >= 5");
        t = (n % 2 == 1) ? LieType{Family::B, static_cast<int>((n - 1) / 2)}
                         : LieType{Family::D, static_cast<int>(n / 2)};
    } else if (lower.rfind("sp(", 0) == 0) {
        long n = digits_after(3);
        if (n < 4 || n % 2 != 0) throw std::invalid_argument("Sp(2r) needs even argument >= 4");
        t = {Family::C, static_cast<int>(n / 2)};
    } else {
        char fam = static_cast<char>(std::toupper(s[0]));
        std::string num = s.substr(1);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(c); }))
            throw std::invalid_argument("cannot parse group spec '" + spec + "'");
        if (std::string("ABCDEFG").find(fam) == std::string::npos)
            throw std::invalid_argument("unknown family in '" + spec + "'");
        t = {static_cast<Family>(fam), std::stoi(num)};
    }
    validate(t);
    return t;
}

std::string to_string(const LieType& t) {
    return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

long coxeter_number(const LieType& t) {
    validate(t);
    const long r = t.rank;
    switch (t.family) {
        case Family::A: return r + 1;
        case Family::B: return 2 * r;
        case Family::C: return 2 * r;
        case Family::D: return 2 * r - 2;
        case Family::E: return r == 6 ? 12 : (r == 7 ? 18 : 30);
        case Family::F: return 12;
        case Family::G: return 6;
    }
    return 0;
}

long dual_coxeter_number(const LieType& t) {
    validate(t);
    const long r = t.rank;
    switch (t.family) {
        case Family::A: return r + 1;
        case Family::B: return 2 * r - 1;
        case Family::C: return r + 1;
        case Family::D: return 2 * r - 2;
        case Family::E: return r == 6 ? 12 : (r == 7 ? 18 : 30);
        case Family::F: return 9;
        case Family::G: return 4;
    }
    return 0;
}

long dimension(const LieType& t) { return t.rank * (coxeter_number(t) + 1); }

long long weyl_order(const LieType& t) {
    validate(t);
    const long r = t.rank;
    auto fact = [](long n) {
        long long f = 1;
        for (long i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (t.family) {
        case Family::A: return fact(r + 1);
        case Family::B:
        case Family::C: return fact(r) << r;
        case Family::D: return fact(r) << (r - 1);
        case Family::E: return r == 6 ? 51840LL : (r == 7 ? 2903040LL : 696729600LL);
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

Weight zero_weight(int rank) { return Weight(rank, Rational(0)); }

Weight from_ints(const std::vector<long>& v) {
    Weight w;
    w.reserve(v.size());
    for (long x : v) w.emplace_back(x);
    return w;
}

Weight LieData::root_weight(const Root& r) const {
    Weight w;
    w.reserve(r.coords.size());
    for (long x : r.coords) w.emplace_back(x);
    return w;
}

namespace {

/// Bourbaki Cartan matrix and half-norms d_i = <alpha_i,alpha_i>/2
/// (long roots normalized to <theta,theta> = 2).
void cartan_and_norms(const LieType& t, Matrix<long>& cartan, std::vector<Rational>& d) {
    const int r = t.rank;
    cartan = Matrix<long>(r, r);
    d.assign(r, Rational(1));
    auto bond = [&](int i, int j) {  // simply-laced edge, 0-based
        cartan(i, j) = -1;
        cartan(j, i) = -1;
    };
    for (int i = 0; i < r; ++i) cartan(i, i) = 2;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
            cartan(r - 2, r - 1) = -2;  // alpha_r short
            cartan(r - 1, r - 2) = -1;
            d[r - 1] = Rational(1, 2);
            break;
        case Family::C:
            for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
            cartan(r - 2, r - 1) = -1;  // alpha_r long, the rest short
            cartan(r - 1, r - 2) = -2;
            for (int i = 0; i + 1 < r; ++i) d[i] = Rational(1, 2);
            break;
        case Family::D:
            for (int i = 0; i + 3 < r; ++i) bond(i, i + 1);
            bond(r - 3, r - 2);
            bond(r - 3, r - 1);
            break;
        case Family::E:
            // chain 1-3-4-5-...-r with node 2 attached to 4 (Bourbaki)
            bond(0, 2);
            for (int i = 2; i + 1 < r; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case Family::F:
            bond(0, 1);
            cartan(1, 2) = -2;  // alpha_3, alpha_4 short
            cartan(2, 1) = -1;
            bond(2, 3);
            d[2] = d[3] = Rational(1, 2);
            break;
        case Family::G:
            cartan(0, 1) = -1;  // alpha_1 short
            cartan(1, 0) = -3;
            d[0] = Rational(1, 3);
            break;
    }
}

/// Exponents as the dual partition of the root-height distribution.
std::vector<long> exponents_from_heights(const std::vector<Root>& roots, int rank) {
    long max_h = 0;
    for (const auto& r : roots) max_h = std::max(max_h, r.height);
    std::vector<long> count(max_h + 1, 0);
    for (const auto& r : roots) ++count[r.height];
    std::vector<long> exps;
    for (long i = 1; i <= count[1]; ++i) {
        long e = 0;
        for (long j = 1; j <= max_h; ++j)
            if (count[j] >= i) ++e;
        exps.push_back(e);
    }
    if (static_cast<int>(exps.size()) != rank)
        throw std::runtime_error("exponent extraction failed");
    std::sort(exps.begin(), exps.end());
    return exps;
}

}  // namespace

LieData build_lie_data(const LieType& type) {
    validate(type);
    LieData d;
    d.type = type;
    d.rank = type.rank;
    cartan_and_norms(type, d.cartan, d.root_half_norms);
    const int r = d.rank;

    // quad_form = C^{-1} * diag(d_i); symmetric by construction of the data
    Matrix<Rational> cr(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cr(i, j) = Rational(d.cartan(i, j));
    Matrix<Rational> cinv = inverse(cr);
    d.quad_form = Matrix<Rational>(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) d.quad_form(i, j) = cinv(i, j) * d.root_half_norms[j];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (d.quad_form(i, j) != d.quad_form(j, i))
                throw std::runtime_error("quadratic form not symmetric");
    d.delta = determinant(d.quad_form);

    // positive roots by closure under root strings, height by height
    VecMap<int> index_of;
    std::vector<Root> roots;
    for (int i = 0; i < r; ++i) {
        Root rt;
        rt.coords.assign(r, 0);
        for (int j = 0; j < r; ++j) rt.coords[j] = d.cartan(i, j);
        rt.simple_coeffs.assign(r, 0);
        rt.simple_coeffs[i] = 1;
        rt.height = 1;
        std::vector<long long> key(rt.simple_coeffs.begin(), rt.simple_coeffs.end());
        index_of.emplace(key, static_cast<int>(roots.size()));
        roots.push_back(std::move(rt));
    }
    std::size_t lo = 0;
    while (lo < roots.size()) {
        std::size_t hi = roots.size();
        for (std::size_t idx = lo; idx < hi; ++idx) {
            for (int i = 0; i < r; ++i) {
                Root cand = roots[idx];
                // p = how far the alpha_i string extends downward from this root;
                // for positive roots the whole downward string stays positive
                long p = 0;
                {
                    std::vector<long long> key(cand.simple_coeffs.begin(), cand.simple_coeffs.end());
                    while (true) {
                        key[i] -= 1;
                        if (!index_of.count(key)) break;
                        ++p;
                    }
                }
                long pairing = cand.coords[i];
                if (p - pairing <= 0) continue;
                for (int j = 0; j < r; ++j) cand.coords[j] += d.cartan(i, j);
                cand.simple_coeffs[i] += 1;
                cand.height += 1;
                std::vector<long long> key(cand.simple_coeffs.begin(), cand.simple_coeffs.end());
                if (index_of.count(key)) continue;
                index_of.emplace(key, static_cast<int>(roots.size()));
                roots.push_back(std::move(cand));
            }
        }
        lo = hi;
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coords < b.coords;
    });
    d.positive_roots = std::move(roots);

    long max_h = 0;
    int top = -1;
    for (int i = 0; i < static_cast<int>(d.positive_roots.size()); ++i)
        if (d.positive_roots[i].height > max_h) {
            max_h = d.positive_roots[i].height;
            top = i;
        }
    d.coxeter = max_h + 1;
    d.highest_root = d.root_weight(d.positive_roots[top]);
    d.weyl_vector.assign(r, Rational(1));
    d.exponents = exponents_from_heights(d.positive_roots, r);

    // comarks <omega_i, theta> and g = 1 + sum of comarks
    d.comarks.resize(r);
    long comark_sum = 0;
    for (int i = 0; i < r; ++i) {
        Rational c(0);
        for (int j = 0; j < r; ++j) c += d.quad_form(i, j) * d.highest_root[j];
        if (c.get_den() != 1) throw std::runtime_error("non-integer comark");
        d.comarks[i] = static_cast<long>(c.get_num().get_si());
        comark_sum += d.comarks[i];
    }
    d.dual_coxeter = 1 + comark_sum;

    // structural sanity: matches the type-level tables
    if (d.coxeter != coxeter_number(type) || d.dual_coxeter != dual_coxeter_number(type))
        throw std::runtime_error("Coxeter data mismatch for " + to_string(type));
    if (d.num_positive_roots() * 2 != r * d.coxeter)
        throw std::runtime_error("positive-root count mismatch for " + to_string(type));
    if (inner_product(d, d.highest_root, d.highest_root) != Rational(2))
        throw std::runtime_error("highest root not normalized for " + to_string(type));
    return d;
}

Rational inner_product(const LieData& d, const Weight& a, const Weight& b) {
    if (static_cast<int>(a.size()) != d.rank || static_cast<int>(b.size()) != d.rank)
        throw std::invalid_argument("inner_product: weight length does not match rank");
    Rational s(0);
    for (int i = 0; i < d.rank; ++i) {
        if (a[i] == 0) continue;
        Rational row(0);
        for (int j = 0; j < d.rank; ++j)
            if (b[j] != 0) row += d.quad_form(i, j) * b[j];
        s += a[i] * row;
    }
    return s;
}

Rational level_of(const LieData& d, const Weight& lambda) {
    return inner_product(d, lambda, d.highest_root);
}

void apply_simple_reflection(const LieData& d, int i, std::vector<long long>& coords) {
    const long long x = coords[i];
    if (x == 0) return;
    for (int j = 0; j < d.rank; ++j) coords[j] -= d.cartan(i, j) * x;
}

std::vector<WeylElement> weyl_group(const LieData& d, long long cap) {
    if (cap < 1) throw std::invalid_argument("weyl_group: cap must be >= 1");
    const long long order = weyl_order(d.type);
    if (order > cap)
        throw std::domain_error("Weyl group of " + to_string(d.type) + " has " +
                                std::to_string(order) + " elements, exceeding the cap of " +
                                std::to_string(cap));
    const int r = d.rank;
    std::vector<WeylElement> out;
    out.reserve(order);
    out.push_back({Matrix<long long>::identity(r), 1});
    VecSet seen;
    std::vector<long long> rho(r, 1);
    seen.insert(rho);
    std::size_t lo = 0;
    while (lo < out.size()) {
        std::size_t hi = out.size();
        for (std::size_t idx = lo; idx < hi; ++idx) {
            for (int i = 0; i < r; ++i) {
                // left-compose with s_i: new action = S_i * action
                Matrix<long long> m = out[idx].action;
                for (int col = 0; col < r; ++col) {
                    const long long x = m(i, col);
                    if (x == 0) continue;
                    for (int row = 0; row < r; ++row) m(row, col) -= d.cartan(i, row) * x;
                }
                std::vector<long long> img(r, 0);
                for (int row = 0; row < r; ++row)
                    for (int col = 0; col < r; ++col) img[row] += m(row, col);
                if (!seen.insert(img).second) continue;
                out.push_back({std::move(m), -out[idx].signature});
            }
        }
        lo = hi;
    }
    if (static_cast<long long>(out.size()) != order)
        throw std::runtime_error("Weyl enumeration produced wrong order");
    return out;
}

std::vector<std::pair<Weight, Rational>> ribbon_table(const LieData& d, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != d.rank)
        throw std::invalid_argument("ribbon_table: weight length does not match rank");
    std::vector<std::pair<Weight, Rational>> out;
    out.reserve(d.positive_roots.size());
    for (const auto& rt : d.positive_roots) {
        Weight rw = d.root_weight(rt);
        out.emplace_back(rw, inner_product(d, lambda, rw));
    }
    return out;
}

std::vector<long long> to_int_coords(const Weight& w) {
    std::vector<long long> v;
    v.reserve(w.size());
    for (const auto& q : w) {
        if (q.get_den() != 1) throw std::invalid_argument("weight has non-integer coordinates");
        v.push_back(q.get_num().get_si());
    }
    return v;
}

namespace {

Rational ip_int(const LieData& d, const std::vector<long long>& a, const std::vector<long long>& b) {
    Rational s(0);
    for (int i = 0; i < d.rank; ++i) {
        if (a[i] == 0) continue;
        Rational row(0);
        for (int j = 0; j < d.rank; ++j)
            if (b[j] != 0) row += d.quad_form(i, j) * static_cast<long>(b[j]);
        s += static_cast<long>(a[i]) * row;
    }
    return s;
}

std::vector<long long> dominant_representative(const LieData& d, std::vector<long long> v) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < d.rank; ++i)
            if (v[i] < 0) {
                apply_simple_reflection(d, i, v);
                changed = true;
            }
    }
    return v;
}

}  // namespace

WeightSystem weight_system(const LieData& d, const Weight& highest, std::size_t cap) {
    const int r = d.rank;
    std::vector<long long> lam = to_int_coords(highest);
    for (long long x : lam)
        if (x < 0) throw std::invalid_argument("weight_system: highest weight must be dominant");

    // generate the full weight set, layer by layer, via weight strings
    VecMap<int> depth;
    std::vector<std::vector<long long>> order;
    depth.emplace(lam, 0);
    order.push_back(lam);
    std::size_t lo = 0;
    while (lo < order.size()) {
        std::size_t hi = order.size();
        for (std::size_t idx = lo; idx < hi; ++idx) {
            std::vector<long long> mu = order[idx];
            for (int i = 0; i < r; ++i) {
                // p = extent of the alpha_i string upward from mu
                long long p = 0;
                {
                    std::vector<long long> up = mu;
                    while (true) {
                        for (int j = 0; j < r; ++j) up[j] += d.cartan(i, j);
                        if (!depth.count(up)) break;
                        ++p;
                    }
                }
                if (p + mu[i] < 1) continue;  // string does not extend below mu
                std::vector<long long> down = mu;
                for (int j = 0; j < r; ++j) down[j] -= d.cartan(i, j);
                if (depth.count(down)) continue;
                if (order.size() >= cap)
                    throw std::domain_error("weight system exceeds the cap of " + std::to_string(cap));
                depth.emplace(down, static_cast<int>(order.size()));
                order.push_back(std::move(down));
            }
        }
        lo = hi;
    }

    // Freudenthal multiplicities, memoized on dominant representatives
    const Rational norm_lam = ip_int(d, lam, lam) + 2 * ip_int(d, lam, std::vector<long long>(r, 1));
    VecMap<long long> mult;
    mult.emplace(lam, 1);
    auto mult_of = [&](const std::vector<long long>& v) -> long long {
        auto it = depth.find(v);
        if (it == depth.end()) return 0;
        auto dom = dominant_representative(d, v);
        auto mit = mult.find(dom);
        if (mit == mult.end()) throw std::runtime_error("Freudenthal ordering violated");
        return mit->second;
    };
    // process in generation order: any dominant weight is generated no later
    // than the rest of its Weyl orbit, and its Freudenthal sum only references
    // strictly higher weights
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
        const auto& mu = order[idx];
        auto dom = dominant_representative(d, mu);
        if (mult.count(dom)) continue;
        Rational acc(0);
        for (const auto& rt : d.positive_roots) {
            std::vector<long long> v = dom;
            while (true) {
                for (int j = 0; j < r; ++j) v[j] += rt.coords[j];
                auto it = depth.find(v);
                if (it == depth.end()) break;
                long long m = mult_of(v);
                std::vector<long long> root_ll(rt.coords.begin(), rt.coords.end());
                acc += Rational(static_cast<long>(m)) * ip_int(d, v, root_ll);
            }
        }
        Rational rho_term = ip_int(d, dom, dom) + 2 * ip_int(d, dom, std::vector<long long>(r, 1));
        Rational denom = norm_lam - rho_term;
        if (denom == 0) throw std::runtime_error("Freudenthal denominator vanished");
        Rational m = 2 * acc / denom;
        if (m.get_den() != 1 || m <= 0) throw std::runtime_error("non-integral Freudenthal multiplicity");
        mult.emplace(dom, m.get_num().get_si());
    }

    WeightSystem ws;
    ws.weights.reserve(order.size());
    ws.multiplicities.reserve(order.size());
    for (const auto& v : order) {
        ws.weights.push_back(v);
        ws.multiplicities.push_back(mult_of(v));
    }
    return ws;
}

}  // namespace akg::lie
