#include "akg/payload.hpp"

#include <sstream>
#include <stdexcept>

namespace akg::payload {

namespace {

std::string num(const Real& x) { return to_decimal_string(x); }

json complex_entry(const Complex& z) { return json{{"re", num(z.re)}, {"im", num(z.im)}}; }

json rational_entry(const Rational& q) { return q.get_str(); }

json weight_entry(const lie::Weight& w) {
    json a = json::array();
    for (const auto& c : w) a.push_back(rational_entry(c));
    return a;
}

}  // namespace

json envelope(const lie::LieType& group, long level) {
    return json{{"group", lie::to_string(group)},
                {"level", level},
                {"altitude", lie::dual_coxeter_number(group) + level},
                {"precision", precision()}};
}

json weights_payload(const fusion::LevelKCategory& cat) {
    json j = envelope(cat.lie.type, cat.level);
    j["count"] = cat.size();
    json objs = json::array();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        objs.push_back(json{{"index", i},
                            {"coords", weight_entry(cat.weights[i])},
                            {"level", cat.weight_levels[i]},
                            {"qdim", num(fusion::quantum_dimension(cat, cat.weights[i]))}});
    }
    j["objects"] = std::move(objs);
    return j;
}

json smatrix_payload(const fusion::LevelKCategory& cat, const fusion::ModularData& md) {
    json j = envelope(cat.lie.type, cat.level);
    j["size"] = cat.size();
    json rows = json::array();
    for (std::size_t m = 0; m < cat.size(); ++m) {
        json row = json::array();
        for (std::size_t n = 0; n < cat.size(); ++n) row.push_back(complex_entry(md.S(m, n)));
        rows.push_back(std::move(row));
    }
    j["s"] = std::move(rows);
    return j;
}

json tmatrix_payload(const fusion::LevelKCategory& cat, const fusion::ModularData& md) {
    json j = envelope(cat.lie.type, cat.level);
    j["size"] = cat.size();
    json t = json::array(), ts = json::array();
    for (std::size_t m = 0; m < cat.size(); ++m) {
        t.push_back(complex_entry(md.T[m]));
        ts.push_back(complex_entry(md.t_phase[m]));
    }
    j["t"] = std::move(t);
    j["t_shifted"] = std::move(ts);
    return j;
}

json fusion_payload(const fusion::LevelKCategory& cat, const fusion::ModularData& md, long m) {
    json j = envelope(cat.lie.type, cat.level);
    j["object"] = m;
    j["coords"] = weight_entry(cat.weights[m]);
    Matrix<long long> nm = fusion::verlinde_fusion(md, m);
    json rows = json::array();
    for (std::size_t a = 0; a < nm.rows(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < nm.cols(); ++b) row.push_back(nm(a, b));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

json globaldim_payload(const lie::LieData& d, long k, bool with_sum) {
    json j = envelope(d.type, k);
    j["closed"] = num(fusion::global_dimension_closed(d, k));
    if (with_sum) {
        fusion::LevelKCategory cat = fusion::integrable_weights(d, k);
        j["sum"] = num(fusion::global_dimension_sum(cat));
        j["count"] = cat.size();
    }
    return j;
}

json superfactorial_payload(const lie::LieData& d, long k) {
    json j = envelope(d.type, k);
    qnum::QContext ctx = qnum::QContext::make(d.dual_coxeter + k);
    j["value"] = num(qnum::q_superfactorial(ctx, d));
    j["classical"] = rational_entry(qnum::superfactorial_classical(d));
    return j;
}

json ribbon_payload(const lie::LieData& d, const lie::Weight& w) {
    json j = envelope(d.type, 0);
    j.erase("level");
    j.erase("altitude");
    j["weight"] = weight_entry(w);
    json entries = json::array();
    for (const auto& [root, value] : lie::ribbon_table(d, w))
        entries.push_back(json{{"root", weight_entry(root)}, {"value", rational_entry(value)}});
    j["entries"] = std::move(entries);
    return j;
}

json cs3_payload(const lie::LieData& d, long k) {
    json j = envelope(d.type, k);
    j["value"] = num(fusion::chern_simons_s3(d, k));
    if (d.type.family == lie::Family::A)
        j["kac_wakimoto"] = num(fusion::kac_wakimoto_su(d.rank + 1, k));
    return j;
}

json levelrank_payload(long g, long k) {
    auto [lhs, rhs] = fusion::level_rank_check(g, k);
    return json{{"g", g}, {"k", k}, {"precision", precision()},
                {"lhs", num(lhs)}, {"rhs", num(rhs)}};
}

json subgroup_payload(const modcat::EmbeddingRecord& rec) {
    json j = envelope(rec.inner, rec.level);
    j["id"] = rec.id;
    j["outer"] = lie::to_string(rec.outer);
    j["tag"] = rec.tag;
    j["central_charge"] = rational_entry(modcat::central_charge(rec));
    lie::LieData inner = lie::build_lie_data(rec.inner);
    j["inner_mass"] = num(fusion::global_dimension_closed(inner, rec.level));
    j["outer_level1"] = num(modcat::level1_global_dim(rec.outer));
    j["value"] = num(modcat::conformal_subgroup_dim(rec));
    return j;
}

json catalog_payload(const std::vector<modcat::EmbeddingRecord>& recs) {
    json entries = json::array();
    for (const auto& r : recs) {
        entries.push_back(json{{"id", r.id},
                               {"inner", lie::to_string(r.inner)},
                               {"level", r.level},
                               {"outer", lie::to_string(r.outer)},
                               {"tag", r.tag},
                               {"source", r.source},
                               {"central_charge", rational_entry(modcat::central_charge(r))}});
    }
    return json{{"count", recs.size()}, {"entries", std::move(entries)}};
}

Matrix<Complex> parse_smatrix(const json& j) {
    const auto& rows = j.at("s");
    const std::size_t n = rows.size();
    Matrix<Complex> s(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            s(a, b).re = Real(rows[a][b].at("re").get<std::string>());
            s(a, b).im = Real(rows[a][b].at("im").get<std::string>());
        }
    return s;
}

lie::Weight parse_weight_arg(const std::string& s, int rank) {
    std::vector<long> coords;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(std::stol(tok));
    if (static_cast<int>(coords.size()) != rank)
        throw std::invalid_argument("weight '" + s + "' does not have " + std::to_string(rank) +
                                    " coordinates");
    return lie::from_ints(coords);
}

}  // namespace akg::payload
