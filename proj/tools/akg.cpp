// Command-line surface for the A_k(G) fusion-category library: integrable
// weights, modular data, Verlinde fusion, global dimensions, superfactorials
// and the conformal-embedding catalog. Output formats: table, json, csv.

#include "akg/check.hpp"
#include "akg/fusion.hpp"
#include "akg/module_cat.hpp"
#include "akg/payload.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace akg;
using payload::json;

struct Common {
    std::string group;
    long level = 1;
    unsigned prec = 0;  // 0 = unset; resolved against AKG_PRECISION, then 50
    std::string format = "table";
    long long weyl_cap = fusion::kDefaultWeylCap;
    std::string catalog_path;
};

void add_common(CLI::App* cmd, Common& c, bool with_group = true, bool with_level = true) {
    if (with_group) cmd->add_option("group", c.group, "group spec: A3, E8, SU(4), Spin(7), Sp(6)")
        ->required();
    if (with_level) cmd->add_option("-k,--level", c.level, "level k (>= 0)");
    cmd->add_option("-p,--precision", c.prec, "significant decimal digits (>= 30, default 50)");
    cmd->add_option("--format", c.format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--weyl-cap", c.weyl_cap, "refuse Weyl groups larger than this");
    cmd->add_option("--catalog", c.catalog_path, "embedding catalog file (JSON)");
}

void apply_env(Common& c) {
    if (c.prec == 0) {
        const char* p = std::getenv("AKG_PRECISION");
        c.prec = p ? std::stoul(p) : 50;
    }
    set_precision(c.prec);
    // AKG_CATALOG is honored inside the catalog loader when no path is given
}

// ------------------------------------------------------------ text rendering

void render_scalar_block(const json& j, const std::vector<std::string>& keys, std::ostream& os) {
    for (const auto& k : keys)
        if (j.contains(k)) {
            os << k << " = ";
            const auto& v = j.at(k);
            if (v.is_string()) os << v.get<std::string>();
            else os << v.dump();
            os << "\n";
        }
}

void render_matrix(const json& rows, std::ostream& os) {
    for (const auto& row : rows) {
        for (const auto& cell : row) {
            if (cell.is_object())
                os << "(" << cell.at("re").get<std::string>() << ", "
                   << cell.at("im").get<std::string>() << ") ";
            else
                os << cell.dump() << " ";
        }
        os << "\n";
    }
}

void render_table(const json& j, std::ostream& os) {
    render_scalar_block(j,
                        {"group", "level", "altitude", "precision", "count", "size", "object",
                         "id", "outer", "tag", "central_charge", "inner_mass", "outer_level1",
                         "closed", "sum", "value", "classical", "kac_wakimoto", "g", "k", "lhs",
                         "rhs"},
                        os);
    if (j.contains("objects")) {
        os << "index  level  coords  qdim\n";
        for (const auto& o : j.at("objects"))
            os << o.at("index") << "  " << o.at("level") << "  " << o.at("coords").dump() << "  "
               << o.at("qdim").get<std::string>() << "\n";
    }
    if (j.contains("entries") && j.at("entries").is_array() && !j.at("entries").empty() &&
        j.at("entries")[0].contains("root")) {
        os << "root  <lambda,root>\n";
        for (const auto& e : j.at("entries"))
            os << e.at("root").dump() << "  " << e.at("value").get<std::string>() << "\n";
    } else if (j.contains("entries")) {
        os << "id  inner  level  outer  tag  c\n";
        for (const auto& e : j.at("entries"))
            os << e.at("id").get<std::string>() << "  " << e.at("inner").get<std::string>() << "  "
               << e.at("level") << "  " << e.at("outer").get<std::string>() << "  "
               << e.at("tag").get<std::string>() << "  "
               << e.at("central_charge").get<std::string>() << "\n";
    }
    if (j.contains("s")) render_matrix(j.at("s"), os);
    if (j.contains("matrix")) render_matrix(j.at("matrix"), os);
    if (j.contains("t")) {
        os << "T diagonal:\n";
        render_matrix(json::array({j.at("t")}), os);
    }
}

void render_csv(const json& j, std::ostream& os) {
    if (j.contains("entries") && j.at("entries").is_array() && !j.at("entries").empty() &&
        j.at("entries")[0].contains("root")) {
        os << "root,value\n";
        for (const auto& e : j.at("entries")) {
            std::string root = e.at("root").dump();
            for (auto& ch : root)
                if (ch == ',') ch = ' ';
            os << root << "," << e.at("value").get<std::string>() << "\n";
        }
        return;
    }
    if (j.contains("objects")) {
        os << "index,level,coords,qdim\n";
        for (const auto& o : j.at("objects")) {
            std::string coords = o.at("coords").dump();
            for (auto& ch : coords)
                if (ch == ',') ch = ' ';
            os << o.at("index") << "," << o.at("level") << "," << coords << ","
               << o.at("qdim").get<std::string>() << "\n";
        }
        return;
    }
    if (j.contains("s")) {
        for (const auto& row : j.at("s")) {
            bool first = true;
            for (const auto& cell : row) {
                if (!first) os << ",";
                os << cell.at("re").get<std::string>() << "+" << cell.at("im").get<std::string>()
                   << "i";
                first = false;
            }
            os << "\n";
        }
        return;
    }
    if (j.contains("matrix")) {
        for (const auto& row : j.at("matrix")) {
            bool first = true;
            for (const auto& cell : row) {
                if (!first) os << ",";
                os << cell.dump();
                first = false;
            }
            os << "\n";
        }
        return;
    }
    // generic: key,value lines
    for (auto it = j.begin(); it != j.end(); ++it)
        os << it.key() << "," << (it.value().is_string() ? it.value().get<std::string>()
                                                         : it.value().dump())
           << "\n";
}

void emit(const json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else if (format == "csv")
        render_csv(j, std::cout);
    else
        render_table(j, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusion categories of simple Lie groups at level k"};
    app.require_subcommand(1);

    Common c;
    std::string weight_arg, subgroup_id;
    long lr_g = 2, lr_k = 2;
    bool include_e7 = false;
    bool globaldim_sum_too = true;

    auto* weights = app.add_subcommand("weights", "integrable weights with levels and qdims");
    add_common(weights, c);
    auto* smatrix = app.add_subcommand("smatrix", "Kac-Peterson modular S matrix");
    add_common(smatrix, c);
    auto* tmatrix = app.add_subcommand("tmatrix", "modular T matrix (and central-charge shift)");
    add_common(tmatrix, c);
    auto* fus = app.add_subcommand("fusion", "Verlinde fusion matrix of a weight");
    add_common(fus, c);
    fus->add_option("weight", weight_arg, "comma-separated coordinates, e.g. 1,0")->required();
    auto* glob = app.add_subcommand("globaldim", "global dimension (closed form and sum)");
    add_common(glob, c);
    glob->add_flag("!--no-sum", globaldim_sum_too, "skip the summation route");
    auto* sf = app.add_subcommand("superfactorial", "quantum Lie superfactorial sf_G[q]");
    add_common(sf, c);
    auto* ribbon = app.add_subcommand("ribbon", "scalar products of a weight with all positive roots");
    add_common(ribbon, c);
    ribbon->add_option("weight", weight_arg, "comma-separated coordinates")->required();
    auto* cs3 = app.add_subcommand("cs3", "Chern-Simons partition function on S^3");
    add_common(cs3, c);
    auto* lr = app.add_subcommand("levelrank", "both sides of k|A_k(A_{g-1})| = g|A_g(A_{k-1})|");
    lr->add_option("g", lr_g, "rank-side integer")->required();
    lr->add_option("k", lr_k, "level-side integer")->required();
    add_common(lr, c, false, false);
    auto* sub = app.add_subcommand("subgroup", "global dimension of a conformally exceptional subgroup");
    sub->add_option("id", subgroup_id, "catalog id, e.g. e8-k30-adjoint")->required();
    add_common(sub, c, false);
    auto* cata = app.add_subcommand("catalog", "list the conformal-embedding catalog");
    add_common(cata, c, false);
    auto* chk = app.add_subcommand("check", "run the acceptance suite");
    chk->add_flag("--include-e7", include_e7, "include the E7 modular-data check");
    add_common(chk, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // parse failures exit 2; --help exits 0
    }

    try {
        apply_env(c);
        if (chk->parsed()) {
            check::Options opt;
            opt.include_e7 = include_e7;
            opt.weyl_cap = c.weyl_cap;
            return check::run_acceptance(std::cout, opt) == 0 ? 0 : 1;
        }
        if (lr->parsed()) {
            emit(payload::levelrank_payload(lr_g, lr_k), c.format);
            return 0;
        }
        if (sub->parsed()) {
            auto rec = modcat::find_embedding(subgroup_id, 12, c.catalog_path);
            if (!rec) {
                std::cerr << "no catalog entry with id '" << subgroup_id << "'\n";
                return 1;
            }
            emit(payload::subgroup_payload(*rec), c.format);
            return 0;
        }
        if (cata->parsed()) {
            emit(payload::catalog_payload(modcat::embedding_catalog(12, c.catalog_path)), c.format);
            return 0;
        }

        lie::LieType type = lie::parse_group(c.group);
        lie::LieData d = lie::build_lie_data(type);
        if (weights->parsed()) {
            emit(payload::weights_payload(fusion::integrable_weights(d, c.level)), c.format);
        } else if (smatrix->parsed() || tmatrix->parsed() || fus->parsed()) {
            fusion::LevelKCategory cat = fusion::integrable_weights(d, c.level);
            fusion::ModularData md = fusion::modular_data(cat, c.weyl_cap);
            if (smatrix->parsed()) emit(payload::smatrix_payload(cat, md), c.format);
            if (tmatrix->parsed()) emit(payload::tmatrix_payload(cat, md), c.format);
            if (fus->parsed()) {
                lie::Weight w = payload::parse_weight_arg(weight_arg, d.rank);
                long idx = cat.index_of(w);
                if (idx < 0) {
                    std::cerr << "weight " << weight_arg << " is not integrable at level "
                              << c.level << "\n";
                    return 1;
                }
                emit(payload::fusion_payload(cat, md, idx), c.format);
            }
        } else if (glob->parsed()) {
            bool with_sum = globaldim_sum_too &&
                            fusion::integrable_weights(d, c.level).size() <= 30000;
            emit(payload::globaldim_payload(d, c.level, with_sum), c.format);
        } else if (sf->parsed()) {
            emit(payload::superfactorial_payload(d, c.level), c.format);
        } else if (ribbon->parsed()) {
            emit(payload::ribbon_payload(d, payload::parse_weight_arg(weight_arg, d.rank)),
                 c.format);
        } else if (cs3->parsed()) {
            emit(payload::cs3_payload(d, c.level), c.format);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
