#include "hyperricci/curvature.hpp"
#include "hyperricci/families.hpp"
#include "hyperricci/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using hyperricci::decimal_string;
using hyperricci::format_rational;
using hyperricci::Rational;
using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hyperricci::Error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hyperricci::Error("cannot write '" + path + "'");
    out << content;
}

struct CurvatureOptions {
    std::string file;
    std::string edge_id;
    std::string format = "csv";
    bool with_dual = false;
    bool with_bounds = false;
    int decimal = 0;
};

json measure_json(const hyperricci::DiscreteMeasure& m) {
    json node = json::object();
    for (const auto& [v, mass] : m.masses) node[v.value] = format_rational(mass);
    return node;
}

int run_curvature(const CurvatureOptions& opt) {
    const auto h = hyperricci::parse_document(read_file(opt.file));

    std::vector<hyperricci::CurvatureReport> reports;
    if (opt.edge_id.empty()) {
        reports = hyperricci::curvature_all(h, opt.with_dual);
    } else {
        reports.push_back(hyperricci::curvature(h, opt.edge_id, opt.with_dual));
    }
    std::sort(reports.begin(), reports.end(),
              [](const auto& a, const auto& b) { return a.edge_id < b.edge_id; });

    if (opt.format == "csv") {
        std::string header = "edge,kappa,wasserstein,mu0,mu1,mu2,mu3";
        if (opt.with_dual) header += ",dual_bound";
        if (opt.with_bounds) header += ",digraph_min,overlap_bound";
        if (opt.decimal > 0) header += ",kappa_decimal,wasserstein_decimal";
        std::cout << header << "\n";
        for (const auto& r : reports) {
            std::cout << r.edge_id << ',' << format_rational(r.kappa) << ','
                      << format_rational(r.wasserstein_value) << ','
                      << format_rational(r.decomposition.mu0) << ','
                      << format_rational(r.decomposition.mu1) << ','
                      << format_rational(r.decomposition.mu2) << ','
                      << format_rational(r.decomposition.mu3);
            if (opt.with_dual) std::cout << ',' << format_rational(r.dual->bound);
            if (opt.with_bounds) {
                std::cout << ',' << format_rational(hyperricci::digraph_lower_bound(h, r.edge_id))
                          << ',' << format_rational(hyperricci::overlap_upper_bound(h, r.edge_id));
            }
            if (opt.decimal > 0) {
                std::cout << ',' << decimal_string(r.kappa, opt.decimal) << ','
                          << decimal_string(r.wasserstein_value, opt.decimal);
            }
            std::cout << "\n";
        }
        return 0;
    }

    json out = json::array();
    for (const auto& r : reports) {
        json node;
        node["edge"] = r.edge_id;
        node["kappa"] = format_rational(r.kappa);
        node["wasserstein"] = format_rational(r.wasserstein_value);
        node["mu0"] = format_rational(r.decomposition.mu0);
        node["mu1"] = format_rational(r.decomposition.mu1);
        node["mu2"] = format_rational(r.decomposition.mu2);
        node["mu3"] = format_rational(r.decomposition.mu3);
        json plan = json::array();
        for (const auto& [pair, mass] : r.plan.entries) {
            plan.push_back({{"from", pair.first.value},
                            {"to", pair.second.value},
                            {"mass", format_rational(mass)}});
        }
        node["plan"] = std::move(plan);
        if (opt.with_dual) {
            node["dual_bound"] = format_rational(r.dual->bound);
            json potential = json::object();
            for (const auto& [v, f] : r.dual->potential) {
                potential[v.value] = format_rational(f);
            }
            node["dual_potential"] = std::move(potential);
        }
        if (opt.with_bounds) {
            node["digraph_min"] =
                format_rational(hyperricci::digraph_lower_bound(h, r.edge_id));
            node["overlap_bound"] =
                format_rational(hyperricci::overlap_upper_bound(h, r.edge_id));
        }
        if (opt.decimal > 0) {
            node["kappa_decimal"] = decimal_string(r.kappa, opt.decimal);
            node["wasserstein_decimal"] = decimal_string(r.wasserstein_value, opt.decimal);
        }
        out.push_back(std::move(node));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ollivier-Ricci curvature of directed hypergraphs"};
    app.require_subcommand(1);

    std::string validate_file;
    auto* cmd_validate = app.add_subcommand("validate", "Check a hypergraph document");
    cmd_validate->add_option("file", validate_file, "document path")->required();

    CurvatureOptions copt;
    auto* cmd_curv = app.add_subcommand("curvature", "Per-edge curvature table");
    cmd_curv->add_option("file", copt.file, "document path")->required();
    cmd_curv->add_option("--edge", copt.edge_id, "report a single edge");
    cmd_curv->add_option("--format", copt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_curv->add_flag("--dual", copt.with_dual, "include the dual lower bound");
    cmd_curv->add_flag("--bounds", copt.with_bounds,
                       "include digraph and overlap bounds");
    cmd_curv->add_option("--decimal", copt.decimal,
                         "also render k-digit decimal approximations");

    std::string gen_family, gen_sizes, gen_granularity = "unit", gen_out;
    std::uint64_t gen_seed = 0;
    auto* cmd_gen = app.add_subcommand("generate", "Construct a curvature family");
    cmd_gen->add_option("family", gen_family,
                        "ricci1-tripartite | flat-bipartite | flat-tripartite | "
                        "ricci-neg2-quadripartite | hypertree")
        ->required();
    cmd_gen->add_option("--sizes", gen_sizes, "comma separated partition sizes")
        ->required();
    cmd_gen->add_option("--granularity", gen_granularity, "unit or TAILxHEAD, e.g. 2x2");
    cmd_gen->add_option("--seed", gen_seed, "hypertree random seed");
    cmd_gen->add_option("-o,--output", gen_out, "output document path")->required();

    std::string dist_file, dist_from, dist_to;
    auto* cmd_dist = app.add_subcommand("distance", "Directed hyperdistance u -> v");
    cmd_dist->add_option("file", dist_file, "document path")->required();
    cmd_dist->add_option("--from", dist_from, "source vertex id")->required();
    cmd_dist->add_option("--to", dist_to, "target vertex id")->required();

    std::string meas_file, meas_edge;
    auto* cmd_meas = app.add_subcommand("measures", "Tail and head measures of an edge");
    cmd_meas->add_option("file", meas_file, "document path")->required();
    cmd_meas->add_option("--edge", meas_edge, "edge id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_validate->parsed()) {
            // parse_document throws on violations; reaching the end means ok.
            hyperricci::parse_document(read_file(validate_file));
            std::cout << "ok\n";
            return 0;
        }
        if (cmd_curv->parsed()) {
            return run_curvature(copt);
        }
        if (cmd_gen->parsed()) {
            hyperricci::FamilySpec spec;
            spec.family = hyperricci::parse_family(gen_family);
            for (std::size_t pos = 0; pos < gen_sizes.size();) {
                const std::size_t comma = gen_sizes.find(',', pos);
                const std::string token = gen_sizes.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                spec.sizes.push_back(std::stoi(token));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (gen_granularity != "unit") {
                const auto x = gen_granularity.find('x');
                if (x == std::string::npos) {
                    throw hyperricci::Error("granularity must be 'unit' or TAILxHEAD");
                }
                spec.granularity.tail = std::stoi(gen_granularity.substr(0, x));
                spec.granularity.head = std::stoi(gen_granularity.substr(x + 1));
            }
            spec.seed = gen_seed;
            write_file(gen_out, hyperricci::serialize_document(hyperricci::generate(spec)));
            return 0;
        }
        if (cmd_dist->parsed()) {
            const auto h = hyperricci::parse_document(read_file(dist_file));
            const auto d = hyperricci::distance(h, {dist_from}, {dist_to});
            if (d.is_infinite()) {
                std::cout << "inf\n";
            } else {
                std::cout << d.hops() << "\n";
            }
            return 0;
        }
        if (cmd_meas->parsed()) {
            const auto h = hyperricci::parse_document(read_file(meas_file));
            json out;
            out["edge"] = meas_edge;
            out["tail_measure"] = measure_json(hyperricci::tail_measure(h, meas_edge));
            out["head_measure"] = measure_json(hyperricci::head_measure(h, meas_edge));
            std::cout << out.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
