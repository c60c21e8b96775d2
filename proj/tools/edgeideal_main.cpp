#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "edgeideal/classifiers.hpp"
#include "edgeideal/formulas.hpp"
#include "edgeideal/genfun.hpp"
#include "edgeideal/graph_io.hpp"
#include "edgeideal/verify.hpp"

using namespace edgeideal;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

bool digits_csv(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != ',') return false;
    return true;
}

long long to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw InputError("bad integer: " + s);
        return v;
    } catch (const std::exception&) {
        throw InputError("bad integer: " + s);
    }
}

Graph parse_graph_spec(const std::string& spec);

Graph parse_with_args(const std::string& head, const std::string& rest) {
    if (head == "cycle") return cycle_graph(static_cast<int>(to_int(rest)));
    if (head == "path") return path_graph(static_cast<int>(to_int(rest)));
    if (head == "complete") return complete_graph(static_cast<int>(to_int(rest)));
    if (head == "kbipartite") {
        auto ab = split(rest, ',');
        if (ab.size() != 2) throw InputError("kbipartite:a,b expected");
        return complete_bipartite_graph(static_cast<int>(to_int(ab[0])),
                                        static_cast<int>(to_int(ab[1])));
    }
    if (head == "ferrers") {
        std::vector<long long> parts;
        for (const auto& p : split(rest, ',')) parts.push_back(to_int(p));
        return ferrers_graph(Partition(parts));
    }
    if (head == "whisker") {
        try {
            return whisker_all(parse_graph_spec(rest));
        } catch (const InputError&) {
            auto pos = rest.rfind(':');
            if (pos == std::string::npos || !digits_csv(rest.substr(pos + 1))) throw;
            Graph base = parse_graph_spec(rest.substr(0, pos));
            VertexSet s(base.vertex_count());
            for (const auto& tok : split(rest.substr(pos + 1), ','))
                s.insert(static_cast<int>(to_int(tok)));
            return whisker(base, s);
        }
    }
    if (head == "ear") {
        auto pos = rest.rfind(':');
        if (pos == std::string::npos) throw InputError("ear:base-spec:u-v expected");
        auto uv = split(rest.substr(pos + 1), '-');
        if (uv.size() != 2) throw InputError("ear edge must look like u-v");
        return add_ear(parse_graph_spec(rest.substr(0, pos)),
                       static_cast<int>(to_int(uv[0])), static_cast<int>(to_int(uv[1])));
    }
    if (head == "grid") {
        std::vector<std::pair<long long, long long>> points;
        for (const auto& pt : split(rest, ';')) {
            auto xy = split(pt, ',');
            if (xy.size() != 2) throw InputError("grid points must look like x,y;x,y");
            points.emplace_back(to_int(xy[0]), to_int(xy[1]));
        }
        return grid_subgraph(points);
    }
    if (head == "union") {
        auto parts = split(rest, '+');
        if (parts.size() < 2) throw InputError("union:spec+spec expected");
        Graph g = parse_graph_spec(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            g = disjoint_union(g, parse_graph_spec(parts[i]));
        return g;
    }
    throw InputError("unknown graph constructor: " + head);
}

Graph parse_graph_spec(const std::string& spec) {
    auto pos = spec.find(':');
    if (pos == std::string::npos) throw InputError("graph spec needs a constructor:args form");
    return parse_with_args(spec.substr(0, pos), spec.substr(pos + 1));
}

struct GraphInput {
    std::string spec, file;

    Graph resolve() const {
        if (!spec.empty() && !file.empty())
            throw InputError("give either --graph or --file, not both");
        if (!spec.empty()) {
            if (std::filesystem::exists(spec)) return load_graph_file(spec);
            return parse_graph_spec(spec);
        }
        if (!file.empty()) return load_graph_file(file);
        throw InputError("a graph is required (--graph SPEC or --file PATH)");
    }
};

int default_workers() {
    const char* env = std::getenv("EDGEIDEAL_WORKERS");
    if (!env) return 1;
    long long v = to_int(env);
    if (v < 0) throw InputError("EDGEIDEAL_WORKERS must be nonnegative");
    return static_cast<int>(v);
}

void print_summary(std::ostream& out, const BettiTable& t) {
    auto s = summarize(t);
    out << "pdim(R) = " << s.pdim;
    if (s.pdim >= 1) out << "   [pdim(I) = " << s.pdim - 1 << "]";
    out << "\nreg(R)  = " << s.reg_ring << "   [reg(I) = " << s.reg_ring + 1 << "]"
        << "\ndepth   = " << s.depth << "\nlinear  : " << (s.linear ? "yes" : "no") << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge ideal toolkit: Betti tables, classifiers, closed forms"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a graph and emit it");
    std::string construct_spec, construct_out, construct_format = "edgelist";
    construct->add_option("spec", construct_spec, "constructor spec, e.g. ferrers:3,2,1")->required();
    construct->add_option("--out", construct_out, "output path (stdout if omitted)");
    construct->add_option("--format", construct_format, "edgelist|graph6|json");

    // betti
    auto* betti = app.add_subcommand("betti", "graded Betti numbers via the Hochster sweep");
    GraphInput betti_in;
    std::string betti_field = "2", betti_format = "table";
    int betti_workers = default_workers(), betti_r = 2, betti_cap = 20;
    bool betti_fold = false;
    betti->add_option("--graph", betti_in.spec, "inline constructor spec");
    betti->add_option("--file", betti_in.file, "graph file (edge list, .g6, .json)");
    betti->add_option("--field", betti_field, "2|3|5|...|Q (default 2)");
    betti->add_option("--format", betti_format, "table|json|csv");
    betti->add_option("--workers", betti_workers, "worker pool size (0 = hardware)");
    betti->add_option("--component-ideal", betti_r, "use the r-component ideal (default edge ideal)");
    betti->add_option("--unsafe-n-cap", betti_cap, "override the 2^n safety cap");
    betti->add_flag("--fold-reduce", betti_fold, "fold-reduce each induced subgraph first");

    // genfun
    auto* genfun = app.add_subcommand("genfun", "bivariate Betti generating function");
    GraphInput genfun_in;
    std::string genfun_field = "2", genfun_format = "text";
    bool genfun_forest_flag = false;
    genfun->add_option("--graph", genfun_in.spec, "inline constructor spec");
    genfun->add_option("--file", genfun_in.file, "graph file");
    genfun->add_option("--field", genfun_field, "2|3|...|Q");
    genfun->add_option("--format", genfun_format, "text|json");
    genfun->add_flag("--forest", genfun_forest_flag, "use the leaf recursion (forests only)");

    // classify
    auto* classify = app.add_subcommand("classify", "combinatorial-topology classifiers");
    GraphInput classify_in;
    std::string classify_checks = "vd,shellable,cm,seqcm,pure", classify_fields = "2";
    std::string classify_complex;
    classify->add_option("--graph", classify_in.spec, "inline constructor spec (uses Ind(G))");
    classify->add_option("--file", classify_in.file, "graph file (uses Ind(G))");
    classify->add_option("--complex", classify_complex, "simplicial complex JSON file");
    classify->add_option("--checks", classify_checks, "subset of vd,shellable,cm,seqcm,pure");
    classify->add_option("--field", classify_fields, "comma-separated fields");

    // homology
    auto* homology_cmd = app.add_subcommand("homology", "reduced homology of Ind(G) or a complex");
    GraphInput homology_in;
    std::string homology_field = "2", homology_complex;
    homology_cmd->add_option("--graph", homology_in.spec, "inline constructor spec");
    homology_cmd->add_option("--file", homology_in.file, "graph file");
    homology_cmd->add_option("--complex", homology_complex, "simplicial complex JSON file");
    homology_cmd->add_option("--field", homology_field, "2|3|...|Q");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "projective-dimension bounds");
    GraphInput bounds_in;
    std::string bounds_kind, bounds_points, bounds_field = "2";
    long long bounds_n = -1, bounds_d = -1, bounds_r = 2;
    std::string bounds_a, bounds_b;
    bool bounds_verify = false;
    bounds->add_option("--kind", bounds_kind,
                       "general|max_degree|claw_free|z2_lattice|component")->required();
    bounds->add_option("--graph", bounds_in.spec, "inline constructor spec");
    bounds->add_option("--file", bounds_in.file, "graph file");
    bounds->add_option("--points", bounds_points, "lattice points x,y;x,y for z2_lattice");
    bounds->add_option("--n", bounds_n, "vertex count (formula only)");
    bounds->add_option("--d", bounds_d, "maximum degree (formula only)");
    bounds->add_option("--r", bounds_r, "component-ideal r");
    bounds->add_option("--a", bounds_a, "general bound a (rational p/q)");
    bounds->add_option("--b", bounds_b, "general bound b (rational p/q)");
    bounds->add_option("--field", bounds_field, "field for the oracle comparison");
    bounds->add_flag("--verify", bounds_verify, "compare against the Hochster oracle");

    // verify
    auto* verify = app.add_subcommand("verify", "run acceptance checks");
    std::string verify_name = "all";
    long long verify_max_cells = 8;
    verify->add_option("name", verify_name, "criterion name or 'all'");
    verify->add_option("--max-cells", verify_max_cells, "partition-size cap for the ferrers check");

    try {
        app.parse(argc, argv);

        if (*construct) {
            Graph g = parse_graph_spec(construct_spec);
            GraphFormat fmt;
            if (construct_format == "edgelist") fmt = GraphFormat::EdgeList;
            else if (construct_format == "graph6") fmt = GraphFormat::Graph6;
            else if (construct_format == "json") fmt = GraphFormat::Json;
            else throw InputError("unknown format: " + construct_format);
            if (construct_out.empty()) {
                if (fmt == GraphFormat::EdgeList) std::cout << write_edge_list(g);
                if (fmt == GraphFormat::Graph6) std::cout << encode_graph6(g) << '\n';
                if (fmt == GraphFormat::Json) std::cout << graph_to_json(g) << '\n';
            } else {
                save_graph_file(g, construct_out, fmt);
            }
        } else if (*betti) {
            Graph g = betti_in.resolve();
            FieldSpec k = FieldSpec::parse(betti_field);
            OracleOptions opts;
            opts.workers = betti_workers;
            opts.fold_reduce_per_subset = betti_fold;
            opts.n_cap = betti_cap;
            BettiTable t = betti_r == 2 ? betti_table_graph(g, k, opts)
                                        : betti_table_component_ideal(g, betti_r, k, opts);
            if (betti_format == "table") {
                std::cout << render_betti_table(t);
                print_summary(std::cout, t);
            } else if (betti_format == "json") {
                std::cout << betti_to_json(t, k) << '\n';
            } else if (betti_format == "csv") {
                std::cout << betti_table_csv(t);
            } else {
                throw InputError("unknown format: " + betti_format);
            }
        } else if (*genfun) {
            Graph g = genfun_in.resolve();
            BettiPolynomial p = genfun_forest_flag
                                    ? genfun_forest(g)
                                    : genfun_oracle(g, FieldSpec::parse(genfun_field));
            if (genfun_format == "json") {
                std::cout << polynomial_to_json(p) << '\n';
            } else {
                std::cout << p.str() << '\n';
                std::cout << "x-degree (reg R) = " << p.x_degree()
                          << ", y-degree (pdim R) = " << p.y_degree() << '\n';
            }
        } else if (*classify) {
            SimplicialComplex d = classify_complex.empty()
                                      ? independence_complex(classify_in.resolve())
                                      : [&] {
                                            std::ifstream in(classify_complex);
                                            if (!in) throw InputError("cannot open " + classify_complex);
                                            std::stringstream buf;
                                            buf << in.rdbuf();
                                            return complex_from_json(buf.str());
                                        }();
            std::vector<FieldSpec> fields;
            for (const auto& f : split(classify_fields, ',')) fields.push_back(FieldSpec::parse(f));
            std::set<std::string> checks;
            for (const auto& c : split(classify_checks, ',')) checks.insert(c);
            bool everything = checks.count("vd") && checks.count("shellable") &&
                              checks.count("cm") && checks.count("seqcm") && checks.count("pure");
            if (everything) {
                auto report = audit_chain(d, fields);
                std::cout << classification_to_json(report) << '\n';
                if (!report.chain_consistent()) {
                    std::cerr << "internal error: implication chain violated\n";
                    return 1;
                }
            } else {
                ClassificationReport report;
                report.pure = d.is_pure();
                if (checks.count("vd")) report.vertex_decomposable = is_vertex_decomposable(d);
                if (checks.count("shellable")) {
                    try {
                        auto sh = is_shellable(d);
                        report.shellable = sh.shellable;
                        report.shelling_order = sh.order;
                    } catch (const CapExceeded&) {
                        report.shellable.reset();
                    }
                }
                for (const auto& k : fields) {
                    if (checks.count("cm")) report.cohen_macaulay[k.name()] = is_cohen_macaulay(d, k);
                    if (checks.count("seqcm"))
                        report.sequentially_cm[k.name()] = is_sequentially_cm(d, k);
                }
                std::cout << classification_to_json(report) << '\n';
            }
        } else if (*homology_cmd) {
            SimplicialComplex d = homology_complex.empty()
                                      ? independence_complex(homology_in.resolve())
                                      : [&] {
                                            std::ifstream in(homology_complex);
                                            if (!in) throw InputError("cannot open " + homology_complex);
                                            std::stringstream buf;
                                            buf << in.rdbuf();
                                            return complex_from_json(buf.str());
                                        }();
            std::cout << profile_to_json(reduced_homology(d, FieldSpec::parse(homology_field)))
                      << '\n';
        } else if (*bounds) {
            FieldSpec k = FieldSpec::parse(bounds_field);
            BoundReport rep;
            auto parse_q = [](const std::string& s) {
                mpq_class q(s);
                q.canonicalize();
                return q;
            };
            if (bounds_verify) {
                if (bounds_kind == "z2_lattice") {
                    std::vector<std::pair<long long, long long>> pts;
                    for (const auto& pt : split(bounds_points, ';')) {
                        auto xy = split(pt, ',');
                        if (xy.size() != 2) throw InputError("--points must look like x,y;x,y");
                        pts.emplace_back(to_int(xy[0]), to_int(xy[1]));
                    }
                    rep = verify_bound_z2(pts, k);
                } else {
                    Graph g = bounds_in.resolve();
                    BoundKind kind;
                    if (bounds_kind == "max_degree") kind = BoundKind::MaxDegree;
                    else if (bounds_kind == "claw_free") kind = BoundKind::ClawFree;
                    else if (bounds_kind == "component") kind = BoundKind::Component;
                    else throw InputError("cannot verify kind: " + bounds_kind);
                    rep = verify_bound(g, kind, k, {}, bounds_r);
                }
            } else {
                if (bounds_kind == "general")
                    rep = pdim_bound_general(bounds_n, parse_q(bounds_a), parse_q(bounds_b));
                else if (bounds_kind == "max_degree") rep = pdim_bound_max_degree(bounds_n, bounds_d);
                else if (bounds_kind == "claw_free") rep = pdim_bound_claw_free(bounds_n, bounds_d);
                else if (bounds_kind == "z2_lattice") rep = pdim_bound_z2(bounds_n);
                else if (bounds_kind == "component")
                    rep = pdim_bound_component(bounds_n, bounds_d, bounds_r);
                else throw InputError("unknown bound kind: " + bounds_kind);
            }
            std::cout << bound_report_to_json(rep) << '\n';
            if (rep.holds.has_value() && !*rep.holds) {
                std::cerr << "internal error: bound violated by the oracle\n";
                return 1;
            }
        } else if (*verify) {
            std::vector<CriterionResult> results;
            if (verify_name == "all")
                results = run_all_criteria();
            else if (verify_name == "ferrers")
                results.push_back(verify_ferrers(verify_max_cells));
            else
                results.push_back(run_criterion(verify_name));
            bool all_pass = true;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.detail << '\n';
            }
            if (!all_pass) {
                std::cerr << "verification failed\n";
                return 1;
            }
            std::cout << "OK: " << results.size() << " criteria passed, 0 mismatches\n";
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap refusal: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
