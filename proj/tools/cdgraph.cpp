// cdgraph: command-line front end.
//
// Exit status: 0 positive verdict or success, 1 negative verdict,
// 2 usage or format error, 3 budget or search cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include <cdgraph.hpp>

using namespace cdgraph;

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

/// Prefixes diagnostics from a file with its path.
class FileError : public InvalidInput
{
  public:
    FileError(const std::string& path, const std::string& what) : InvalidInput(path + ": " + what) {}
};

template <class Reader>
auto read_file(const std::string& path, Reader read)
{
    std::ifstream in(path);
    if (!in) throw FileError(path, "cannot open file");
    try {
        return read(in);
    } catch (const FileError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw FileError(path, e.what());
    }
}

Graph load_graph(const std::string& path) { return read_file(path, [](std::istream& in) { return io::read_graph(in); }); }

Hypergraph load_hypergraph(const std::string& path)
{
    return read_file(path, [](std::istream& in) { return io::read_hypergraph(in); });
}

io::WeightFile load_weights(const std::string& path, std::size_t n)
{
    return read_file(path, [n](std::istream& in) { return io::read_weights(in, n); });
}

SummabilityWitness load_witness(const std::string& path, std::size_t n)
{
    return read_file(path, [n](std::istream& in) { return io::read_witness(in, n); });
}

void print_set(const VertexSet& s)
{
    bool first = true;
    for (Vertex v : s) {
        std::cout << (first ? "" : " ") << v;
        first = false;
    }
    std::cout << '\n';
}

void print_family(const SetFamily& f)
{
    for (const auto& s : f) print_set(s);
}

void print_json(const io::json& j) { std::cout << j.dump(2) << '\n'; }

void print_refutation(const Refutation& r)
{
    if (const auto* p = std::get_if<IncomparablePair>(&r)) {
        std::cout << "incomparable pair " << p->i << ' ' << p->j << '\n';
        io::write_witness(std::cout, to_summability_witness(*p));
        return;
    }
    const auto& c = std::get<InfeasibilityCertificate>(r);
    std::cout << "farkas certificate\n";
    for (std::size_t k = 0; k < c.true_sets.size(); ++k) {
        std::cout << "true " << to_string(c.true_multipliers[k]);
        for (Vertex v : c.true_sets[k]) std::cout << ' ' << v;
        std::cout << '\n';
    }
    for (std::size_t k = 0; k < c.false_sets.size(); ++k) {
        std::cout << "false " << to_string(c.false_multipliers[k]);
        for (Vertex v : c.false_sets[k]) std::cout << ' ' << v;
        std::cout << '\n';
    }
}

int report_domination(const DominationReport& r, Flavor flavor, bool json)
{
    if (json) {
        print_json(io::to_json(r, flavor));
    } else {
        std::cout << (r.positive ? "" : "not_") << to_string(flavor) << '\n';
        if (r.structure) io::write_structure(std::cout, *r.structure);
        if (r.refutation) print_refutation(*r.refutation);
    }
    return r.positive ? kPositive : kNegative;
}

int report_hereditary(const HereditaryReport& r, bool json)
{
    if (json) {
        print_json(io::to_json(r));
    } else if (r.hereditarily_cd) {
        std::cout << "hereditarily_cd\n";
    } else {
        std::cout << "not_hereditarily_cd\n";
        if (r.hole) {
            std::cout << "hole";
            for (Vertex v : r.hole_cycle) std::cout << ' ' << v;
            std::cout << '\n';
        }
        if (r.forbidden) {
            std::cout << "induced " << r.forbidden->name;
            for (Vertex v : r.forbidden->embedding.image) std::cout << ' ' << v;
            std::cout << '\n';
        }
    }
    return r.hereditarily_cd ? kPositive : kNegative;
}

int report_chordal(const ChordalityReport& r, bool json)
{
    if (json) {
        print_json(io::to_json(r));
    } else if (r.chordal) {
        std::cout << "chordal\n";
    } else {
        std::cout << "not_chordal\nhole";
        for (Vertex v : r.hole_cycle) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return r.chordal ? kPositive : kNegative;
}

int report_split(const std::optional<SplitPartition>& p, bool json)
{
    if (json) {
        io::json out = {{"split", p.has_value()}};
        out["clique"] = p ? io::to_json(p->clique) : io::json(nullptr);
        out["independent"] = p ? io::to_json(p->independent) : io::json(nullptr);
        print_json(out);
    } else if (p) {
        std::cout << "split\nclique";
        for (Vertex v : p->clique) std::cout << ' ' << v;
        std::cout << "\nindependent";
        for (Vertex v : p->independent) std::cout << ' ' << v;
        std::cout << '\n';
    } else {
        std::cout << "not_split\n";
    }
    return p ? kPositive : kNegative;
}

int report_threshold(const ThresholdReport& r, bool json)
{
    if (json) {
        print_json(io::to_json(r));
    } else {
        std::cout << (r.threshold ? "threshold" : "not_threshold") << '\n';
        if (r.structure) io::write_structure(std::cout, *r.structure);
        if (r.refutation) print_refutation(*r.refutation);
    }
    return r.threshold ? kPositive : kNegative;
}

WeightedStructure structure_from(const io::WeightFile& f, Flavor flavor, const std::string& path)
{
    if (!f.threshold) throw FileError(path, "no threshold line 't <p[/q]>'");
    return WeightedStructure{f.weights, *f.threshold, flavor, false};
}

int verdict(bool ok, const char* yes, const char* no)
{
    std::cout << (ok ? yes : no) << '\n';
    return ok ? kPositive : kNegative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Connected-domishold graphs, threshold hypergraphs and their certificates", "cdgraph"};
    app.require_subcommand(1);

    std::string file, second, output, kind, property, family;
    std::vector<std::size_t> params;
    std::uint64_t seed = 1;
    std::size_t budget = kDefaultSeparatorBudget, k = 2;
    bool json = false;
    std::function<int()> action;

    auto* generate = app.add_subcommand("generate", "Write a graph from a named family");
    {
        generate->add_option("family", family, "Family name (see 'generate --list')");
        generate->add_option("params", params, "Family parameters");
        generate->add_option("--seed", seed, "Seed for random families");
        generate->add_option("-o,--output", output, "Output graph file");
        auto* list = generate->add_flag("--list", "List the families and exit");
        generate->callback([&, list] {
            action = [&, list] {
                if (list->count() > 0) {
                    for (const auto& f : graph_families())
                        std::cout << f.name << (f.arity ? " <n>" : "") << (f.seeded ? " [--seed S]" : "") << "  "
                                  << f.help << '\n';
                    return kPositive;
                }
                if (family.empty()) throw CLI::RequiredError("family");
                if (output.empty()) throw CLI::RequiredError("-o");
                Graph g = generate_family(family, params, seed);
                std::ofstream out(output);
                if (!out) throw FileError(output, "cannot write file");
                io::write_graph(out, g);
                return kPositive;
            };
        });
    }

    auto* graph = app.add_subcommand("graph", "Commands on graph files");
    graph->require_subcommand(1);
    auto add_graph_command = [&](const std::string& name, const std::string& help) {
        auto* c = graph->add_subcommand(name, help);
        c->add_option("file", file, "Graph file")->required();
        c->add_option("--budget", budget, "Cap on enumerated separators or sets");
        return c;
    };

    auto* recognize = graph->add_subcommand("recognize", "Decide a graph class, with a certificate");
    recognize->add_option("kind", kind, "cd, td, hereditary-cd, chordal or split")
        ->required()
        ->check(CLI::IsMember({"cd", "td", "hereditary-cd", "chordal", "split"}));
    recognize->add_option("file", file, "Graph file")->required();
    recognize->add_option("--budget", budget, "Cap on enumerated separators");
    recognize->add_flag("--json", json, "Structured output");
    recognize->callback([&] {
        action = [&] {
            Graph g = load_graph(file);
            if (kind == "cd") return report_domination(recognize_cd(g, budget), Flavor::cd, json);
            if (kind == "td") return report_domination(recognize_td(g), Flavor::td, json);
            if (kind == "hereditary-cd") return report_hereditary(recognize_hereditarily_cd(g), json);
            if (kind == "chordal") return report_chordal(is_chordal(g), json);
            return report_split(split_partition(g), json);
        };
    });

    add_graph_command("separators", "List the minimal vertex separators")->callback([&] {
        action = [&] {
            print_family(minimal_separators(load_graph(file), budget));
            return kPositive;
        };
    });
    add_graph_command("cutsets", "List the minimal cutsets")->callback([&] {
        action = [&] {
            print_family(minimal_cutsets(load_graph(file), budget));
            return kPositive;
        };
    });
    add_graph_command("cutset-hypergraph", "Write the minimal cutset hypergraph")->callback([&] {
        action = [&] {
            io::write_hypergraph(std::cout, cutset_hypergraph(load_graph(file), budget));
            return kPositive;
        };
    });
    add_graph_command("enumerate-min-cds", "List the minimal connected dominating sets")->callback([&] {
        action = [&] {
            print_family(enumerate_min_cds(load_graph(file), budget));
            return kPositive;
        };
    });
    auto* wcds = add_graph_command("solve-wcds", "Minimum-cost connected dominating set");
    wcds->add_option("--costs", second, "Cost file of 'w <v> <p[/q]>' lines")->required();
    wcds->add_flag("--json", json, "Structured output");
    wcds->callback([&] {
        action = [&] {
            Graph g = load_graph(file);
            auto costs = load_weights(second, g.order());
            auto best = solve_wcds(g, costs.weights, budget);
            if (json) {
                print_json({{"set", io::to_json(best.set)},
                            {"cost", to_string(best.cost)},
                            {"minimal_cds_count", best.enumerated_count}});
            } else {
                print_set(best.set);
                std::cout << "cost " << to_string(best.cost) << '\n';
            }
            return kPositive;
        };
    });

    auto* hyper = app.add_subcommand("hypergraph", "Commands on hypergraph files");
    hyper->require_subcommand(1);
    auto add_hyper_command = [&](const std::string& name, const std::string& help) {
        auto* c = hyper->add_subcommand(name, help);
        c->add_option("file", file, "Hypergraph file")->required();
        return c;
    };
    auto* threshold = add_hyper_command("threshold", "Decide thresholdness, with a structure or refutation");
    threshold->add_flag("--json", json, "Structured output");
    threshold->callback([&] { action = [&] { return report_threshold(is_threshold(load_hypergraph(file)), json); }; });
    add_hyper_command("dualize", "Write the blocker (minimal transversals)")->callback([&] {
        action = [&] {
            io::write_hypergraph(std::cout, minimal_transversals(load_hypergraph(file)));
            return kPositive;
        };
    });
    auto* check = hyper->add_subcommand("check", "Check sperner, one-sperner or dually-sperner");
    check->add_option("property", property, "Property name")->required();
    check->add_option("file", file, "Hypergraph file")->required();
    check->callback([&] {
        action = [&] {
            const FamilyProperty prop = parse_family_property(property);
            auto r = check_family_property(load_hypergraph(file), prop);
            std::cout << (r.holds ? "holds" : "fails") << '\n';
            if (r.witness) {
                io::write_set_line(std::cout, "h", r.witness->first);
                io::write_set_line(std::cout, "h", r.witness->second);
            }
            return r.holds ? kPositive : kNegative;
        };
    });
    auto* summable = add_hyper_command("summable", "Search for a k-summability witness");
    summable->add_option("-k", k, "Number of sets per side (2 or 3)")->required()->check(CLI::Range(2, 3));
    summable->callback([&] {
        action = [&] {
            auto w = summability_search(load_hypergraph(file), k);
            std::cout << k << (w ? "-summable" : "-asummable") << '\n';
            if (!w) return kNegative;
            io::write_witness(std::cout, *w);
            return kPositive;
        };
    });
    add_hyper_command("split-incidence", "Write the split-incidence graph")->callback([&] {
        action = [&] {
            io::write_graph(std::cout, split_incidence_graph(load_hypergraph(file)).graph);
            return kPositive;
        };
    });

    auto* verify = app.add_subcommand("verify", "Re-check an emitted certificate");
    verify->require_subcommand(1);
    for (const char* name : {"cd", "td"}) {
        auto* c = verify->add_subcommand(name, std::string("Check a ") + name + " structure on a graph");
        c->add_option("graph", file, "Graph file")->required();
        c->add_option("structure", second, "Weight file with a threshold line")->required();
        c->callback([&, flavor = std::string(name) == "cd" ? Flavor::cd : Flavor::td] {
            action = [&, flavor] {
                Graph g = load_graph(file);
                auto s = structure_from(load_weights(second, g.order()), flavor, second);
                bool ok = flavor == Flavor::cd ? validates_cd(g, s) : validates_td(g, s);
                return verdict(ok, "valid", "invalid");
            };
        });
    }
    auto* vsep = verify->add_subcommand("separating", "Check a separating structure on a hypergraph");
    vsep->add_option("hypergraph", file, "Hypergraph file")->required();
    vsep->add_option("structure", second, "Weight file with a threshold line")->required();
    vsep->callback([&] {
        action = [&] {
            Hypergraph h = load_hypergraph(file);
            auto s = structure_from(load_weights(second, h.order()), Flavor::separating, second);
            return verdict(check_separating(h, s), "valid", "invalid");
        };
    });
    auto* vsum = verify->add_subcommand("summability", "Check a summability witness on a hypergraph");
    vsum->add_option("hypergraph", file, "Hypergraph file")->required();
    vsum->add_option("witness", second, "Witness file of 'a ...' and 'b ...' lines")->required();
    vsum->callback([&] {
        action = [&] {
            Hypergraph h = load_hypergraph(file);
            return verdict(verify_summability_witness(h, load_witness(second, h.order())), "valid", "invalid");
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        return action();
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
