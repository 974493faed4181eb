// mmenum: stream maximal matchings of an edge-list graph.
//
//   mmenum large --t <int> [--mode bfs|rs] [--stats] <graph>
//   mmenum kbest --k <int> [--stats] <graph>
//   mmenum maximum [--stats] <graph>
//   mmenum reduce <cnf>
//
// Exit status: 0 on success, 2 on any usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mmenum/mmenum.hpp"

namespace {

constexpr int kUsageExit = 2;

mmenum::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw mmenum::parse_error("cannot open " + path, 0);
    }
    return mmenum::parse_graph(in);
}

// Prints one matching per line, flushing each so gaps reflect the algorithm.
mmenum::EnumerationSink line_sink(const mmenum::Graph& g) {
    return mmenum::EnumerationSink([&g](const mmenum::Matching& m) {
        std::string line = mmenum::render(g, m);
        line += '\n';
        std::fwrite(line.data(), 1, line.size(), stdout);
        std::fflush(stdout);
    });
}

void report(const mmenum::EnumerationSink& sink, bool stats) {
    if (stats) {
        std::fprintf(stderr, "%s\n", mmenum::format_delay_stats(sink.stats()).c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate maximal matchings under cardinality constraints"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string cnf_path;
    std::size_t threshold = 0;
    std::size_t k = 1;
    std::string mode = "bfs";
    bool stats = false;

    auto* large = app.add_subcommand("large", "all maximal matchings with at least t edges");
    large->add_option("--t", threshold, "cardinality threshold")->required()->check(CLI::NonNegativeNumber);
    large->add_option("--mode", mode, "bfs (supergraph traversal) or rs (reverse search)")
        ->check(CLI::IsMember({"bfs", "rs", "reverse-search"}));
    large->add_flag("--stats", stats, "print delay statistics to stderr");
    large->add_option("graph", graph_path, "edge-list file")->required();

    auto* kbest = app.add_subcommand("kbest", "the k largest maximal matchings");
    kbest->add_option("--k", k, "number of matchings")->required()->check(CLI::PositiveNumber);
    kbest->add_flag("--stats", stats, "print delay statistics to stderr");
    kbest->add_option("graph", graph_path, "edge-list file")->required();

    auto* maximum = app.add_subcommand("maximum", "all maximum matchings");
    maximum->add_flag("--stats", stats, "print delay statistics to stderr");
    maximum->add_option("graph", graph_path, "edge-list file")->required();

    auto* reduce = app.add_subcommand("reduce", "CNF formula to a maximal matching extension instance");
    reduce->add_option("cnf", cnf_path, "DIMACS CNF file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageExit;
    }

    try {
        if (*reduce) {
            std::ifstream in(cnf_path);
            if (!in) {
                throw mmenum::parse_error("cannot open " + cnf_path, 0);
            }
            auto inst = mmenum::build_extension_instance(mmenum::parse_dimacs(in));
            mmenum::write_instance(std::cout, inst);
            std::cout.flush();
            return 0;
        }

        const mmenum::Graph g = load_graph(graph_path);
        auto sink = line_sink(g);
        sink.restart_clock();
        if (*large) {
            if (mode == "bfs") {
                mmenum::enumerate_large_bfs(g, threshold, sink);
            } else {
                mmenum::enumerate_large_rs(g, threshold, sink);
            }
        } else if (*kbest) {
            mmenum::enumerate_kbest(g, k, sink);
        } else {
            mmenum::enumerate_maximum(g, sink);
        }
        report(sink, stats);
        return 0;
    } catch (const mmenum::parse_error& e) {
        std::fprintf(stderr, "mmenum: %s\n", e.what());
    } catch (const mmenum::usage_error& e) {
        std::fprintf(stderr, "mmenum: %s\n", e.what());
    }
    return kUsageExit;
}
