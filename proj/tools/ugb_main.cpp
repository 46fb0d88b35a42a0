#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ugb/errors.hpp"
#include "ugb/filter.hpp"
#include "ugb/graver.hpp"
#include "ugb/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitNotWalkBinomial = 5;

struct Options {
    std::string graph_path;
    std::string basis_path;
    std::string format = "monomial";
    std::string binomial_text;
    int max_degree = 0;
    long max_walks = 0;
    int parallel = 1;
    bool explain = false;
    bool verify_mode = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ugb::ParseError(0, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ugb::FormatStyle style(const Options& opt) {
    return opt.format == "vector" ? ugb::FormatStyle::vector_row
                                  : ugb::FormatStyle::monomial;
}

ugb::EnumerationLimits limits(const Options& opt) {
    ugb::EnumerationLimits lim;
    if (opt.max_degree > 0) lim.max_degree = opt.max_degree;
    if (opt.max_walks > 0) lim.max_walks = opt.max_walks;
    return lim;
}

// Imported basis when --basis was given, otherwise enumerated.
ugb::BasisSet load_basis(const Options& opt, const ugb::Graph& g) {
    if (!opt.basis_path.empty())
        return ugb::parse_basis(read_file(opt.basis_path), g);
    return ugb::graver_basis(g, limits(opt));
}

std::string edge_set_text(const ugb::EdgeSubset& edges) {
    std::string out = "{";
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i > 0) out += ',';
        out += 'e' + std::to_string(edges[i] + 1);
    }
    return out + "}";
}

void print_basis(const ugb::BasisSet& basis, const Options& opt) {
    std::cout << basis.size() << '\n';
    for (const auto& b : basis.elements)
        std::cout << ugb::format_binomial(b, style(opt)) << '\n';
}

int cmd_graver(const Options& opt) {
    auto g = ugb::parse_graph(read_file(opt.graph_path));
    print_basis(load_basis(opt, g), opt);
    return kExitOk;
}

int cmd_ugb(const Options& opt) {
    auto g = ugb::parse_graph(read_file(opt.graph_path));
    auto graver = load_basis(opt, g);
    auto result = ugb::universal_groebner_basis(graver, g, opt.verify_mode, opt.parallel);
    print_basis(result.basis, opt);
    if (opt.explain) {
        for (int i = 0; i < graver.size(); ++i) {
            const auto& tr = result.traces[i];
            if (tr.accepted) continue;
            std::cout << "rejected: " << ugb::format_binomial(graver.elements[i], style(opt))
                      << "  pure cycle " << edge_set_text(*tr.rejecting_cycle) << " on w"
                      << (tr.rejecting_side > 0 ? '+' : '-') << '\n';
        }
    }
    return kExitOk;
}

int cmd_classify(const Options& opt) {
    auto g = ugb::parse_graph(read_file(opt.graph_path));
    ugb::Binomial b;
    try {
        b = ugb::parse_binomial(opt.binomial_text, g);
    } catch (const ugb::InvalidBinomialError& e) {
        std::cout << "irreducible walk binomial: no (" << e.what() << ")\n";
        return kExitNotWalkBinomial;
    }
    if (ugb::connected_components(g, ugb::support_walkgraph(b, g).support).size() != 1) {
        std::cout << "irreducible walk binomial: no (support is not connected)\n";
        return kExitNotWalkBinomial;
    }
    std::cout << "irreducible walk binomial: yes\n";

    auto prim = ugb::is_primitive_structural(ugb::support_walkgraph(b, g), g);
    if (!prim.primitive) {
        std::cout << "primitive: no (" << prim.reason << ")\n";
        std::cout << "in UGB: n/a (membership is defined for primitive binomials only)\n";
        return kExitOk;
    }
    std::cout << "primitive: yes\n";
    auto [accepted, trace] = ugb::filter_element(b, g);
    if (accepted)
        std::cout << "in UGB: yes\n";
    else
        std::cout << "in UGB: no (pure cycle " << edge_set_text(*trace.rejecting_cycle)
                  << " on w" << (trace.rejecting_side > 0 ? '+' : '-') << ")\n";
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    auto g = ugb::parse_graph(read_file(opt.graph_path));
    auto lim = limits(opt);
    auto all = ugb::enumerate_walk_binomials(g, lim);

    ugb::BasisSet graver;
    for (const auto& b : all.elements) {
        auto wg = ugb::support_walkgraph(b, g);
        bool structural = ugb::is_primitive_structural(wg, g).primitive;
        if (static_cast<int>(wg.support.size()) <= lim.max_edges_support) {
            bool brute = ugb::is_primitive_bruteforce(b, g, lim.max_edges_support);
            if (brute != structural) {
                std::cout << "MISMATCH primitivity on "
                          << ugb::format_binomial(b, style(opt)) << '\n';
                return kExitMismatch;
            }
        }
        if (structural) graver.elements.push_back(b);
    }

    auto result = ugb::universal_groebner_basis(graver, g, /*verify=*/true, opt.parallel);
    std::cout << "irreducible: " << all.size() << ", primitive: " << graver.size()
              << ", ugb: " << result.basis.size() << ", OK\n";
    return kExitOk;
}

int cmd_stats(const Options& opt) {
    auto g = ugb::parse_graph(read_file(opt.graph_path));
    auto graver = load_basis(opt, g);
    auto result = ugb::universal_groebner_basis(graver, g, false, opt.parallel);

    std::cout << "graver: " << graver.size() << '\n';
    std::cout << "ugb: " << result.basis.size() << '\n';
    std::cout << "degree histogram:";
    for (auto [deg, count] : ugb::degree_histogram(graver))
        std::cout << ' ' << deg << ':' << count;
    std::cout << '\n';

    int max_edges = 0;
    long total_steps = 0;
    for (int i = 0; i < graver.size(); ++i) {
        max_edges = std::max(max_edges, 2 * graver.elements[i].degree);
        total_steps += result.traces[i].step_count;
    }
    std::cout << "max walk edges: " << max_edges << '\n';
    std::cout << "total steps: " << total_steps << '\n';
    std::cout << "element walk-edges steps steps/edges^3\n";
    for (int i = 0; i < graver.size(); ++i) {
        double edges = 2.0 * graver.elements[i].degree;
        long steps = result.traces[i].step_count;
        std::cout << i + 1 << ' ' << static_cast<int>(edges) << ' ' << steps << ' '
                  << static_cast<double>(steps) / (edges * edges * edges) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graver and universal Groebner bases of toric ideals of graphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_basis) {
        cmd->add_option("graph", opt.graph_path, "graph file (\"n m\" header, edge lines)")
            ->required();
        if (with_basis)
            cmd->add_option("--basis", opt.basis_path, "import a Graver basis file");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"vector", "monomial"}));
        cmd->add_option("--max-degree", opt.max_degree, "walk degree bound override");
        cmd->add_option("--max-walks", opt.max_walks, "walk search state cap");
        cmd->add_option("--parallel", opt.parallel, "worker threads for filtering");
    };

    auto* graver = app.add_subcommand("graver", "enumerate the Graver basis");
    add_common(graver, true);

    auto* ugbcmd = app.add_subcommand("ugb", "compute the universal Groebner basis");
    add_common(ugbcmd, true);
    ugbcmd->add_flag("--explain", opt.explain, "list rejected elements with certificates");
    ugbcmd->add_flag("--verify-mode", opt.verify_mode, "cross-check all three mixedness tests");

    auto* classify = app.add_subcommand("classify", "classify one binomial");
    add_common(classify, false);
    classify->add_option("binomial", opt.binomial_text, "binomial (monomial or vector form)")
        ->required();

    auto* verify = app.add_subcommand("verify", "cross-oracle agreement over the full enumeration");
    add_common(verify, false);

    auto* stats = app.add_subcommand("stats", "basis statistics and step counts");
    add_common(stats, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (graver->parsed()) return cmd_graver(opt);
        if (ugbcmd->parsed()) return cmd_ugb(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (stats->parsed()) return cmd_stats(opt);
    } catch (const ugb::LimitExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const ugb::OracleMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const ugb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
