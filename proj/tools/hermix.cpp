#include "hermix/commands.hpp"
#include "hermix/document.hpp"
#include "hermix/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Hermitian adjacency matrices of mixed graphs: determinants, inverses, similarity"};
    app.require_subcommand(1);

    std::string file;
    bool show_paths = false;
    std::size_t basepoint = 0;
    std::uint64_t seed = 0;
    std::size_t vertices = 0;
    bool unicyclic = false;
    unsigned alpha_order = 3;
    std::string output;

    auto* det = app.add_subcommand("det", "exact determinant of H_a");
    det->add_option("file", file, "graph document")->required();

    auto* inverse = app.add_subcommand("inverse", "exact inverse for a bipartite graph with a unique perfect matching");
    inverse->add_option("file", file, "graph document")->required();
    inverse->add_flag("--paths", show_paths, "list the co-augmenting paths behind every entry");

    auto* classify = app.add_subcommand("classify", "diagonal similarity of H_gamma^-1 for a unicyclic graph");
    classify->add_option("file", file, "graph document")->required();
    classify->add_option("--basepoint", basepoint, "vertex u for the sign matrix D_u");

    auto* check = app.add_subcommand("check", "run every applicable property check");
    check->add_option("file", file, "graph document")->required();

    auto* gen = app.add_subcommand("gen", "random bipartite graph with a unique perfect matching");
    gen->add_option("--seed", seed, "random seed")->required();
    gen->add_option("--n", vertices, "even vertex count")->required();
    gen->add_flag("--unicyclic", unicyclic, "add one edge closing a cycle");
    gen->add_option("--alpha-order", alpha_order, "order of alpha stored in the document");
    gen->add_option("-o,--output", output, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const auto doc = hermix::generate_instance(seed, vertices, unicyclic, alpha_order);
            std::ofstream out(output, std::ios::binary);
            if (!out) throw hermix::Error(hermix::ErrorCode::InvalidArgument, "cannot write '" + output + "'");
            out << hermix::render_document(doc);
            return hermix::exit_success;
        }
        const auto doc = hermix::load_document(file);
        if (det->parsed()) {
            std::cout << hermix::command_det(doc);
        } else if (inverse->parsed()) {
            std::cout << hermix::command_inverse(doc, show_paths);
        } else if (classify->parsed()) {
            std::cout << hermix::command_classify(doc, basepoint);
        } else {
            const auto results = hermix::run_checks(doc);
            std::cout << hermix::render_checks(results);
            if (!hermix::all_passed(results)) return hermix::exit_invariant;
        }
        return hermix::exit_success;
    } catch (const hermix::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return hermix::is_precondition(e.code()) ? hermix::exit_precondition : hermix::exit_invariant;
    }
}
