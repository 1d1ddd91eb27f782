#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "walkmat/corpus.hpp"
#include "walkmat/graph6.hpp"

int main(int argc, char** argv) {
    CLI::App app{"enumerate all graphs on n vertices as graph6 lines"};
    int n = 0;
    std::string out = "-";
    app.add_option("n", n, "number of vertices")->required();
    app.add_option("output", out, "output file, or - for stdout");

    try {
        app.parse(argc, argv);
        auto graphs = walkmat::enumerate_graphs(n);
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (out != "-") {
            file.open(out);
            if (!file) throw std::runtime_error("cannot write " + out);
            os = &file;
        }
        for (const auto& g : graphs) *os << walkmat::write_graph6(g) << "\n";
        std::cerr << graphs.size() << " graphs on " << n << " vertices\n";
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
