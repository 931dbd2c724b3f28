// Regenerates data/knot_table.txt from the classical rows in table_gen.cpp.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "knotmarket/table_gen.hpp"

int main(int argc, char** argv) {
    CLI::App app{"regenerate the bundled knot reference table"};
    std::string output = "data/knot_table.txt";
    app.add_option("-o,--output", output, "where to write the table");
    CLI11_PARSE(app, argc, argv);

    knotmarket::GenerationResult result;
    try {
        result = knotmarket::generate_knot_table();
    } catch (const std::exception& e) {
        std::cerr << "generation failed: " << e.what() << "\n";
        return 1;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << output << "\n";
        return 2;
    }
    out << result.text;
    for (const auto& name : result.dropped)
        std::cerr << "dropped (no verified representative): " << name << "\n";
    std::cerr << result.text.size() << " bytes, " << result.dropped.size()
              << " rows dropped\n";
    return 0;
}
