#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "rvertex/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const rvertex::RunConfig cfg = rvertex::parse_args(args);
        return rvertex::run_command(cfg, std::cout);
    } catch (const rvertex::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
