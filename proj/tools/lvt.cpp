#include <iostream>
#include <string>
#include <vector>

#include "lvt/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = lvt::cli::run(args);
    if (!result.text.empty())
        std::cout << result.text;
    if (result.status == lvt::cli::Status::ok) {
        if (!result.payload.is_null())
            std::cout << result.payload.dump() << '\n';
    } else {
        for (const auto& d : result.diagnostics)
            std::cerr << "lvt: " << d << '\n';
    }
    return result.exit_code;
}
