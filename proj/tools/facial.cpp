#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <unistd.h>

#include "facial_cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string input;
    // stdin is read only when a flag asks for it
    for (const auto& a : args)
        if (a == "-" && !isatty(STDIN_FILENO)) {
            input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
            break;
        }
    auto r = facial::cli::run(args, input);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
