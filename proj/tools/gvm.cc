#include <gvm/cli.hh>

#include <iostream>

int main(int argc, char ** argv)
{
    return gvm::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
