#include "commands.hpp"

int main(int argc, char** argv)
{
    return dismantle::cli::run(argc, argv);
}
