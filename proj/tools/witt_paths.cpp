#include "witt_paths_cli.hpp"

int main(int argc, char **argv)
{
    return wittpaths::cli::run(argc, argv);
}
