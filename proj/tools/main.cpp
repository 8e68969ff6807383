#include "mocbandit/app/cli.hpp"

int main(int argc, char** argv)
{
    return mocbandit::app::cli_main(argc, argv);
}
