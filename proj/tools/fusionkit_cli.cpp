// Command line front end; subcommands are filled in as the library lands.

#include <cstdio>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "fusionkit: no subcommands wired up yet\n");
  return 2;
}
