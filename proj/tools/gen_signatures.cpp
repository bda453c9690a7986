#include <cstdio>

#include "hyper3/equiv/equiv.hpp"

// Prints the singularity signature table shipped in
// include/hyper3/equiv/signature_table.inc.
int main() {
  std::fputs(hyper3::render_signature_table(hyper3::generate_signature_table(20240611, 12, 6)).c_str(), stdout);
  return 0;
}
