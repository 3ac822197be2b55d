// Prints the claim traceability table that docs/claims.md embeds.
#include <iostream>

#include "upg/claims.hpp"

int main() { std::cout << upg::claims_table_markdown(); }
