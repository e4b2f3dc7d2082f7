// Copyright 2026 The mcknot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Builds the trefoil as a single 5-crossing petal diagram, prints its skein
// relation summary, bracket and Jones polynomial, then doubles a two
// triple-crossing trefoil into two 6-crossings.

#include <iostream>

#include "mcknot/census.hpp"
#include "mcknot/diagram.hpp"

int main(int argc, char** argv) {
  using namespace mcknot;

  const auto petal = petal_diagram({1, 3, 5, 2, 4});
  const auto rel = build_relation(petal.crossings[0]);
  std::cout << "type " << petal.crossings[0].to_string() << ": width " << rel->width() << ", " << rel->support_size()
            << " splits\n";

  const auto b = bracket(petal);
  std::cout << "bracket      " << b.to_string() << "  (span " << b.span() << ")\n";
  std::cout << "oracle       " << bracket_oracle(petal).to_string() << "\n";
  std::cout << "Jones        " << jones(petal).to_string() << "\n";

  const auto report = verify_span_bound(petal, b, petal.order(0));
  for (const auto& c : report.checks) std::cout << (c.ok() ? "  ok   " : "  FAIL ") << c.name << ": " << c.lhs << " <= " << c.rhs << "\n";

  if (argc > 1) {
    const auto triple = read_diagram_file(argv[1]).diagram;
    const auto doubled = double_order(triple, 0);
    std::cout << "doubled      " << doubled.crossing_count() << " crossings of order " << doubled.order(0) << ", Jones "
              << jones(doubled).to_string() << "\n";
  }
  return report.ok() ? 0 : 1;
}
