/*
 * Copyright 2026 The acm-atlas Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Library walkthrough: build a variety, list its candidate rows, move
// between a bundle class and its curve, and evaluate a twisted chi.

#include <iostream>

#include "acm/acm.hpp"

int main() {
  const auto v = acm::make_cicy({3, 3}, acm::Mode::Strict);
  std::cout << v.id() << ": degree " << v.degree() << ", c2(T).H " << v.c2txh() << "\n";

  for (const auto& row : acm::classify(v)) {
    std::cout << "  c1=" << row.c1;
    if (row.c2) std::cout << "  c2 in [" << row.c2->lo << ", " << row.c2->hi << "]";
    std::cout << "  " << acm::to_string(row.existence) << "\n";
  }

  const acm::BundleClass e{3, 4 * v.degree(), 0};
  const auto curve = acm::bundle_to_curve(v, e);
  std::cout << "(3, " << e.c2 << ") <-> curve of degree " << curve.degree << ", genus " << curve.genus << "\n";
  std::cout << "chi(E(-1)) = " << acm::chi_rank2(v, acm::twist(v, e, -1)) << "\n";
}
