// Prints the kernel and cokernel of the transgression mod p for a few adjoint
// groups, and the E3 Poincare series of PSU(2) over F_2.

#include "transgress/document.hpp"

#include <iostream>

int main() {
  using namespace transgress;
  const std::pair<const char*, std::int64_t> cases[] = {{"C2:adj", 2}, {"C3:adj", 2}, {"E6:adj", 3}, {"E7:adj", 2}};
  for (const auto& [spec, p] : cases) {
    const auto tau = transgression_matrix(parse_group(spec));
    const auto a = modp_analysis(tau, p);
    std::cout << spec << " mod " << p << ": kernel";
    for (const auto& v : a.kernel.basis) std::cout << "  " << format_combination(v, p, "t");
    std::cout << ", cokernel";
    for (const auto& v : a.cokernel.basis) std::cout << "  " << format_combination(v, p, "w");
    std::cout << '\n';
  }

  E3Options opts;
  opts.coefficients = Coefficients::prime_field(2);
  const auto doc = cmd_e3("A1:adj", opts);
  std::cout << "A1:adj over Z_2: " << doc.payload.at("poincare").get<std::string>() << '\n';
}
