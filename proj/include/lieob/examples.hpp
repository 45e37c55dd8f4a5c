#ifndef LIEOB_EXAMPLES_HPP
#define LIEOB_EXAMPLES_HPP

#include <string>
#include <vector>

#include "lieob/lie_algebra.hpp"

namespace lieob {
namespace builtins {

LieAlgebra abelian(std::size_t n);
LieAlgebra heisenberg3(); // basis x, y, z with [x, y] = z
LieAlgebra sl2();         // basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
LieAlgebra so3();         // basis with [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
LieAlgebra aff1();        // basis a, b with [a, b] = b
LieAlgebra sum_center_sl2();   // Q^1 (+) sl2
LieAlgebra sum_center2_aff1(); // Q^2 (+) aff(1)

/// All registry names, with abelian_n instantiated for n = 1..5.
std::vector<std::string> names();

/// Lookup by registry name ("abelian3", "sl2", ...). Throws
/// std::invalid_argument for unknown names.
LieAlgebra by_name(const std::string& name);

} // namespace builtins
} // namespace lieob

#endif
