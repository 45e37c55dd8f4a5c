#include "lieob/examples.hpp"

namespace lieob {
namespace builtins {

namespace {
Element unit(std::size_t n, std::size_t i, Rational c = Rational(1)) {
  Element v(n, Rational(0));
  v[i] = c;
  return v;
}
} // namespace

LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
  return LieAlgebra(n, std::move(names), {});
}

LieAlgebra heisenberg3() {
  LieAlgebra::BracketTable t;
  t[{0, 1}] = unit(3, 2);
  return LieAlgebra(3, {"x", "y", "z"}, std::move(t));
}

LieAlgebra sl2() {
  LieAlgebra::BracketTable t;
  t[{0, 1}] = unit(3, 2);              // [e, f] = h
  t[{0, 2}] = unit(3, 0, Rational(-2)); // [e, h] = -2e
  t[{1, 2}] = unit(3, 1, Rational(2));  // [f, h] = 2f
  return LieAlgebra(3, {"e", "f", "h"}, std::move(t));
}

LieAlgebra so3() {
  LieAlgebra::BracketTable t;
  t[{0, 1}] = unit(3, 2);               // [e1, e2] = e3
  t[{0, 2}] = unit(3, 1, Rational(-1)); // [e1, e3] = -e2
  t[{1, 2}] = unit(3, 0);               // [e2, e3] = e1
  return LieAlgebra(3, {"e1", "e2", "e3"}, std::move(t));
}

LieAlgebra aff1() {
  LieAlgebra::BracketTable t;
  t[{0, 1}] = unit(2, 1); // [a, b] = b
  return LieAlgebra(2, {"a", "b"}, std::move(t));
}

LieAlgebra sum_center_sl2() { return direct_sum(abelian(1), sl2()); }

LieAlgebra sum_center2_aff1() { return direct_sum(abelian(2), aff1()); }

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (std::size_t n = 1; n <= 5; ++n) out.push_back("abelian" + std::to_string(n));
  out.insert(out.end(),
             {"heisenberg3", "sl2", "so3", "aff1", "sum_center_sl2", "sum_center2_aff1"});
  return out;
}

LieAlgebra by_name(const std::string& name) {
  if (name.rfind("abelian", 0) == 0 && name.size() > 7) {
    std::size_t n = std::stoul(name.substr(7));
    return abelian(n);
  }
  if (name == "heisenberg3") return heisenberg3();
  if (name == "sl2") return sl2();
  if (name == "so3") return so3();
  if (name == "aff1") return aff1();
  if (name == "sum_center_sl2") return sum_center_sl2();
  if (name == "sum_center2_aff1") return sum_center2_aff1();
  throw std::invalid_argument("unknown example '" + name + "'; try the `examples` command");
}

} // namespace builtins
} // namespace lieob
