// Copyright 2026 The cgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef CGAME_TESTS_GENERATORS_HPP_
#define CGAME_TESTS_GENERATORS_HPP_

#include <random>
#include <vector>

#include "cgame/linsys.hpp"
#include "cgame/solver.hpp"

namespace cgame::testing {

inline Rational R(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

inline Rational small_rational(std::mt19937& rng, long range, long max_den = 1) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return R(num(rng), den(rng));
}

inline LinearRow random_row(std::mt19937& rng, std::size_t dim, long coef_range, long rhs_range,
                            bool allow_eq = true) {
  std::vector<Term> terms;
  for (std::size_t v = 0; v < dim; ++v) terms.push_back(Term{v, small_rational(rng, coef_range)});
  std::uniform_int_distribution<int> rel(0, allow_eq ? 4 : 3);
  static const RawRelation kRels[] = {RawRelation::LE, RawRelation::LT, RawRelation::GE, RawRelation::GT,
                                      RawRelation::EQ};
  return make_row(std::move(terms), kRels[rel(rng)], small_rational(rng, rhs_range));
}

inline Cell random_cell(std::mt19937& rng, std::size_t dim, std::size_t rows, bool allow_eq = true) {
  Cell c{dim, {}};
  for (std::size_t k = 0; k < rows; ++k) c.rows.push_back(random_row(rng, dim, 3, 4, allow_eq));
  return c;
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t dim, long range = 5, long den = 4) {
  std::vector<Rational> p;
  for (std::size_t k = 0; k < dim; ++k) p.push_back(small_rational(rng, range * den, den));
  return p;
}

inline std::vector<std::string> names(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < dim; ++k) out.push_back("v" + std::to_string(k));
  return out;
}

}  // namespace cgame::testing

#endif  // CGAME_TESTS_GENERATORS_HPP_
