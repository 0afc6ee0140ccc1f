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
#include "simplex.hpp"

#include <stdexcept>

namespace cgame::detail {

namespace {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), v_(rows * cols) {}
  mpq_class& at(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::vector<mpq_class> v_;
};

// One objective row: z = constant + sum(coef[j] * var_j) over nonbasic vars.
struct Objective {
  std::vector<mpq_class> coef;
  mpq_class constant;
};

// Gauss-Jordan pivot on (r, c) over the given rows and objectives.
void pivot(Matrix& a, std::vector<mpq_class>& b, const std::vector<std::size_t>& rows,
           std::size_t r, std::size_t c, std::vector<Objective*> objectives) {
  const std::size_t ncol = a.cols();
  mpq_class inv = 1 / a.at(r, c);
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < ncol; ++j) {
    if (sgn(a.at(r, j)) != 0) {
      a.at(r, j) *= inv;
      nz.push_back(j);
    }
  }
  b[r] *= inv;
  mpq_class f, t;
  for (std::size_t i : rows) {
    if (i == r || sgn(a.at(i, c)) == 0) continue;
    f = a.at(i, c);
    for (std::size_t j : nz) {
      t = f * a.at(r, j);
      a.at(i, j) -= t;
    }
    t = f * b[r];
    b[i] -= t;
  }
  for (Objective* obj : objectives) {
    if (sgn(obj->coef[c]) == 0) continue;
    f = obj->coef[c];
    for (std::size_t j : nz) {
      t = f * a.at(r, j);
      obj->coef[j] -= t;
    }
    t = f * b[r];
    obj->constant += t;
  }
}

}  // namespace

LpResult solve_lp(std::size_t n, const std::vector<const LinearRow*>& rows,
                  const std::vector<mpq_class>& c, const Deadline& deadline) {
  const std::size_t m = rows.size();
  std::vector<long> slack_of(m, -1);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i]->rel == Relation::LT) throw std::logic_error("solve_lp: strict row");
    if (rows[i]->rel == Relation::LE) slack_of[i] = static_cast<long>(k++);
  }

  // Full tableau: structural columns, then one slack per LE row.
  const std::size_t ncol = n + k;
  Matrix a(m, ncol);
  std::vector<mpq_class> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& t : rows[i]->terms) a.at(i, t.var) = t.coef.mpq();
    if (slack_of[i] >= 0) a.at(i, n + static_cast<std::size_t>(slack_of[i])) = 1;
    b[i] = rows[i]->rhs.mpq();
  }
  Objective obj{std::vector<mpq_class>(ncol), 0};
  const bool optimize = !c.empty();
  if (optimize) {
    for (std::size_t j = 0; j < n; ++j) obj.coef[j] = c[j];
  }

  // Eliminate free variables: each pivots into some row, which is then
  // set aside as the definition of that variable.
  std::vector<std::size_t> all_rows(m);
  for (std::size_t i = 0; i < m; ++i) all_rows[i] = i;
  std::vector<long> defines(m, -1);
  std::vector<bool> pivoted(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    deadline.check();
    long best = -1;
    std::size_t best_nnz = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (defines[i] >= 0 || sgn(a.at(i, j)) == 0) continue;
      std::size_t nnz = 0;
      for (std::size_t q = 0; q < ncol; ++q) nnz += sgn(a.at(i, q)) != 0;
      if (best < 0 || nnz < best_nnz) {
        best = static_cast<long>(i);
        best_nnz = nnz;
      }
    }
    if (best < 0) continue;
    pivot(a, b, all_rows, static_cast<std::size_t>(best), j, {&obj});
    defines[static_cast<std::size_t>(best)] = static_cast<long>(j);
    pivoted[j] = true;
  }
  bool free_direction = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (!pivoted[j] && sgn(obj.coef[j]) != 0) free_direction = true;
  }

  // Remaining rows only involve slacks: solve a standard-form LP over them.
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < m; ++i) {
    if (defines[i] < 0) rest.push_back(i);
  }
  std::size_t num_art = 0;
  std::vector<long> own_slack(rest.size(), -1);
  for (std::size_t r = 0; r < rest.size(); ++r) {
    std::size_t i = rest[r];
    if (sgn(b[i]) < 0) {
      for (std::size_t q = n; q < ncol; ++q) a.at(i, q) = -a.at(i, q);
      b[i] = -b[i];
    }
    if (slack_of[i] >= 0 && a.at(i, n + static_cast<std::size_t>(slack_of[i])) == 1) {
      own_slack[r] = slack_of[i];
    } else {
      ++num_art;
    }
  }
  const std::size_t pcol = k + num_art;
  Matrix p(rest.size(), pcol);
  std::vector<mpq_class> pb(rest.size());
  std::vector<std::size_t> basis(rest.size());
  Objective phase2{std::vector<mpq_class>(pcol), obj.constant};
  for (std::size_t q = 0; q < k; ++q) phase2.coef[q] = obj.coef[n + q];
  Objective phase1{std::vector<mpq_class>(pcol), 0};
  std::size_t next_art = k;
  for (std::size_t r = 0; r < rest.size(); ++r) {
    std::size_t i = rest[r];
    for (std::size_t q = 0; q < k; ++q) p.at(r, q) = a.at(i, n + q);
    pb[r] = b[i];
    if (own_slack[r] >= 0) {
      basis[r] = static_cast<std::size_t>(own_slack[r]);
    } else {
      basis[r] = next_art;
      p.at(r, next_art++) = 1;
      for (std::size_t q = 0; q < k; ++q) phase1.coef[q] += p.at(r, q);
      phase1.constant -= pb[r];
    }
  }
  std::vector<std::size_t> active(rest.size());
  for (std::size_t r = 0; r < rest.size(); ++r) active[r] = r;

  // Bland's rule: lowest eligible entering column, lowest-index leaving
  // variable among ratio ties. Artificial columns never re-enter.
  auto run = [&](Objective& goal, std::vector<Objective*> carried) -> bool {
    carried.insert(carried.begin(), &goal);
    for (;;) {
      deadline.check();
      long enter = -1;
      for (std::size_t q = 0; q < k; ++q) {
        if (sgn(goal.coef[q]) > 0) {
          enter = static_cast<long>(q);
          break;
        }
      }
      if (enter < 0) return true;
      const auto e = static_cast<std::size_t>(enter);
      long leave = -1;
      mpq_class best_ratio, ratio;
      for (std::size_t r : active) {
        if (sgn(p.at(r, e)) <= 0) continue;
        ratio = pb[r] / p.at(r, e);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[static_cast<std::size_t>(leave)])) {
          leave = static_cast<long>(r);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(p, pb, active, static_cast<std::size_t>(leave), e, carried);
      basis[static_cast<std::size_t>(leave)] = e;
    }
  };

  LpResult result;
  if (num_art > 0) {
    run(phase1, {&phase2});
    if (sgn(phase1.constant) < 0) return result;
    std::vector<std::size_t> kept;
    for (std::size_t r : active) {
      if (basis[r] < k) {
        kept.push_back(r);
        continue;
      }
      long col = -1;
      for (std::size_t q = 0; q < k; ++q) {
        if (sgn(p.at(r, q)) != 0) {
          col = static_cast<long>(q);
          break;
        }
      }
      if (col < 0) continue;  // redundant row
      pivot(p, pb, active, r, static_cast<std::size_t>(col), {&phase2});
      basis[r] = static_cast<std::size_t>(col);
      kept.push_back(r);
    }
    active = kept;
  }

  if (optimize) {
    if (free_direction) {
      result.status = LpResult::Status::Unbounded;
      return result;
    }
    if (!run(phase2, {})) {
      result.status = LpResult::Status::Unbounded;
      return result;
    }
  }

  std::vector<mpq_class> slack(k);
  for (std::size_t r : active) {
    if (basis[r] < k) slack[basis[r]] = pb[r];
  }
  result.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (defines[i] < 0) continue;
    mpq_class v = b[i];
    for (std::size_t q = 0; q < k; ++q) {
      if (sgn(a.at(i, n + q)) != 0 && sgn(slack[q]) != 0) v -= a.at(i, n + q) * slack[q];
    }
    result.x[static_cast<std::size_t>(defines[i])] = v;
  }
  result.status = LpResult::Status::Optimal;
  result.value = optimize ? phase2.constant : mpq_class(0);
  return result;
}

}  // namespace cgame::detail
