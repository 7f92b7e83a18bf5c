// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Nonnegativity checking on orthants, boxes, and R^d: exact grid
// counterexample search, half-degree reduction for symmetric homogeneous
// polynomials, copositivity tests, and the min(p) vs min(pbar) comparison.
//
// A counterexample is always exact: eval(p, point) = value < 0 in Rational
// arithmetic. A no_counterexample verdict is bounded-resolution evidence,
// never a proof, except where route says "exact_2x2".

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "moments/matrix.hpp"
#include "moments/multipoly.hpp"

namespace moments {

struct DomainSpec {
  enum class Kind { orthant, all_reals, box };

  Kind kind = Kind::orthant;
  std::size_t dim = 1;
  Rational lo;  // box only
  Rational hi;  // box only

  static DomainSpec orthant(std::size_t dim) { return make(Kind::orthant, dim); }
  static DomainSpec all_reals(std::size_t dim) { return make(Kind::all_reals, dim); }
  static DomainSpec box(const Rational& lo, const Rational& hi, std::size_t dim) {
    if (hi < lo) throw std::invalid_argument("DomainSpec: box needs lo <= hi");
    DomainSpec d = make(Kind::box, dim);
    d.lo = lo;
    d.hi = hi;
    return d;
  }
  bool bounded() const { return kind == Kind::box; }

 private:
  static DomainSpec make(Kind k, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("DomainSpec: dim must be positive");
    DomainSpec d;
    d.kind = k;
    d.dim = dim;
    return d;
  }
};

struct PositivityVerdict {
  bool counterexample = false;
  std::vector<Rational> point;  // counterexample point when counterexample is set
  Rational value;               // its exact strictly negative value
  std::size_t resolution = 0;
  std::uint64_t samples = 0;
  // Evidence extras, reported in plain output but not in the JSON verdict.
  Rational min_sampled;
  std::vector<Rational> min_point;
  std::string route;
};

namespace detail {

// One shared per-axis value table; every grid here is a product (or a slice
// of a product) of the same 1-D grid.
//   orthant: k/(res-k), k = 0..res-1, sweeping [0, res-1] of [0, inf)
//   all_reals: u/(1-|u|) with u = (2j-(res-1))/res, symmetric about 0
//   box: lo + (hi-lo)*j/(res-1)
inline std::vector<Rational> axis_values(const DomainSpec& dom, std::size_t res) {
  std::vector<Rational> axis;
  axis.reserve(res);
  const long long n = static_cast<long long>(res);
  for (long long j = 0; j < n; ++j) {
    switch (dom.kind) {
      case DomainSpec::Kind::orthant:
        axis.emplace_back(j, n - j);
        break;
      case DomainSpec::Kind::all_reals: {
        Rational u(2 * j - (n - 1), n);
        axis.push_back(u / (Rational(1) - u.abs()));
        break;
      }
      case DomainSpec::Kind::box:
        axis.push_back(res == 1 ? dom.lo
                                : dom.lo + (dom.hi - dom.lo) * Rational(j, n - 1));
        break;
    }
  }
  return axis;
}

enum class GridRoute { product, simplex, sphere };

inline GridRoute grid_route(const MultiPoly& p, const DomainSpec& dom) {
  if (dom.bounded() || !p.homogeneous_degree().has_value()) return GridRoute::product;
  return dom.kind == DomainSpec::Kind::orthant ? GridRoute::simplex : GridRoute::sphere;
}

inline const char* route_name(GridRoute r) {
  switch (r) {
    case GridRoute::product: return "product_grid";
    case GridRoute::simplex: return "simplex_slice";
    default: return "sphere_slice";
  }
}

inline BigInt planned_samples(GridRoute route, std::size_t res, std::size_t dim) {
  BigInt n;
  switch (route) {
    case GridRoute::product:
      n = 1;
      for (std::size_t a = 0; a < dim; ++a) n *= res;
      return n;
    case GridRoute::simplex:
      // Compositions of res-1 into dim nonnegative parts.
      return binomial_count(res - 1 + dim - 1, dim - 1);
    default: {
      BigInt full = 1, inner = 1;
      for (std::size_t a = 0; a < dim; ++a) {
        full *= res;
        inner *= res >= 2 ? res - 2 : 0;
      }
      return full - inner;
    }
  }
}

// Lattice tuples of a grid slice, materialized in canonical order. The
// simplex order puts the first coordinate descending, so (1,0,...,0) comes
// first; the sphere keeps flat product order restricted to max|x_i| = 1.
inline std::vector<std::uint32_t> slice_tuples(GridRoute route, std::size_t res,
                                               std::size_t dim) {
  std::vector<std::uint32_t> tuples;
  if (route == GridRoute::simplex) {
    std::vector<std::uint32_t> cur(dim);
    auto rec = [&](auto&& self, std::size_t axis, std::uint32_t left) -> void {
      if (axis + 1 == dim) {
        cur[axis] = left;
        tuples.insert(tuples.end(), cur.begin(), cur.end());
        return;
      }
      for (std::uint32_t k = left + 1; k-- > 0;) {
        cur[axis] = k;
        self(self, axis + 1, left - k);
      }
    };
    rec(rec, 0, static_cast<std::uint32_t>(res - 1));
  } else {
    std::vector<std::uint32_t> digits(dim, 0);
    for (;;) {
      bool boundary = false;
      for (std::uint32_t d : digits)
        if (d == 0 || d + 1 == res) boundary = true;
      if (boundary) tuples.insert(tuples.end(), digits.begin(), digits.end());
      std::size_t a = dim;
      while (a > 0 && digits[a - 1] + 1 == res) digits[--a] = 0;
      if (a == 0) break;
      ++digits[a - 1];
    }
  }
  return tuples;
}

struct GridScan {
  std::size_t dim = 0;
  std::size_t res = 0;
  GridRoute route = GridRoute::product;
  std::uint64_t count = 0;
  std::vector<Rational> axis;           // simplex uses k/(res-1) instead
  std::vector<std::uint32_t> tuples;    // empty for product grids (decoded lazily)

  void point_at(std::uint64_t flat, std::vector<Rational>& pt) const {
    if (!tuples.empty()) {
      // Slice points are reported as gcd-reduced integer directions; the sign
      // of a homogeneous polynomial is constant along rays, so this loses
      // nothing and keeps witnesses small.
      long long g = 0;
      for (std::size_t a = 0; a < dim; ++a) {
        long long v = static_cast<long long>(tuples[flat * dim + a]);
        if (route == GridRoute::sphere) v = 2 * v - static_cast<long long>(res) + 1;
        g = std::gcd(g, v);
      }
      if (g == 0) g = 1;
      for (std::size_t a = 0; a < dim; ++a) {
        long long v = static_cast<long long>(tuples[flat * dim + a]);
        if (route == GridRoute::sphere) v = 2 * v - static_cast<long long>(res) + 1;
        pt[a] = Rational(v / g);
      }
      return;
    }
    // Product grid: axis 0 is the most significant digit (outermost loop).
    std::uint64_t f = flat;
    for (std::size_t a = dim; a-- > 0;) {
      pt[a] = axis[static_cast<std::size_t>(f % res)];
      f /= res;
    }
  }
};

inline GridScan make_grid_scan(const MultiPoly& p, const DomainSpec& dom, std::size_t res,
                               std::uint64_t budget) {
  if (res == 0) throw std::invalid_argument("grid_search: resolution must be positive");
  if (p.num_vars() != dom.dim)
    throw std::invalid_argument("grid_search: polynomial/domain dimension mismatch");
  GridScan g;
  g.dim = dom.dim;
  g.res = res;
  g.route = grid_route(p, dom);
  BigInt planned = planned_samples(g.route, res, g.dim);
  if (planned > BigInt(budget))
    throw std::runtime_error("grid_search: budget exceeded, " + planned.str() +
                             " samples planned but budget is " + std::to_string(budget));
  g.count = planned.convert_to<std::uint64_t>();
  if (g.route == GridRoute::product) g.axis = axis_values(dom, res);
  else g.tuples = slice_tuples(g.route, res, g.dim);
  return g;
}

// Fit the default per-axis resolution under the sample budget. Scans down
// from 33 so slice routes keep the largest grid the budget allows.
inline std::size_t fit_resolution(const MultiPoly& p, const DomainSpec& dom,
                                  std::uint64_t budget, std::size_t preferred = 33) {
  GridRoute route = grid_route(p, dom);
  for (std::size_t res = preferred; res >= 1; --res)
    if (planned_samples(route, res, dom.dim) <= BigInt(budget)) return res;
  throw std::runtime_error("grid_search: budget exceeded, no resolution fits budget " +
                           std::to_string(budget));
}

}  // namespace detail

// Evaluates p exactly at every grid point of the domain (a compactified
// grid for unbounded domains; a simplex or inf-norm sphere slice when p is
// homogeneous, since sign is then invariant under positive scaling).
// Returns the first strictly negative value in canonical grid order as a
// counterexample, else evidence with the minimum sampled value. The result
// does not depend on the thread count.
inline PositivityVerdict grid_search(const MultiPoly& p, const DomainSpec& dom,
                                     std::size_t resolution, std::uint64_t budget,
                                     unsigned threads = 1) {
  detail::GridScan g = detail::make_grid_scan(p, dom, resolution, budget);
  PositivityVerdict verdict;
  verdict.resolution = resolution;
  verdict.route = detail::route_name(g.route);
  if (g.count == 0) {  // unreachable for res >= 1, kept for safety
    verdict.samples = 0;
    return verdict;
  }

  struct Part {
    bool has_neg = false;
    std::uint64_t neg_flat = 0;
    Rational neg_value;
    std::vector<Rational> neg_point;
    std::uint64_t min_flat = 0;
    Rational min_value;
    std::vector<Rational> min_point;
    bool has_min = false;
  };

  unsigned nthreads = threads == 0 ? 1 : threads;
  nthreads = static_cast<unsigned>(
      std::min<std::uint64_t>(nthreads, g.count));
  std::vector<Part> parts(nthreads);
  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, Part& part) {
    std::vector<Rational> pt(g.dim);
    for (std::uint64_t f = lo; f < hi; ++f) {
      g.point_at(f, pt);
      Rational v = p.eval(pt);
      if (!part.has_min || v < part.min_value) {
        part.has_min = true;
        part.min_value = v;
        part.min_flat = f;
        part.min_point = pt;
      }
      if (v.sign() < 0) {
        part.has_neg = true;
        part.neg_flat = f;
        part.neg_value = v;
        part.neg_point = pt;
        return;  // first negative of this range; earlier ranges win the merge
      }
    }
  };

  if (nthreads == 1) {
    scan_range(0, g.count, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = g.count / nthreads, extra = g.count % nthreads, start = 0;
    for (unsigned i = 0; i < nthreads; ++i) {
      std::uint64_t len = chunk + (i < extra ? 1 : 0);
      pool.emplace_back(scan_range, start, start + len, std::ref(parts[i]));
      start += len;
    }
    for (auto& t : pool) t.join();
  }

  const Part* neg = nullptr;
  for (const Part& part : parts)
    if (part.has_neg && (!neg || part.neg_flat < neg->neg_flat)) neg = &part;
  if (neg) {
    verdict.counterexample = true;
    verdict.point = neg->neg_point;
    verdict.value = neg->neg_value;
    verdict.min_sampled = neg->neg_value;
    verdict.min_point = neg->neg_point;
    verdict.samples = neg->neg_flat + 1;  // points up to the hit, thread-invariant
    return verdict;
  }
  const Part* best = nullptr;
  for (const Part& part : parts)
    if (part.has_min &&
        (!best || part.min_value < best->min_value ||
         (part.min_value == best->min_value && part.min_flat < best->min_flat)))
      best = &part;
  verdict.samples = g.count;
  verdict.min_sampled = best->min_value;
  verdict.min_point = best->min_point;
  return verdict;
}

struct HalfDegreeReduction {
  // Sizes of the identified variable groups, descending; sums to num_vars.
  std::vector<std::size_t> group_sizes;
  // p with the variables of each group identified, in group_sizes.size() vars.
  MultiPoly reduced;
};

namespace detail {

inline MultiPoly identify_groups(const MultiPoly& p, const std::vector<std::size_t>& sizes) {
  MultiPoly out(sizes.size());
  for (const auto& [exp, coef] : p.terms()) {
    ExponentVector reduced(sizes.size(), 0);
    std::size_t idx = 0;
    for (std::size_t g = 0; g < sizes.size(); ++g)
      for (std::size_t i = 0; i < sizes[g]; ++i) reduced[g] += exp[idx++];
    out.add_term(reduced, coef);
  }
  return out;
}

// Expand a point of the reduced variables back to the full variable count by
// repeating each group value; eval(p, lift) equals eval(reduced, point).
inline std::vector<Rational> lift_point(const std::vector<Rational>& point,
                                        const std::vector<std::size_t>& sizes) {
  std::vector<Rational> full;
  for (std::size_t g = 0; g < sizes.size(); ++g)
    for (std::size_t i = 0; i < sizes[g]; ++i) full.push_back(point[g]);
  return full;
}

inline void partitions_rec(std::size_t left, std::size_t max_part, std::size_t max_parts,
                           std::vector<std::size_t>& cur,
                           std::vector<std::vector<std::size_t>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  if (cur.size() == max_parts) return;
  for (std::size_t part = std::min(left, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(left - part, part, max_parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// Half-degree reduction of a symmetric homogeneous p of even degree 2m: a
// sign change anywhere implies one at a point with at most k = max(2, m)
// distinct coordinates, so p is covered by its restrictions to grouped
// variables, one per group-size multiset. k >= d keeps p unreduced.
inline std::vector<HalfDegreeReduction> half_degree_reduce(const MultiPoly& p) {
  if (!p.is_symmetric())
    throw std::invalid_argument("half_degree_reduce: polynomial is not symmetric");
  auto deg = p.homogeneous_degree();
  if (!deg || *deg % 2 != 0)
    throw std::invalid_argument(
        "half_degree_reduce: polynomial is not homogeneous of even degree");
  const std::size_t d = p.num_vars();
  const std::size_t k = std::max<std::size_t>(2, *deg / 2);
  if (k >= d) return {HalfDegreeReduction{std::vector<std::size_t>(d, 1), p}};
  std::vector<std::vector<std::size_t>> sizes;
  std::vector<std::size_t> cur;
  detail::partitions_rec(d, d, k, cur, sizes);
  std::vector<HalfDegreeReduction> out;
  out.reserve(sizes.size());
  for (const auto& s : sizes)
    out.push_back(HalfDegreeReduction{s, detail::identify_groups(p, s)});
  return out;
}

// Symmetrizes p, then checks nonnegativity of the symmetrization on the
// domain: through every half-degree reduction when the principle applies
// (k < d), else by direct grid search. Any negative value found is exact and
// is lifted back to the original variable count.
inline PositivityVerdict check_nonneg(const MultiPoly& p, const DomainSpec& dom,
                                      std::uint64_t budget, unsigned threads = 1) {
  if (p.num_vars() != dom.dim)
    throw std::invalid_argument("check_nonneg: polynomial/domain dimension mismatch");
  MultiPoly pbar = p.symmetrize();
  auto deg = pbar.homogeneous_degree();
  const std::size_t d = pbar.num_vars();
  const bool reducible =
      deg.has_value() && *deg % 2 == 0 && std::max<std::size_t>(2, *deg / 2) < d;
  if (!reducible) {
    std::size_t res = detail::fit_resolution(pbar, dom, budget);
    return grid_search(pbar, dom, res, budget, threads);
  }

  PositivityVerdict overall;
  overall.route = "half_degree_reduction";
  overall.resolution = 0;
  bool have_min = false;
  for (const HalfDegreeReduction& red : half_degree_reduce(pbar)) {
    DomainSpec sub = dom;
    sub.dim = red.group_sizes.size();
    std::size_t res = detail::fit_resolution(red.reduced, sub, budget);
    PositivityVerdict v = grid_search(red.reduced, sub, res, budget, threads);
    overall.samples += v.samples;
    overall.resolution =
        overall.resolution == 0 ? res : std::min(overall.resolution, res);
    if (v.counterexample) {
      overall.counterexample = true;
      overall.point = detail::lift_point(v.point, red.group_sizes);
      overall.value = v.value;
      overall.resolution = res;
      if (pbar.eval(overall.point) != v.value)
        throw std::logic_error("check_nonneg: lifted counterexample does not re-evaluate");
      overall.min_sampled = v.value;
      overall.min_point = overall.point;
      return overall;
    }
    std::vector<Rational> lifted = detail::lift_point(v.min_point, red.group_sizes);
    if (!have_min || v.min_sampled < overall.min_sampled) {
      have_min = true;
      overall.min_sampled = v.min_sampled;
      overall.min_point = lifted;
    }
  }
  return overall;
}

// Copositivity of a symmetric A: exact for d = 2 (a11 >= 0, a22 >= 0, and
// a12 >= 0 or a11*a22 >= a12^2); simplex grid evidence on x^T A x for d >= 3.
inline PositivityVerdict copositive_check(const ExactMatrix& a, std::uint64_t budget) {
  if (!a.is_symmetric())
    throw std::invalid_argument("copositive_check: matrix must be symmetric");
  const std::size_t d = a.dim();
  if (d == 2) {
    PositivityVerdict v;
    v.route = "exact_2x2";
    const Rational &a11 = a.at(0, 0), &a12 = a.at(0, 1), &a22 = a.at(1, 1);
    auto fail = [&](Rational x1, Rational x2) {
      v.counterexample = true;
      v.point = {std::move(x1), std::move(x2)};
      v.value = a11 * v.point[0] * v.point[0] + Rational(2) * a12 * v.point[0] * v.point[1] +
                a22 * v.point[1] * v.point[1];
      v.min_sampled = v.value;
      v.min_point = v.point;
      if (v.value.sign() >= 0)
        throw std::logic_error("copositive_check: witness is not negative");
    };
    if (a11.sign() < 0) {
      fail(Rational(1), Rational(0));
    } else if (a22.sign() < 0) {
      fail(Rational(0), Rational(1));
    } else if (a12.sign() < 0 && a11 * a22 < a12 * a12) {
      // Not copositive; pick an exact nonnegative witness direction.
      if (a11 + Rational(2) * a12 + a22 < Rational(0)) fail(Rational(1), Rational(1));
      else if (a11.sign() > 0) fail(-a12, a11);
      else fail(a22 + Rational(1), Rational(-2) * a12);
    }
    return v;  // no counterexample: copositive, decided exactly
  }
  MultiPoly form = quadratic_form_poly(a);
  DomainSpec dom = DomainSpec::orthant(d);
  std::size_t res = detail::fit_resolution(form, dom, budget);
  return grid_search(form, dom, res, budget);
}

struct CompareMinResult {
  Rational min_p;
  std::vector<Rational> min_p_point;
  Rational min_pbar;
  std::vector<Rational> min_pbar_point;
  std::size_t resolution = 0;
  std::uint64_t samples = 0;
};

// Exact grid minima of p and its symmetrization over the same product grid
// of a box. The grid is permutation-symmetric, so min_p <= min_pbar holds
// exactly: pbar at a grid point is an average of p over permuted grid points.
inline CompareMinResult compare_min(const MultiPoly& p, const DomainSpec& dom,
                                    std::size_t resolution) {
  if (!dom.bounded())
    throw std::invalid_argument("compare_min: domain must be a box");
  if (p.num_vars() != dom.dim)
    throw std::invalid_argument("compare_min: polynomial/domain dimension mismatch");
  if (resolution == 0)
    throw std::invalid_argument("compare_min: resolution must be positive");
  MultiPoly pbar = p.symmetrize();
  std::vector<Rational> axis = detail::axis_values(dom, resolution);
  CompareMinResult out;
  out.resolution = resolution;
  std::vector<Rational> pt(dom.dim);
  std::vector<std::size_t> digits(dom.dim, 0);
  bool first = true;
  for (;;) {
    for (std::size_t a = 0; a < dom.dim; ++a) pt[a] = axis[digits[a]];
    Rational vp = p.eval(pt), vbar = pbar.eval(pt);
    if (first || vp < out.min_p) {
      out.min_p = vp;
      out.min_p_point = pt;
    }
    if (first || vbar < out.min_pbar) {
      out.min_pbar = vbar;
      out.min_pbar_point = pt;
    }
    first = false;
    ++out.samples;
    std::size_t a = dom.dim;
    while (a > 0 && digits[a - 1] + 1 == resolution) digits[--a] = 0;
    if (a == 0) break;
    ++digits[a - 1];
  }
  return out;
}

}  // namespace moments
