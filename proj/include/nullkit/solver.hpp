#pragma once

#include <map>
#include <string>
#include <vector>

#include "nullkit/grid.hpp"
#include "nullkit/multipoly.hpp"

namespace nullkit {

/// Explicit solution set S with trivial solutions St (a subset of S).
struct Problem {
  std::vector<std::string> solutions;
  std::vector<std::string> trivial;

  Problem(std::vector<std::string> s, std::vector<std::string> st);
};

/// An integral grid with a map chi from solutions to grid points.
struct Impression {
  Grid grid;
  std::map<std::string, Point> chi;

  Impression(Grid g, std::map<std::string, Point> c);
};

struct AlgebraicSolutionCheck {
  bool describes = false;
  bool degree_ok = false;
  bool head_ok = false;

  bool ok() const { return describes && degree_ok && head_ok; }
};

/// chi(S) equals the support of P on the grid.
bool is_describing(const MultiPoly& p, const Problem& prob, const Impression& imp);

AlgebraicSolutionCheck check_algebraic_solution(const MultiPoly& p, const Problem& prob, const Impression& imp);

/// P = (Psi y)(X) for a y supported on chi(S) chosen as in the existence
/// proof; DomainError when the side conditions on |R| and chi fail.
MultiPoly construct_algebraic_solution(const Problem& prob, const Impression& imp);

}  // namespace nullkit
