#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "pam/tableau.hpp"

namespace pam {

enum class WalkStep : char { E = 'E', W = 'W', N = 'N', S = 'S' };
enum class PathStep : char { E = 'E', N = 'N' };

/// Walk from the origin back to the origin with every prefix in
/// x >= y >= 0, where each N is followed by zero or more W and then one S.
class LatticeWalk {
 public:
  LatticeWalk() = default;

  static LatticeWalk from_steps(std::vector<WalkStep> steps);
  static LatticeWalk parse(std::string_view text);

  const std::vector<WalkStep>& steps() const noexcept { return steps_; }
  int length() const noexcept { return static_cast<int>(steps_.size()); }
  std::string to_string() const;

  friend bool operator==(const LatticeWalk&, const LatticeWalk&) = default;
  friend auto operator<=>(const LatticeWalk&, const LatticeWalk&) = default;

 private:
  std::vector<WalkStep> steps_;
};

/// Path of E and N steps from (0,0) to (2n,n) never above y = x/2.
class LatticePath {
 public:
  LatticePath() = default;

  static LatticePath from_steps(std::vector<PathStep> steps);
  static LatticePath parse(std::string_view text);

  const std::vector<PathStep>& steps() const noexcept { return steps_; }
  int n() const noexcept { return static_cast<int>(steps_.size()) / 3; }
  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<PathStep> steps_;
};

/// Reads the sizes of the first two rows as (x, y). Throws
/// std::invalid_argument unless the tableau is restricted.
LatticeWalk walk_of_tableau(const OscillatingTableau& t);
OscillatingTableau tableau_of_walk(const LatticeWalk& w);

/// E -> EE, W -> N, N -> EN, S -> E.
LatticePath tau(const LatticeWalk& w);
LatticeWalk tau_inv(const LatticePath& p);

std::vector<LatticeWalk> all_walks(int n);
std::vector<LatticePath> all_lattice_paths(int n);

}  // namespace pam
