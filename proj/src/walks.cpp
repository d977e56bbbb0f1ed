#include "pam/walks.hpp"

#include <functional>
#include <stdexcept>

#include "pam/errors.hpp"

namespace pam {

LatticeWalk LatticeWalk::from_steps(std::vector<WalkStep> steps) {
  int x = 0;
  int y = 0;
  bool pending_s = false;  // inside an N W* S block
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto where = " at step " + std::to_string(i + 1);
    switch (steps[i]) {
      case WalkStep::E:
        if (pending_s) throw std::invalid_argument("N must be followed by W steps and then S" + where);
        ++x;
        break;
      case WalkStep::W:
        --x;
        break;
      case WalkStep::N:
        if (pending_s) throw std::invalid_argument("N must be followed by W steps and then S" + where);
        ++y;
        pending_s = true;
        break;
      case WalkStep::S:
        if (!pending_s) throw std::invalid_argument("S without a preceding N" + where);
        --y;
        pending_s = false;
        break;
    }
    if (y < 0 || x < y) throw std::invalid_argument("walk leaves the region x >= y >= 0" + where);
  }
  if (x != 0 || y != 0) throw std::invalid_argument("walk does not return to the origin");
  LatticeWalk w;
  w.steps_ = std::move(steps);
  return w;
}

LatticeWalk LatticeWalk::parse(std::string_view text) {
  std::vector<WalkStep> steps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'E': steps.push_back(WalkStep::E); break;
      case 'W': steps.push_back(WalkStep::W); break;
      case 'N': steps.push_back(WalkStep::N); break;
      case 'S': steps.push_back(WalkStep::S); break;
      default: throw ParseError(i + 1, std::string("expected E, W, N or S, got '") + text[i] + "'");
    }
  }
  return from_steps(std::move(steps));
}

std::string LatticeWalk::to_string() const {
  std::string out;
  for (WalkStep s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

LatticePath LatticePath::from_steps(std::vector<PathStep> steps) {
  int e = 0;
  int n = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    (steps[i] == PathStep::E ? e : n) += 1;
    if (2 * n > e) throw std::invalid_argument("path rises above y = x/2 at step " + std::to_string(i + 1));
  }
  if (e != 2 * n) throw std::invalid_argument("path does not end on the line y = x/2");
  LatticePath p;
  p.steps_ = std::move(steps);
  return p;
}

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<PathStep> steps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'E': steps.push_back(PathStep::E); break;
      case 'N': steps.push_back(PathStep::N); break;
      default: throw ParseError(i + 1, std::string("expected E or N, got '") + text[i] + "'");
    }
  }
  return from_steps(std::move(steps));
}

std::string LatticePath::to_string() const {
  std::string out;
  for (PathStep s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

LatticeWalk walk_of_tableau(const OscillatingTableau& t) {
  if (!is_restricted(t)) throw std::invalid_argument("oscillating tableau is not restricted");
  const auto& shapes = t.shapes();
  auto row = [](const Partition& p, std::size_t r) { return r < p.size() ? p[r] : 0; };
  std::vector<WalkStep> steps;
  for (std::size_t i = 1; i < shapes.size(); ++i) {
    const int dx = row(shapes[i], 0) - row(shapes[i - 1], 0);
    const int dy = row(shapes[i], 1) - row(shapes[i - 1], 1);
    if (dx == 1) steps.push_back(WalkStep::E);
    else if (dx == -1) steps.push_back(WalkStep::W);
    else if (dy == 1) steps.push_back(WalkStep::N);
    else steps.push_back(WalkStep::S);
  }
  return LatticeWalk::from_steps(std::move(steps));
}

OscillatingTableau tableau_of_walk(const LatticeWalk& w) {
  std::vector<Partition> shapes{Partition{}};
  int x = 0;
  int y = 0;
  for (WalkStep s : w.steps()) {
    switch (s) {
      case WalkStep::E: ++x; break;
      case WalkStep::W: --x; break;
      case WalkStep::N: ++y; break;
      case WalkStep::S: --y; break;
    }
    Partition p;
    if (x > 0) p.push_back(x);
    if (y > 0) p.push_back(y);
    shapes.push_back(std::move(p));
  }
  return OscillatingTableau::from_shapes(std::move(shapes));
}

LatticePath tau(const LatticeWalk& w) {
  std::vector<PathStep> steps;
  for (WalkStep s : w.steps()) {
    switch (s) {
      case WalkStep::E: steps.insert(steps.end(), {PathStep::E, PathStep::E}); break;
      case WalkStep::W: steps.push_back(PathStep::N); break;
      case WalkStep::N: steps.insert(steps.end(), {PathStep::E, PathStep::N}); break;
      case WalkStep::S: steps.push_back(PathStep::E); break;
    }
  }
  return LatticePath::from_steps(std::move(steps));
}

LatticeWalk tau_inv(const LatticePath& p) {
  const auto& s = p.steps();
  std::vector<WalkStep> steps;
  int e_seen = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == PathStep::N) {
      steps.push_back(WalkStep::W);
      continue;
    }
    if (++e_seen % 2 == 0) {
      steps.push_back(WalkStep::S);
      continue;
    }
    // An odd-numbered E pairs with the step right after it.
    if (i + 1 >= s.size()) throw std::logic_error("lattice path ends on an unpaired E");
    if (s[i + 1] == PathStep::E) {
      steps.push_back(WalkStep::E);
      ++e_seen;
    } else {
      steps.push_back(WalkStep::N);
    }
    ++i;
  }
  return LatticeWalk::from_steps(std::move(steps));
}

std::vector<LatticeWalk> all_walks(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<LatticeWalk> out;
  std::vector<WalkStep> steps;
  const int length = 2 * n;
  std::function<void(int, int, bool)> grow = [&](int x, int y, bool pending_s) {
    const int left = length - static_cast<int>(steps.size());
    if (x + y > left) return;
    if (left == 0) {
      out.push_back(LatticeWalk::from_steps(steps));
      return;
    }
    auto step = [&](WalkStep s, int nx, int ny, bool np) {
      steps.push_back(s);
      grow(nx, ny, np);
      steps.pop_back();
    };
    if (!pending_s) step(WalkStep::E, x + 1, y, false);
    if (x - 1 >= y) step(WalkStep::W, x - 1, y, pending_s);
    if (!pending_s && x >= y + 1) step(WalkStep::N, x, y + 1, true);
    if (pending_s) step(WalkStep::S, x, y - 1, false);
  };
  grow(0, 0, false);
  return out;
}

std::vector<LatticePath> all_lattice_paths(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  std::vector<LatticePath> out;
  std::vector<PathStep> steps;
  std::function<void(int, int)> grow = [&](int e, int k) {
    if (e == 2 * n && k == n) {
      out.push_back(LatticePath::from_steps(steps));
      return;
    }
    if (e < 2 * n) {
      steps.push_back(PathStep::E);
      grow(e + 1, k);
      steps.pop_back();
    }
    if (2 * (k + 1) <= e) {
      steps.push_back(PathStep::N);
      grow(e, k + 1);
      steps.pop_back();
    }
  };
  grow(0, 0);
  return out;
}

}  // namespace pam
