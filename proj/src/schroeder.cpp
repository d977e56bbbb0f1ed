#include "pam/schroeder.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pam/errors.hpp"

namespace pam {

SchroederPath SchroederPath::from_steps(std::vector<SchroederStep> steps) {
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == SchroederStep::U) ++height;
    if (steps[i] == SchroederStep::D && --height < 0) {
      throw std::invalid_argument("Schroeder path goes below the axis at step " + std::to_string(i + 1));
    }
  }
  if (height != 0) throw std::invalid_argument("Schroeder path ends at height " + std::to_string(height));
  SchroederPath p;
  p.steps_ = std::move(steps);
  return p;
}

SchroederPath SchroederPath::parse(std::string_view text) {
  std::vector<SchroederStep> steps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(SchroederStep::U); break;
      case 'D': steps.push_back(SchroederStep::D); break;
      case 'H': steps.push_back(SchroederStep::H); break;
      default: throw ParseError(i + 1, std::string("expected U, D or H, got '") + text[i] + "'");
    }
  }
  return from_steps(std::move(steps));
}

int SchroederPath::semilength() const {
  int twice = 0;
  for (SchroederStep s : steps_) twice += s == SchroederStep::H ? 2 : 1;
  return twice / 2;
}

std::string SchroederPath::to_string() const {
  std::string out;
  for (SchroederStep s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

std::vector<Peak> peaks(const SchroederPath& p) {
  std::vector<Peak> out;
  const auto& s = p.steps();
  int height = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == SchroederStep::U) {
      ++height;
      if (i + 1 < s.size() && s[i + 1] == SchroederStep::D) out.push_back({static_cast<int>(i) + 1, height});
    } else if (s[i] == SchroederStep::D) {
      --height;
    }
  }
  return out;
}

bool has_low_peak(const SchroederPath& p) {
  const auto ps = peaks(p);
  return std::any_of(ps.begin(), ps.end(), [](const Peak& k) { return k.level == 1; });
}

FirstReturn first_return_decompose(const SchroederPath& p) {
  const auto& s = p.steps();
  if (s.empty()) throw std::invalid_argument("first return decomposition of the empty path");
  if (s.front() == SchroederStep::H) {
    return LeadingH{SchroederPath::from_steps({s.begin() + 1, s.end()})};
  }
  int height = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == SchroederStep::U) ++height;
    if (s[i] == SchroederStep::D) --height;
    if (height == 0) {
      return Excursion{SchroederPath::from_steps({s.begin() + 1, s.begin() + static_cast<std::ptrdiff_t>(i)}),
                       SchroederPath::from_steps({s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end()})};
    }
  }
  throw std::logic_error("valid Schroeder path without a first return");
}

std::vector<SchroederPath> all_schroeder_paths(int semilength) {
  if (semilength < 0) throw std::invalid_argument("semilength must be non-negative");
  std::vector<SchroederPath> out;
  std::vector<SchroederStep> steps;
  // `budget` counts remaining half-units of horizontal length.
  std::function<void(int, int)> grow = [&](int height, int budget) {
    if (budget == 0) {
      if (height == 0) out.push_back(SchroederPath::from_steps(steps));
      return;
    }
    if (height + 1 <= budget - 1) {
      steps.push_back(SchroederStep::U);
      grow(height + 1, budget - 1);
      steps.pop_back();
    }
    if (height > 0) {
      steps.push_back(SchroederStep::D);
      grow(height - 1, budget - 1);
      steps.pop_back();
    }
    if (budget >= 2 + height) {
      steps.push_back(SchroederStep::H);
      grow(height, budget - 2);
      steps.pop_back();
    }
  };
  grow(0, 2 * semilength);
  return out;
}

std::vector<SchroederPath> paths_without_low_peaks(int semilength) {
  std::vector<SchroederPath> out;
  for (auto& p : all_schroeder_paths(semilength)) {
    if (!has_low_peak(p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace pam
