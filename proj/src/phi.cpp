#include "pam/phi.hpp"

#include <variant>

#include "pam/decomposition.hpp"
#include "pam/errors.hpp"

namespace pam {
namespace {

using Steps = std::vector<SchroederStep>;

// Splits a path at its base-level UD factors: P_1 UD P_2 UD ... UD P_{k+1}.
std::vector<SchroederPath> split_at_base_peaks(const SchroederPath& p) {
  const auto& s = p.steps();
  std::vector<SchroederPath> blocks;
  Steps current;
  int height = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (height == 0 && s[i] == SchroederStep::U && i + 1 < s.size() && s[i + 1] == SchroederStep::D) {
      blocks.push_back(SchroederPath::from_steps(std::move(current)));
      current.clear();
      ++i;
      continue;
    }
    if (s[i] == SchroederStep::U) ++height;
    if (s[i] == SchroederStep::D) --height;
    current.push_back(s[i]);
  }
  blocks.push_back(SchroederPath::from_steps(std::move(current)));
  return blocks;
}

Matching phi_rec(const SchroederPath& p) {
  if (p.empty()) return {};
  const FirstReturn split = first_return_decompose(p);
  DecompositionDouble d;
  if (const auto* h = std::get_if<LeadingH>(&split)) {
    d.m = 0;
    d.thetas.push_back(Matching{});
    d.beta = phi_rec(h->rest);
  } else {
    const auto& e = std::get<Excursion>(split);
    const auto blocks = split_at_base_peaks(e.inner);
    d.m = static_cast<int>(blocks.size()) - 1;
    for (const auto& b : blocks) d.thetas.push_back(phi_rec(b));
    d.beta = phi_rec(e.rest);
  }
  return recompose(d);
}

void append(Steps& out, const SchroederPath& p) { out.insert(out.end(), p.steps().begin(), p.steps().end()); }

SchroederPath phi_inv_rec(const Matching& m) {
  if (m.empty()) return {};
  const DecompositionDouble d = decompose_double(m);
  Steps out;
  if (d.m == 0 && d.thetas.front().empty()) {
    out.push_back(SchroederStep::H);
    append(out, phi_inv_rec(d.beta));
    return SchroederPath::from_steps(std::move(out));
  }
  out.push_back(SchroederStep::U);
  for (std::size_t s = 0; s < d.thetas.size(); ++s) {
    if (s > 0) {
      out.push_back(SchroederStep::U);
      out.push_back(SchroederStep::D);
    }
    append(out, phi_inv_rec(d.thetas[s]));
  }
  out.push_back(SchroederStep::D);
  append(out, phi_inv_rec(d.beta));
  return SchroederPath::from_steps(std::move(out));
}

}  // namespace

Matching phi(const SchroederPath& p) {
  if (has_low_peak(p)) throw DomainError("path " + p.to_string() + " has a peak at level one");
  return phi_rec(p);
}

SchroederPath phi_inv(const Matching& m) { return phi_inv_rec(m); }

}  // namespace pam
