#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pam {

enum class SchroederStep : char { U = 'U', D = 'D', H = 'H' };

/// Lattice path over U=(1,1), D=(1,-1), H=(2,0) from height 0 back to
/// height 0, never below the axis.
class SchroederPath {
 public:
  SchroederPath() = default;

  /// Throws std::invalid_argument when the steps dip below the axis or do
  /// not return to it.
  static SchroederPath from_steps(std::vector<SchroederStep> steps);

  /// Parses a step string such as "UUDDUUUDDHD" (ParseError on bad letters).
  static SchroederPath parse(std::string_view text);

  const std::vector<SchroederStep>& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }
  int semilength() const;
  std::string to_string() const;

  friend bool operator==(const SchroederPath&, const SchroederPath&) = default;
  friend auto operator<=>(const SchroederPath&, const SchroederPath&) = default;

 private:
  std::vector<SchroederStep> steps_;
};

/// A UD factor: `position` is the 1-based index of the U step, `level` the
/// height its U reaches.
struct Peak {
  int position = 0;
  int level = 0;

  friend bool operator==(const Peak&, const Peak&) = default;
};

std::vector<Peak> peaks(const SchroederPath& p);
bool has_low_peak(const SchroederPath& p);

/// P = H P'.
struct LeadingH {
  SchroederPath rest;
};

/// P = U P' D P'', the D being the first return to the axis.
struct Excursion {
  SchroederPath inner;
  SchroederPath rest;
};

using FirstReturn = std::variant<LeadingH, Excursion>;

/// Throws std::invalid_argument on the empty path.
FirstReturn first_return_decompose(const SchroederPath& p);

std::vector<SchroederPath> all_schroeder_paths(int semilength);
std::vector<SchroederPath> paths_without_low_peaks(int semilength);

}  // namespace pam
